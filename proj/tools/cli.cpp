#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "recurquot/recurquot.hpp"

namespace recurquot::cli {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "recurquot/1";

struct GlobalOptions {
  bool json_output = false;
  bool decimate = false;
  unsigned long bound = 100;
  std::string d_policy = "fixed:1";
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LinearRecurrence load(const std::string& path) {
  try {
    return build_recurrence(parse_spec(read_file(path)));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

json height_json(const LogSum& h) { return {{"exact", h.to_string()}, {"decimal", h.to_decimal(15)}}; }

Place parse_place(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "archimedean") return Place::archimedean();
  Rational p = parse_rational(text);
  if (p.get_den() != 1) throw InvalidArgument("place must be 'inf' or a prime");
  return Place::finite(Integer(p.get_num()));
}

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (!item.empty()) out.push_back(parse_rational(item));
  }
  return out;
}

json int_vector(const std::vector<Integer>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

// Renders a report as "key: value" lines for humans.
void render_text(const json& j, std::ostream& out, const std::string& indent = "") {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << indent << key << ":\n";
      render_text(value, out, indent + "  ");
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << indent << key << ":\n";
      for (const auto& item : value) {
        out << indent << "  -\n";
        render_text(item, out, indent + "    ");
      }
    } else if (value.is_string()) {
      out << indent << key << ": " << value.get<std::string>() << "\n";
    } else {
      out << indent << key << ": " << value.dump() << "\n";
    }
  }
}

// ---- quotient ---------------------------------------------------------------

json hadamard_report(const LinearRecurrence& u, const LinearRecurrence& v, bool& positive) {
  json r;
  r["u"] = u.to_string();
  r["v"] = v.to_string();
  auto q = hadamard_quotient(u, v);
  positive = q.quotient.has_value();
  r["verdict"] = positive ? "quotient" : "not_a_recurrence";
  if (q.quotient) r["quotient"] = q.quotient->to_string();
  return r;
}

json certificate_json(const QuotientCertificate& c) {
  json r;
  r["clearing_poly"] = c.clearing_poly.to_string("X");
  if (const auto* lin = std::get_if<LinearRecurrence>(&c.quotient))
    r["quotient"] = lin->to_string();
  else
    r["quotient"] = std::get<MultiRecurrence>(c.quotient).to_string();
  r["v_over_p"] = c.v_over_p.to_string();
  r["min_denominator"] = to_string(c.min_denominator);
  return r;
}

json clearance_report(const LinearRecurrence& u, const LinearRecurrence& v, bool& positive) {
  json r;
  r["u"] = u.to_string();
  r["v"] = v.to_string();
  auto res = polynomial_clearance(u, v);
  positive = res.certificate.has_value();
  if (res.certificate) {
    r["verdict"] = "certificate";
    r.update(certificate_json(*res.certificate));
  } else {
    r["verdict"] = "no_clearance";
    r["witness"] = res.witness->to_string();
  }
  return r;
}

json cross_report(const LinearRecurrence& u, const LinearRecurrence& v, bool& positive) {
  json r;
  r["u"] = u.to_string("m");
  r["v"] = v.to_string("n");
  auto res = cross_quotient(u, v);
  positive = res.certificate.has_value();
  if (res.certificate) {
    r["verdict"] = "certificate";
    r.update(certificate_json(*res.certificate));
  } else {
    r["verdict"] = "no_clearance";
    r["reason"] = "multiple_roots";
    r["note"] =
        "V has more than one root: no polynomial P makes P(n)U(m)/V(n) a multi-recurrence, so "
        "d*U(m)/V(n) cannot lie in a fixed finitely generated ring for all but finitely many (m, n)";
  }
  return r;
}

int cmd_quotient(const GlobalOptions& g, const std::string& mode, const std::string& upath,
                 const std::string& vpath, json& report) {
  LinearRecurrence u = load(upath), v = load(vpath);
  report["mode"] = mode;
  auto one = [&](const LinearRecurrence& a, const LinearRecurrence& b, bool& ok) {
    if (mode == "hadamard") return hadamard_report(a, b, ok);
    if (mode == "clearance") return clearance_report(a, b, ok);
    return cross_report(a, b, ok);
  };
  try {
    bool ok = false;
    report.update(one(u, v, ok));
    return ok ? kSuccess : kNegativeVerdict;
  } catch (const TorsionGroup&) {
    if (!g.decimate) throw;
  }
  // Split into progressions modulo 2, where all roots become positive.
  report["u"] = u.to_string(mode == "cross" ? "m" : "n");
  report["v"] = v.to_string();
  report["decimated"] = true;
  json sections = json::array();
  bool all_ok = true;
  std::vector<std::pair<long, long>> residues;
  if (mode == "cross")
    residues = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  else
    residues = {{0, 0}, {1, 1}};
  for (auto [ru, rv] : residues) {
    LinearRecurrence su = decimate(u, 2, ru), sv = decimate(v, 2, rv);
    json s;
    if (sv.is_zero()) {
      s["u"] = su.to_string();
      s["v"] = "0";
      s["verdict"] = "divisor_vanishes";
      all_ok = false;
    } else {
      bool ok = false;
      s = one(su, sv, ok);
      all_ok = all_ok && ok;
    }
    s["modulus"] = 2;
    if (mode == "cross") {
      s["residue_m"] = ru;
      s["residue_n"] = rv;
    } else {
      s["residue"] = ru;
    }
    sections.push_back(s);
  }
  report["sections"] = sections;
  report["verdict"] = all_ok ? "solved_on_sections" : "not_solved_on_all_sections";
  return all_ok ? kSuccess : kNegativeVerdict;
}

// ---- other commands ---------------------------------------------------------

int cmd_eval(const std::string& path, long n, unsigned long from, unsigned long to, json& report) {
  LinearRecurrence u = load(path);
  report["sequence"] = u.to_string();
  json values = json::array();
  if (n >= 0) {
    from = to = static_cast<unsigned long>(n);
  }
  if (to < from) throw InvalidArgument("--to must be >= --from");
  for (unsigned long k = from; k <= to; ++k) values.push_back({{"n", k}, {"value", to_string(evaluate(u, k))}});
  report["values"] = values;
  return kSuccess;
}

int cmd_zeros(const GlobalOptions& g, const std::string& path, json& report) {
  LinearRecurrence u = load(path);
  ZeroSet z = zero_set(u, g.bound);
  report["sequence"] = u.to_string();
  report["bound"] = g.bound;
  json progs = json::array();
  for (const auto& p : z.progressions) progs.push_back({{"modulus", p.modulus}, {"residue", p.residue}});
  report["progressions"] = progs;
  report["sporadic"] = z.sporadic;
  report["certificate"] = z.certificate == ZeroSetCertificate::complete ? "complete" : "bounded_only";
  report["threshold"] = z.threshold ? json(*z.threshold) : json(nullptr);
  return kSuccess;
}

int cmd_decimate(const std::string& path, long q, long r, json& report) {
  LinearRecurrence u = load(path);
  report["sequence"] = u.to_string();
  report["modulus"] = q;
  report["residue"] = r;
  report["section"] = decimate(u, q, r).to_string();
  return kSuccess;
}

int cmd_basis(const std::vector<std::string>& paths, const std::string& roots_text, json& report) {
  std::vector<Rational> roots;
  for (const auto& p : paths) {
    LinearRecurrence u = load(p);
    for (const auto& t : u.terms()) roots.push_back(t.root);
  }
  for (const auto& r : parse_list(roots_text)) roots.push_back(r);
  if (roots.empty()) throw InvalidArgument("basis needs roots (spec files or --roots)");
  json rs = json::array();
  for (const auto& r : roots) rs.push_back(to_string(r));
  report["roots"] = rs;

  RelationLattice lattice = relation_lattice(roots);
  json rels = json::array();
  for (std::size_t k = 0; k < lattice.basis.size(); ++k)
    rels.push_back({{"exponents", int_vector(lattice.basis[k])}, {"product", lattice.negative[k] ? "-1" : "1"}});
  report["relations"] = rels;

  TorsionStatus ts = torsion_status(roots);
  report["torsion_free"] = ts.torsion_free;
  if (!ts.torsion_free) {
    report["torsion_witness"] = int_vector(ts.witness);
    return kNegativeVerdict;
  }
  MultiplicativeBasis b = compute_basis(roots);
  json gens = json::array();
  for (const auto& x : b.generators()) gens.push_back(to_string(x));
  report["generators"] = gens;
  report["primes"] = int_vector(b.primes());
  json exprs = json::array();
  for (const auto& e : b.expressions()) exprs.push_back(e);
  report["expressions"] = exprs;
  return kSuccess;
}

int cmd_heights(const std::string& value, const std::string& vector_text, const std::string& poly_text,
                const std::string& form_text, const std::string& point_text, const std::string& s_text,
                const std::string& weil_norm, json& report) {
  bool did = false;
  if (!value.empty()) {
    did = true;
    Rational x = parse_rational(value);
    report["value"] = to_string(x);
    if (x != 0) {
      report["height"] = height_json(weil_height(x));
      report["product_formula"] = to_string(product_formula_check(x));
    }
    json places = json::array();
    for (const auto& pl : contributing_places(std::span(&x, 1)))
      places.push_back({{"place", pl.to_string()}, {"abs", to_string(place_abs(x, pl))}});
    report["places"] = places;
    if (!s_text.empty()) {
      std::set<Integer> primes;
      for (const auto& p : parse_list(s_text)) primes.insert(Integer(p.get_num()));
      SMembership m = s_membership(x, SIntegerSpec(primes));
      report["s_membership"] = m == SMembership::s_unit ? "s_unit" : m == SMembership::s_integer ? "s_integer" : "neither";
    }
  }
  if (!vector_text.empty()) {
    did = true;
    auto xs = parse_list(vector_text);
    report["vector_height"] = height_json(weil_height(xs));
  }
  if (!poly_text.empty()) {
    did = true;
    report["poly_height"] = height_json(weil_height(parse_unipoly(poly_text)));
  }
  if (!form_text.empty() || !point_text.empty()) {
    did = true;
    HyperplaneForm form(parse_list(form_text));
    auto x = parse_list(point_text);
    std::vector<Rational> all = form.coefficients();
    all.insert(all.end(), x.begin(), x.end());
    all.push_back(form(x));
    json rows = json::array();
    LogSum total;
    for (const auto& pl : contributing_places(all)) {
      WeilValue w = weil_function(form, x, pl, weil_norm == "sum" ? WeilNorm::sum : WeilNorm::max);
      total += w.value;
      rows.push_back({{"place", pl.to_string()}, {"ratio", to_string(w.ratio)}, {"value", height_json(w.value)}});
    }
    report["weil_function"] = rows;
    report["weil_norm"] = weil_norm;
    report["weil_sum"] = height_json(total);
  }
  if (!did) throw InvalidArgument("heights needs --value, --vector, --poly or --form/--point");
  return kSuccess;
}

int cmd_decay(const std::string& path, const std::string& place_text, unsigned long from, unsigned long to,
              bool samples, json& report) {
  LinearRecurrence v = load(path);
  Place place = parse_place(place_text);
  DecayReport d = lemma_decay_check(v, place, from, to);
  report["sequence"] = v.to_string();
  report["place"] = place.to_string();
  report["range"] = {from, to};
  report["max_ratio"] = height_json(d.max_ratio);
  report["argmax_n"] = d.argmax_n;
  report["skipped_zeros"] = d.skipped_zeros;
  if (samples) {
    json s = json::array();
    for (const auto& x : d.samples) s.push_back({{"n", x.n}, {"ratio", height_json(x.ratio)}});
    report["samples"] = s;
  }
  return kSuccess;
}

int cmd_search(const GlobalOptions& g, const std::string& upath, const std::string& vpath, unsigned long m_max,
               unsigned long n_max, bool totient, const std::string& s_text, json& report) {
  LinearRecurrence u = load(upath), v = load(vpath);
  SearchOptions o;
  o.m_max = m_max;
  o.n_max = n_max;
  o.totient = totient;
  o.policy = DPolicy::parse(g.d_policy);
  if (!s_text.empty()) {
    std::set<Integer> primes;
    for (const auto& p : parse_list(s_text)) primes.insert(Integer(p.get_num()));
    o.s_integers = SIntegerSpec(primes);
  }
  auto hits = integrality_search(u, v, o);
  report["u"] = u.to_string("m");
  report["v"] = v.to_string("n");
  report["m_max"] = m_max;
  report["n_max"] = n_max;
  report["d_policy"] = g.d_policy;
  report["totient"] = totient;
  json hs = json::array();
  for (const auto& h : hits) hs.push_back({{"m", h.m}, {"n", h.n}, {"d", to_string(h.d)}});
  report["hits"] = hs;
  return kSuccess;
}

int cmd_obstruct(const std::string& upath, const std::string& vpath, long q, long r, const std::string& p,
                 json& report) {
  LinearRecurrence u = load(upath), v = load(vpath);
  Rational pr = parse_rational(p);
  if (pr.get_den() != 1) throw InvalidArgument("--p must be a prime");
  ObstructionResult res = obstruction_scan(u, v, q, r, Integer(pr.get_num()));
  report["u"] = u.to_string("m");
  report["v"] = v.to_string("n");
  report["progression"] = {{"modulus", q}, {"residue", r}};
  report["prime"] = p;
  report["verdict"] = res.certified ? "certified" : "not_an_obstruction";
  report["clearing_u"] = to_string(res.clearing_u);
  report["clearing_v"] = to_string(res.clearing_v);
  report["period_u"] = res.period_u;
  report["period_v"] = res.period_v;
  report["witness_n"] = res.witness_n ? json(*res.witness_n) : json(nullptr);
  report["witness_m"] = res.witness_m ? json(*res.witness_m) : json(nullptr);
  return res.certified ? kSuccess : kNegativeVerdict;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact linear-recurrence quotients, zero sets, heights and integrality", "recurquot"};
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_flag("--json", g.json_output, "Emit a JSON document");
  app.add_flag("--decimate", g.decimate, "Solve on progressions mod 2 when the roots have torsion");
  app.add_option("--bound", g.bound, "Search bound for zeros");
  app.add_option("--d-policy", g.d_policy, "Multiplier policy: fixed:k or poly:B");

  std::string upath, vpath, spath, mode = "hadamard";
  long n = -1, q = 1, r = 0;
  unsigned long from = 0, to = 10, m_max = 100, n_max = 20;
  std::string place = "inf", p_text, roots_text, s_text;
  std::string weil_norm = "max";
  std::string value, vector_text, poly_text, form_text, point_text;
  std::vector<std::string> paths;
  bool totient = false, samples = false;

  auto* eval = app.add_subcommand("eval", "Evaluate a recurrence");
  eval->add_option("spec", spath)->required();
  eval->add_option("--n", n, "Single index");
  eval->add_option("--from", from);
  eval->add_option("--to", to);

  auto* zeros = app.add_subcommand("zeros", "Zero set with completeness certificate");
  zeros->add_option("spec", spath)->required();

  auto* quotient = app.add_subcommand("quotient", "Hadamard quotient, polynomial clearance or cross quotient");
  quotient->add_option("--mode", mode)->check(CLI::IsMember({"hadamard", "clearance", "cross"}));
  quotient->add_option("u", upath)->required();
  quotient->add_option("v", vpath)->required();

  auto* dec = app.add_subcommand("decimate", "Section n -> u(qn + r)");
  dec->add_option("spec", spath)->required();
  dec->add_option("--q", q)->required();
  dec->add_option("--r", r);

  auto* basis = app.add_subcommand("basis", "Multiplicative basis of the roots");
  basis->add_option("specs", paths);
  basis->add_option("--roots", roots_text, "Comma-separated rationals");

  auto* heights = app.add_subcommand("heights", "Weil heights, absolute values and Weil functions");
  heights->add_option("--value", value);
  heights->add_option("--vector", vector_text);
  heights->add_option("--poly", poly_text);
  heights->add_option("--form", form_text, "Hyperplane coefficients a0,...,an");
  heights->add_option("--point", point_text, "Projective point x0,...,xn");
  heights->add_option("--s", s_text, "Primes of S for membership");
  heights->add_option("--weil-norm", weil_norm, "Archimedean norm of L: max or sum")
      ->check(CLI::IsMember({"max", "sum"}));

  auto* decay = app.add_subcommand("decay-check", "Decay ratio -log^-|V(n)|/n at a place");
  decay->add_option("spec", spath)->required();
  decay->add_option("--place", place);
  decay->add_option("--from", from);
  decay->add_option("--to", to);
  decay->add_flag("--samples", samples);

  auto* search = app.add_subcommand("search", "Grid search for integral d*U(m)/V(n)");
  search->add_option("u", upath)->required();
  search->add_option("v", vpath)->required();
  search->add_option("--m-max", m_max);
  search->add_option("--n-max", n_max);
  search->add_flag("--totient", totient, "Also test m = phi(V(n))");
  search->add_option("--s-primes", s_text, "Accept S-integers for these primes");

  auto* obstruct = app.add_subcommand("obstruct", "Mod-p obstruction on a progression of n");
  obstruct->add_option("u", upath)->required();
  obstruct->add_option("v", vpath)->required();
  obstruct->add_option("--q", q)->required();
  obstruct->add_option("--r", r);
  obstruct->add_option("--p", p_text)->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  json report;
  report["version"] = kVersion;
  int code = kSuccess;
  try {
    if (*eval) {
      report["command"] = "eval";
      code = cmd_eval(spath, n, from, to, report);
    } else if (*zeros) {
      report["command"] = "zeros";
      code = cmd_zeros(g, spath, report);
    } else if (*quotient) {
      report["command"] = "quotient";
      code = cmd_quotient(g, mode, upath, vpath, report);
    } else if (*dec) {
      report["command"] = "decimate";
      code = cmd_decimate(spath, q, r, report);
    } else if (*basis) {
      report["command"] = "basis";
      code = cmd_basis(paths, roots_text, report);
    } else if (*heights) {
      report["command"] = "heights";
      code = cmd_heights(value, vector_text, poly_text, form_text, point_text, s_text, weil_norm, report);
    } else if (*decay) {
      report["command"] = "decay-check";
      code = cmd_decay(spath, place, from, to, samples, report);
    } else if (*search) {
      report["command"] = "search";
      code = cmd_search(g, upath, vpath, m_max, n_max, totient, s_text, report);
    } else if (*obstruct) {
      report["command"] = "obstruct";
      code = cmd_obstruct(upath, vpath, q, r, p_text, report);
    }
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  if (g.json_output)
    out << report.dump(2) << "\n";
  else
    render_text(report, out);
  return code;
}

}  // namespace recurquot::cli
