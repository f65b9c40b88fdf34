#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace recurquot {

/// Base of every error the library throws. Negative mathematical verdicts
/// (not divisible, no clearing polynomial, ...) are ordinary return values,
/// never exceptions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A configured computational cap was hit.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

#define RECURQUOT_DEFINE_ERROR(Name, Base) \
  class Name : public Base {               \
   public:                                 \
    using Base::Base;                      \
  }

RECURQUOT_DEFINE_ERROR(ZeroInput, InputError);
RECURQUOT_DEFINE_ERROR(BothZero, InputError);
RECURQUOT_DEFINE_ERROR(DivisorZero, InputError);
RECURQUOT_DEFINE_ERROR(ZeroRoot, InputError);
RECURQUOT_DEFINE_ERROR(ZeroRecurrence, InputError);
RECURQUOT_DEFINE_ERROR(TorsionGroup, InputError);
RECURQUOT_DEFINE_ERROR(RootNotInGroup, InputError);
RECURQUOT_DEFINE_ERROR(BasisMismatch, InputError);
RECURQUOT_DEFINE_ERROR(IrrationalRoots, InputError);
RECURQUOT_DEFINE_ERROR(PointOnHyperplane, InputError);
RECURQUOT_DEFINE_ERROR(HypothesisViolated, InputError);
RECURQUOT_DEFINE_ERROR(BadPrime, InputError);
RECURQUOT_DEFINE_ERROR(InvalidArgument, InputError);
RECURQUOT_DEFINE_ERROR(SchemaError, InputError);
RECURQUOT_DEFINE_ERROR(FactorizationLimit, ResourceLimit);

#undef RECURQUOT_DEFINE_ERROR

/// Syntax error in a polynomial expression or JSON document. Positions are
/// 1-based.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected,
             const std::string& detail);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

}  // namespace recurquot
