#pragma once

#include "recurquot/errors.hpp"
#include "recurquot/factor.hpp"
#include "recurquot/group_ring.hpp"
#include "recurquot/heights.hpp"
#include "recurquot/integrality.hpp"
#include "recurquot/lattice.hpp"
#include "recurquot/mpoly.hpp"
#include "recurquot/multi_recurrence.hpp"
#include "recurquot/multiplicative_group.hpp"
#include "recurquot/parse.hpp"
#include "recurquot/place.hpp"
#include "recurquot/quotient.hpp"
#include "recurquot/rational.hpp"
#include "recurquot/recurrence.hpp"
#include "recurquot/unipoly.hpp"
#include "recurquot/zero_set.hpp"
