#pragma once

// Umbrella header for the whole library.

#include "coreab/abacus.hpp"
#include "coreab/arith.hpp"
#include "coreab/bijection.hpp"
#include "coreab/enumerate.hpp"
#include "coreab/errors.hpp"
#include "coreab/partition.hpp"
#include "coreab/qpoly.hpp"
#include "coreab/rational.hpp"
#include "coreab/recurrence.hpp"
#include "coreab/stats.hpp"
