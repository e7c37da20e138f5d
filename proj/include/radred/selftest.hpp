#pragma once

#include "radred/identity.hpp"

#include <vector>

namespace radred {

/// Golden checks on the worked examples (p = 5 and p = 7 instances, the
/// constructed p = 7 instance, the p = 3 instance, Euclid's formulas) and a
/// short identity sweep.
std::vector<CheckResult> golden_checks();

/// Everything `verify` runs for one odd p: expansion, fundamental identity,
/// and recursion certificates when p >= 5. Check names are prefixed by group.
VerificationReport full_verification(long p);

}  // namespace radred
