#pragma once

// JSON documents produced by the command-line tool. Exact values are always
// strings; key order is fixed, so identical inputs give identical bytes.

#include "radred/expr.hpp"
#include "radred/identity.hpp"
#include "radred/numeric_verify.hpp"
#include "radred/reduce.hpp"

namespace radred::json {

ordered_json poly(const RatPoly& f);
ordered_json quad(const QuadExt& q);
ordered_json rationals(const std::vector<Rational>& values);

ordered_json reduction(const ReductionResult& r);
ordered_json residual(const BranchResidual& r, const NumericOptions& options);
ordered_json bijection(const BijectionReport& r);
ordered_json construction(const ConstructedExample& c, const Rational& u);
ordered_json euclid(const Rational& d, const Rational& R, const std::optional<EuclidDenesting>& e);
ordered_json euclid(const Rational& d, const Rational& R, const std::optional<EuclidBiquadratic>& e);
ordered_json case_report(const CaseReport& c);
ordered_json verification(const VerificationReport& r);

/// Pretty-printed document terminated by a newline.
std::string dump(const ordered_json& j);

}  // namespace radred::json
