#pragma once

#include <functional>

namespace fabry {

// Composite trapezoid rule with `points` samples (both endpoints included).
// For a 2 pi periodic trigonometric integrand on [-pi, pi] the rule is exact
// to roundoff whenever points - 1 exceeds the top frequency, so it serves as
// an independent cross-check for the coefficient-exact integrals.
// Throws if the integrand produces a non-finite sample.
double trapezoid(const std::function<double(double)>& f, double lo, double hi,
                 long points);

}  // namespace fabry
