#pragma once

#include <optional>
#include <string>

#include "fabry/trig_poly.hpp"

namespace fabry {

// Fejer kernel F_N(theta) = sum_{|k|<N} (1 - |k|/N) e^{ik theta}
//                         = (1/N) (sin(N theta / 2) / sin(theta / 2))^2.
TrigPoly fejer(int N);

// Closed-form evaluation of F_N.  Within 1e-6 of the removable singularities
// (theta in 2 pi Z) the coefficient sum is used instead, so the value is
// finite everywhere.
double fejer_value(int N, double theta);

// G_N(theta) = F_N(theta + pi/2N) + F_N(theta - pi/2N)
//            = sum_{|k|<N} (2 - 2|k|/N) cos(k pi / 2N) e^{ik theta}.
TrigPoly shifted_fejer_sum(int N);
double shifted_fejer_sum_value(int N, double theta);

// Pointwise sandwich N^-1 max(...)^-2 = A_N <= G_N <= B_N = N^-1 min(...)^-2
// away from the poles of the closed form (theta = -+ pi/2N mod 2 pi).
double g_lower_bound(int N, double theta);
double g_upper_bound(int N, double theta);

// The separating polynomial P_N: symmetric with nonnegative coefficients,
// strictly negative on [-pi, pi] outside (-4 pi/N, 4 pi/N).  For N in 2..7
// this is cos theta; for N >= 8 it is G_N - G_{floor(N/4)}, which has zero
// mean (c_0 = 0).
TrigPoly separating_poly(int N);
double separating_poly_value(int N, double theta);

// Sign certificate for P_N < 0 on [4 pi/N, pi] (extended to the mirror
// interval by symmetry).  Two rigorous grid routes:
//
//   bernstein_gap     min grid value of -P exceeds (h/2) * deg(P) * sup|P|;
//                     by the Bernstein inequality and the mean value theorem
//                     P stays negative between grid points.
//   kernel_sandwich   (N >= 8 only)  sigma = sqrt(N) min |sin(theta/2 -+ pi/4N)|
//                     - sqrt(M) max |sin(theta/2 -+ pi/4M)| is positive on the
//                     grid with Lipschitz headroom (sqrt(N)+sqrt(M))/2 * h/2,
//                     hence positive everywhere, which forces
//                     G_N <= B_N < A_M <= G_M pointwise.
//
// The Bernstein route is tried first but its gap condition becomes
// unreachable at the default density once N is large (the margin decays like
// 1/N while the derivative bound grows like N^2); the sandwich route
// certifies every N at the default density.  If the requested grid fails
// both, the grid is doubled a few times before giving up.
struct NegativityCertificate {
  int N = 0;
  long grid_points = 0;                // final grid size on [4 pi/N, pi]
  double grid_step = 0.0;
  std::optional<double> margin;        // min of -P over the region grid
  std::optional<double> argmin_theta;  // grid location of that minimum
  double bernstein_bound = 0.0;        // deg(P) * sup|P|, a bound on |P'|
  std::optional<double> sandwich_slack;
  std::string method;  // "empty_region" | "bernstein_gap" | "kernel_sandwich" | "none"
  bool certified = false;
};

// grid_points = 0 requests the default density 64 N; explicit values must be
// at least 16 N.  An uncertified result is returned with certified = false,
// never silently accepted.
NegativityCertificate certify_negativity(int N, long grid_points = 0);

// Numerical replay of the strict inequality
//   C_N(theta) = 2 min(sin(theta/2 - pi/4N), sin(theta/2 + pi/4N))
//              > D_N(theta) = max(sin(theta/2 - pi/4M), sin(theta/2 + pi/4M)),
// with M = floor(N/4), on a grid of [4 pi/N, pi]; this is the inequality the
// sandwich route rests on.
struct DenominatorCheck {
  int N = 0;
  long grid_points = 0;
  double min_slack = 0.0;
  double argmin_theta = 0.0;
  bool holds = false;
};
DenominatorCheck denominator_inequality_check(int N, long grid_points = 10000);

}  // namespace fabry
