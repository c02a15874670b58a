#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fabry/coeff_seq.hpp"
#include "fabry/goodness.hpp"
#include "fabry/trig_poly.hpp"

namespace fabry {

// Quadratic-form identity: for a finite series F and a real-valued symmetric
// trigonometric polynomial P,
//   integral |F|^2 P = 2 pi sum_n sum_k a_n conj(a_{n+k}) c_k,
// and the right-hand side is >= 0 whenever the series is N-good and
// deg P <= N - 1 with symmetric nonnegative coefficients.
struct QuadraticFormResult {
  double integral = 0.0;         // trapezoid value of |F|^2 P (exact degree)
  double coefficient_sum = 0.0;  // closed-form double sum
  double scale = 0.0;            // 2 pi (sum r_n^2)(sum |c_k|), for relative tests
};
QuadraticFormResult quadratic_form(const CoeffSeq& series, const TrigPoly& P);

// A concentration constant C for the inequality
//   integral_{-pi}^{pi} |F|^2 <= C integral_{|theta| <= 4 pi/N} |F|^2
// over N-good series.
struct ConstantEstimate {
  int N = 0;
  double value = 1.0;
  std::string kind;  // "constructed" | "sharp_lower_bound"

  // constructed: C = 1 + max_arc P / min_complement(-P), extrema taken from
  // the certification grid with local golden-section refinement.
  double max_p_on_arc = 0.0;
  double min_neg_p_off_arc = 0.0;

  // sharp_lower_bound: best ratio l2 / arc over the nonnegative cone.
  int T = 0;
  long iterations = 0;
  int starts = 0;
  bool converged = false;
  std::vector<double> maximizer;
};

// Requires certify_negativity(N) to succeed; throws otherwise.
// For N <= 4 the complement is empty and C = 1.
ConstantEstimate constructed_constant(int N);

struct CorollaryReport {
  int N = 0;
  double tau = 0.0;
  double C = 1.0;
  double lhs = 0.0;    // l2_norm_sq
  double rhs = 0.0;    // C * arc integral
  double slack = 0.0;  // (rhs - lhs) / rhs
  bool holds = false;
};

// Verifies the inequality for a concrete series.  Refuses (throws) when the
// series fails the N-goodness hypothesis.
CorollaryReport verify_corollary(const CoeffSeq& series, int N, double C,
                                 double tau = 0.0, double alpha = kHalfPi);

// Lower bound for the sharp constant: maximize 2 pi a.a / (a^T M a) over
// nonnegative coefficient vectors of length T (all phases zero, hence N-good
// for every N), where M_{nm} = 2 sin((n-m) beta)/(n-m), M_nn = 2 beta,
// beta = 4 pi / N.  Projected gradient ascent with backtracking, multi-start;
// any feasible iterate is a valid lower bound.
ConstantEstimate sharp_constant_lower_bound(int N, int T, long iterations = 2000,
                                            std::uint64_t seed = 1,
                                            int starts = 20);

// Dense symmetric T x T Gram matrix of e^{in theta} over the arc, row-major.
std::vector<double> arc_gram_matrix(int N, int T);

// Zero-mean sup bound chain for a continuously differentiable 2 pi periodic v:
//   max |v| <= (1/2) integral |v'| <= sqrt(pi/2 integral |v'|^2).
struct PoincareReport {
  double max_abs = 0.0;           // max |v| on the evaluation grid
  double arc_length_bound = 0.0;  // (1/2) integral |v'| by quadrature
  double l2_bound = 0.0;          // sqrt(pi/2 * 2 pi sum k^2 |c_k|^2)
  bool holds = false;
};
// Throws unless c_0 = 0 (zero mean).
PoincareReport poincare_check(const TrigPoly& v, long grid_points = 4096,
                              long quadrature_points = (1L << 16) + 1);

// Random N-good test series: moduli |N(0,1)|, base angle on a slow random
// walk (step <= pi/(4N)), phases uniform inside the window arc shrunk by the
// worst-case walk drift so every window fits by construction.  The result is
// verified with is_n_good before being returned.
CoeffSeq random_n_good_series(int N, long length, std::uint64_t seed,
                              double alpha = kHalfPi);

}  // namespace fabry
