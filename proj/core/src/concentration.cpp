#include "fabry/concentration.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fabry/kernels.hpp"
#include "fabry/quadrature.hpp"
#include "fabry/rng.hpp"

namespace fabry {

namespace {

constexpr double kPi = std::numbers::pi;

// Golden-section minimization of f on [a, b] (unimodal assumed locally).
template <typename F>
double golden_min(F&& f, double a, double b, int iters = 80) {
  const double invphi = 0.6180339887498949;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iters && b - a > 1e-15; ++i) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
  }
  return std::min(f1, f2);
}

double rayleigh_ratio(const std::vector<double>& a, const std::vector<double>& M,
                      int T) {
  double num = 0.0, den = 0.0;
  for (int i = 0; i < T; ++i) {
    num += a[i] * a[i];
    double mi = 0.0;
    const double* row = &M[static_cast<std::size_t>(i) * T];
    for (int j = 0; j < T; ++j) mi += row[j] * a[j];
    den += a[i] * mi;
  }
  return 2.0 * kPi * num / den;
}

}  // namespace

QuadraticFormResult quadratic_form(const CoeffSeq& series, const TrigPoly& P) {
  if (!P.is_real_valued()) {
    throw std::invalid_argument(
        "precondition violated: P must be real-valued (c_{-k} = conj(c_k))");
  }
  QuadraticFormResult out;

  // Closed-form side: 2 pi sum_k c_k sum_n a_n conj(a_{n+k}).
  cx acc{0.0, 0.0};
  for (int k = -P.degree(); k <= P.degree(); ++k) {
    const cx ck = P.coeff(k);
    if (ck == cx{0.0, 0.0}) continue;
    cx corr{0.0, 0.0};
    for (long n = series.first_index(); n <= series.last_index(); ++n) {
      corr += series.at(n) * std::conj(series.at(n + k));
    }
    acc += ck * corr;
  }
  out.coefficient_sum = 2.0 * kPi * acc.real();

  // Quadrature side, exact for the trigonometric degree at hand.
  const long span = series.last_index() - series.first_index();
  const long points = std::max<long>(64, 4 * (span + P.degree() + 1));
  out.integral = trapezoid(
      [&](double th) {
        return std::norm(series.eval(th)) * P.eval_real(th);
      },
      -kPi, kPi, points);

  double r2 = 0.0;
  for (long n = series.first_index(); n <= series.last_index(); ++n) {
    r2 += std::norm(series.at(n));
  }
  out.scale = 2.0 * kPi * r2 * P.coeff_abs_sum();
  return out;
}

ConstantEstimate constructed_constant(int N) {
  const NegativityCertificate cert = certify_negativity(N);
  if (!cert.certified) {
    throw std::runtime_error("negativity certification failed for N = " +
                             std::to_string(N));
  }
  ConstantEstimate est;
  est.N = N;
  est.kind = "constructed";
  if (!cert.margin.has_value() || cert.grid_points <= 1) {
    // Complement empty (or a single point): the arc is the whole circle.
    est.value = 1.0;
    return est;
  }

  const TrigPoly P = separating_poly(N);
  // Coefficients are nonnegative, so sup P over the arc is P(0) exactly.
  est.max_p_on_arc = P.coeff_sum().real();

  // Grid minimum of -P over the complement, polished by a local search in
  // the bracketing cells; the grid is dense enough to isolate the basin.
  const double lo = 4.0 * kPi / N;
  const double h = cert.grid_step;
  const double t0 = std::max(lo, *cert.argmin_theta - h);
  const double t1 = std::min(kPi, *cert.argmin_theta + h);
  const double refined =
      golden_min([&](double th) { return -separating_poly_value(N, th); }, t0, t1);
  est.min_neg_p_off_arc = std::min(*cert.margin, refined);
  est.value = 1.0 + est.max_p_on_arc / est.min_neg_p_off_arc;
  return est;
}

CorollaryReport verify_corollary(const CoeffSeq& series, int N, double C,
                                 double tau, double alpha) {
  const GoodnessReport good = is_n_good(series, N, alpha);
  if (!good.verdict) {
    throw std::invalid_argument(
        "precondition violated: series is not N-good (window " +
        std::to_string(good.first_failure.value_or(-1)) +
        " admits no witness); the concentration inequality hypothesis fails");
  }
  CorollaryReport rep;
  rep.N = N;
  rep.tau = tau;
  rep.C = C;
  rep.lhs = series.l2_norm_sq(tau);
  rep.rhs = C * series.arc_integral_exact(Arc::for_window(N), tau);
  rep.slack = (rep.rhs - rep.lhs) / rep.rhs;
  rep.holds = rep.lhs <= rep.rhs * (1.0 + 1e-9);
  return rep;
}

std::vector<double> arc_gram_matrix(int N, int T) {
  if (T < 1) throw std::invalid_argument("precondition violated: T >= 1");
  const double beta = Arc::for_window(N).half_width();
  std::vector<double> M(static_cast<std::size_t>(T) * T);
  for (int i = 0; i < T; ++i) {
    for (int j = 0; j < T; ++j) {
      const int d = i - j;
      M[static_cast<std::size_t>(i) * T + j] =
          d == 0 ? 2.0 * beta : 2.0 * std::sin(d * beta) / d;
    }
  }
  return M;
}

ConstantEstimate sharp_constant_lower_bound(int N, int T, long iterations,
                                            std::uint64_t seed, int starts) {
  if (N < 2) throw std::invalid_argument("precondition violated: N >= 2");
  if (T < 1) throw std::invalid_argument("precondition violated: T >= 1");
  const std::vector<double> M = arc_gram_matrix(N, T);

  ConstantEstimate est;
  est.N = N;
  est.kind = "sharp_lower_bound";
  est.T = T;
  est.starts = starts;

  Rng rng(seed);
  std::vector<double> best;
  double best_ratio = 0.0;
  long total_iters = 0;
  bool all_converged = true;

  for (int s = 0; s < starts; ++s) {
    std::vector<double> a(static_cast<std::size_t>(T));
    if (s == 0) {
      a[0] = 1.0;  // the single-coefficient feasible point, ratio N/4 exactly
    } else {
      for (double& x : a) x = rng.uniform01();
    }
    double norm = 0.0;
    for (double x : a) norm += x * x;
    norm = std::sqrt(norm);
    for (double& x : a) x /= norm;

    double r = rayleigh_ratio(a, M, T);
    double step = 0.5;
    bool converged = false;
    long it = 0;
    std::vector<double> grad(static_cast<std::size_t>(T));
    std::vector<double> cand(static_cast<std::size_t>(T));
    for (; it < iterations; ++it) {
      // ascent direction of 2 pi (a.a)/(a^T M a), up to a positive factor:
      // (a^T M a) a - (a.a) M a
      double num = 0.0, den = 0.0;
      for (int i = 0; i < T; ++i) {
        double mi = 0.0;
        const double* row = &M[static_cast<std::size_t>(i) * T];
        for (int j = 0; j < T; ++j) mi += row[j] * a[j];
        grad[static_cast<std::size_t>(i)] = mi;  // temporarily Ma
        num += a[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(i)];
        den += a[static_cast<std::size_t>(i)] * mi;
      }
      double gn = 0.0;
      for (int i = 0; i < T; ++i) {
        const double g = den * a[static_cast<std::size_t>(i)] -
                         num * grad[static_cast<std::size_t>(i)];
        grad[static_cast<std::size_t>(i)] = g;
        gn += g * g;
      }
      gn = std::sqrt(gn);
      if (gn <= 1e-14 * den) {
        converged = true;
        break;
      }
      // Backtracking on the projected step.
      bool improved = false;
      while (step > 1e-14) {
        double cn = 0.0;
        for (int i = 0; i < T; ++i) {
          const double x = std::max(
              0.0, a[static_cast<std::size_t>(i)] +
                       step * grad[static_cast<std::size_t>(i)] / gn);
          cand[static_cast<std::size_t>(i)] = x;
          cn += x * x;
        }
        if (cn > 0.0) {
          cn = std::sqrt(cn);
          for (double& x : cand) x /= cn;
          const double rc = rayleigh_ratio(cand, M, T);
          if (rc > r * (1.0 + 1e-15)) {
            a = cand;
            r = rc;
            step *= 1.5;
            improved = true;
            break;
          }
        }
        step *= 0.5;
      }
      if (!improved) {
        converged = true;
        break;
      }
    }
    total_iters += it;
    all_converged = all_converged && converged;
    if (r > best_ratio) {
      best_ratio = r;
      best = a;
    }
  }

  est.value = best_ratio;
  est.iterations = total_iters;
  est.converged = all_converged;
  est.maximizer = std::move(best);
  return est;
}

PoincareReport poincare_check(const TrigPoly& v, long grid_points,
                              long quadrature_points) {
  if (std::abs(v.coeff(0)) != 0.0) {
    throw std::invalid_argument("precondition violated: zero mean (c_0 = 0) required");
  }
  PoincareReport rep;
  for (long j = 0; j < grid_points; ++j) {
    const double th = -kPi + 2.0 * kPi * static_cast<double>(j) / grid_points;
    rep.max_abs = std::max(rep.max_abs, std::abs(v.eval(th)));
  }
  const TrigPoly dv = v.derivative();
  rep.arc_length_bound =
      0.5 * trapezoid([&](double th) { return std::abs(dv.eval(th)); }, -kPi, kPi,
                      quadrature_points);
  double s = 0.0;
  for (int k = -v.degree(); k <= v.degree(); ++k) {
    s += static_cast<double>(k) * k * std::norm(v.coeff(k));
  }
  rep.l2_bound = std::sqrt(0.5 * kPi * 2.0 * kPi * s);
  const double tol = 1e-9;
  rep.holds = rep.max_abs <= rep.arc_length_bound * (1.0 + tol) + 1e-12 &&
              rep.arc_length_bound <= rep.l2_bound * (1.0 + tol) + 1e-12;
  return rep;
}

CoeffSeq random_n_good_series(int N, long length, std::uint64_t seed, double alpha) {
  if (N < 2) throw std::invalid_argument("precondition violated: N >= 2");
  if (length < N) throw std::invalid_argument("precondition violated: length >= N");
  Rng rng(seed);
  const double step = kPi / (4.0 * N);
  // Worst-case base drift across one window; phases are drawn from the
  // window arc shrunk by it, so every window fits regardless of the walk.
  const double width = alpha - static_cast<double>(N - 1) * step;
  if (width <= 0.0) {
    throw std::invalid_argument("precondition violated: alpha too small for walk step");
  }
  std::vector<cx> coeffs(static_cast<std::size_t>(length));
  double base = rng.uniform(0.0, 2.0 * kPi);
  for (long n = 0; n < length; ++n) {
    base += rng.uniform(-step, step);
    const double phase = base + rng.uniform(0.0, width);
    const double r = std::abs(rng.normal());
    coeffs[static_cast<std::size_t>(n)] = std::polar(r, phase);
  }
  CoeffSeq series(0, std::move(coeffs));
  // The construction guarantees goodness; verify anyway so no caller ever
  // sees an unchecked generator output.
  if (!is_n_good(series, N, alpha).verdict) {
    throw std::logic_error("random_n_good_series: generated series failed verification");
  }
  return series;
}

}  // namespace fabry
