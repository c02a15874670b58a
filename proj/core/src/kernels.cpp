#include "fabry/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace fabry {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSingularNbhd = 1e-6;

// Reduce to (-pi, pi].
double reduce(double theta) {
  double r = std::remainder(theta, kTwoPi);
  if (r <= -kPi) r += kTwoPi;
  return r;
}

double fejer_coeff_sum(int N, double theta) {
  double acc = 1.0;  // k = 0 term
  for (int k = 1; k < N; ++k) {
    acc += 2.0 * (1.0 - static_cast<double>(k) / N) * std::cos(k * theta);
  }
  return acc;
}

int separating_floor(int N) { return N / 4; }

}  // namespace

TrigPoly fejer(int N) {
  if (N < 1) throw std::invalid_argument("precondition violated: N >= 1");
  TrigPoly p(N - 1);
  for (int k = -(N - 1); k <= N - 1; ++k) {
    p.set_coeff(k, {1.0 - static_cast<double>(std::abs(k)) / N, 0.0});
  }
  return p;
}

double fejer_value(int N, double theta) {
  if (N < 1) throw std::invalid_argument("precondition violated: N >= 1");
  const double t = reduce(theta);
  if (std::abs(t) < kSingularNbhd) return fejer_coeff_sum(N, t);
  const double num = std::sin(0.5 * N * t);
  const double den = std::sin(0.5 * t);
  const double q = num / den;
  return q * q / N;
}

TrigPoly shifted_fejer_sum(int N) {
  if (N < 1) throw std::invalid_argument("precondition violated: N >= 1");
  TrigPoly p(N - 1);
  for (int k = -(N - 1); k <= N - 1; ++k) {
    const double a = std::abs(k) * kPi / (2.0 * N);
    p.set_coeff(k, {(2.0 - 2.0 * static_cast<double>(std::abs(k)) / N) * std::cos(a), 0.0});
  }
  return p;
}

double shifted_fejer_sum_value(int N, double theta) {
  // Each shifted Fejer term handles its own removable singularity.
  const double shift = kPi / (2.0 * N);
  return fejer_value(N, theta + shift) + fejer_value(N, theta - shift);
}

double g_lower_bound(int N, double theta) {
  const double a = std::abs(std::sin(0.5 * theta - kPi / (4.0 * N)));
  const double b = std::abs(std::sin(0.5 * theta + kPi / (4.0 * N)));
  const double m = std::max(a, b);
  return 1.0 / (N * m * m);
}

double g_upper_bound(int N, double theta) {
  const double a = std::abs(std::sin(0.5 * theta - kPi / (4.0 * N)));
  const double b = std::abs(std::sin(0.5 * theta + kPi / (4.0 * N)));
  const double m = std::min(a, b);
  return 1.0 / (N * m * m);
}

TrigPoly separating_poly(int N) {
  if (N < 2) throw std::invalid_argument("precondition violated: N >= 2");
  if (N < 8) return TrigPoly::cosine();
  const int M = separating_floor(N);
  const TrigPoly gN = shifted_fejer_sum(N);
  const TrigPoly gM = shifted_fejer_sum(M);
  TrigPoly p(N - 1);
  for (int k = -(N - 1); k <= N - 1; ++k) {
    p.set_coeff(k, gN.coeff(k) - gM.coeff(k));
  }
  return p;
}

double separating_poly_value(int N, double theta) {
  if (N < 2) throw std::invalid_argument("precondition violated: N >= 2");
  if (N < 8) return std::cos(theta);
  return shifted_fejer_sum_value(N, theta) -
         shifted_fejer_sum_value(separating_floor(N), theta);
}

NegativityCertificate certify_negativity(int N, long grid_points) {
  if (N < 2) throw std::invalid_argument("precondition violated: N >= 2");
  if (grid_points != 0 && grid_points < 16L * N) {
    throw std::invalid_argument("precondition violated: grid_points >= 16 N");
  }

  NegativityCertificate cert;
  cert.N = N;

  const TrigPoly P = separating_poly(N);
  const double sup = P.coeff_abs_sum();  // = P(0) here: coefficients >= 0
  cert.bernstein_bound = static_cast<double>(P.degree()) * sup;

  const double lo = 4.0 * kPi / N;
  if (lo > kPi) {  // N <= 3: nothing outside (-4 pi/N, 4 pi/N)
    cert.method = "empty_region";
    cert.certified = true;
    return cert;
  }
  if (lo == kPi) {  // N = 4: the region degenerates to the single point pi
    const double m = -separating_poly_value(N, kPi);
    cert.grid_points = 1;
    cert.margin = m;
    cert.argmin_theta = kPi;
    cert.method = "bernstein_gap";
    cert.certified = m > 0.0;
    return cert;
  }

  const int M = separating_floor(N);
  const double sqN = std::sqrt(static_cast<double>(N));
  const double sqM = std::sqrt(static_cast<double>(M));

  long G = grid_points > 0 ? grid_points : 64L * N;
  for (int pass = 0; pass < 6; ++pass) {
    const double h = (kPi - lo) / static_cast<double>(G - 1);
    double margin = std::numeric_limits<double>::infinity();
    double argmin = lo;
    double slack = std::numeric_limits<double>::infinity();
    for (long j = 0; j < G; ++j) {
      const double th = (j == G - 1) ? kPi : lo + static_cast<double>(j) * h;
      const double negP = -separating_poly_value(N, th);
      if (negP < margin) {
        margin = negP;
        argmin = th;
      }
      if (N >= 8) {
        const double smN = std::min(std::sin(0.5 * th - kPi / (4.0 * N)),
                                    std::sin(0.5 * th + kPi / (4.0 * N)));
        const double sxM = std::max(std::sin(0.5 * th - kPi / (4.0 * M)),
                                    std::sin(0.5 * th + kPi / (4.0 * M)));
        slack = std::min(slack, sqN * smN - sqM * sxM);
      }
    }
    cert.grid_points = G;
    cert.grid_step = h;
    cert.margin = margin;
    cert.argmin_theta = argmin;
    if (N >= 8) cert.sandwich_slack = slack;

    if (margin <= 0.0) {
      cert.method = "none";
      cert.certified = false;
      return cert;
    }
    if (margin - 0.5 * h * cert.bernstein_bound > 0.0) {
      cert.method = "bernstein_gap";
      cert.certified = true;
      return cert;
    }
    if (N >= 8 && slack > 0.25 * h * (sqN + sqM)) {
      cert.method = "kernel_sandwich";
      cert.certified = true;
      return cert;
    }
    G = 2 * (G - 1) + 1;
  }
  cert.method = "none";
  cert.certified = false;
  return cert;
}

DenominatorCheck denominator_inequality_check(int N, long grid_points) {
  if (N < 8) throw std::invalid_argument("precondition violated: N >= 8");
  if (grid_points < 2) throw std::invalid_argument("precondition violated: grid_points >= 2");
  const int M = separating_floor(N);
  const double lo = 4.0 * kPi / N;
  const double h = (kPi - lo) / static_cast<double>(grid_points - 1);
  DenominatorCheck chk;
  chk.N = N;
  chk.grid_points = grid_points;
  chk.min_slack = std::numeric_limits<double>::infinity();
  for (long j = 0; j < grid_points; ++j) {
    const double th = (j == grid_points - 1) ? kPi : lo + static_cast<double>(j) * h;
    const double c = 2.0 * std::min(std::sin(0.5 * th - kPi / (4.0 * N)),
                                    std::sin(0.5 * th + kPi / (4.0 * N)));
    const double d = std::max(std::sin(0.5 * th - kPi / (4.0 * M)),
                              std::sin(0.5 * th + kPi / (4.0 * M)));
    const double s = c - d;
    if (s < chk.min_slack) {
      chk.min_slack = s;
      chk.argmin_theta = th;
    }
  }
  chk.holds = chk.min_slack > 0.0;
  return chk;
}

}  // namespace fabry
