#include "fabry/probe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "fabry/concentration.hpp"

namespace fabry {

namespace {

constexpr double kPi = std::numbers::pi;

// Binary powering; exact when s is a root of unity on the axes.
cx ipow(cx base, long e) {
  if (e < 0) return cx{1.0, 0.0} / ipow(base, -e);
  cx acc{1.0, 0.0};
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

// Geometric extrapolation of the damped energy beyond the stored range,
// assuming |a_n| stays at the last stored modulus.
double beyond_range_energy(const CoeffSeq& s, double tau) {
  if (s.empty() || tau <= 0.0) return 0.0;
  const long last = s.last_index();
  const double r = s.modulus(last) * std::exp(-static_cast<double>(last) * tau);
  const double q = std::exp(-2.0 * tau);
  return r * r * q / (1.0 - q);
}

// Relative discarded-energy estimate when keeping indices < first discarded.
// Used both for picking the slice length and for the tau feasibility check.
double tail_fraction(const CoeffSeq& s, double tau) {
  double total = 0.0;
  for (long n = s.first_index(); n <= s.last_index(); ++n) {
    const double r = s.modulus(n) * std::exp(-static_cast<double>(n) * tau);
    total += r * r;
  }
  const double beyond = beyond_range_energy(s, tau);
  return beyond / (total + beyond);
}

// sup over an odd uniform grid of [-beta, beta] of |sum_n w_n b_n e^{in theta}|
// with real weights w_n, evaluated in scaled form: returns log of the sup.
double log_sup_on_arc(const std::vector<cx>& b, long offset,
                      const std::vector<double>& w, double beta, long grid) {
  const long n_terms = static_cast<long>(b.size());
  double wmax = 0.0;
  for (long i = 0; i < n_terms; ++i) {
    wmax = std::max(wmax, std::abs(w[static_cast<std::size_t>(i)]) *
                              std::abs(b[static_cast<std::size_t>(i)]));
  }
  if (wmax == 0.0) return -std::numeric_limits<double>::infinity();
  double sup = 0.0;
  const long G = grid | 1;  // odd, so theta = 0 is a node
  for (long j = 0; j < G; ++j) {
    const double th = -beta + 2.0 * beta * static_cast<double>(j) / (G - 1);
    const cx step{std::cos(th), std::sin(th)};
    cx rot{std::cos(static_cast<double>(offset) * th),
           std::sin(static_cast<double>(offset) * th)};
    cx acc{0.0, 0.0};
    for (long i = 0; i < n_terms; ++i) {
      acc += (w[static_cast<std::size_t>(i)] / wmax) * b[static_cast<std::size_t>(i)] * rot;
      rot *= step;
    }
    sup = std::max(sup, std::abs(acc));
  }
  return std::log(wmax) + std::log(sup);
}

}  // namespace

CoeffSeq rescale_to_unit(const CoeffSeq& series, cx s) {
  if (s == cx{0.0, 0.0}) throw std::invalid_argument("precondition violated: s != 0");
  std::vector<cx> b(series.coeffs());
  cx p = ipow(s, series.first_index());
  for (auto& v : b) {
    v *= p;
    p *= s;
  }
  return {series.first_index(), std::move(b)};
}

CoeffSeq damped_slice(const CoeffSeq& series, double tau, double energy_tol) {
  if (!(tau > 0.0)) throw std::invalid_argument("precondition violated: tau > 0");
  if (!(energy_tol > 0.0 && energy_tol < 1.0)) {
    throw std::invalid_argument("precondition violated: energy_tol in (0, 1)");
  }
  if (series.empty()) throw std::invalid_argument("precondition violated: nonempty series");

  std::vector<double> energy(static_cast<std::size_t>(series.size()));
  double total = 0.0;
  for (long i = 0; i < series.size(); ++i) {
    const long n = series.first_index() + i;
    const double r = series.modulus(n) * std::exp(-static_cast<double>(n) * tau);
    energy[static_cast<std::size_t>(i)] = r * r;
    total += r * r;
  }
  const double beyond = beyond_range_energy(series, tau);
  const double budget = energy_tol * (total + beyond);

  if (beyond > budget) {
    // Find the smallest workable tau for this truncation by bisection.
    double lo = tau, hi = std::max(1.0, 2.0 * tau);
    while (tail_fraction(series, hi) > energy_tol && hi < 1e6) hi *= 2.0;
    for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
      const double mid = 0.5 * (lo + hi);
      (tail_fraction(series, mid) > energy_tol ? lo : hi) = mid;
    }
    throw TruncationError(
        "damped_slice: stored range cannot reach energy_tol at tau = " +
            std::to_string(tau) + "; minimum achievable tau ~ " + std::to_string(hi),
        hi);
  }

  // Shortest slice whose discarded energy (stored remainder + beyond-range
  // estimate) stays within budget.
  double discarded = beyond;
  long keep = series.size();
  for (long i = series.size() - 1; i >= 1; --i) {
    if (discarded + energy[static_cast<std::size_t>(i)] > budget) break;
    discarded += energy[static_cast<std::size_t>(i)];
    keep = i;
  }
  std::vector<cx> b(static_cast<std::size_t>(keep));
  for (long i = 0; i < keep; ++i) {
    const long n = series.first_index() + i;
    b[static_cast<std::size_t>(i)] =
        series.at(n) * std::exp(-static_cast<double>(n) * tau);
  }
  return {series.first_index(), std::move(b)};
}

CoeffSeq derivative_series(const CoeffSeq& series, int ell) {
  if (ell < 0) throw std::invalid_argument("precondition violated: ell >= 0");
  if (ell == 0) return series;
  // i^ell taken exactly, so the common phase rotation is exactly ell pi/2.
  static constexpr cx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const cx i_pow = kIPow[ell % 4];
  std::vector<cx> b(series.coeffs());
  for (long i = 0; i < series.size(); ++i) {
    const double n = static_cast<double>(series.first_index() + i);
    b[static_cast<std::size_t>(i)] *= i_pow * std::pow(n, static_cast<double>(ell));
  }
  return {series.first_index(), std::move(b)};
}

ConcentrationReport concentration_sweep(const CoeffSeq& series, int N,
                                        const ProbeConfig& config) {
  if (N < 2) throw std::invalid_argument("precondition violated: N >= 2");
  if (config.taus.empty()) throw std::invalid_argument("precondition violated: taus nonempty");
  for (std::size_t i = 0; i < config.taus.size(); ++i) {
    if (!(config.taus[i] > 0.0)) {
      throw std::invalid_argument("precondition violated: taus strictly positive");
    }
    if (i > 0 && !(config.taus[i] < config.taus[i - 1])) {
      throw std::invalid_argument("precondition violated: taus descending");
    }
  }
  const GoodnessReport good = is_n_good(series, N, config.alpha);
  if (!good.verdict) {
    throw std::invalid_argument(
        "precondition violated: series is not N-good at the probed tail");
  }

  const ConstantEstimate C = constructed_constant(N);
  const Arc arc = Arc::for_window(N);
  const double beta = arc.half_width();

  ConcentrationReport rep;
  rep.N = N;
  rep.alpha = config.alpha;
  rep.L = config.L;
  rep.tail_index = series.first_index();
  rep.C_used = C.value;
  rep.lower_bound = 1.0 / C.value;
  rep.taus = config.taus;

  for (const double tau : config.taus) {
    const CoeffSeq slice = damped_slice(series, tau, config.energy_tol);
    rep.slice_lengths.push_back(slice.size());
    rep.mass_ratio.push_back(slice.arc_integral_exact(arc) / slice.l2_norm_sq());

    const std::vector<cx>& b = slice.coeffs();
    std::vector<double> w(b.size(), 1.0);
    rep.sup_abs.push_back(
        std::exp(log_sup_on_arc(b, slice.first_index(), w, beta, config.grid_points)));

    std::vector<double> row;
    for (int ell = 1; ell <= config.L; ++ell) {
      for (long i = 0; i < slice.size(); ++i) {
        const double n = static_cast<double>(slice.first_index() + i);
        w[static_cast<std::size_t>(i)] = std::pow(n, static_cast<double>(ell));
      }
      const double ls = log_sup_on_arc(b, slice.first_index(), w, beta, config.grid_points);
      row.push_back(std::exp(ls / ell) / ell);
    }
    rep.growth.push_back(std::move(row));
  }

  for (int l = 0; l < config.L; ++l) {
    const double first = rep.growth.front()[static_cast<std::size_t>(l)];
    const double last = rep.growth.back()[static_cast<std::size_t>(l)];
    if (first > 0.0) {
      rep.max_growth_factor = std::max(rep.max_growth_factor, last / first);
    }
  }
  rep.evidence = rep.max_growth_factor >= config.evidence_factor;
  return rep;
}

ConcentrationReport run_probe(const CoeffSeq& series, int N, const ProbeConfig& config) {
  const auto m = tail_good_index(series, N, config.alpha);
  if (!m.has_value()) {
    throw std::invalid_argument(
        "precondition violated: no N-good tail within the stored range");
  }
  ConcentrationReport rep = concentration_sweep(series.tail_from(*m), N, config);
  rep.tail_index = *m;
  return rep;
}

}  // namespace fabry
