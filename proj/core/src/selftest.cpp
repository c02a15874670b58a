#include "fabry/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "fabry/concentration.hpp"
#include "fabry/families.hpp"
#include "fabry/goodness.hpp"
#include "fabry/kernels.hpp"
#include "fabry/probe.hpp"
#include "fabry/rng.hpp"

namespace fabry {

namespace {

constexpr double kPi = std::numbers::pi;

double slope_of_log_log(const std::vector<double>& xs, const std::vector<double>& ys) {
  const std::size_t n = xs.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = std::log(xs[i]);
    const double y = std::log(ys[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// Independent oracle for the sharp-constant bound: pure sampling, no
// gradient information.  Phase one draws the simplex uniformly; phase two
// resamples around the incumbent with shrinking radius.  10^6 evaluations.
double random_search_sharp_bound(int N, int T, std::uint64_t seed) {
  const std::vector<double> M = arc_gram_matrix(N, T);
  Rng rng(seed);
  auto ratio = [&](const std::vector<double>& a) {
    double num = 0.0, den = 0.0;
    for (int i = 0; i < T; ++i) {
      double mi = 0.0;
      for (int j = 0; j < T; ++j) mi += M[static_cast<std::size_t>(i) * T + j] * a[static_cast<std::size_t>(j)];
      num += a[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(i)];
      den += a[static_cast<std::size_t>(i)] * mi;
    }
    return 2.0 * kPi * num / den;
  };

  std::vector<double> a(static_cast<std::size_t>(T)), best(static_cast<std::size_t>(T), 0.0);
  double best_r = 0.0;
  const long uniform_samples = 500000;
  for (long s = 0; s < uniform_samples; ++s) {
    for (double& x : a) x = rng.exponential();  // Dirichlet(1) direction
    const double r = ratio(a);
    if (r > best_r) {
      best_r = r;
      best = a;
    }
  }
  double radius = 0.3;
  double scale = 0.0;
  for (double x : best) scale = std::max(scale, x);
  const int batches = 10;
  const long per_batch = 50000;
  for (int b = 0; b < batches; ++b) {
    for (long s = 0; s < per_batch; ++s) {
      for (int i = 0; i < T; ++i) {
        a[static_cast<std::size_t>(i)] = std::max(
            0.0, best[static_cast<std::size_t>(i)] + scale * radius * rng.normal());
      }
      double nz = 0.0;
      for (double x : a) nz += x;
      if (nz == 0.0) continue;
      const double r = ratio(a);
      if (r > best_r) {
        best_r = r;
        best = a;
      }
    }
    radius *= 0.5;
  }
  return best_r;
}

struct Check {
  CriterionResult result;
  bool ok = true;
  explicit Check(int id, std::string name) {
    result.id = id;
    result.name = std::move(name);
  }
  void require(bool cond) { ok = ok && cond; }
  void detail(const std::string& k, double v) { result.details.emplace_back(k, v); }
  CriterionResult done() {
    result.pass = ok;
    return result;
  }
};

CriterionResult criterion_kernel_identity() {
  Check c(1, "kernel identity: coefficient sum vs closed form");
  double worst = 0.0;
  for (const int N : {1, 2, 8, 33, 128}) {
    const TrigPoly f = fejer(N);
    const TrigPoly g = shifted_fejer_sum(N);
    const double sup_f = static_cast<double>(N);
    const double sup_g = g.coeff_sum().real();
    for (int j = 0; j < 1024; ++j) {
      const double th = -kPi + 2.0 * kPi * j / 1023.0;
      // skip 1e-6 neighbourhoods of the closed forms' removable singularities
      if (std::abs(th) > 1e-6) {
        worst = std::max(worst, std::abs(f.eval_real(th) - fejer_value(N, th)) / sup_f);
      }
      if (std::abs(th - kPi / (2 * N)) > 1e-6 && std::abs(th + kPi / (2 * N)) > 1e-6) {
        worst = std::max(worst,
                         std::abs(g.eval_real(th) - shifted_fejer_sum_value(N, th)) / sup_g);
      }
    }
  }
  c.detail("max_rel_deviation", worst);
  c.require(worst <= 1e-10);
  return c.done();
}

CriterionResult criterion_negativity_sweep() {
  Check c(2, "separating polynomial: predicate, certification, zero mean");
  double min_margin = std::numeric_limits<double>::infinity();
  long sandwich = 0, bernstein = 0;
  for (int N = 2; N <= 256; ++N) {
    const TrigPoly p = separating_poly(N);
    c.require(p.is_symmetric_nonnegative());
    if (N >= 8) c.require(p.coeff(0) == cx{0.0, 0.0});
    const NegativityCertificate cert = certify_negativity(N);
    c.require(cert.certified);
    if (cert.margin) min_margin = std::min(min_margin, *cert.margin);
    if (cert.method == "kernel_sandwich") ++sandwich;
    if (cert.method == "bernstein_gap") ++bernstein;
  }
  c.detail("min_margin", min_margin);
  c.detail("bernstein_gap_count", static_cast<double>(bernstein));
  c.detail("kernel_sandwich_count", static_cast<double>(sandwich));
  return c.done();
}

CriterionResult criterion_denominator() {
  Check c(3, "denominator inequality replay on 1e4-point grids");
  double worst = std::numeric_limits<double>::infinity();
  for (const int N : {8, 16, 64, 256}) {
    const DenominatorCheck chk = denominator_inequality_check(N, 10000);
    c.require(chk.holds && chk.min_slack > 0.0);
    worst = std::min(worst, chk.min_slack);
  }
  c.detail("min_slack", worst);
  return c.done();
}

std::vector<int> series_plan() { return {2, 4, 8, 16}; }

CriterionResult criterion_quadratic_form(std::uint64_t seed) {
  Check c(4, "quadratic form identity and sign on 500 random N-good series");
  double worst_rel = 0.0, worst_sign = 0.0;
  long idx = 0;
  for (const int N : series_plan()) {
    const TrigPoly P = separating_poly(N);
    for (int t = 0; t < 125; ++t, ++idx) {
      const CoeffSeq s = random_n_good_series(N, 50, Rng::substream(seed, 1000 + idx));
      const QuadraticFormResult qf = quadratic_form(s, P);
      worst_rel = std::max(worst_rel,
                           std::abs(qf.integral - qf.coefficient_sum) / qf.scale);
      worst_sign = std::min(worst_sign, qf.coefficient_sum / qf.scale);
    }
  }
  c.detail("max_rel_mismatch", worst_rel);
  c.detail("min_normalized_value", worst_sign);
  c.require(worst_rel <= 1e-9);
  c.require(worst_sign >= -1e-9);
  return c.done();
}

CriterionResult criterion_corollary(std::uint64_t seed) {
  Check c(5, "concentration inequality on 500 series x damping, negative control refused");
  double worst_slack = std::numeric_limits<double>::infinity();
  long idx = 0;
  for (const int N : series_plan()) {
    const double C = constructed_constant(N).value;
    for (int t = 0; t < 125; ++t, ++idx) {
      const CoeffSeq s = random_n_good_series(N, 50, Rng::substream(seed, 1000 + idx));
      for (const double tau : {0.0, 0.01, 0.1}) {
        const CorollaryReport rep = verify_corollary(s, N, C, tau);
        worst_slack = std::min(worst_slack, rep.slack);
        c.require(rep.holds);
      }
    }
  }
  c.detail("min_slack", worst_slack);
  c.require(worst_slack >= -1e-9);

  std::vector<cx> alt(50);
  for (int n = 0; n < 50; ++n) alt[static_cast<std::size_t>(n)] = {n % 2 ? -1.0 : 1.0, 0.0};
  bool refused = false;
  try {
    verify_corollary(CoeffSeq::taylor(alt), 2, 1.0, 0.0);
  } catch (const std::invalid_argument&) {
    refused = true;
  }
  c.detail("negative_control_refused", refused ? 1.0 : 0.0);
  c.require(refused);
  return c.done();
}

CriterionResult criterion_growth_rate() {
  Check c(6, "constructed C(N) growth rate O(N^2)");
  std::vector<double> ns, cs;
  for (const int N : {8, 16, 32, 64, 128, 256, 512}) {
    ns.push_back(N);
    cs.push_back(constructed_constant(N).value);
  }
  const double slope = slope_of_log_log(ns, cs);
  c.detail("loglog_slope", slope);
  c.detail("C_8", cs.front());
  c.detail("C_512", cs.back());
  c.require(slope >= 1.0 && slope <= 2.3);
  return c.done();
}

CriterionResult criterion_sharp_constant(std::uint64_t seed) {
  Check c(7, "sharp-constant lower bound vs feasible point, constructed C, random search");
  const ConstantEstimate opt = sharp_constant_lower_bound(8, 8, 2000, Rng::substream(seed, 7), 20);
  const double constructed = constructed_constant(8).value;
  const double rs = random_search_sharp_bound(8, 8, Rng::substream(seed, 77));
  c.detail("optimizer_value", opt.value);
  c.detail("random_search_value", rs);
  c.detail("constructed_C", constructed);
  c.require(opt.value >= 2.0 * (1.0 - 1e-12));  // single-coefficient point N/4
  c.require(opt.value <= constructed * (1.0 + 1e-12));
  c.require(std::abs(opt.value - rs) <= 0.02 * std::max(opt.value, rs));
  return c.done();
}

CriterionResult criterion_poincare(std::uint64_t seed) {
  Check c(8, "zero-mean sup bound chain, exact circle case and 200 random polynomials");
  TrigPoly circle(1);
  circle.set_coeff(1, {1.0, 0.0});  // v = e^{i theta}
  const PoincareReport exact = poincare_check(circle, 4096, 16385);
  c.detail("circle_max", exact.max_abs);
  c.detail("circle_arc_bound", exact.arc_length_bound);
  c.detail("circle_l2_bound", exact.l2_bound);
  c.require(std::abs(exact.max_abs - 1.0) <= 1e-9);
  c.require(std::abs(exact.arc_length_bound - kPi) <= 1e-9 * kPi);
  c.require(std::abs(exact.l2_bound - kPi) <= 1e-12 * kPi);
  c.require(exact.holds);

  Rng rng(Rng::substream(seed, 8));
  bool all = true;
  for (int t = 0; t < 200; ++t) {
    const int deg = 1 + static_cast<int>(rng.uniform01() * 20.0);
    TrigPoly v(std::min(deg, 20));
    for (int k = -v.degree(); k <= v.degree(); ++k) {
      if (k != 0) v.set_coeff(k, rng.complex_normal());
    }
    all = all && poincare_check(v, 4096, 16385).holds;
  }
  c.detail("random_polys_all_hold", all ? 1.0 : 0.0);
  c.require(all);
  return c.done();
}

ProbeConfig probe_config(std::vector<double> taus) {
  ProbeConfig cfg;
  cfg.taus = std::move(taus);
  cfg.energy_tol = 1e-13;  // keeps the theta = 0 truncation error below 1e-6
  return cfg;
}

CriterionResult criterion_probe_positive() {
  Check c(9, "probe positive control: geometric pole on the arc");
  const ProbeConfig cfg = probe_config({0.3, 0.1, 0.03, 0.01, 0.003});
  const long len = default_family_length(cfg.taus.back(), cfg.energy_tol);
  const CoeffSeq ones = geometric_family({1.0, 0.0}).generate(len);
  const ConcentrationReport rep = run_probe(ones, 8, cfg);
  double min_rho_slack = std::numeric_limits<double>::infinity();
  double worst_sup = 0.0;
  for (std::size_t t = 0; t < rep.taus.size(); ++t) {
    min_rho_slack = std::min(min_rho_slack, rep.mass_ratio[t] - rep.lower_bound);
    const double closed = 1.0 / (1.0 - std::exp(-rep.taus[t]));
    worst_sup = std::max(worst_sup, std::abs(rep.sup_abs[t] - closed) / closed);
  }
  c.detail("min_rho_minus_lower_bound", min_rho_slack);
  c.detail("max_sup_rel_err", worst_sup);
  c.detail("max_growth_factor", rep.max_growth_factor);
  c.require(min_rho_slack >= -1e-9);
  c.require(worst_sup <= 1e-6);
  c.require(rep.evidence);
  return c.done();
}

CriterionResult criterion_probe_negative() {
  Check c(10, "probe negative control: series analytic through the circle");
  // tau_max = 0.1: the profile should reflect boundary behaviour, not the
  // e^{-tau} distance swing of a deep-interior start.
  const ProbeConfig cfg = probe_config({0.1, 0.03, 0.01, 0.003});
  const CoeffSeq s = subdisc_family(0.5).generate(256);
  const ConcentrationReport rep = run_probe(s, 8, cfg);
  double worst_factor = 0.0;
  for (int l = 0; l < rep.L; ++l) {
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (const auto& row : rep.growth) {
      lo = std::min(lo, row[static_cast<std::size_t>(l)]);
      hi = std::max(hi, row[static_cast<std::size_t>(l)]);
    }
    worst_factor = std::max(worst_factor, hi / lo);
  }
  c.detail("max_variation_factor", worst_factor);
  c.detail("max_growth_factor", rep.max_growth_factor);
  c.require(worst_factor < 2.0);
  c.require(!rep.evidence);
  return c.done();
}

CriterionResult criterion_rescale_equivariance() {
  Check c(11, "rescaling equivariance of the probe");
  const ProbeConfig cfg = probe_config({0.3, 0.1, 0.03, 0.01, 0.003});
  const long len = default_family_length(cfg.taus.back(), cfg.energy_tol);
  const CoeffSeq alternating = geometric_family({-1.0, 0.0}).generate(len);
  const ConcentrationReport a = run_probe(rescale_to_unit(alternating, {-1.0, 0.0}), 8, cfg);
  const ConcentrationReport b = run_probe(geometric_family({1.0, 0.0}).generate(len), 8, cfg);
  double worst = 0.0;
  auto cmp = [&](double x, double y) {
    worst = std::max(worst, std::abs(x - y) / std::max(1.0, std::abs(y)));
  };
  cmp(a.C_used, b.C_used);
  for (std::size_t t = 0; t < b.taus.size(); ++t) {
    cmp(a.mass_ratio[t], b.mass_ratio[t]);
    cmp(a.sup_abs[t], b.sup_abs[t]);
    cmp(static_cast<double>(a.slice_lengths[t]), static_cast<double>(b.slice_lengths[t]));
    for (int l = 0; l < b.L; ++l) {
      cmp(a.growth[t][static_cast<std::size_t>(l)], b.growth[t][static_cast<std::size_t>(l)]);
    }
  }
  c.detail("max_field_deviation", worst);
  c.require(worst <= 1e-12);
  return c.done();
}

}  // namespace

SelftestReport run_selftest(std::uint64_t seed) {
  SelftestReport rep;
  rep.seed = seed;
  rep.criteria.push_back(criterion_kernel_identity());
  rep.criteria.push_back(criterion_negativity_sweep());
  rep.criteria.push_back(criterion_denominator());
  rep.criteria.push_back(criterion_quadratic_form(seed));
  rep.criteria.push_back(criterion_corollary(seed));
  rep.criteria.push_back(criterion_growth_rate());
  rep.criteria.push_back(criterion_sharp_constant(seed));
  rep.criteria.push_back(criterion_poincare(seed));
  rep.criteria.push_back(criterion_probe_positive());
  rep.criteria.push_back(criterion_probe_negative());
  rep.criteria.push_back(criterion_rescale_equivariance());
  rep.all_pass = std::all_of(rep.criteria.begin(), rep.criteria.end(),
                             [](const CriterionResult& c) { return c.pass; });
  return rep;
}

}  // namespace fabry
