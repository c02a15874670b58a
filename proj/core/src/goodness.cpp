#include "fabry/goodness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fabry {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double mod_two_pi(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r;
}

// Constrained phases of the window [start, start + N).
std::vector<double> window_phases(const CoeffSeq& s, long start, int N) {
  std::vector<double> ph;
  ph.reserve(static_cast<std::size_t>(N));
  for (long j = start; j < start + N; ++j) {
    if (auto p = s.phase(j)) ph.push_back(*p);
  }
  return ph;
}

}  // namespace

std::optional<double> window_fits(std::span<const double> phases, double alpha) {
  if (!(alpha > 0.0) || alpha >= kTwoPi) {
    throw std::invalid_argument("precondition violated: 0 < alpha < 2 pi");
  }
  if (phases.empty()) return 0.0;
  std::vector<double> p(phases.begin(), phases.end());
  for (double& x : p) x = mod_two_pi(x);
  std::sort(p.begin(), p.end());
  // Largest circular gap between consecutive phases.
  double best_gap = kTwoPi - p.back() + p.front();  // wrap-around gap
  std::size_t after = 0;                            // phase index just past it
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const double g = p[i + 1] - p[i];
    if (g > best_gap) {
      best_gap = g;
      after = i + 1;
    }
  }
  // Occupied span = 2 pi - best_gap; closed-arc semantics allow kArcTol per
  // endpoint.
  if (best_gap >= kTwoPi - alpha - 2.0 * kArcTol) return p[after];
  return std::nullopt;
}

GoodnessReport is_n_good(const CoeffSeq& series, int N, double alpha,
                         std::optional<long> from_index) {
  if (N < 2) throw std::invalid_argument("precondition violated: N >= 2");
  const long from = from_index.value_or(series.first_index());
  if (from < series.first_index()) {
    throw std::invalid_argument("precondition violated: from_index >= series offset");
  }
  const long last_start = series.last_index() - N + 1;
  if (series.empty() || last_start < from) {
    throw std::invalid_argument("insufficient data: series shorter than one window");
  }

  GoodnessReport rep;
  rep.N = N;
  rep.alpha = alpha;
  rep.checked_from = from;
  rep.checked_to = last_start;
  rep.verdict = true;
  for (long start = from; start <= last_start; ++start) {
    auto ph = window_phases(series, start, N);
    if (auto w = window_fits(ph, alpha)) {
      rep.witnesses.emplace_back(start, *w);
    } else {
      rep.verdict = false;
      rep.first_failure = start;
      rep.failure_phases = std::move(ph);
      rep.witnesses.clear();
      break;
    }
  }
  return rep;
}

std::optional<long> tail_good_index(const CoeffSeq& series, int N, double alpha) {
  if (N < 2) throw std::invalid_argument("precondition violated: N >= 2");
  const long last_start = series.last_index() - N + 1;
  if (series.empty() || last_start < series.first_index()) {
    throw std::invalid_argument("insufficient data: series shorter than one window");
  }
  // Scan backwards; the answer is one past the last failing window.
  for (long start = last_start; start >= series.first_index(); --start) {
    if (!window_fits(window_phases(series, start, N), alpha)) {
      return (start == last_start) ? std::nullopt : std::optional<long>(start + 1);
    }
  }
  return series.first_index();
}

QuotientDriftReport quotient_phase_drift(const CoeffSeq& series, double alpha) {
  QuotientDriftReport rep;
  for (long n = series.first_index(); n < series.last_index(); ++n) {
    const cx a = series.at(n);
    const cx b = series.at(n + 1);
    if (a == cx{0.0, 0.0} || b == cx{0.0, 0.0}) {
      rep.skipped.push_back(n);
      continue;
    }
    const cx q = a / b;
    rep.entries.push_back({n, std::abs(q), std::arg(q)});
  }
  // Bisect for the largest N with a good stored tail.  Monotonicity: any
  // window of length N' <= N sits inside a fully stored window of length N
  // starting no earlier, so tail-goodness for N implies it for N'.
  const long cap = series.size();
  int lo = 2, hi = static_cast<int>(std::min<long>(cap, 1 << 20));
  if (cap >= 2 && tail_good_index(series, 2, alpha).has_value()) {
    while (lo < hi) {
      const int mid = lo + (hi - lo + 1) / 2;
      if (tail_good_index(series, mid, alpha).has_value()) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    rep.largest_good_N = lo;
    rep.tail_index = tail_good_index(series, lo, alpha);
  } else {
    rep.largest_good_N = 0;
  }
  return rep;
}

}  // namespace fabry
