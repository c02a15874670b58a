#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fabry/coeff_seq.hpp"

namespace fabry {

// A sequence is (N, alpha)-good when the phases of every N consecutive
// coefficients fit inside some closed arc of length alpha (alpha = pi/2 in
// the classical definition).  Zero coefficients have a free phase and never
// constrain a window.  Goodness of a finite truncation means goodness of
// every fully stored window; reports state the range that was checked.

inline constexpr double kHalfPi = 1.5707963267948966;

// Closed-arc membership tolerance: a phase within this distance of an arc
// endpoint counts as inside.
inline constexpr double kArcTol = 1e-12;

struct GoodnessReport {
  int N = 0;
  double alpha = kHalfPi;
  bool verdict = false;
  long checked_from = 0;  // first window start examined
  long checked_to = 0;    // last window start examined
  // One (window start, Phi) per checked window when the verdict is true.
  std::vector<std::pair<long, double>> witnesses;
  std::optional<long> first_failure;    // window start, when verdict is false
  std::vector<double> failure_phases;   // the offending constrained phase set
};

// Single-window kernel: does some closed arc [Phi, Phi + alpha] (mod 2 pi)
// contain all given phases?  Criterion: sort the phases on the circle; a
// witness exists iff the largest circular gap is >= 2 pi - alpha, and then
// Phi is the phase just past that gap.  An empty set fits with Phi = 0.
std::optional<double> window_fits(std::span<const double> phases, double alpha);

// Checks every fully stored window of length N starting at or after
// from_index.  Throws "insufficient data" when no full window exists.
GoodnessReport is_n_good(const CoeffSeq& series, int N, double alpha = kHalfPi,
                         std::optional<long> from_index = std::nullopt);

// Smallest stored m such that every window starting at or after m fits;
// nullopt when even the last full window fails.
std::optional<long> tail_good_index(const CoeffSeq& series, int N,
                                    double alpha = kHalfPi);

struct QuotientDriftReport {
  struct Entry {
    long n;
    double ratio_modulus;  // |a_n / a_{n+1}|
    double ratio_arg;      // arg(a_n / a_{n+1})
  };
  std::vector<Entry> entries;
  std::vector<long> skipped;  // n where a_n or a_{n+1} vanishes
  // Largest N for which the stored tail is N-good (0 when none), found by
  // bisection over N (tail-goodness is monotone decreasing in N).
  int largest_good_N = 0;
  std::optional<long> tail_index;  // tail start witnessing largest_good_N
};

// Per-index consecutive-coefficient quotients a_n / a_{n+1}, plus the
// largest-N goodness summary of the stored tail.
QuotientDriftReport quotient_phase_drift(const CoeffSeq& series,
                                         double alpha = kHalfPi);

}  // namespace fabry
