#pragma once

#include <stdexcept>
#include <vector>

#include "fabry/coeff_seq.hpp"
#include "fabry/goodness.hpp"

namespace fabry {

// Singularity probe: rescale the candidate singular point to z = 1, trim to
// an N-good tail, then slide the evaluation circle outward (tau down to 0)
// watching (a) the fraction of l2 mass carried by the arc |theta| <= 4 pi/N
// and (b) the growth of derivative sups on that arc.  A boundary point the
// function extends through would keep the derivative profile bounded; an
// unbounded profile is evidence of a singularity on the arc.

// b_n = a_n s^n; moves the candidate singularity of sum a_n z^n to z = 1.
CoeffSeq rescale_to_unit(const CoeffSeq& series, cx s);

// Thrown when the stored truncation cannot reach the requested tail energy
// at the given damping.
struct TruncationError : std::runtime_error {
  explicit TruncationError(const std::string& what, double min_tau)
      : std::runtime_error(what), min_achievable_tau(min_tau) {}
  double min_achievable_tau;
};

// {a_n e^{-n tau}} truncated at the smallest K whose discarded l2 tail
// (stored part plus a geometric extrapolation beyond the stored range) is
// below energy_tol relative to the total.  Damping touches moduli only, so
// phase-window goodness is preserved exactly.
CoeffSeq damped_slice(const CoeffSeq& series, double tau, double energy_tol);

// Coefficients (i n)^ell a_n: all phases rotate by the same ell pi/2 and the
// moduli scale by n^ell, so goodness is preserved.
CoeffSeq derivative_series(const CoeffSeq& series, int ell);

struct ConcentrationReport {
  int N = 0;
  double alpha = kHalfPi;
  int L = 4;
  long tail_index = 0;   // first index of the N-good tail actually probed
  double C_used = 1.0;   // constructed constant
  double lower_bound = 1.0;  // 1 / C_used
  std::vector<double> taus;
  std::vector<long> slice_lengths;
  std::vector<double> mass_ratio;  // rho(tau) = arc mass / total mass
  std::vector<double> sup_abs;     // sup over the arc grid of |F_tau|
  // growth[t][l-1] = (sup over the arc grid of |F_tau^{(l)}|)^{1/l} / l
  std::vector<std::vector<double>> growth;
  // Heuristic verdict: some order's growth value rises by >= 10x from the
  // first tau to the last.
  double max_growth_factor = 0.0;
  bool evidence = false;
};

struct ProbeConfig {
  std::vector<double> taus = {0.3, 0.1, 0.03, 0.01, 0.003};  // descending
  int L = 4;                   // derivative orders 1..L
  double energy_tol = 1e-10;   // slice truncation target
  long grid_points = 4096;     // arc grid (rounded up to odd, so 0 is a node)
  double alpha = kHalfPi;
  double evidence_factor = 10.0;
};

// Requires the series to be N-good as given (use run_probe for the
// tail-trimming front end).  taus must be strictly positive and descending.
ConcentrationReport concentration_sweep(const CoeffSeq& series, int N,
                                        const ProbeConfig& config);

// Full pipeline: find the N-good tail (throwing when none exists), then run
// the sweep on it with C = constructed_constant(N).
ConcentrationReport run_probe(const CoeffSeq& series, int N,
                              const ProbeConfig& config = {});

}  // namespace fabry
