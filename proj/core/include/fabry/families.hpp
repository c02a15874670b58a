#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>

#include "fabry/coeff_seq.hpp"

namespace fabry {

// Parameterized test series with known ground truth, used by the probe
// pipeline and the command line tool.
struct SeriesFamily {
  std::string name;
  std::function<cx(long)> coefficient;        // a_n for n >= 0
  std::function<CoeffSeq(long)> generator;    // whole-sequence override
  std::optional<cx> known_singularity;        // on the unit circle, when applicable

  CoeffSeq generate(long count) const;
};

// a_n = s^{-n}: geometric series with a pole at z = s.
SeriesFamily geometric_family(cx s);

// a_n = 1/(n+1)^p, p in {1, 2}: singular at z = 1.
SeriesFamily harmonic_family(int p);

// a_n = rho0^n with rho0 in (0, 1): analytic in |z| < 1/rho0, hence through
// the whole unit circle (negative control).
SeriesFamily subdisc_family(double rho0);

// Randomized quarter-arc phase family (the N-good generator).
SeriesFamily random_quarter_arc_family(int N, std::uint64_t seed);

// Truncation length such that a bounded-modulus series damped by tau_min
// retains all but ~energy_tol of its l2 mass.
long default_family_length(double tau_min, double energy_tol);

}  // namespace fabry
