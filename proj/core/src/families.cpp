#include "fabry/families.hpp"

#include <cmath>
#include <stdexcept>

#include "fabry/concentration.hpp"

namespace fabry {

namespace {

// Binary powering: exact for s in {1, -1, i, -i}, and O(log n) rounding
// error in general, unlike std::pow on complex bases.
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

}  // namespace

CoeffSeq SeriesFamily::generate(long count) const {
  if (count < 1) throw std::invalid_argument("precondition violated: count >= 1");
  if (generator) return generator(count);
  std::vector<cx> c(static_cast<std::size_t>(count));
  for (long n = 0; n < count; ++n) {
    c[static_cast<std::size_t>(n)] = coefficient(n);
  }
  return CoeffSeq::taylor(std::move(c));  // constructor rejects non-finite values
}

SeriesFamily geometric_family(cx s) {
  if (s == cx{0.0, 0.0}) throw std::invalid_argument("precondition violated: s != 0");
  SeriesFamily f;
  f.name = "geometric";
  f.coefficient = [s](long n) { return ipow(s, -n); };
  f.known_singularity = s;
  return f;
}

SeriesFamily harmonic_family(int p) {
  if (p != 1 && p != 2) throw std::invalid_argument("precondition violated: p in {1, 2}");
  SeriesFamily f;
  f.name = p == 1 ? "harmonic" : "harmonic2";
  f.coefficient = [p](long n) {
    return cx{std::pow(static_cast<double>(n + 1), -p), 0.0};
  };
  f.known_singularity = cx{1.0, 0.0};
  return f;
}

SeriesFamily subdisc_family(double rho0) {
  if (!(rho0 > 0.0 && rho0 < 1.0)) {
    throw std::invalid_argument("precondition violated: rho0 in (0, 1)");
  }
  SeriesFamily f;
  f.name = "subdisc";
  f.coefficient = [rho0](long n) {
    return cx{std::pow(rho0, static_cast<double>(n)), 0.0};
  };
  f.known_singularity = std::nullopt;
  return f;
}

SeriesFamily random_quarter_arc_family(int N, std::uint64_t seed) {
  SeriesFamily f;
  f.name = "random_good";
  f.generator = [N, seed](long count) {
    return random_n_good_series(N, std::max<long>(count, N), seed);
  };
  f.known_singularity = std::nullopt;
  return f;
}

long default_family_length(double tau_min, double energy_tol) {
  if (!(tau_min > 0.0) || !(energy_tol > 0.0)) {
    throw std::invalid_argument("precondition violated: tau_min > 0 and energy_tol > 0");
  }
  const double k = std::log(1.0 / energy_tol) / (2.0 * tau_min);
  return static_cast<long>(std::ceil(1.1 * k)) + 16;
}

}  // namespace fabry
