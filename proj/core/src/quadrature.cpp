#include "fabry/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace fabry {

double trapezoid(const std::function<double(double)>& f, double lo, double hi,
                 long points) {
  if (!(hi > lo)) throw std::invalid_argument("precondition violated: hi > lo");
  if (points < 2) throw std::invalid_argument("precondition violated: points >= 2");
  const double h = (hi - lo) / static_cast<double>(points - 1);
  double acc = 0.0;
  for (long j = 0; j < points; ++j) {
    const double x = (j == points - 1) ? hi : lo + static_cast<double>(j) * h;
    const double y = f(x);
    if (!std::isfinite(y)) {
      throw std::runtime_error("quadrature: non-finite integrand sample");
    }
    acc += (j == 0 || j == points - 1) ? 0.5 * y : y;
  }
  return acc * h;
}

}  // namespace fabry
