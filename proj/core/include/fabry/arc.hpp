#pragma once

#include <numbers>
#include <stdexcept>

namespace fabry {

// Symmetric boundary arc {e^{i theta} : |theta| <= half_width}.
class Arc {
 public:
  explicit Arc(double half_width) : half_width_(half_width) {
    if (!(half_width > 0.0) || half_width > std::numbers::pi) {
      throw std::invalid_argument(
          "precondition violated: arc half width must lie in (0, pi]");
    }
  }

  // The arc paired with window length N: half width 4*pi/N, clamped to the
  // full circle when N <= 4.
  static Arc for_window(int N) {
    if (N < 1) throw std::invalid_argument("precondition violated: N >= 1");
    const double w = 4.0 * std::numbers::pi / static_cast<double>(N);
    return Arc(w < std::numbers::pi ? w : std::numbers::pi);
  }

  double half_width() const { return half_width_; }
  bool full_circle() const { return half_width_ == std::numbers::pi; }

 private:
  double half_width_;
};

}  // namespace fabry
