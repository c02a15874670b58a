#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "fabry/arc.hpp"

namespace fabry {

using cx = std::complex<double>;

// A finite truncation of a coefficient sequence a_n, stored contiguously
// from index `offset` (0 for Taylor series, possibly negative for bilateral
// Fourier series).  Unstored coefficients are exactly zero.
//
// Each coefficient decomposes on demand as a_n = r_n e^{i phi_n} with
// r_n >= 0.  The phase of an exactly-zero coefficient is unconstrained and
// reported as nullopt; phase-window checks treat it as a wildcard.
class CoeffSeq {
 public:
  CoeffSeq() = default;
  CoeffSeq(long offset, std::vector<cx> coeffs);

  static CoeffSeq taylor(std::vector<cx> coeffs) { return {0, std::move(coeffs)}; }

  long offset() const { return offset_; }
  long size() const { return static_cast<long>(coeffs_.size()); }
  bool empty() const { return coeffs_.empty(); }
  long first_index() const { return offset_; }
  long last_index() const { return offset_ + size() - 1; }

  // Coefficient at absolute index n; zero outside the stored range.
  cx at(long n) const {
    return (n >= offset_ && n <= last_index()) ? coeffs_[static_cast<std::size_t>(n - offset_)]
                                               : cx{0.0, 0.0};
  }
  const std::vector<cx>& coeffs() const { return coeffs_; }

  double modulus(long n) const { return std::abs(at(n)); }

  // Phase in (-pi, pi], or nullopt when the modulus vanishes.
  std::optional<double> phase(long n) const {
    const cx a = at(n);
    if (a == cx{0.0, 0.0}) return std::nullopt;
    return std::arg(a);
  }

  // F_tau(theta) = sum_n a_n e^{-n tau} e^{i n theta} over stored indices.
  cx eval(double theta, double tau = 0.0) const;

  // Parseval: integral over [-pi, pi] of |F_tau|^2 = 2 pi sum |a_n e^{-n tau}|^2.
  double l2_norm_sq(double tau = 0.0) const;

  // integral over |theta| <= arc.half_width() of |F_tau(theta)|^2 d theta,
  // via the closed form  int e^{ik theta} = 2 sin(k b)/k  (2b at k = 0).
  // A full-circle arc reduces to l2_norm_sq exactly (same closed form).
  double arc_integral_exact(const Arc& arc, double tau = 0.0) const;

  // Coefficients multiplied by e^{-n tau} (absolute index n); no truncation.
  CoeffSeq damped(double tau) const;

  // Sub-sequence of all stored indices >= from (keeps absolute indexing).
  CoeffSeq tail_from(long from) const;

 private:
  long offset_ = 0;
  std::vector<cx> coeffs_;
};

}  // namespace fabry
