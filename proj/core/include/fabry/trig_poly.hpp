#pragma once

#include <complex>
#include <vector>

namespace fabry {

// Finite bilateral trigonometric polynomial P(theta) = sum_{k=-M}^{M} c_k e^{ik theta}.
class TrigPoly {
 public:
  explicit TrigPoly(int degree);
  static TrigPoly from_coeffs(std::vector<std::complex<double>> c);  // size 2M+1

  int degree() const { return degree_; }

  std::complex<double> coeff(int k) const {
    return (k >= -degree_ && k <= degree_)
               ? c_[static_cast<std::size_t>(k + degree_)]
               : std::complex<double>{0.0, 0.0};
  }
  void set_coeff(int k, std::complex<double> v);

  std::complex<double> eval(double theta) const;

  // Evaluation specialised to real-valued polynomials (c_{-k} = conj(c_k)):
  // P = c_0 + 2 sum_{k>=1} Re(c_k e^{ik theta}), computed with a cosine/sine
  // recurrence.  Asserts nothing; callers check is_real_valued when in doubt.
  double eval_real(double theta) const;

  // c_{-k} = conj(c_k) for all k, to absolute tolerance tol.
  bool is_real_valued(double tol = 1e-12) const;

  // c_k = c_{-k} >= 0 with imaginary parts zero to imag_tol.
  bool is_symmetric_nonnegative(double imag_tol = 1e-14) const;

  // sum_k |c_k|  — an upper bound for sup |P|, attained at theta = 0 when the
  // coefficients are symmetric nonnegative.
  double coeff_abs_sum() const;

  std::complex<double> coeff_sum() const;  // P(0)

  TrigPoly derivative() const;  // coefficients ik c_k

  static TrigPoly cosine();  // cos theta

 private:
  int degree_ = 0;
  std::vector<std::complex<double>> c_;  // index k + degree_
};

}  // namespace fabry
