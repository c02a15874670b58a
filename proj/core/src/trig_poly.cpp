#include "fabry/trig_poly.hpp"

#include <cmath>
#include <stdexcept>

namespace fabry {

TrigPoly::TrigPoly(int degree) : degree_(degree) {
  if (degree < 0) throw std::invalid_argument("precondition violated: degree >= 0");
  c_.assign(static_cast<std::size_t>(2 * degree + 1), {0.0, 0.0});
}

TrigPoly TrigPoly::from_coeffs(std::vector<std::complex<double>> c) {
  if (c.empty() || c.size() % 2 == 0) {
    throw std::invalid_argument("precondition violated: coefficient list must have size 2M+1");
  }
  TrigPoly p(static_cast<int>(c.size() / 2));
  p.c_ = std::move(c);
  return p;
}

void TrigPoly::set_coeff(int k, std::complex<double> v) {
  if (k < -degree_ || k > degree_) {
    throw std::invalid_argument("precondition violated: |k| <= degree");
  }
  c_[static_cast<std::size_t>(k + degree_)] = v;
}

std::complex<double> TrigPoly::eval(double theta) const {
  const std::complex<double> step{std::cos(theta), std::sin(theta)};
  std::complex<double> rot{std::cos(-degree_ * theta), std::sin(-degree_ * theta)};
  std::complex<double> acc{0.0, 0.0};
  for (const auto& ck : c_) {
    acc += ck * rot;
    rot *= step;
  }
  return acc;
}

double TrigPoly::eval_real(double theta) const {
  // cos/sin recurrence: cos((k+1)t) = 2 cos t cos(kt) - cos((k-1)t).
  double acc = coeff(0).real();
  const double c1 = std::cos(theta), s1 = std::sin(theta);
  double ck_prev = 1.0, sk_prev = 0.0;  // k = 0
  double ck = c1, sk = s1;              // k = 1
  for (int k = 1; k <= degree_; ++k) {
    const std::complex<double> c = coeff(k);
    acc += 2.0 * (c.real() * ck - c.imag() * sk);
    const double cn = 2.0 * c1 * ck - ck_prev;
    const double sn = 2.0 * c1 * sk - sk_prev;
    ck_prev = ck;
    sk_prev = sk;
    ck = cn;
    sk = sn;
  }
  return acc;
}

bool TrigPoly::is_real_valued(double tol) const {
  for (int k = 0; k <= degree_; ++k) {
    if (std::abs(coeff(-k) - std::conj(coeff(k))) > tol) return false;
  }
  return true;
}

bool TrigPoly::is_symmetric_nonnegative(double imag_tol) const {
  for (int k = 0; k <= degree_; ++k) {
    const auto a = coeff(k);
    const auto b = coeff(-k);
    if (std::abs(a.imag()) > imag_tol || std::abs(b.imag()) > imag_tol) return false;
    if (a.real() != b.real()) {
      if (std::abs(a.real() - b.real()) > imag_tol) return false;
    }
    if (a.real() < 0.0 && a.real() < -imag_tol) return false;
    if (b.real() < 0.0 && b.real() < -imag_tol) return false;
  }
  return true;
}

double TrigPoly::coeff_abs_sum() const {
  double s = 0.0;
  for (const auto& ck : c_) s += std::abs(ck);
  return s;
}

std::complex<double> TrigPoly::coeff_sum() const {
  std::complex<double> s{0.0, 0.0};
  for (const auto& ck : c_) s += ck;
  return s;
}

TrigPoly TrigPoly::derivative() const {
  TrigPoly d(degree_);
  for (int k = -degree_; k <= degree_; ++k) {
    d.set_coeff(k, std::complex<double>{0.0, static_cast<double>(k)} * coeff(k));
  }
  return d;
}

TrigPoly TrigPoly::cosine() {
  TrigPoly p(1);
  p.set_coeff(-1, {0.5, 0.0});
  p.set_coeff(1, {0.5, 0.0});
  return p;
}

}  // namespace fabry
