#pragma once

#include <cmath>
#include <numbers>

#include "edm/error.hpp"

namespace edm {

/// A finite complex number x + yi. Mass values of a CBBA live in this type.
///
/// Construction rejects NaN and infinity. Arithmetic is deliberately limited to
/// what the belief and distance formulas need: no division, no transcendental
/// functions beyond the polar view.
class Complex {
 public:
  constexpr Complex() noexcept = default;

  Complex(double re, double im = 0.0) : re_(re), im_(im) {
    if (!std::isfinite(re) || !std::isfinite(im)) {
      throw EvidenceError(ErrorCode::InvalidArgument, "complex components must be finite");
    }
  }

  /// Polar constructor r·e^{iθ}.
  static Complex from_polar(double modulus, double phase) {
    return Complex(modulus * std::cos(phase), modulus * std::sin(phase));
  }

  constexpr double re() const noexcept { return re_; }
  constexpr double im() const noexcept { return im_; }

  double modulus() const noexcept { return std::hypot(re_, im_); }

  constexpr double norm_squared() const noexcept { return re_ * re_ + im_ * im_; }

  /// Phase in (-π, π]. The zero value has phase 0.
  double phase() const noexcept {
    if (re_ == 0.0 && im_ == 0.0) return 0.0;
    // atan2 returns -π for (negative, -0.0); fold it onto the +π representative.
    const double theta = std::atan2(im_, re_);
    return theta == -std::numbers::pi ? std::numbers::pi : theta;
  }

  constexpr Complex conjugate() const noexcept { return raw(re_, -im_); }

  constexpr bool is_zero() const noexcept { return re_ == 0.0 && im_ == 0.0; }

  friend constexpr Complex operator+(Complex a, Complex b) noexcept {
    return raw(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend constexpr Complex operator-(Complex a, Complex b) noexcept {
    return raw(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend constexpr Complex operator-(Complex a) noexcept { return raw(-a.re_, -a.im_); }
  friend constexpr Complex operator*(Complex a, Complex b) noexcept {
    return raw(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + b.re_ * a.im_);
  }
  friend constexpr Complex operator*(double s, Complex a) noexcept {
    return raw(s * a.re_, s * a.im_);
  }
  constexpr Complex& operator+=(Complex b) noexcept {
    re_ += b.re_;
    im_ += b.im_;
    return *this;
  }

  friend constexpr bool operator==(Complex a, Complex b) noexcept = default;

 private:
  // Internal results of finite arithmetic; skips the finiteness check.
  static constexpr Complex raw(double re, double im) noexcept {
    Complex z;
    z.re_ = re;
    z.im_ = im;
    return z;
  }

  double re_ = 0.0;
  double im_ = 0.0;
};

}  // namespace edm
