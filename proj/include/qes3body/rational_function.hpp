#pragma once

#include <array>
#include <string>
#include <utility>

#include "qes3body/errors.hpp"
#include "qes3body/polynomial.hpp"

namespace qes3body {

/// Ratio of two polynomials on a common chart. Normalization removes the
/// common monomial factor and the rational content and makes the denominator
/// a primitive integer polynomial with positive leading coefficient; full
/// multivariate GCD is deliberately out of scope, so equality is decided by
/// cross-multiplication.
class RationalFunction {
 public:
  explicit RationalFunction(Chart chart)
      : num_(Polynomial::zero(chart)), den_(Polynomial::constant(chart, 1)) {}

  RationalFunction(Polynomial num, Polynomial den)
      : num_(std::move(num)), den_(std::move(den)) {
    require_same_chart(num_.chart(), den_.chart(), "rational function");
    if (den_.is_zero()) throw std::invalid_argument("zero denominator polynomial");
    normalize();
  }

  // NOLINTNEXTLINE(google-explicit-constructor): polynomials embed naturally
  RationalFunction(Polynomial num)
      : num_(std::move(num)), den_(Polynomial::constant(num_.chart(), 1)) {}

  static RationalFunction constant(Chart chart, const Rational& c) {
    return RationalFunction(Polynomial::constant(chart, c));
  }

  Chart chart() const { return num_.chart(); }
  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  /// The numerator viewed as a polynomial; requires a trivial denominator.
  const Polynomial& as_polynomial() const {
    if (!is_polynomial())
      throw std::invalid_argument("rational function is not a polynomial: " + str());
    return num_;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ - b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(RationalFunction a) {
    a.num_ = -a.num_;
    return a;
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator*(const RationalFunction& a, const Rational& c) {
    return RationalFunction(a.num_ * c, a.den_);
  }
  friend RationalFunction operator*(const Rational& c, const RationalFunction& a) {
    return a * c;
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }

  /// Exact equality of the represented functions (cross-multiplied).
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    if (a.chart() != b.chart()) return false;
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  double eval_double(const std::array<double, 3>& x, double tol = 1e-12) const {
    double d = den_.eval_double(x);
    if (std::abs(d) <= tol)
      throw singular_point_error("coefficient denominator vanishes at evaluation point: " +
                                 den_.str());
    return num_.eval_double(x) / d;
  }

  std::string str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = Polynomial::constant(chart(), 1);
      return;
    }
    MultiIndex common = num_.common_monomial();
    MultiIndex den_common = den_.common_monomial();
    for (int i = 0; i < 3; ++i) common[i] = std::min(common[i], den_common[i]);
    if (!common.is_zero()) {
      num_ = num_.divided_by_monomial(common);
      den_ = den_.divided_by_monomial(common);
    }
    // Make the denominator primitive with integer coefficients; the numerator
    // keeps the rational scale.
    Rational cd = den_.content();
    if (cd != 1) {
      Rational inv = Rational(1) / cd;
      num_ *= inv;
      den_ *= inv;
    }
    if (den_.leading_coefficient() < 0) {
      num_ *= -1;
      den_ *= -1;
    }
  }

  Polynomial num_;
  Polynomial den_;
};

}  // namespace qes3body
