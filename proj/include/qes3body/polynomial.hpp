#pragma once

#include <array>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "qes3body/chart.hpp"
#include "qes3body/errors.hpp"
#include "qes3body/multi_index.hpp"
#include "qes3body/rational.hpp"

namespace qes3body {

/// Multivariate polynomial in the three variables of one chart, with exact
/// rational coefficients. Zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<MultiIndex, Rational, MonomialOrder>;

  explicit Polynomial(Chart chart) : chart_(chart) {}
  Polynomial(Chart chart, TermMap terms) : chart_(chart), terms_(std::move(terms)) {
    prune();
  }

  static Polynomial zero(Chart chart) { return Polynomial(chart); }

  static Polynomial constant(Chart chart, Rational c) {
    Polynomial p(chart);
    if (c != 0) p.terms_.emplace(MultiIndex{}, std::move(c));
    return p;
  }

  static Polynomial variable(Chart chart, int i) {
    MultiIndex m;
    m[i] = 1;
    return monomial(chart, m, 1);
  }

  static Polynomial monomial(Chart chart, const MultiIndex& m, Rational c) {
    Polynomial p(chart);
    if (c != 0) p.terms_.emplace(m, std::move(c));
    return p;
  }

  Chart chart() const { return chart_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
  }

  Rational coefficient(const MultiIndex& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational constant_term() const { return coefficient(MultiIndex{}); }

  int degree() const {  // degree of 0 reported as -1
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  int weighted_degree(const std::array<int, 3>& w) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.weighted_degree(w));
    return d;
  }

  Polynomial& operator+=(const Polynomial& o) {
    require_same_chart(chart_, o.chart_, "polynomial +");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    require_same_chart(chart_, o.chart_, "polynomial -");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& [m, v] : terms_) v *= c;
    }
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_chart(a.chart_, b.chart_, "polynomial *");
    Polynomial r(a.chart_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma + mb, ca * cb);
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.chart_ == b.chart_ && a.terms_ == b.terms_;
  }

  Polynomial pow(int n) const {
    Polynomial r = constant(chart_, 1);
    for (int i = 0; i < n; ++i) r = r * (*this);
    return r;
  }

  /// Partial derivative with respect to variable i.
  Polynomial derivative(int i) const {
    Polynomial r(chart_);
    for (const auto& [m, c] : terms_) {
      if (m[i] == 0) continue;
      MultiIndex d = m;
      d[i] -= 1;
      r.add_term(d, c * m[i]);
    }
    return r;
  }

  Polynomial derivative(const MultiIndex& order) const {
    Polynomial r = *this;
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < order[i]; ++k) r = r.derivative(i);
    return r;
  }

  template <typename T>
  T eval(const std::array<T, 3>& x) const {
    T sum = T(0);
    for (const auto& [m, c] : terms_) {
      T term = coeff_as<T>(c);
      for (int i = 0; i < 3; ++i)
        for (int k = 0; k < m[i]; ++k) term *= x[i];
      sum += term;
    }
    return sum;
  }

  double eval_double(const std::array<double, 3>& x) const { return eval<double>(x); }

  /// Substitutes images[i] for variable i; images live on a common chart that
  /// becomes the chart of the result.
  Polynomial substitute(const std::array<Polynomial, 3>& images) const {
    Chart target = images[0].chart();
    Polynomial r = Polynomial::zero(target);
    for (const auto& [m, c] : terms_) {
      Polynomial term = Polynomial::constant(target, c);
      for (int i = 0; i < 3; ++i)
        if (m[i] > 0) term = term * images[i].pow(m[i]);
      r += term;
    }
    return r;
  }

  /// Applies a variable permutation: variable i becomes variable perm[i].
  Polynomial permuted(const std::array<int, 3>& perm) const {
    Polynomial r(chart_);
    for (const auto& [m, c] : terms_) {
      MultiIndex pm;
      for (int i = 0; i < 3; ++i) pm[perm[i]] = m[i];
      r.add_term(pm, c);
    }
    return r;
  }

  /// Positive rational c such that (*this)/c has coprime integer coefficients.
  Rational content() const {
    Rational g = 0;
    for (const auto& [m, c] : terms_) g = rational_gcd(g, rational_abs(c));
    return g;  // zero polynomial -> 0
  }

  /// Componentwise minimum exponent over all terms (the common monomial factor).
  MultiIndex common_monomial() const {
    if (terms_.empty()) return MultiIndex{};
    MultiIndex m = terms_.begin()->first;
    for (const auto& [k, c] : terms_) {
      for (int i = 0; i < 3; ++i) m[i] = std::min(m[i], k[i]);
    }
    return m;
  }

  /// Divides by x^m; every term must be divisible.
  Polynomial divided_by_monomial(const MultiIndex& m) const {
    Polynomial r(chart_);
    for (const auto& [k, c] : terms_) r.add_term(k - m, c);
    return r;
  }

  /// Coefficient of the map's largest key (canonical order); 0 for the zero
  /// polynomial.
  Rational leading_coefficient() const {
    return terms_.empty() ? Rational(0) : terms_.rbegin()->second;
  }

  /// Leading term under plain lex order (variable 1 most significant).
  std::pair<MultiIndex, Rational> lex_leading_term() const {
    std::pair<MultiIndex, Rational> best{MultiIndex{}, 0};
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (first || LexOrder{}(best.first, m)) {
        best = {m, c};
        first = false;
      }
    }
    return best;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // print highest-order terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      Rational a = c;
      if (first) {
        if (a < 0) {
          out << "-";
          a = -a;
        }
      } else {
        out << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      first = false;
      bool unit = (a == 1) && !m.is_zero();
      if (!unit) out << to_string(a);
      bool printed = !unit;
      for (int i = 0; i < 3; ++i) {
        if (m[i] == 0) continue;
        if (printed) out << "*";
        out << variable_name(chart_, i);
        if (m[i] > 1) out << "^" << m[i];
        printed = true;
      }
    }
    return out.str();
  }

 private:
  template <typename T>
  static T coeff_as(const Rational& c) {
    if constexpr (std::is_same_v<T, Rational>) {
      return c;
    } else {
      return static_cast<T>(to_double(c));
    }
  }

  void add_term(const MultiIndex& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (it->second == 0)
        it = terms_.erase(it);
      else
        ++it;
    }
  }

  Chart chart_;
  TermMap terms_;
};

}  // namespace qes3body
