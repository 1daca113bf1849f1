#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "qes3body/rational_function.hpp"

namespace qes3body {

/// Finite sum of (coefficient x mixed partial derivative) terms on one chart.
/// The term key is the derivative multi-index; a key of (0,0,0) is a pure
/// multiplication term. Coefficients are rational functions, stored nonzero.
class DiffOperator {
 public:
  using TermMap = std::map<MultiIndex, RationalFunction, MonomialOrder>;

  explicit DiffOperator(Chart chart) : chart_(chart) {}

  static DiffOperator zero(Chart chart) { return DiffOperator(chart); }

  static DiffOperator identity(Chart chart) {
    return multiplication(Polynomial::constant(chart, 1));
  }

  /// d/dx_i
  static DiffOperator partial(Chart chart, int i) {
    MultiIndex m;
    m[i] = 1;
    DiffOperator op(chart);
    op.add_term(m, RationalFunction::constant(chart, 1));
    return op;
  }

  static DiffOperator partial(Chart chart, const MultiIndex& order) {
    DiffOperator op(chart);
    op.add_term(order, RationalFunction::constant(chart, 1));
    return op;
  }

  /// Multiplication operator f -> p*f.
  static DiffOperator multiplication(const Polynomial& p) {
    DiffOperator op(p.chart());
    op.add_term(MultiIndex{}, RationalFunction(p));
    return op;
  }

  Chart chart() const { return chart_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Maximum total derivative order.
  int order() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  bool has_polynomial_coefficients() const {
    for (const auto& [m, c] : terms_)
      if (!c.is_polynomial()) return false;
    return true;
  }

  RationalFunction coefficient(const MultiIndex& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? RationalFunction(chart_) : it->second;
  }

  void add_term(const MultiIndex& m, const RationalFunction& c) {
    require_same_chart(chart_, c.chart(), "operator term");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add_term(const MultiIndex& m, const Polynomial& c) {
    add_term(m, RationalFunction(c));
  }

  DiffOperator& operator+=(const DiffOperator& o) {
    require_same_chart(chart_, o.chart_, "operator +");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  DiffOperator& operator-=(const DiffOperator& o) {
    require_same_chart(chart_, o.chart_, "operator -");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  DiffOperator& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, v] : terms_) v = v * c;
    return *this;
  }

  friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
  friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }
  friend DiffOperator operator-(DiffOperator a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }
  friend DiffOperator operator*(DiffOperator a, const Rational& c) { return a *= c; }
  friend DiffOperator operator*(const Rational& c, DiffOperator a) { return a *= c; }

  /// Exact equality of canonical forms (coefficients compared as functions).
  friend bool operator==(const DiffOperator& a, const DiffOperator& b) {
    if (a.chart_ != b.chart_ || a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib) {
      if (!(ia->first == ib->first) || !(ia->second == ib->second)) return false;
    }
    return true;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) out << " + ";
      first = false;
      out << "[" << c.str() << "]";
      for (int i = 0; i < 3; ++i) {
        if (m[i] == 0) continue;
        out << " d_" << variable_name(chart_, i);
        if (m[i] > 1) out << "^" << m[i];
      }
    }
    return out.str();
  }

  /// Applies the operator to a polynomial; exact.
  RationalFunction apply(const Polynomial& f) const {
    require_same_chart(chart_, f.chart(), "apply");
    RationalFunction sum(chart_);
    for (const auto& [m, c] : terms_) {
      Polynomial df = f.derivative(m);
      if (df.is_zero()) continue;
      sum += c * RationalFunction(df);
    }
    return sum;
  }

  /// Applies an operator with polynomial coefficients; result stays polynomial.
  Polynomial apply_polynomial(const Polynomial& f) const {
    RationalFunction r = apply(f);
    return r.as_polynomial();
  }

 private:
  Chart chart_;
  TermMap terms_;
};

namespace detail {
inline Rational multi_binomial(const MultiIndex& a, const MultiIndex& b) {
  Rational r = 1;
  for (int i = 0; i < 3; ++i) r *= binomial(a[i], b[i]);
  return r;
}

/// Enumerates gamma <= alpha componentwise.
template <typename F>
void for_each_subindex(const MultiIndex& alpha, F&& f) {
  for (int g0 = 0; g0 <= alpha[0]; ++g0)
    for (int g1 = 0; g1 <= alpha[1]; ++g1)
      for (int g2 = 0; g2 <= alpha[2]; ++g2) f(MultiIndex{g0, g1, g2});
}
}  // namespace detail

/// Operator product a∘b expanded into canonical form by the Leibniz rule.
/// Supported: b with polynomial coefficients (a arbitrary), or a of order
/// zero. The remaining case needs quotient-rule denominators that the
/// normalization here cannot reduce, so it is rejected.
inline DiffOperator compose(const DiffOperator& a, const DiffOperator& b) {
  require_same_chart(a.chart(), b.chart(), "compose");
  DiffOperator result(a.chart());
  const bool b_poly = b.has_polynomial_coefficients();
  if (!b_poly && a.order() > 0)
    throw composition_error("composition outside polynomial subring: " + a.str() + " o " +
                            b.str());
  for (const auto& [alpha, ca] : a.terms()) {
    for (const auto& [beta, cb] : b.terms()) {
      if (alpha.is_zero()) {
        result.add_term(beta, ca * cb);
        continue;
      }
      const Polynomial& cb_poly = cb.as_polynomial();
      detail::for_each_subindex(alpha, [&](const MultiIndex& gamma) {
        Polynomial dcb = cb_poly.derivative(gamma);
        if (dcb.is_zero()) return;
        Rational coeff = detail::multi_binomial(alpha, gamma);
        result.add_term((alpha - gamma) + beta, ca * RationalFunction(dcb * coeff));
      });
    }
  }
  return result;
}

inline DiffOperator commutator(const DiffOperator& a, const DiffOperator& b) {
  return compose(a, b) - compose(b, a);
}

}  // namespace qes3body
