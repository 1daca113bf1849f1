#pragma once

#include <array>
#include <map>

#include "qes3body/operators.hpp"

namespace qes3body {

/// All six permutations of the pair variables induced by relabeling the
/// three bodies, with parity.
struct VariablePermutation {
  std::array<int, 3> perm;
  bool even;
};

inline const std::array<VariablePermutation, 6>& s3_variable_permutations() {
  static const std::array<VariablePermutation, 6> perms = {{
      {{0, 1, 2}, true},
      {{1, 2, 0}, true},
      {{2, 0, 1}, true},
      {{0, 2, 1}, false},
      {{2, 1, 0}, false},
      {{1, 0, 2}, false},
  }};
  return perms;
}

inline bool is_symmetric(const Polynomial& p) {
  for (const auto& vp : s3_variable_permutations()) {
    if (!(p.permuted(vp.perm) == p)) return false;
  }
  return true;
}

/// Writes a symmetric rho-polynomial in the elementary symmetric variables.
/// Classic reduction along the lex leading term; throws descent_error for a
/// non-symmetric input.
inline Polynomial symmetric_to_tau(const Polynomial& p) {
  require_same_chart(p.chart(), Chart::rho, "symmetric_to_tau");
  if (!is_symmetric(p))
    throw descent_error("operator does not descend to tau chart: non-symmetric image " +
                        p.str());
  std::array<Polynomial, 3> sigma = {sigma_polynomial(1), sigma_polynomial(2),
                                     sigma_polynomial(3)};
  Polynomial rem = p;
  Polynomial out = Polynomial::zero(Chart::tau);
  while (!rem.is_zero()) {
    auto [m, c] = rem.lex_leading_term();
    if (!(m[0] >= m[1] && m[1] >= m[2]))
      throw descent_error("symmetric reduction: unsorted leading exponent in " + rem.str());
    MultiIndex tm{m[0] - m[1], m[1] - m[2], m[2]};
    out += Polynomial::monomial(Chart::tau, tm, c);
    Polynomial image = Polynomial::constant(Chart::rho, c);
    for (int i = 0; i < 3; ++i)
      if (tm[i] > 0) image = image * sigma[i].pow(tm[i]);
    rem -= image;
  }
  return out;
}

/// Substitutes the elementary symmetric polynomials for the tau variables.
inline Polynomial tau_to_rho(const Polynomial& q) {
  require_same_chart(q.chart(), Chart::tau, "tau_to_rho");
  return q.substitute({sigma_polynomial(1), sigma_polynomial(2), sigma_polynomial(3)});
}

/// Descends a polynomial-coefficient rho-chart operator that maps symmetric
/// polynomials to symmetric polynomials onto the tau chart: the unique tau
/// operator of the same order whose action matches through the substitution.
/// Solved exactly by interpolation on tau monomials, lowest degree first
/// (each coefficient is determined by earlier ones, so the linear system is
/// triangular).
inline DiffOperator change_of_variables_rho_to_tau(const DiffOperator& op) {
  require_same_chart(op.chart(), Chart::rho, "change_of_variables");
  if (!op.has_polynomial_coefficients())
    throw descent_error("operator does not descend to tau chart: rational coefficients");
  const int order = op.order();
  std::map<MultiIndex, Polynomial, MonomialOrder> coeffs;
  for (int d = 0; d <= order; ++d)
    for (int b0 = 0; b0 <= d; ++b0)
      for (int b1 = 0; b1 + b0 <= d; ++b1) {
        MultiIndex beta{b0, b1, d - b0 - b1};
        coeffs.emplace(beta, Polynomial::zero(Chart::tau));
      }
  for (auto& [beta, c_beta] : coeffs) {
    Polynomial tau_mono = Polynomial::monomial(Chart::tau, beta, 1);
    Polynomial s_beta = symmetric_to_tau(op.apply_polynomial(tau_to_rho(tau_mono)));
    for (const auto& [prev, c_prev] : coeffs) {
      if (prev == beta) break;  // map order majorizes componentwise order
      if (!prev.divides(beta) || c_prev.is_zero()) continue;
      Rational fall = 1;
      for (int i = 0; i < 3; ++i) fall *= falling_factorial(beta[i], prev[i]);
      s_beta -= c_prev * fall * Polynomial::monomial(Chart::tau, beta - prev, 1);
    }
    Rational factorial = 1;
    for (int i = 0; i < 3; ++i) factorial *= falling_factorial(beta[i], beta[i]);
    c_beta = s_beta * (Rational(1) / factorial);
  }
  DiffOperator out(Chart::tau);
  for (const auto& [beta, c_beta] : coeffs) out.add_term(beta, c_beta);
  return out;
}

}  // namespace qes3body
