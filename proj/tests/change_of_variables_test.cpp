#include <gtest/gtest.h>

#include <random>

#include "qes3body/change_of_variables.hpp"
#include "qes3body/generators.hpp"

namespace qes3body {
namespace {

Polynomial random_tau_polynomial(std::mt19937_64& rng, int max_degree = 3) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> deg(0, max_degree);
  Polynomial p(Chart::tau);
  for (int t = 0; t < 5; ++t) {
    int d = deg(rng);
    std::uniform_int_distribution<int> part(0, d);
    int a = part(rng);
    int b = std::min(part(rng), d - a);
    p += Polynomial::monomial(Chart::tau, MultiIndex{a, b, d - a - b}, coeff(rng));
  }
  return p;
}

TEST(SymmetricReduction, RoundTripsThroughSigma) {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 20; ++trial) {
    Polynomial q = random_tau_polynomial(rng);
    EXPECT_EQ(symmetric_to_tau(tau_to_rho(q)), q);
  }
}

TEST(SymmetricReduction, RejectsNonSymmetricInput) {
  EXPECT_THROW(symmetric_to_tau(Polynomial::variable(Chart::rho, 0)), descent_error);
}

TEST(ChangeOfVariables, IdentityDescends) {
  EXPECT_EQ(change_of_variables_rho_to_tau(DiffOperator::identity(Chart::rho)),
            DiffOperator::identity(Chart::tau));
}

TEST(ChangeOfVariables, NonDescendingOperatorRejected) {
  // a bare d/drho12 maps tau2 to a non-symmetric polynomial
  EXPECT_THROW(change_of_variables_rho_to_tau(DiffOperator::partial(Chart::rho, 0)),
               descent_error);
  // L1 itself is anti-invariant: it sends tau3 to a nonzero alternating polynomial
  EXPECT_THROW(change_of_variables_rho_to_tau(symmetry_l1()), descent_error);
}

TEST(ChangeOfVariables, RationalCoefficientsRejected) {
  EXPECT_THROW(change_of_variables_rho_to_tau(delta_lb()), descent_error);
}

TEST(ChangeOfVariables, DeltaRDescendsToKnownForm) {
  DiffOperator dr_tau = change_of_variables_rho_to_tau(delta_r(Chart::rho));
  // expected tau form via the h family: h(omega=1, gamma=1/2, A=0) == -Delta_R + 12 Euler
  DiffOperator expected = -h_qes(HChart::tau, PotentialParams(1, Rational(1, 2), 0, 0));
  // strip the omega line of the neutral operator: rebuild with omega contribution removed
  Chart c = Chart::tau;
  DiffOperator euler(c);
  euler.add_term(MultiIndex{1, 0, 0}, Polynomial::variable(c, 0));
  euler.add_term(MultiIndex{0, 1, 0}, Polynomial::variable(c, 1) * Rational(2));
  euler.add_term(MultiIndex{0, 0, 1}, Polynomial::variable(c, 2) * Rational(3));
  expected += euler * Rational(12);  // cancels the 12*omega Euler term at omega=1
  EXPECT_EQ(dr_tau, expected);
  // spot check the separated-variable coefficient of d/dtau3
  Polynomial t1 = Polynomial::variable(c, 0), t2 = Polynomial::variable(c, 1);
  EXPECT_EQ(dr_tau.coefficient(MultiIndex{0, 0, 1}).as_polynomial(),
            (t2 * Rational(7) - t1 * t1) * Rational(2));
}

TEST(ChangeOfVariables, HQesDescendsToTauForm) {
  PotentialParams p(2, 1, 1, 2);
  EXPECT_EQ(change_of_variables_rho_to_tau(h_qes(HChart::rho, p)), h_qes(HChart::tau, p));
}

TEST(ChangeOfVariables, ActionMatchesThroughSubstitution) {
  PotentialParams p(1, 2, 1, 1);
  DiffOperator rho_op = h_qes(HChart::rho, p);
  DiffOperator tau_op = change_of_variables_rho_to_tau(rho_op);
  std::mt19937_64 rng(31415);
  for (int trial = 0; trial < 10; ++trial) {
    Polynomial q = random_tau_polynomial(rng, 4);
    Polynomial lhs = tau_to_rho(tau_op.apply_polynomial(q));
    Polynomial rhs = rho_op.apply_polynomial(tau_to_rho(q));
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(ChangeOfVariables, L1SquaredDescendsToTau3Form) {
  DiffOperator l1 = symmetry_l1();
  DiffOperator neg_l1_sq = -compose(l1, l1);
  DiffOperator descended = change_of_variables_rho_to_tau(neg_l1_sq);
  EXPECT_EQ(descended, neg_l1_squared_tau());
  EXPECT_TRUE(commutator(descended, neg_l1_squared_tau()).is_zero());
}

}  // namespace
}  // namespace qes3body
