#include <gtest/gtest.h>

#include <random>

#include "qes3body/change_of_variables.hpp"
#include "qes3body/finite_diff.hpp"
#include "qes3body/generators.hpp"

namespace qes3body {
namespace {

Polynomial rho_var(int i) { return Polynomial::variable(Chart::rho, i); }
Polynomial tau_var(int i) { return Polynomial::variable(Chart::tau, i); }

PotentialParams random_params(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 5);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> nlev(0, 4);
  return PotentialParams(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
                         Rational(num(rng), den(rng)), nlev(rng));
}

TEST(DeltaR, RhoChartCoefficients) {
  DiffOperator dr = delta_r(Chart::rho);
  EXPECT_EQ(dr.coefficient(MultiIndex{1, 1, 0}).as_polynomial(),
            (rho_var(0) + rho_var(1) - rho_var(2)) * Rational(2));
  EXPECT_EQ(dr.coefficient(MultiIndex{2, 0, 0}).as_polynomial(), rho_var(0) * Rational(4));
  EXPECT_EQ(dr.coefficient(MultiIndex{0, 0, 1}).as_polynomial(),
            Polynomial::constant(Chart::rho, 6));
}

TEST(DeltaR, DistanceChartCoefficients) {
  DiffOperator dr = delta_r(Chart::r);
  EXPECT_EQ(dr.coefficient(MultiIndex{1, 0, 0}),
            RationalFunction(Polynomial::constant(Chart::r, 2),
                             Polynomial::variable(Chart::r, 0)));
  EXPECT_EQ(dr.coefficient(MultiIndex{2, 0, 0}).as_polynomial(),
            Polynomial::constant(Chart::r, 1));
}

TEST(DeltaR, PointwiseConsistencyBetweenCharts) {
  // Delta_R(r) applied to f(rho(r)) agrees numerically with Delta_R(rho)
  DiffOperator dr_r = delta_r(Chart::r);
  DiffOperator dr_rho = delta_r(Chart::rho);
  Polynomial f = rho_var(0) * rho_var(2) + rho_var(1);
  std::array<double, 3> r = {0.9, 1.1, 1.3};
  std::array<double, 3> rho = {r[0] * r[0], r[1] * r[1], r[2] * r[2]};
  auto f_of_r = [&](const std::array<double, 3>& p) {
    return f.eval_double({p[0] * p[0], p[1] * p[1], p[2] * p[2]});
  };
  double lhs = evaluate(dr_r, f_of_r, r, 1e-4);
  double rhs = dr_rho.apply(f).eval_double(rho);
  EXPECT_NEAR(lhs, rhs, 1e-5 * (1 + std::abs(rhs)));
}

TEST(L1, ActionOnCoordinates) {
  DiffOperator l1 = symmetry_l1();
  EXPECT_TRUE(l1.apply(tau1_in_rho()).is_zero());
  EXPECT_EQ(l1.apply_polynomial(rho_var(0)), rho_var(1) - rho_var(2));
  EXPECT_TRUE(l1.apply(sigma_polynomial(2)).is_zero());
}

TEST(L1, ChartAndFlagValidation) {
  EXPECT_THROW(build_l1(Chart::rho, true), std::invalid_argument);
  EXPECT_THROW(build_l1(Chart::tau, false), std::invalid_argument);
  EXPECT_EQ(build_l1(Chart::rho), symmetry_l1());
  EXPECT_EQ(build_l1(Chart::tau, true), neg_l1_squared_tau());
}

TEST(DeltaLB, FirstOrderCoefficient) {
  DiffOperator lb = delta_lb();
  Polynomial t1 = tau1_in_rho();
  EXPECT_EQ(lb.coefficient(MultiIndex{1, 0, 0}),
            RationalFunction(t1 * Rational(4) - rho_var(0) * Rational(3), t1));
  EXPECT_TRUE(lb.apply(Polynomial::constant(Chart::rho, 1)).is_zero());
}

TEST(DeltaLB, SharesSecondOrderBlockWithDeltaR) {
  DiffOperator lb = delta_lb();
  DiffOperator dr = delta_r(Chart::rho);
  for (const auto& [m, c] : dr.terms()) {
    if (m.degree() != 2) continue;
    EXPECT_EQ(lb.coefficient(m), c);
  }
}

TEST(HQes, Tau1FormMatchesDisplay) {
  PotentialParams p(Rational(3, 2), Rational(1, 3), 2, 2);
  DiffOperator h = h_qes(HChart::tau1, p);
  Polynomial t1 = tau_var(0);
  EXPECT_EQ(h.coefficient(MultiIndex{2, 0, 0}).as_polynomial(), t1 * Rational(-6));
  Polynomial d1_expected = Polynomial::constant(Chart::tau, -12 * (1 + p.gamma)) +
                           t1 * (12 * p.omega) + t1 * t1 * (12 * p.a_coupling);
  EXPECT_EQ(h.coefficient(MultiIndex{1, 0, 0}).as_polynomial(), d1_expected);
  EXPECT_EQ(h.coefficient(MultiIndex{}).as_polynomial(),
            t1 * (-12 * p.a_coupling * p.n_level));
}

TEST(HEs, EqualsHQesWithAZero) {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 5; ++trial) {
    PotentialParams p = random_params(rng);
    for (HChart c : {HChart::rho, HChart::tau, HChart::tau12, HChart::tau1}) {
      EXPECT_EQ(h_es(c, p), h_qes(c, p.with_a(0)));
    }
  }
}

TEST(HEs, Tau1AndTau12Displays) {
  PotentialParams p(2, Rational(5, 4), 0, 3);
  DiffOperator h1 = h_es(HChart::tau1, p);
  Polynomial t1 = tau_var(0), t2 = tau_var(1);
  // -6 tau1 d1^2 + 12 (omega tau1 - gamma - 1) d1
  EXPECT_EQ(h1.coefficient(MultiIndex{1, 0, 0}).as_polynomial(),
            (t1 * p.omega - Polynomial::constant(Chart::tau, p.gamma + 1)) * Rational(12));
  DiffOperator h12 = h_es(HChart::tau12, p);
  EXPECT_EQ(h12.coefficient(MultiIndex{0, 2, 0}).as_polynomial(),
            t1 * (t2 * Rational(7) - t1 * t1) * Rational(-2));
}

TEST(HEs, ActionOnTau1PowersIsGradingDiagonal) {
  PotentialParams p(Rational(5, 3), 1, 0, 0);
  DiffOperator h = h_es(HChart::tau1, p);
  for (int n = 1; n <= 4; ++n) {
    Polynomial image = h.apply_polynomial(tau_var(0).pow(n));
    EXPECT_EQ(image.coefficient(MultiIndex{n, 0, 0}), 12 * p.omega * n);
    EXPECT_EQ(image.degree(), n);
  }
}

TEST(HQes, RestrictionChain) {
  std::mt19937_64 rng(777);
  PotentialParams p = random_params(rng);
  DiffOperator full = h_qes(HChart::tau, p);
  DiffOperator mid = h_qes(HChart::tau12, p);
  DiffOperator small = h_qes(HChart::tau1, p);
  std::uniform_int_distribution<int> e1(0, 3), e2(0, 2);
  for (int trial = 0; trial < 8; ++trial) {
    Polynomial q12 = Polynomial::monomial(Chart::tau, MultiIndex{e1(rng), e2(rng), 0}, 1) +
                     Polynomial::monomial(Chart::tau, MultiIndex{e1(rng), 0, 0}, -3);
    EXPECT_EQ(full.apply_polynomial(q12), mid.apply_polynomial(q12));
    Polynomial q1 = Polynomial::monomial(Chart::tau, MultiIndex{e1(rng), 0, 0}, 2);
    EXPECT_EQ(mid.apply_polynomial(q1), small.apply_polynomial(q1));
  }
}

TEST(Integral, HQesCommutesWithL1SquaredTau) {
  std::mt19937_64 rng(2025);
  for (int trial = 0; trial < 5; ++trial) {
    PotentialParams p = random_params(rng);
    EXPECT_TRUE(commutator(h_qes(HChart::tau, p), neg_l1_squared_tau()).is_zero())
        << "omega=" << to_string(p.omega) << " gamma=" << to_string(p.gamma);
  }
}

TEST(Generators, Sl4RaisingActionOnConstants) {
  GeneratorSet g = build_generators(Algebra::sl4, 3);
  Polynomial one = Polynomial::constant(Chart::rho, 1);
  EXPECT_EQ(g.at("J+_1").apply_polynomial(one), rho_var(0) * Rational(-3));
}

TEST(Generators, Sl4CommutationRelations) {
  GeneratorSet g = build_generators(Algebra::sl4, 2);
  auto J = [&](const std::string& id) { return g.at(id); };
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      EXPECT_TRUE(
          commutator(J("J-_" + std::to_string(i)), J("J-_" + std::to_string(j))).is_zero());
      for (int k = 1; k <= 3; ++k) {
        // [J-_i, J0_jk] = delta_ij J-_k
        DiffOperator lhs = commutator(J("J-_" + std::to_string(i)),
                                      J("J0_" + std::to_string(j) + std::to_string(k)));
        DiffOperator rhs =
            (i == j) ? J("J-_" + std::to_string(k)) : DiffOperator::zero(Chart::rho);
        EXPECT_EQ(lhs, rhs);
      }
      // [J-_i, J+_j] = delta_ij J0 + J0_ji
      DiffOperator lhs = commutator(J("J-_" + std::to_string(i)), J("J+_" + std::to_string(j)));
      DiffOperator rhs = J("J0_" + std::to_string(j) + std::to_string(i));
      if (i == j) rhs += J("J0");
      EXPECT_EQ(lhs, rhs);
    }
}

TEST(Generators, H3MemberCountAndEulerCartan) {
  GeneratorSet g = build_generators(Algebra::h3, 2);
  EXPECT_EQ(g.members.size(), 30u);  // 22 first class (incl. T0) + 8 raising
  int raising = 0;
  for (const auto& [name, op] : g.members)
    if (name.rfind("T+", 0) == 0) ++raising;
  EXPECT_EQ(raising, 8);

  Polynomial mono = Polynomial::monomial(Chart::tau, MultiIndex{2, 1, 1}, 1);
  // T0 scales by p1 + 2 p2 + 3 p3 - N = 2 + 2 + 3 - 2
  EXPECT_EQ(g.at("T0").apply_polynomial(mono), mono * Rational(5));
}

TEST(Generators, Gl2R3Relation) {
  GeneratorSet g = build_generators(Algebra::gl2r3, 4);
  EXPECT_EQ(commutator(g.at("t2"), g.at("t1")), -g.at("t1"));
}

TEST(Assembly, Sl4MatchesDirectConstruction) {
  EXPECT_NO_THROW(
      assemble_hamiltonian(Algebra::sl4, PotentialParams(1, 2, 1, 1), Variant::qes));
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    PotentialParams p = random_params(rng);
    EXPECT_EQ(assemble_hamiltonian(Algebra::sl4, p, Variant::qes), h_qes(HChart::rho, p));
    EXPECT_EQ(assemble_hamiltonian(Algebra::sl4, p, Variant::es), h_es(HChart::rho, p));
  }
}

TEST(Assembly, H3MatchesDirectConstruction) {
  std::mt19937_64 rng(32);
  PotentialParams n0(2, Rational(1, 2), 1, 0);
  EXPECT_EQ(assemble_hamiltonian(Algebra::h3, n0, Variant::es), h_es(HChart::tau, n0));
  for (int trial = 0; trial < 5; ++trial) {
    PotentialParams p = random_params(rng);
    EXPECT_EQ(assemble_hamiltonian(Algebra::h3, p, Variant::qes), h_qes(HChart::tau, p));
  }
}

TEST(Assembly, Gl2R3MatchesDirectConstruction) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 5; ++trial) {
    PotentialParams p = random_params(rng);
    EXPECT_EQ(assemble_hamiltonian(Algebra::gl2r3, p, Variant::qes), h_qes(HChart::tau12, p));
    EXPECT_EQ(assemble_hamiltonian(Algebra::gl2r3, p, Variant::es), h_es(HChart::tau12, p));
  }
}

TEST(Assembly, DeltaVnShiftFlag) {
  PotentialParams p(1, 1, 2, 3);
  DiffOperator shifted = assemble_hamiltonian(Algebra::sl4, p, Variant::qes, true);
  EXPECT_EQ(shifted, h_qes(HChart::rho, p) + delta_v_n(Chart::rho, p));
  // the shift exactly cancels the zero-order part
  EXPECT_TRUE(shifted.coefficient(MultiIndex{}).is_zero());
}

TEST(Assembly, ChartChangeCommutesWithAssembly) {
  std::mt19937_64 rng(34);
  PotentialParams p = random_params(rng);
  EXPECT_EQ(change_of_variables_rho_to_tau(assemble_hamiltonian(Algebra::sl4, p, Variant::qes)),
            assemble_hamiltonian(Algebra::h3, p, Variant::qes));
}

TEST(Masses, EqualMassesReproduceDeltaR) {
  EXPECT_EQ(delta_r_masses(MassTriple(1, 1, 1)), delta_r(Chart::rho));
}

TEST(Masses, AppendixCoefficients) {
  MassTriple m(1, 2, 3);
  DiffOperator op = delta_r_masses(m);
  // the (rho13, rho12) cross term carries 2/m1
  EXPECT_EQ(op.coefficient(MultiIndex{1, 1, 0}).as_polynomial(),
            (rho_var(1) + rho_var(0) - rho_var(2)) * Rational(2));
  // 1/mu12 = (1+2)/2, so the d^2_rho12 coefficient is 3 rho12
  EXPECT_EQ(op.coefficient(MultiIndex{2, 0, 0}).as_polynomial(), rho_var(0) * Rational(3));
}

TEST(Masses, ValidationRejectsNonPositive) {
  EXPECT_THROW(MassTriple(0, 1, 1), std::invalid_argument);
  EXPECT_THROW(MassTriple(1, -2, 1), std::invalid_argument);
}

TEST(Params, Validation) {
  EXPECT_THROW(PotentialParams(0, 1, 0, 0), std::invalid_argument);
  EXPECT_THROW(PotentialParams(1, 1, -1, 0), std::invalid_argument);
  EXPECT_THROW(PotentialParams(1, 1, 0, -1), std::invalid_argument);
  PotentialParams formal(1, 1, 1, Rational(3, 2));
  EXPECT_THROW(formal.n_int(), std::invalid_argument);
}

}  // namespace
}  // namespace qes3body
