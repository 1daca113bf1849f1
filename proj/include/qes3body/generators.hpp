#pragma once

#include <map>
#include <string>

#include "qes3body/operators.hpp"

namespace qes3body {

enum class Algebra { sl4, h3, gl2r3, sl2 };

inline std::string algebra_name(Algebra a) {
  switch (a) {
    case Algebra::sl4: return "sl4";
    case Algebra::h3: return "h3";
    case Algebra::gl2r3: return "gl2r3";
    case Algebra::sl2: return "sl2";
  }
  throw std::logic_error("unreachable algebra tag");
}

inline Algebra algebra_from_name(const std::string& s) {
  if (s == "sl4") return Algebra::sl4;
  if (s == "h3") return Algebra::h3;
  if (s == "gl2r3") return Algebra::gl2r3;
  if (s == "sl2") return Algebra::sl2;
  throw std::invalid_argument("unknown algebra '" + s + "'");
}

/// Named generator family of one hidden algebra, at a fixed level N.
struct GeneratorSet {
  Algebra algebra;
  Rational n_level;
  std::map<std::string, DiffOperator> members;

  const DiffOperator& at(const std::string& id) const {
    auto it = members.find(id);
    if (it == members.end())
      throw std::invalid_argument("no generator '" + id + "' in " + algebra_name(algebra));
    return it->second;
  }
};

namespace detail {

inline GeneratorSet sl4_generators(const Rational& n) {
  Chart c = Chart::rho;
  GeneratorSet g{Algebra::sl4, n, {}};
  DiffOperator euler(c);
  for (int i = 0; i < 3; ++i) {
    g.members.emplace("J-_" + std::to_string(i + 1), DiffOperator::partial(c, i));
    for (int j = 0; j < 3; ++j) {
      DiffOperator op(c);
      op.add_term(d1(j), var(c, i));
      g.members.emplace("J0_" + std::to_string(i + 1) + std::to_string(j + 1), op);
    }
    euler.add_term(d1(i), var(c, i));
  }
  DiffOperator j0 = euler - DiffOperator::identity(c) * n;
  g.members.emplace("J0", j0);
  for (int i = 0; i < 3; ++i)
    g.members.emplace("J+_" + std::to_string(i + 1),
                      compose(DiffOperator::multiplication(var(c, i)), j0));
  return g;
}

inline GeneratorSet h3_generators(const Rational& n) {
  Chart c = Chart::tau;
  Polynomial t1 = var(c, 0), t2 = var(c, 1), t3 = var(c, 2);
  GeneratorSet g{Algebra::h3, n, {}};
  auto mono = [&](const Polynomial& coeff, const MultiIndex& order) {
    DiffOperator op(c);
    op.add_term(order, coeff);
    return op;
  };
  Polynomial one = Polynomial::constant(c, 1);
  // first class: 13 first-order generators
  g.members.emplace("T0^(1)", mono(one, d1(0)));
  g.members.emplace("T0^(2)", mono(one, d1(1)));
  g.members.emplace("T0^(3)", mono(one, d1(2)));
  g.members.emplace("T1^(1)", mono(t1, d1(0)));
  g.members.emplace("T2^(2)", mono(t2, d1(1)));
  g.members.emplace("T3^(3)", mono(t3, d1(2)));
  g.members.emplace("T1^(3)", mono(t1, d1(2)));
  g.members.emplace("T11^(3)", mono(t1 * t1, d1(2)));
  g.members.emplace("T111^(3)", mono(t1 * t1 * t1, d1(2)));
  g.members.emplace("T1^(2)", mono(t1, d1(1)));
  g.members.emplace("T11^(2)", mono(t1 * t1, d1(1)));
  g.members.emplace("T2^(3)", mono(t2, d1(2)));
  g.members.emplace("T12^(3)", mono(t1 * t2, d1(2)));
  // 6 second-order
  g.members.emplace("T2^(11)", mono(t2, d2(0)));
  g.members.emplace("T22^(13)", mono(t2 * t2, d11(0, 2)));
  g.members.emplace("T222^(33)", mono(t2 * t2 * t2, d2(2)));
  g.members.emplace("T3^(12)", mono(t3, d11(0, 1)));
  g.members.emplace("T3^(22)", mono(t3, d2(1)));
  g.members.emplace("T13^(22)", mono(t1 * t3, d2(1)));
  // 2 third-order
  g.members.emplace("T3^(111)", mono(t3, MultiIndex{3, 0, 0}));
  g.members.emplace("T33^(222)", mono(t3 * t3, MultiIndex{0, 3, 0}));
  // Euler-Cartan generator, zeroth order, counted with the first class
  DiffOperator t0(c);
  t0.add_term(d1(0), t1);
  t0.add_term(d1(1), t2 * Rational(2));
  t0.add_term(d1(2), t3 * Rational(3));
  t0 -= DiffOperator::identity(c) * n;
  g.members.emplace("T0", t0);
  // second class: 8 raising operators built on T0
  DiffOperator t0p1 = t0 + DiffOperator::identity(c);
  DiffOperator t0p2 = t0 + DiffOperator::identity(c) * Rational(2);
  g.members.emplace("T+_1", compose(DiffOperator::multiplication(t1), t0));
  g.members.emplace("T+_{2,-1}", compose(mono(t2, d1(0)), t0));
  g.members.emplace("T+_{3,-2}", compose(mono(t3, d1(1)), t0));
  g.members.emplace("T+_{22,-3}", compose(mono(t2 * t2, d1(2)), t0));
  g.members.emplace("T+_2", compose(DiffOperator::multiplication(t2), compose(t0, t0p1)));
  g.members.emplace("T+_{3,-11}", compose(mono(t3, d2(0)), t0));
  g.members.emplace("T+_{3,-1}", compose(mono(t3, d1(0)), compose(t0, t0p1)));
  g.members.emplace("T+_3", compose(DiffOperator::multiplication(t3),
                                    compose(t0, compose(t0p1, t0p2))));
  return g;
}

inline GeneratorSet gl2r3_generators(const Rational& n) {
  Chart c = Chart::tau;
  Polynomial t1 = var(c, 0), t2 = var(c, 1);
  GeneratorSet g{Algebra::gl2r3, n, {}};
  DiffOperator op1(c);
  op1.add_term(d1(0), Polynomial::constant(c, 1));
  g.members.emplace("t1", op1);
  DiffOperator op2(c);
  op2.add_term(d1(0), t1);
  op2.add_term(MultiIndex{}, Polynomial::constant(c, -n / 3));
  g.members.emplace("t2", op2);
  DiffOperator op3(c);
  op3.add_term(d1(1), t2 * Rational(2));
  op3.add_term(MultiIndex{}, Polynomial::constant(c, -n / 3));
  g.members.emplace("t3", op3);
  DiffOperator op4(c);
  op4.add_term(d1(0), t1 * t1);
  op4.add_term(d1(1), t1 * t2 * Rational(2));
  op4.add_term(MultiIndex{}, t1 * (-n));
  g.members.emplace("t4", op4);
  for (int i = 0; i <= 2; ++i) {
    DiffOperator ri(c);
    ri.add_term(d1(1), t1.pow(i));
    g.members.emplace("r" + std::to_string(i), ri);
  }
  return g;
}

inline GeneratorSet sl2_generators(const Rational& n) {
  Chart c = Chart::tau;
  Polynomial t1 = var(c, 0);
  GeneratorSet g{Algebra::sl2, n, {}};
  DiffOperator jp(c);
  jp.add_term(d1(0), t1 * t1);
  jp.add_term(MultiIndex{}, t1 * (-n));
  g.members.emplace("J+", jp);
  DiffOperator j0(c);
  j0.add_term(d1(0), t1 * Rational(2));
  j0.add_term(MultiIndex{}, Polynomial::constant(c, -n));
  g.members.emplace("J0", j0);
  g.members.emplace("J-", DiffOperator::partial(c, 0));
  return g;
}

}  // namespace detail

inline GeneratorSet build_generators(Algebra algebra, const Rational& n_level) {
  if (n_level < 0) throw std::invalid_argument("N must be non-negative");
  switch (algebra) {
    case Algebra::sl4: return detail::sl4_generators(n_level);
    case Algebra::h3: return detail::h3_generators(n_level);
    case Algebra::gl2r3: return detail::gl2r3_generators(n_level);
    case Algebra::sl2: return detail::sl2_generators(n_level);
  }
  throw std::logic_error("unreachable algebra tag");
}

enum class Variant { qes, es };

inline std::string variant_name(Variant v) { return v == Variant::qes ? "qes" : "es"; }

namespace detail {

inline DiffOperator assemble_sl4(const PotentialParams& p, Variant variant) {
  GeneratorSet g = sl4_generators(p.n_level);
  auto J = [&](const std::string& id) { return g.at(id); };
  // -Delta_R(J), all three groups of the expansion
  DiffOperator h =
      (compose(J("J0_11"), J("J-_1")) + compose(J("J0_22"), J("J-_2")) +
       compose(J("J0_33"), J("J-_3"))) *
      Rational(-4);
  h += (J("J-_1") + J("J-_2") + J("J-_3")) * Rational(-6);
  h += (compose(J("J0_11"), J("J-_2") + J("J-_3")) + compose(J("J0_22"), J("J-_1") + J("J-_3")) +
        compose(J("J0_33"), J("J-_1") + J("J-_2")) - compose(J("J0_31"), J("J-_2")) -
        compose(J("J0_23"), J("J-_1")) - compose(J("J0_12"), J("J-_3"))) *
       Rational(-2);
  h += (J("J-_1") + J("J-_2") + J("J-_3")) * (2 * (1 - 2 * p.gamma));
  h += (J("J0_11") + J("J0_22") + J("J0_33")) * (12 * p.omega);
  if (variant == Variant::qes)
    h += (J("J+_1") + J("J+_2") + J("J+_3")) * (12 * p.a_coupling);
  return h;
}

inline DiffOperator assemble_h3(const PotentialParams& p, Variant variant) {
  GeneratorSet g = h3_generators(p.n_level);
  auto T = [&](const std::string& id) { return g.at(id); };
  Chart c = Chart::tau;
  DiffOperator bracket = compose(T("T1^(1)"), T("T0^(1)")) * Rational(6);
  bracket += compose(T("T2^(2)") * Rational(7) - T("T11^(2)"), T("T1^(2)")) * Rational(2);
  // the d3^2 group needs an overall 2 for the assembly identity to close
  bracket += compose(T("T3^(3)"), T("T2^(3)") * Rational(6) - T("T11^(3)")) * Rational(2);
  bracket += compose(T("T0^(1)"), T("T2^(2)") * Rational(24) + T("T3^(3)") * Rational(36));
  bracket += (compose(T("T2^(3)"), T("T2^(2)")) * Rational(4) +
              compose(T("T1^(2)"), T("T3^(3)")) * Rational(9) -
              compose(T("T11^(3)"), T("T2^(2)"))) *
             Rational(2);
  bracket += (T("T0^(1)") * Rational(9) + T("T1^(2)") * Rational(7)) * Rational(2);
  bracket += (T("T2^(3)") * Rational(7) - T("T11^(3)")) * Rational(2);
  DiffOperator h = -bracket;
  h += (T("T2^(3)") + T("T1^(2)") * Rational(2) + T("T0^(1)") * Rational(3)) *
       (2 * (1 - 2 * p.gamma));
  h += (T("T0") + DiffOperator::identity(c) * p.n_level) * (12 * p.omega);
  if (variant == Variant::qes) h += T("T+_1") * (12 * p.a_coupling);
  return h;
}

inline DiffOperator assemble_gl2r3(const PotentialParams& p, Variant variant) {
  GeneratorSet g = gl2r3_generators(p.n_level);
  auto G = [&](const std::string& id) { return g.at(id); };
  Chart c = Chart::tau;
  DiffOperator third = DiffOperator::identity(c) * (p.n_level / 3);
  DiffOperator t3_shift = G("t3") + third;
  DiffOperator h = compose(G("t2"), G("t1")) * Rational(-6);
  h += compose(t3_shift, G("r1")) * Rational(-7);
  h += compose(G("r2"), G("r1")) * Rational(2);
  h += compose(G("t1"), t3_shift) * Rational(-12);
  h += G("t1") * (-2 * p.n_level);
  h += G("t1") * (-12 * (1 + p.gamma));
  h += G("r1") * (-2 * (5 + 4 * p.gamma));
  h += (G("t2") + G("t3") + DiffOperator::identity(c) * (2 * p.n_level / 3)) * (12 * p.omega);
  if (variant == Variant::qes) h += G("t4") * (12 * p.a_coupling);
  return h;
}

}  // namespace detail

/// Rebuilds the (quasi)-exactly-solvable operator purely from generator
/// compositions and verifies that it coincides, term for term, with the
/// direct construction; a mismatch raises assembly_identity_error carrying
/// the nonzero difference. With with_delta_v, the shift 12*A*N*tau1 is added
/// after the identity check.
inline DiffOperator assemble_hamiltonian(Algebra algebra, const PotentialParams& p,
                                         Variant variant, bool with_delta_v = false) {
  DiffOperator assembled(Chart::rho);
  DiffOperator direct(Chart::rho);
  Chart chart = Chart::rho;
  switch (algebra) {
    case Algebra::sl4:
      assembled = detail::assemble_sl4(p, variant);
      direct = (variant == Variant::qes) ? h_qes(HChart::rho, p) : h_es(HChart::rho, p);
      chart = Chart::rho;
      break;
    case Algebra::h3:
      assembled = detail::assemble_h3(p, variant);
      direct = (variant == Variant::qes) ? h_qes(HChart::tau, p) : h_es(HChart::tau, p);
      chart = Chart::tau;
      break;
    case Algebra::gl2r3:
      assembled = detail::assemble_gl2r3(p, variant);
      direct = (variant == Variant::qes) ? h_qes(HChart::tau12, p) : h_es(HChart::tau12, p);
      chart = Chart::tau;
      break;
    case Algebra::sl2:
      throw std::invalid_argument("no assembly is defined for the sl2 set");
  }
  DiffOperator diff = assembled - direct;
  if (!diff.is_zero())
    throw assembly_identity_error(
        "assembled " + algebra_name(algebra) + " operator differs from direct construction",
        diff.str());
  if (with_delta_v) assembled += delta_v_n(chart, p);
  return assembled;
}

}  // namespace qes3body
