#pragma once

#include <string>

#include "qes3body/diff_operator.hpp"

namespace qes3body {

/// Model constants of the (quasi)-exactly-solvable family. omega > 0 and
/// a_coupling >= 0 always; n_level is a non-negative integer wherever a
/// polynomial subspace is built, but is kept rational so that formal
/// substitution of a non-integer value (whose invariance failure is itself
/// a tested behaviour) stays expressible.
struct PotentialParams {
  Rational omega = 1;
  Rational gamma = 1;
  Rational a_coupling = 0;
  Rational n_level = 0;

  PotentialParams() = default;
  PotentialParams(Rational w, Rational g, Rational a, Rational n)
      : omega(std::move(w)), gamma(std::move(g)), a_coupling(std::move(a)),
        n_level(std::move(n)) {
    if (omega <= 0) throw std::invalid_argument("omega must be positive");
    if (a_coupling < 0) throw std::invalid_argument("A must be non-negative");
    if (n_level < 0) throw std::invalid_argument("N must be non-negative");
  }

  /// n_level as an integer; throws if a formal non-integer value is held.
  int n_int() const {
    if (!is_integer(n_level))
      throw std::invalid_argument("N = " + to_string(n_level) + " is not an integer");
    return static_cast<int>(rational_num(n_level));
  }

  PotentialParams with_a(Rational a) const {
    PotentialParams p = *this;
    p.a_coupling = std::move(a);
    return p;
  }
};

struct MassTriple {
  Rational m1 = 1, m2 = 1, m3 = 1;

  MassTriple() = default;
  MassTriple(Rational a, Rational b, Rational c)
      : m1(std::move(a)), m2(std::move(b)), m3(std::move(c)) {
    if (m1 <= 0 || m2 <= 0 || m3 <= 0)
      throw std::invalid_argument("masses must be positive");
  }

  /// 1/mu_ij = (m_i + m_j)/(m_i m_j)
  Rational inv_reduced(int i, int j) const {
    const Rational m[3] = {m1, m2, m3};
    return (m[i] + m[j]) / (m[i] * m[j]);
  }
};

namespace detail {
inline Polynomial var(Chart c, int i) { return Polynomial::variable(c, i); }
inline MultiIndex d2(int i) {
  MultiIndex m;
  m[i] = 2;
  return m;
}
inline MultiIndex d1(int i) {
  MultiIndex m;
  m[i] = 1;
  return m;
}
inline MultiIndex d11(int i, int j) {
  MultiIndex m;
  m[i] += 1;
  m[j] += 1;
  return m;
}
}  // namespace detail

/// rho12 + rho13 + rho23 (the first symmetric polynomial) on the rho chart.
inline Polynomial tau1_in_rho() {
  Chart c = Chart::rho;
  return detail::var(c, 0) + detail::var(c, 1) + detail::var(c, 2);
}

inline Polynomial sigma_polynomial(int k) {
  Chart c = Chart::rho;
  Polynomial r0 = detail::var(c, 0), r1 = detail::var(c, 1), r2 = detail::var(c, 2);
  switch (k) {
    case 1: return r0 + r1 + r2;
    case 2: return r0 * r1 + r0 * r2 + r1 * r2;
    case 3: return r0 * r1 * r2;
    default: throw std::invalid_argument("sigma index must be 1..3");
  }
}

/// The radial reduction of the flat 6-d kinetic operator: Delta_R on the
/// requested chart. In squared-distance variables it is algebraic; in
/// distance variables the coefficients pick up monomial denominators.
inline DiffOperator delta_r(Chart chart) {
  using namespace detail;
  if (chart == Chart::rho) {
    Chart c = Chart::rho;
    DiffOperator op(c);
    for (int i = 0; i < 3; ++i) {
      op.add_term(d2(i), var(c, i) * Rational(4));
      op.add_term(d1(i), Polynomial::constant(c, 6));
    }
    // cross term for pair (i,j): rho_i + rho_j - rho_k
    op.add_term(d11(0, 1), (var(c, 0) + var(c, 1) - var(c, 2)) * Rational(2));
    op.add_term(d11(0, 2), (var(c, 0) + var(c, 2) - var(c, 1)) * Rational(2));
    op.add_term(d11(1, 2), (var(c, 1) + var(c, 2) - var(c, 0)) * Rational(2));
    return op;
  }
  if (chart == Chart::r) {
    // The bracketed display equals 2*Delta_R; stored here divided by two.
    Chart c = Chart::r;
    DiffOperator op(c);
    for (int i = 0; i < 3; ++i) {
      op.add_term(d2(i), Polynomial::constant(c, 1));
      op.add_term(d1(i), RationalFunction(Polynomial::constant(c, 2), var(c, i)));
    }
    auto sq = [&](int i) { return var(c, i) * var(c, i); };
    auto cross = [&](int i, int j, int k) {
      return RationalFunction(sq(i) + sq(j) - sq(k), var(c, i) * var(c, j) * Rational(2));
    };
    op.add_term(d11(0, 1), cross(0, 1, 2));
    op.add_term(d11(0, 2), cross(0, 2, 1));
    op.add_term(d11(1, 2), cross(1, 2, 0));
    return op;
  }
  throw std::invalid_argument("delta_r is defined on the r and rho charts");
}

/// First-order symmetry operator of Delta_R (rho chart only; it does not
/// descend to the tau chart, only its square does).
inline DiffOperator symmetry_l1() {
  using namespace detail;
  Chart c = Chart::rho;
  DiffOperator op(c);
  op.add_term(d1(0), var(c, 1) - var(c, 2));
  op.add_term(d1(1), var(c, 2) - var(c, 0));
  op.add_term(d1(2), var(c, 0) - var(c, 1));
  return op;
}

/// -L1^2 on the tau chart; involves tau3 derivatives only.
inline DiffOperator neg_l1_squared_tau() {
  using namespace detail;
  Chart c = Chart::tau;
  Polynomial t1 = var(c, 0), t2 = var(c, 1), t3 = var(c, 2);
  DiffOperator op(c);
  op.add_term(d2(2), t3 * t3 * Rational(27) + t3 * t1.pow(3) * Rational(4) -
                         t3 * t2 * t1 * Rational(18) - t2 * t2 * t1 * t1 + t2.pow(3) * Rational(4));
  op.add_term(d1(2), t3 * Rational(27) + t1.pow(3) * Rational(2) - t1 * t2 * Rational(9));
  return op;
}

/// build_L1 with an explicit squared flag, mirroring the catalogued surface.
inline DiffOperator build_l1(Chart chart, bool squared = false) {
  if (!squared) {
    if (chart != Chart::rho)
      throw std::invalid_argument("L1 itself exists on the rho chart only");
    return symmetry_l1();
  }
  if (chart != Chart::tau)
    throw std::invalid_argument(
        "the squared form is provided on the tau chart only; in rho use compose(L1, L1)");
  return neg_l1_squared_tau();
}

/// Laplace-Beltrami operator of the contravariant metric on the rho chart.
/// Shares the second-order block of delta_r(rho) and carries the rational
/// first-order correction -3 rho_i/tau1 + 4.
inline DiffOperator delta_lb() {
  using namespace detail;
  Chart c = Chart::rho;
  DiffOperator op(c);
  Polynomial t1 = tau1_in_rho();
  for (int i = 0; i < 3; ++i) {
    op.add_term(d2(i), var(c, i) * Rational(4));
    op.add_term(d1(i), RationalFunction(t1 * Rational(4) - var(c, i) * Rational(3), t1));
  }
  op.add_term(d11(0, 1), (var(c, 0) + var(c, 1) - var(c, 2)) * Rational(2));
  op.add_term(d11(0, 2), (var(c, 0) + var(c, 2) - var(c, 1)) * Rational(2));
  op.add_term(d11(1, 2), (var(c, 1) + var(c, 2) - var(c, 0)) * Rational(2));
  return op;
}

/// Chart selector for the h-operator family: the full rho and tau forms and
/// the tau12 / tau1 restrictions (which live on the tau chart but involve
/// only the first two / the first variable).
enum class HChart { rho, tau, tau12, tau1 };

inline std::string h_chart_name(HChart c) {
  switch (c) {
    case HChart::rho: return "rho";
    case HChart::tau: return "tau";
    case HChart::tau12: return "tau12";
    case HChart::tau1: return "tau1";
  }
  throw std::logic_error("unreachable h-chart");
}

/// Quasi-exactly-solvable algebraic operator. For integer N it preserves the
/// matching polynomial subspace; A = 0 degenerates to the exactly-solvable
/// operator term for term.
inline DiffOperator h_qes(HChart hchart, const PotentialParams& p) {
  using namespace detail;
  const Rational& om = p.omega;
  const Rational& ga = p.gamma;
  const Rational& A = p.a_coupling;
  const Rational& N = p.n_level;
  if (hchart == HChart::rho) {
    // -Delta_R + 2(1-2*gamma) sum(d_i) + 12*omega Euler + 12*A*tau1 (Euler - N);
    // the constant first-order coefficient is 2(1-2*gamma) - 6 = -4(1+gamma).
    Chart c = Chart::rho;
    DiffOperator op(c);
    Polynomial t1 = tau1_in_rho();
    for (int i = 0; i < 3; ++i) {
      op.add_term(d2(i), var(c, i) * Rational(-4));
      op.add_term(d1(i), Polynomial::constant(c, -4 * (1 + ga)));
      op.add_term(d1(i), var(c, i) * (12 * om));
      op.add_term(d1(i), t1 * var(c, i) * (12 * A));
    }
    op.add_term(d11(0, 1), (var(c, 0) + var(c, 1) - var(c, 2)) * Rational(-2));
    op.add_term(d11(0, 2), (var(c, 0) + var(c, 2) - var(c, 1)) * Rational(-2));
    op.add_term(d11(1, 2), (var(c, 1) + var(c, 2) - var(c, 0)) * Rational(-2));
    op.add_term(MultiIndex{}, t1 * (-12 * A * N));
    return op;
  }
  Chart c = Chart::tau;
  Polynomial t1 = var(c, 0), t2 = var(c, 1), t3 = var(c, 2);
  DiffOperator op(c);
  if (hchart == HChart::tau) {
    op.add_term(d2(0), t1 * Rational(-6));
    op.add_term(d2(1), t1 * (t2 * Rational(7) - t1 * t1) * Rational(-2));
    op.add_term(d2(2), t3 * (t2 * Rational(6) - t1 * t1) * Rational(-2));
    op.add_term(d11(0, 1), t2 * Rational(-24));
    op.add_term(d11(0, 2), t3 * Rational(-36));
    op.add_term(d11(1, 2),
                (t2 * t2 * Rational(4) + t1 * t3 * Rational(9) - t1 * t1 * t2) * Rational(-2));
    op.add_term(d1(0), Polynomial::constant(c, -18));
    op.add_term(d1(1), t1 * Rational(-14));
    op.add_term(d1(2), (t2 * Rational(7) - t1 * t1) * Rational(-2));
    Rational g2 = 2 * (1 - 2 * ga);
    op.add_term(d1(0), Polynomial::constant(c, 3 * g2));
    op.add_term(d1(1), t1 * (2 * g2));
    op.add_term(d1(2), t2 * g2);
    op.add_term(d1(0), t1 * (12 * om));
    op.add_term(d1(1), t2 * (24 * om));
    op.add_term(d1(2), t3 * (36 * om));
    op.add_term(d1(0), t1 * t1 * (12 * A));
    op.add_term(d1(1), t1 * t2 * (24 * A));
    op.add_term(d1(2), t1 * t3 * (36 * A));
    op.add_term(MultiIndex{}, t1 * (-12 * A * N));
    return op;
  }
  if (hchart == HChart::tau12) {
    op.add_term(d2(0), t1 * Rational(-6));
    op.add_term(d2(1), t1 * (t2 * Rational(7) - t1 * t1) * Rational(-2));
    op.add_term(d11(0, 1), t2 * Rational(-24));
    op.add_term(d1(0), Polynomial::constant(c, -12 * (1 + ga)));
    op.add_term(d1(1), t1 * (-2 * (5 + 4 * ga)));
    op.add_term(d1(0), t1 * (12 * om));
    op.add_term(d1(1), t2 * (24 * om));
    op.add_term(d1(0), t1 * t1 * (12 * A));
    op.add_term(d1(1), t1 * t2 * (24 * A));
    op.add_term(MultiIndex{}, t1 * (-12 * A * N));
    return op;
  }
  // tau1
  op.add_term(d2(0), t1 * Rational(-6));
  op.add_term(d1(0), Polynomial::constant(c, -12 * (1 + ga)));
  op.add_term(d1(0), t1 * (12 * om));
  op.add_term(d1(0), t1 * t1 * (12 * A));
  op.add_term(MultiIndex{}, t1 * (-12 * A * N));
  return op;
}

/// Exactly-solvable operator: the A = 0 member of the family.
inline DiffOperator h_es(HChart hchart, const PotentialParams& p) {
  return h_qes(hchart, p.with_a(0));
}

/// The shift 12*A*N*tau1 separating the gauge-rotated zero from the plain
/// generator assembly.
inline DiffOperator delta_v_n(Chart chart, const PotentialParams& p) {
  Polynomial t1 = (chart == Chart::rho) ? tau1_in_rho() : detail::var(Chart::tau, 0);
  return DiffOperator::multiplication(t1 * (12 * p.a_coupling * p.n_level));
}

/// Appendix operator for arbitrary positive masses (rho chart). Equal masses
/// reproduce delta_r(rho) exactly.
inline DiffOperator delta_r_masses(const MassTriple& m) {
  using namespace detail;
  Chart c = Chart::rho;
  DiffOperator op(c);
  // variable -> pair: 0 = (1,2), 1 = (1,3), 2 = (2,3)
  const int pair_i[3] = {0, 0, 1};
  const int pair_j[3] = {1, 2, 2};
  for (int v = 0; v < 3; ++v) {
    Rational inv_mu = m.inv_reduced(pair_i[v], pair_j[v]);
    op.add_term(d2(v), var(c, v) * (2 * inv_mu));
    op.add_term(d1(v), Polynomial::constant(c, 3 * inv_mu));
  }
  const Rational mass[3] = {m.m1, m.m2, m.m3};
  // cross term of the pair sharing particle k carries 1/m_k
  op.add_term(d11(0, 1), (var(c, 0) + var(c, 1) - var(c, 2)) * (2 / mass[0]));
  op.add_term(d11(0, 2), (var(c, 0) + var(c, 2) - var(c, 1)) * (2 / mass[1]));
  op.add_term(d11(1, 2), (var(c, 1) + var(c, 2) - var(c, 0)) * (2 / mass[2]));
  return op;
}

/// Delta_R written in the symmetry-adapted coordinates (w1, w2, w3).
inline DiffOperator delta_r_w() {
  using namespace detail;
  Chart c = Chart::w;
  Polynomial w1 = var(c, 0), w2 = var(c, 1);
  DiffOperator op(c);
  op.add_term(d2(0), w1 * Rational(6));
  op.add_term(d2(1), w1 * Rational(6));
  op.add_term(d2(2), RationalFunction(w1 * Rational(2), w2 * w2));
  op.add_term(d11(0, 1), w2 * Rational(12));
  op.add_term(d1(0), Polynomial::constant(c, 18));
  op.add_term(d1(1), RationalFunction(w1 * Rational(6), w2));
  return op;
}

/// Radial operator obtained by separating w3 with angular number m: acting on
/// profiles psi(w1, w2), including the centrifugal term.
inline DiffOperator separated_radial_operator(int m_angular) {
  using namespace detail;
  Chart c = Chart::w;
  Polynomial w1 = var(c, 0), w2 = var(c, 1);
  DiffOperator op(c);
  op.add_term(d2(0), w1 * Rational(6));
  op.add_term(d2(1), w1 * Rational(6));
  op.add_term(d11(0, 1), w2 * Rational(12));
  op.add_term(d1(0), Polynomial::constant(c, 18));
  op.add_term(d1(1), RationalFunction(w1 * Rational(6), w2));
  Rational m2 = Rational(m_angular) * m_angular;
  op.add_term(MultiIndex{}, RationalFunction(w1 * (-2 * m2), w2 * w2));
  return op;
}

}  // namespace qes3body
