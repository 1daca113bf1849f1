#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <numbers>

#include "qes3body/change_of_variables.hpp"
#include "qes3body/operators.hpp"

namespace qes3body {

/// A point of the relative-distance configuration space, stored as squared
/// relative distances. Interior membership means the three distances satisfy
/// the strict triangle inequalities, equivalently tau1^2 - 4 tau2 < 0.
struct TrianglePoint {
  double rho12, rho13, rho23;

  TrianglePoint(double r12sq, double r13sq, double r23sq)
      : rho12(r12sq), rho13(r13sq), rho23(r23sq) {
    if (!(rho12 > 0) || !(rho13 > 0) || !(rho23 > 0))
      throw configuration_error("squared distances must be positive");
  }

  static TrianglePoint from_sides(double r12, double r13, double r23) {
    return TrianglePoint(r12 * r12, r13 * r13, r23 * r23);
  }

  std::array<double, 3> rho() const { return {rho12, rho13, rho23}; }
  double tau1() const { return rho12 + rho13 + rho23; }
  double tau2() const { return rho12 * rho13 + rho12 * rho23 + rho13 * rho23; }
  double tau3() const { return rho12 * rho13 * rho23; }

  /// 16 S^2 = 4 tau2 - tau1^2; positive strictly inside.
  double discriminant() const { return 4 * tau2() - tau1() * tau1(); }

  TrianglePoint scaled(double lambda) const {
    return TrianglePoint(lambda * rho12, lambda * rho13, lambda * rho23);
  }

  TrianglePoint permuted(const std::array<int, 3>& perm) const {
    std::array<double, 3> src = rho();
    std::array<double, 3> dst{};
    for (int i = 0; i < 3; ++i) dst[perm[i]] = src[i];
    return TrianglePoint(dst[0], dst[1], dst[2]);
  }
};

enum class Membership { interior, boundary, exterior };

inline constexpr double kBoundaryTolerance = 1e-12;

inline Membership in_configuration_space(const TrianglePoint& p) {
  double t1 = p.tau1();
  double disc = p.discriminant();
  double scale = std::max(1.0, t1 * t1);
  if (std::abs(disc) <= kBoundaryTolerance * scale) return Membership::boundary;
  return disc > 0 ? Membership::interior : Membership::exterior;
}

inline void require_interior(const TrianglePoint& p, const char* what) {
  if (in_configuration_space(p) != Membership::interior)
    throw configuration_error(std::string(what) + ": point is not interior");
}

struct MetricData {
  Eigen::Matrix3d g_upper;
  double det;      // = 6 tau1 (4 tau2 - tau1^2) = 96 P S^2
  std::array<double, 3> tau;
  double area_sq;  // S^2
  double p_sum;    // P = sum of squared sides = tau1
};

/// Contravariant metric read off the second-order block of Delta_R(rho).
inline Eigen::Matrix3d metric_upper(const TrianglePoint& p) {
  Eigen::Matrix3d g;
  double a = p.rho12, b = p.rho13, c = p.rho23;
  g << 4 * a, a + b - c, a + c - b,
       a + b - c, 4 * b, b + c - a,
       a + c - b, b + c - a, 4 * c;
  return g;
}

inline MetricData metric_data(const TrianglePoint& p) {
  require_interior(p, "metric_data");
  MetricData m;
  m.g_upper = metric_upper(p);
  double t1 = p.tau1(), t2 = p.tau2();
  m.tau = {t1, t2, p.tau3()};
  double det_direct = m.g_upper.determinant();
  double det_factored = 6 * t1 * (4 * t2 - t1 * t1);
  if (std::abs(det_direct - det_factored) > 1e-12 * std::max(1.0, std::abs(det_factored)))
    throw numerical_failure_error("metric determinant factorization mismatch");
  m.det = det_factored;
  m.area_sq = (4 * t2 - t1 * t1) / 16.0;
  m.p_sum = t1;
  return m;
}

struct WCoords {
  double w1;
  double w2;
  double w3;
};

namespace detail {

/// Closed form valid in the region rho23 > rho13 > rho12.
inline double w3_region_a(double rho12, double rho13, double rho23) {
  double t1 = rho12 + rho13 + rho23;
  double t2 = rho12 * rho13 + rho12 * rho23 + rho13 * rho23;
  double w2 = 2 * std::sqrt(t1 * t1 - 3 * t2);
  const double s3 = std::numbers::sqrt3;
  double f1 = (2 - s3) * rho13 - rho23 + (s3 - 1) * rho12;
  double f2 = 2 * rho23 - (1 + s3) * rho13 + (s3 - 1) * rho12;
  double f3 = (2 + s3) * rho12 - (1 + s3) * rho13 - rho23;
  double arg = 2 * std::numbers::sqrt2 * f1 * f2 * f3 / (w2 * w2 * w2);
  arg = std::clamp(arg, -1.0, 1.0);
  return -(s3 / 9.0) * std::asin(arg);
}

inline bool strictly_ordered_for_region_a(const TrianglePoint& p) {
  return p.rho23 > p.rho13 && p.rho13 > p.rho12;
}

inline double w3_strict(const TrianglePoint& p) {
  const double s3pi6 = std::numbers::sqrt3 * std::numbers::pi / 6.0;
  for (const auto& vp : s3_variable_permutations()) {
    TrianglePoint q = p.permuted(vp.perm);
    if (!strictly_ordered_for_region_a(q)) continue;
    double base = w3_region_a(q.rho12, q.rho13, q.rho23);
    return vp.even ? base : -base - s3pi6;
  }
  // weakly ordered tie: the transported forms agree on region boundaries
  for (const auto& vp : s3_variable_permutations()) {
    TrianglePoint q = p.permuted(vp.perm);
    if (!(q.rho23 >= q.rho13 && q.rho13 >= q.rho12)) continue;
    double base = w3_region_a(q.rho12, q.rho13, q.rho23);
    return vp.even ? base : -base - s3pi6;
  }
  throw std::logic_error("unreachable: some ordering always matches");
}

}  // namespace detail

/// Symmetry-adapted coordinates. w1, w2 are invariant under the L1 flow and
/// under all relabelings; w3 is defined by the region-(a) closed form
/// transported by the permutation rules (cyclic relabelings leave it fixed,
/// transpositions send w3 to -w3 - sqrt(3) pi/6). Points with exactly two
/// equal coordinates are filled in by continuity.
inline WCoords w_coords(const TrianglePoint& p) {
  require_interior(p, "w_coords");
  WCoords w;
  double t1 = p.tau1(), t2 = p.tau2();
  w.w1 = t1;
  w.w2 = 2 * std::sqrt(std::max(0.0, t1 * t1 - 3 * t2));
  std::array<double, 3> rho = p.rho();
  double scale = std::max({rho[0], rho[1], rho[2]});
  bool eq01 = std::abs(rho[0] - rho[1]) <= 1e-14 * scale;
  bool eq02 = std::abs(rho[0] - rho[2]) <= 1e-14 * scale;
  bool eq12 = std::abs(rho[1] - rho[2]) <= 1e-14 * scale;
  if (eq01 && eq02 && eq12)
    throw configuration_error("w3 is undefined at rho12 = rho13 = rho23");
  if (eq01 || eq02 || eq12) {
    // continuity fill-in: nudge the tied pair apart both ways and average
    double h = 1e-9 * std::max(1.0, scale);
    int i = eq01 ? 0 : (eq02 ? 0 : 1);
    std::array<double, 3> up = rho, down = rho;
    up[i] += h;
    down[i] -= h;
    double a = detail::w3_strict(TrianglePoint(up[0], up[1], up[2]));
    double b = detail::w3_strict(TrianglePoint(down[0], down[1], down[2]));
    if (std::abs(a - b) > 1e-6)
      throw numerical_failure_error("one-sided w3 limits disagree at a tied point");
    w.w3 = 0.5 * (a + b);
  } else {
    w.w3 = detail::w3_strict(p);
  }
  return w;
}

/// Effective potential generated by the gauge rotation of Delta_R with
/// D^{-1/4}; the second term is negative inside the configuration space and
/// both terms diverge on the collinear boundary.
inline double effective_potential(const TrianglePoint& p) {
  require_interior(p, "effective_potential");
  double t1 = p.tau1(), t2 = p.tau2();
  return 9.0 / (8.0 * t1) + t1 / (2.0 * (t1 * t1 - 4.0 * t2));
}

/// The same potential through the distance-variable partial fractions; used
/// as an independent cross-check of the rho form.
inline double effective_potential_r_form(const TrianglePoint& p) {
  require_interior(p, "effective_potential");
  double r12 = std::sqrt(p.rho12), r13 = std::sqrt(p.rho13), r23 = std::sqrt(p.rho23);
  double P = p.tau1();
  double bracket =
      1.0 / (r13 * r23 * (r13 + r23)) *
          (1.0 / (r13 + r23 - r12) + 1.0 / (r12 + r13 + r23)) +
      1.0 / (r12 * r13 * r23) * (1.0 / (r12 + r23 - r13) + 1.0 / (r12 + r13 - r23));
  return 9.0 / (8.0 * P) - (P / 16.0) * bracket;
}

/// Weighted sum of squared sides P' = m1 m2 rho12 + m1 m3 rho13 + m2 m3 rho23.
inline double weighted_p_sum(const TrianglePoint& p, const MassTriple& m) {
  double m1 = to_double(m.m1), m2 = to_double(m.m2), m3 = to_double(m.m3);
  return m1 * m2 * p.rho12 + m1 * m3 * p.rho13 + m2 * m3 * p.rho23;
}

/// Appendix effective potential for arbitrary masses; reduces to the
/// equal-mass form at m = (1,1,1).
inline double effective_potential_masses(const TrianglePoint& p, const MassTriple& m) {
  require_interior(p, "effective_potential_masses");
  double m1 = to_double(m.m1), m2 = to_double(m.m2), m3 = to_double(m.m3);
  double pp = weighted_p_sum(p, m);
  double t1 = p.tau1(), t2 = p.tau2();
  double quad = t1 * t1 - 4 * t2;  // negative inside
  return 3.0 * (m1 + m2 + m3) / (8.0 * pp) + pp / (2.0 * m1 * m2 * m3 * quad);
}

/// Scalar curvature of the relative-distance metric; singular on the boundary.
inline double ricci_scalar(const TrianglePoint& p) {
  require_interior(p, "ricci_scalar");
  double t1 = p.tau1(), t2 = p.tau2();
  return (-84.0 * t2 + 41.0 * t1 * t1) / (12.0 * t1 * (4.0 * t2 - t1 * t1));
}

/// Contravariant metric of the mass-weighted operator.
inline Eigen::Matrix3d metric_upper_masses(const TrianglePoint& p, const MassTriple& m) {
  double m1 = to_double(m.m1), m2 = to_double(m.m2), m3 = to_double(m.m3);
  double a = p.rho12, b = p.rho13, c = p.rho23;
  auto inv_mu = [](double x, double y) { return (x + y) / (x * y); };
  Eigen::Matrix3d g;
  g(0, 0) = 2 * inv_mu(m1, m2) * a;
  g(1, 1) = 2 * inv_mu(m1, m3) * b;
  g(2, 2) = 2 * inv_mu(m2, m3) * c;
  g(0, 1) = g(1, 0) = (a + b - c) / m1;
  g(0, 2) = g(2, 0) = (a + c - b) / m2;
  g(1, 2) = g(2, 1) = (b + c - a) / m3;
  return g;
}

/// Factorized determinant of the mass-weighted metric; the sign conveys the
/// membership verdict, so no interior requirement here.
inline double det_masses(const TrianglePoint& p, const MassTriple& m) {
  double m1 = to_double(m.m1), m2 = to_double(m.m2), m3 = to_double(m.m3);
  double pp = weighted_p_sum(p, m);
  double t1 = p.tau1(), t2 = p.tau2();
  return 2.0 * (m1 + m2 + m3) / (m1 * m1 * m2 * m2 * m3 * m3) * pp * (4 * t2 - t1 * t1);
}

}  // namespace qes3body
