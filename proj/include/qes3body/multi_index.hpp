#pragma once

#include <array>
#include <cstdint>
#include <numeric>

namespace qes3body {

/// Exponent (or derivative-order) triple.
struct MultiIndex {
  std::array<int, 3> e{0, 0, 0};

  constexpr MultiIndex() = default;
  constexpr MultiIndex(int a, int b, int c) : e{a, b, c} {}

  constexpr int operator[](int i) const { return e[i]; }
  constexpr int& operator[](int i) { return e[i]; }

  constexpr int degree() const { return e[0] + e[1] + e[2]; }

  /// Degree with per-variable weights, e.g. (1,2,3) for the tau chart.
  constexpr int weighted_degree(const std::array<int, 3>& w) const {
    return e[0] * w[0] + e[1] * w[1] + e[2] * w[2];
  }

  constexpr bool is_zero() const { return e[0] == 0 && e[1] == 0 && e[2] == 0; }

  /// Componentwise a <= b.
  constexpr bool divides(const MultiIndex& b) const {
    return e[0] <= b.e[0] && e[1] <= b.e[1] && e[2] <= b.e[2];
  }

  friend constexpr MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
    return {a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2]};
  }
  friend constexpr MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
    return {a.e[0] - b.e[0], a.e[1] - b.e[1], a.e[2] - b.e[2]};
  }
  friend constexpr bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.e == b.e;
  }
};

/// Canonical monomial order: graded, ties broken so that the first variable
/// dominates (1 < x1 < x2 < x3 < x1^2 < x1 x2 < ...). Keys of every term map
/// are sorted by this order, which makes equality tests and serialization
/// deterministic.
struct MonomialOrder {
  constexpr bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.e > b.e;  // lexicographic on exponents, reversed within a grade
  }
};

/// Plain lexicographic order with variable 1 most significant; the classic
/// symmetric-polynomial reduction works with respect to this order.
struct LexOrder {
  constexpr bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    return a.e < b.e;
  }
};

}  // namespace qes3body
