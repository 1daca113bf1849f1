#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "qes3body/diff_operator.hpp"

namespace qes3body {

using ScalarField3 = std::function<double(const std::array<double, 3>&)>;

namespace detail {

struct StencilNode {
  int offset;
  double weight;  // already divided by the step power
};

/// Central stencils, 2nd-order accurate, for pure derivatives up to order 3.
inline std::vector<StencilNode> central_stencil(int order, double h) {
  switch (order) {
    case 0: return {{0, 1.0}};
    case 1: return {{1, 0.5 / h}, {-1, -0.5 / h}};
    case 2: return {{1, 1.0 / (h * h)}, {0, -2.0 / (h * h)}, {-1, 1.0 / (h * h)}};
    case 3: {
      double s = 0.5 / (h * h * h);
      return {{2, s}, {1, -2.0 * s}, {-1, 2.0 * s}, {-2, -s}};
    }
    default: throw std::invalid_argument("finite differences support order <= 3");
  }
}

inline double fd_partial_once(const ScalarField3& f, const std::array<double, 3>& x,
                              const MultiIndex& order, double h) {
  auto sx = central_stencil(order[0], h);
  auto sy = central_stencil(order[1], h);
  auto sz = central_stencil(order[2], h);
  double sum = 0.0;
  for (const auto& a : sx)
    for (const auto& b : sy)
      for (const auto& c : sz) {
        std::array<double, 3> p = {x[0] + a.offset * h, x[1] + b.offset * h,
                                   x[2] + c.offset * h};
        sum += a.weight * b.weight * c.weight * f(p);
      }
  return sum;
}

}  // namespace detail

/// Central-difference estimate of a mixed partial derivative; one Richardson
/// refinement for total order >= 2, where the bare stencil error is largest.
inline double fd_partial(const ScalarField3& f, const std::array<double, 3>& x,
                         const MultiIndex& order, double h) {
  if (order.is_zero()) return f(x);
  int total = order.degree();
  // widen the step with the derivative order: roundoff grows like eps/h^k,
  // so the raw step that suits first derivatives drowns higher ones
  double step = total >= 3 ? 32 * h : (total == 2 ? 8 * h : h);
  double fine = detail::fd_partial_once(f, x, order, step);
  if (total < 2) return fine;
  // refine against the doubled step; the fine-step roundoff stays the floor
  double coarse = detail::fd_partial_once(f, x, order, 2 * step);
  return (4.0 * fine - coarse) / 3.0;
}

/// Numeric application of an operator to a smooth function handle at a point;
/// coefficients are evaluated exactly and derivatives estimated by central
/// differences, so the error is O(h^2) for smooth f.
inline double evaluate(const DiffOperator& op, const ScalarField3& f,
                       const std::array<double, 3>& x, double fd_step) {
  if (!(fd_step > 0)) throw std::invalid_argument("fd_step must be positive");
  double sum = 0.0;
  for (const auto& [order, coeff] : op.terms()) {
    double c = coeff.eval_double(x);  // throws singular_point_error on zero denominator
    sum += c * fd_partial(f, x, order, fd_step);
  }
  return sum;
}

}  // namespace qes3body
