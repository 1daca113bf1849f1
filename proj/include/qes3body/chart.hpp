#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "qes3body/errors.hpp"

namespace qes3body {

/// Variable chart a polynomial or operator lives on. Each chart carries
/// exactly three coordinates, ordered as listed.
enum class Chart {
  r,    // (r12, r13, r23)       relative distances
  rho,  // (rho12, rho13, rho23) squared relative distances
  tau,  // (tau1, tau2, tau3)    elementary symmetric polynomials of rho
  w,    // (w1, w2, w3)          symmetry-adapted coordinates
};

inline const std::array<std::array<const char*, 3>, 4>& chart_variable_names() {
  static const std::array<std::array<const char*, 3>, 4> names = {{
      {"r12", "r13", "r23"},
      {"rho12", "rho13", "rho23"},
      {"tau1", "tau2", "tau3"},
      {"w1", "w2", "w3"},
  }};
  return names;
}

inline const char* variable_name(Chart chart, int i) {
  return chart_variable_names()[static_cast<int>(chart)][i];
}

inline std::string chart_name(Chart chart) {
  switch (chart) {
    case Chart::r: return "r";
    case Chart::rho: return "rho";
    case Chart::tau: return "tau";
    case Chart::w: return "w";
  }
  throw std::logic_error("unreachable chart");
}

inline Chart chart_from_name(const std::string& name) {
  if (name == "r") return Chart::r;
  if (name == "rho") return Chart::rho;
  if (name == "tau") return Chart::tau;
  if (name == "w") return Chart::w;
  throw std::invalid_argument("unknown chart '" + name + "'");
}

inline void require_same_chart(Chart a, Chart b, const char* what) {
  if (a != b)
    throw chart_mismatch_error(std::string(what) + ": chart mismatch (" + chart_name(a) +
                               " vs " + chart_name(b) + ")");
}

}  // namespace qes3body
