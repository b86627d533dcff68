#pragma once

#include <stdexcept>
#include <string>

namespace sapkit {

// Frequencies/sums over different bases were mixed.
struct basis_mismatch : std::invalid_argument {
  explicit basis_mismatch(const std::string& what) : std::invalid_argument(what) {}
};

// Evaluation requested at the pole -s of a chart.
struct chart_pole : std::domain_error {
  explicit chart_pole(const std::string& what) : std::domain_error(what) {}
};

// Chart image escapes to Re -> -inf (the anchor point s itself).
struct chart_directed_infinity : std::domain_error {
  explicit chart_directed_infinity(const std::string& what) : std::domain_error(what) {}
};

// Model evaluated exactly at a singular point.
struct singular_point : std::domain_error {
  explicit singular_point(const std::string& what) : std::domain_error(what) {}
};

// Poisson evaluation point too close to the circle for the sample resolution.
struct unresolved_point : std::domain_error {
  explicit unresolved_point(const std::string& what) : std::domain_error(what) {}
};

// Quadrature hit a NaN/Inf sample.
struct numeric_failure : std::runtime_error {
  explicit numeric_failure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sapkit
