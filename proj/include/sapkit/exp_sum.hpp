#pragma once

#include <complex>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "sapkit/frequency.hpp"

namespace sapkit {

using Complex = std::complex<double>;

// Finite sum  sum_l c_l e^{i lambda_l x}  in canonical form (no zero
// coefficients stored). Extends holomorphically to the strip 0 <= Im z <= pi.
// Immutable; the zero function is the empty term map.
class ExponentialSum {
 public:
  explicit ExponentialSum(BasisPtr basis);
  ExponentialSum(BasisPtr basis, std::vector<std::pair<Frequency, Complex>> terms);

  static ExponentialSum zero(const BasisPtr& basis) { return ExponentialSum(basis); }
  static ExponentialSum constant(const BasisPtr& basis, Complex c);
  // Single term c e^{i lambda x} with lambda = q * basis[axis].
  static ExponentialSum monomial(const BasisPtr& basis, std::size_t axis,
                                 const Rational& q, Complex c);

  const BasisPtr& basis() const { return basis_; }
  const std::map<Frequency, Complex>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Complex coefficient(const Frequency& lambda) const;  // a_lambda, exact
  std::set<Frequency> spectrum() const;
  double coeff_abs_sum() const;  // Bohr bound for the sup norm on R

  Complex eval_line(double x) const;
  Complex eval_strip(Complex z) const;  // requires 0 <= Im z <= pi
  Complex mean_exact() const;           // coefficient at frequency 0

  // Boundary restrictions of the strip extension: (g1, g2) with
  // g1(x) = g(x), g2(x) = g(x + i pi); g2 carries coefficients c e^{-lambda pi}.
  std::pair<ExponentialSum, ExponentialSum> boundary_pair() const;

  ExponentialSum operator+(const ExponentialSum& other) const;
  ExponentialSum operator-(const ExponentialSum& other) const;
  ExponentialSum operator*(const ExponentialSum& other) const;
  ExponentialSum operator*(Complex scale) const;
  ExponentialSum operator-() const;

 private:
  BasisPtr basis_;
  std::map<Frequency, Complex> terms_;
};

inline Complex bohr_fourier_exact(const ExponentialSum& f, const Frequency& lambda) {
  return f.coefficient(lambda);
}

// Window/step parameters for the numeric limits.
struct QuadratureConfig {
  double window_T = 4096.0;    // half-length of the averaging window
  int samples_per_unit = 64;
  double tolerance = 1e-3;
  double window_offset = 0.0;  // center shift; 0 means the symmetric window

  void validate() const;
};

// Trapezoid approximation of the windowed mean (1/2T) int_{-T}^{T} f.
// With window_offset != 0 the window is [offset - T, offset + T].
// Error for exponential sums: see mean_error_bound.
Complex mean_numeric(const std::function<Complex(double)>& f, const QuadratureConfig& cfg);
Complex mean_numeric_serial(const std::function<Complex(double)>& f,
                            const QuadratureConfig& cfg);

Complex bohr_fourier_numeric(const std::function<Complex(double)>& f, double lambda,
                             const QuadratureConfig& cfg);

// Numeric mean along the horizontal line Im z = y; the exact answer is the
// 0-frequency coefficient, independent of y.
Complex strip_mean(const ExponentialSum& f, double y, const QuadratureConfig& cfg);

// Rigorous bound on |mean_numeric(f) - mean_exact(f)| for an exponential sum:
// each nonzero frequency contributes its windowed Dirichlet-kernel tail.
double mean_error_bound(const ExponentialSum& f, const QuadratureConfig& cfg);
double mean_error_bound(const std::vector<std::pair<double, double>>& abs_coeff_freq,
                        const QuadratureConfig& cfg);

// Max of |f| over n uniformly spaced points of [a, b] (OpenMP map).
double grid_sup_abs(const std::function<Complex(double)>& f, double a, double b, int n);

}  // namespace sapkit
