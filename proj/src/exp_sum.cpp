#include "sapkit/exp_sum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sapkit/errors.hpp"
#include "sapkit/parallel.hpp"

namespace sapkit {

namespace {
constexpr double kCoeffZero = 0.0;  // exact-zero coefficients are dropped

void require_same_basis_sum(const ExponentialSum& a, const ExponentialSum& b) {
  if (a.basis() == b.basis() || *a.basis() == *b.basis()) return;
  throw basis_mismatch("exponential sums over different bases");
}
}  // namespace

ExponentialSum::ExponentialSum(BasisPtr basis) : basis_(std::move(basis)) {
  if (!basis_) throw std::invalid_argument("null basis");
}

ExponentialSum::ExponentialSum(BasisPtr basis,
                               std::vector<std::pair<Frequency, Complex>> terms)
    : ExponentialSum(std::move(basis)) {
  for (auto& [lambda, c] : terms) {
    require_same_basis(lambda, Frequency::zero(basis_));
    if (std::abs(c) == kCoeffZero) continue;
    auto [it, inserted] = terms_.emplace(lambda, c);
    if (!inserted) {
      it->second += c;
      if (std::abs(it->second) == kCoeffZero) terms_.erase(it);
    }
  }
}

ExponentialSum ExponentialSum::constant(const BasisPtr& basis, Complex c) {
  return ExponentialSum(basis, {{Frequency::zero(basis), c}});
}

ExponentialSum ExponentialSum::monomial(const BasisPtr& basis, std::size_t axis,
                                        const Rational& q, Complex c) {
  return ExponentialSum(basis, {{Frequency::axis(basis, axis, q), c}});
}

Complex ExponentialSum::coefficient(const Frequency& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Complex(0.0) : it->second;
}

std::set<Frequency> ExponentialSum::spectrum() const {
  std::set<Frequency> s;
  for (const auto& [lambda, c] : terms_) s.insert(lambda);
  return s;
}

double ExponentialSum::coeff_abs_sum() const {
  double sum = 0.0;
  for (const auto& [lambda, c] : terms_) sum += std::abs(c);
  return sum;
}

Complex ExponentialSum::eval_line(double x) const {
  Complex acc(0.0);
  for (const auto& [lambda, c] : terms_) acc += c * std::polar(1.0, lambda.value() * x);
  return acc;
}

Complex ExponentialSum::eval_strip(Complex z) const {
  const double y = z.imag();
  if (y < -1e-9 || y > std::numbers::pi + 1e-9)
    throw std::domain_error("point outside the closed strip 0 <= Im z <= pi");
  Complex acc(0.0);
  for (const auto& [lambda, c] : terms_) {
    // e^{i lambda z} = e^{-lambda y} e^{i lambda x}
    double lv = lambda.value();
    acc += c * std::exp(-lv * y) * std::polar(1.0, lv * z.real());
  }
  return acc;
}

Complex ExponentialSum::mean_exact() const {
  return coefficient(Frequency::zero(basis_));
}

std::pair<ExponentialSum, ExponentialSum> ExponentialSum::boundary_pair() const {
  std::vector<std::pair<Frequency, Complex>> shifted;
  shifted.reserve(terms_.size());
  for (const auto& [lambda, c] : terms_)
    shifted.emplace_back(lambda, c * std::exp(-lambda.value() * std::numbers::pi));
  return {*this, ExponentialSum(basis_, std::move(shifted))};
}

ExponentialSum ExponentialSum::operator+(const ExponentialSum& other) const {
  require_same_basis_sum(*this, other);
  std::vector<std::pair<Frequency, Complex>> merged(terms_.begin(), terms_.end());
  merged.insert(merged.end(), other.terms_.begin(), other.terms_.end());
  return ExponentialSum(basis_, std::move(merged));
}

ExponentialSum ExponentialSum::operator-(const ExponentialSum& other) const {
  return *this + (-other);
}

ExponentialSum ExponentialSum::operator*(const ExponentialSum& other) const {
  require_same_basis_sum(*this, other);
  std::vector<std::pair<Frequency, Complex>> prod;
  prod.reserve(terms_.size() * other.terms_.size());
  for (const auto& [la, ca] : terms_)
    for (const auto& [lb, cb] : other.terms_) prod.emplace_back(la + lb, ca * cb);
  return ExponentialSum(basis_, std::move(prod));
}

ExponentialSum ExponentialSum::operator*(Complex scale) const {
  std::vector<std::pair<Frequency, Complex>> scaled;
  scaled.reserve(terms_.size());
  for (const auto& [lambda, c] : terms_) scaled.emplace_back(lambda, c * scale);
  return ExponentialSum(basis_, std::move(scaled));
}

ExponentialSum ExponentialSum::operator-() const { return *this * Complex(-1.0); }

void QuadratureConfig::validate() const {
  if (window_T < 1.0) throw std::invalid_argument("window_T must be >= 1");
  if (samples_per_unit < 8) throw std::invalid_argument("samples_per_unit must be >= 8");
  if (tolerance <= 0.0) throw std::invalid_argument("tolerance must be positive");
}

namespace {

template <bool Parallel>
Complex trapezoid_mean(const std::function<Complex(double)>& f,
                       const QuadratureConfig& cfg) {
  cfg.validate();
  const double a = cfg.window_offset - cfg.window_T;
  const double b = cfg.window_offset + cfg.window_T;
  const long n = static_cast<long>((b - a) * cfg.samples_per_unit);
  const double h = (b - a) / static_cast<double>(n);
  double re = 0.0, im = 0.0;
  bool bad = false;
#pragma omp parallel for reduction(+ : re, im) reduction(|| : bad) if (Parallel)
  for (long j = 0; j <= n; ++j) {
    const double x = a + h * static_cast<double>(j);
    Complex v = f(x);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) { bad = true; continue; }
    const double w = (j == 0 || j == n) ? 0.5 : 1.0;
    re += w * v.real();
    im += w * v.imag();
  }
  if (bad) throw numeric_failure("non-finite sample in windowed mean");
  return Complex(re, im) * (h / (b - a));
}

}  // namespace

Complex mean_numeric(const std::function<Complex(double)>& f, const QuadratureConfig& cfg) {
  return trapezoid_mean<true>(f, cfg);
}

Complex mean_numeric_serial(const std::function<Complex(double)>& f,
                            const QuadratureConfig& cfg) {
  return trapezoid_mean<false>(f, cfg);
}

Complex bohr_fourier_numeric(const std::function<Complex(double)>& f, double lambda,
                             const QuadratureConfig& cfg) {
  return mean_numeric([&](double x) { return f(x) * std::polar(1.0, -lambda * x); }, cfg);
}

Complex strip_mean(const ExponentialSum& f, double y, const QuadratureConfig& cfg) {
  if (y < 0.0 || y > std::numbers::pi)
    throw std::domain_error("strip_mean requires y in [0, pi]");
  return mean_numeric([&](double x) { return f.eval_strip(Complex(x, y)); }, cfg);
}

double mean_error_bound(const std::vector<std::pair<double, double>>& abs_coeff_freq,
                        const QuadratureConfig& cfg) {
  const double T = cfg.window_T;
  const double h = 1.0 / static_cast<double>(cfg.samples_per_unit);
  double bound = 0.0;
  for (const auto& [ac, lv] : abs_coeff_freq) {
    const double s = std::abs(std::sin(lv * h / 2.0));
    // Dirichlet-kernel tail of the discrete trapezoid sum, plus the endpoint
    // correction. Degenerates (stays valid) when lambda aliases the grid.
    double tail = s > 1e-300 ? h / (2.0 * T * s) : 1.0;
    bound += ac * (std::min(tail, 1.0) + h / T);
  }
  return bound;
}

double mean_error_bound(const ExponentialSum& f, const QuadratureConfig& cfg) {
  std::vector<std::pair<double, double>> acf;
  for (const auto& [lambda, c] : f.terms()) {
    double lv = lambda.value();
    if (lambda.is_zero()) continue;
    acf.emplace_back(std::abs(c), lv);
  }
  return mean_error_bound(acf, cfg);
}

double grid_sup_abs(const std::function<Complex(double)>& f, double a, double b, int n) {
  double sup = 0.0;
  const double h = (b - a) / static_cast<double>(n - 1);
#pragma omp parallel for reduction(max : sup)
  for (int j = 0; j < n; ++j) {
    double v = std::abs(f(a + h * static_cast<double>(j)));
    sup = std::max(sup, v);
  }
  return sup;
}

}  // namespace sapkit
