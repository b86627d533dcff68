#include "sapkit/disk_geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sapkit/errors.hpp"
#include "sapkit/parallel.hpp"

namespace sapkit {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

BoundaryPoint BoundaryPoint::from_angle(double t) {
  double a = std::fmod(t, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  return BoundaryPoint{a};
}

double side_line_imag(int k) {
  if (k != 1 && k != -1) throw std::invalid_argument("side k must be +1 or -1");
  return k == kRealAxisSide ? 0.0 : std::numbers::pi;
}

Complex StripChart::to_halfplane(Complex z) const {
  const Complex sp = s.point();
  const Complex den = sp + z;
  if (std::abs(den) < 1e-14) throw chart_pole("phi_s pole at z = -s");
  return 2.0 * Complex(0.0, 1.0) * (sp - z) / den;
}

Complex StripChart::to_strip(Complex z) const {
  Complex w = to_halfplane(z);
  double re = w.real(), im = w.imag();
  const double scale = std::abs(w) + 1.0;
  if (im < -1e-9 * scale)
    throw std::domain_error("chart input outside the closed disk");
  im = im > 0.0 ? im : 0.0;  // also normalizes -0.0, which would flip atan2 to -pi
  const double r = std::hypot(re, im);
  if (r < 1e-300)
    throw chart_directed_infinity("strip coordinate escapes to Re -> -inf at z = s");
  return Complex(std::log(r), std::atan2(im, re));
}

double StripChart::arc_to_strip_real(double log_x) const {
  const double x = std::exp(log_x);
  if (x > 1e-6) return std::log(2.0 * std::tan(x / 2.0));
  // ln(2 tan(x/2)) = ln x + ln(2 tan(x/2) / x);  the ratio is 1 + x^2/12 + ...
  return log_x + x * x / 12.0;
}

double log_coordinate(int k, double x) {
  if (k != 1 && k != -1) throw std::invalid_argument("side k must be +1 or -1");
  if (!(x > 0.0 && x < kTwoPi))
    throw std::domain_error("log coordinate requires 0 < x < 2pi");
  return std::log(x);
}

double chart_asymptotics_check(const StripChart& chart, int k, double x) {
  Complex z = std::polar(1.0, chart.s.angle + k * x);
  Complex w = chart.to_strip(z);
  Complex expected(std::log(x), side_line_imag(k));
  return std::abs(w - expected);
}

Complex DiskAutomorphism::apply(Complex z) const {
  if (std::abs(z) > 1.0 + 1e-9)
    throw std::domain_error("automorphism input outside the closed disk");
  return std::polar(1.0, theta) * (z - a) / (1.0 - std::conj(a) * z);
}

DiskAutomorphism DiskAutomorphism::inverse() const {
  // w = e^{it}(z-a)/(1 - conj(a) z)  =>  z = (e^{-it} w + a)/(1 + conj(a) e^{-it} w)
  DiskAutomorphism inv;
  inv.theta = -theta;
  inv.a = -a * std::polar(1.0, theta);
  return inv;
}

BoundaryPoint DiskAutomorphism::apply_boundary(const BoundaryPoint& p) const {
  return BoundaryPoint::from_angle(std::arg(apply(p.point())));
}

double DiskAutomorphism::boundary_stretch(const BoundaryPoint& p) const {
  const Complex z = p.point();
  const Complex den = 1.0 - std::conj(a) * z;
  return (1.0 - std::norm(a)) / std::norm(den);
}

double poisson_r_max(std::size_t n_samples) {
  return 1.0 - 10.0 / static_cast<double>(n_samples);
}

namespace {

template <bool Parallel>
Complex poisson_impl(std::span<const Complex> samples, Complex z) {
  const std::size_t n = samples.size();
  if (n < 256) throw std::invalid_argument("poisson_extend needs at least 256 samples");
  const double r = std::abs(z);
  if (r > poisson_r_max(n))
    throw unresolved_point("evaluation point too close to the circle for N samples");
  const double theta = std::arg(z);
  const double one_minus_r2 = 1.0 - r * r;
  double re = 0.0, im = 0.0;
  bool bad = false;
  const long ln = static_cast<long>(n);
#pragma omp parallel for reduction(+ : re, im) reduction(|| : bad) if (Parallel)
  for (long j = 0; j < ln; ++j) {
    const double t = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
    const Complex v = samples[static_cast<std::size_t>(j)];
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) { bad = true; continue; }
    const double kernel = one_minus_r2 / (1.0 - 2.0 * r * std::cos(theta - t) + r * r);
    re += kernel * v.real();
    im += kernel * v.imag();
  }
  if (bad) throw numeric_failure("non-finite boundary sample");
  return Complex(re, im) / static_cast<double>(n);
}

}  // namespace

Complex poisson_extend(std::span<const Complex> samples, Complex z) {
  return poisson_impl<true>(samples, z);
}

Complex poisson_extend_serial(std::span<const Complex> samples, Complex z) {
  return poisson_impl<false>(samples, z);
}

}  // namespace sapkit
