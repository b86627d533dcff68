#include "sapkit/holo_sap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "sapkit/errors.hpp"
#include "sapkit/parallel.hpp"

namespace sapkit {

namespace {
constexpr double kPi = std::numbers::pi;
}

Complex char_arc_h(const BoundaryPoint& s, Complex z) {
  const StripChart chart{s};
  const Complex w = chart.to_strip(z);
  return 1.0 + Complex(0.0, 1.0) / kPi * w;
}

Complex generator_eval(const BoundaryPoint& s, double lambda, Complex z) {
  const Complex sp = s.point();
  if (std::abs(z + sp) < 1e-14) return 0.0;  // the zero of z + s tames the pole
  if (lambda == 0.0) return z + sp;          // defined even at z = s
  return (z + sp) * std::exp(lambda * char_arc_h(s, z));
}

Complex GeneratorFunction::eval(double angle) const {
  return generator_eval(s_, lambda_, std::polar(1.0, angle));
}

Complex GeneratorFunction::eval_arc(const BoundaryPoint& s, int k, double log_x) const {
  const double x = std::exp(log_x);
  if (std::abs(s.angle - s_.angle) > 1e-12 || x > 1e-8)
    return CircleFunction::eval_arc(s, k, log_x);
  const StripChart chart{s_};
  const double u = chart.arc_to_strip_real(log_x);
  const double y = side_line_imag(k);
  // h on the side line: (1 - y/pi) + i u/pi
  const Complex h((1.0 - y / kPi), u / kPi);
  const Complex z = std::polar(1.0, s.angle + k * x);
  return (z + s_.point()) * std::exp(lambda_ * h);
}

Prop34Report prop34_check(const ExponentialSum& g, const BoundaryPoint& s,
                          const OneSidedConfig& cfg, double tol) {
  if (g.empty()) throw std::invalid_argument("prop34_check: empty profile");
  Prop34Report report;

  auto [g1, g2] = g.boundary_pair();
  SAPModel model(g.basis(), ContinuousPart{},
                 {ModelSingularity{SingularProfile::holomorphic_profile(s, g), {}}});

  for (const auto& lambda : g.spectrum()) {
    const double lv = lambda.value();
    Prop34Line line;
    line.lambda = lv;
    line.coeff_real_axis = one_sided_coefficient(model, s, kRealAxisSide, lv, cfg);
    line.coeff_shifted_axis = one_sided_coefficient(model, s, -kRealAxisSide, lv, cfg);
    line.residual =
        std::abs(line.coeff_real_axis - std::exp(lv * kPi) * line.coeff_shifted_axis);
    const double scale = std::max(std::abs(g.coefficient(lambda)), 1e-12);
    line.relative_residual = line.residual / scale;
    report.max_relative_residual =
        std::max(report.max_relative_residual, line.relative_residual);

    // same relation on the representation itself, no quadrature
    double exact = std::abs(g1.coefficient(lambda) -
                            std::exp(lv * kPi) * g2.coefficient(lambda));
    report.exact_identity_residual = std::max(report.exact_identity_residual, exact);
    report.lines.push_back(line);
  }
  report.pass = report.max_relative_residual <= tol;
  return report;
}

HalfShiftReport half_shift_check(const ExponentialSum& g, const BoundaryPoint& s,
                                 const std::vector<double>& probes) {
  const StripChart chart{s};
  const Complex sp = s.point();
  HalfShiftReport report;
  for (double x : probes) {
    if (!(x > 0.0 && x < 0.3))
      throw std::invalid_argument("half-shift probes must lie in (0, 0.3)");
    double dev = 0.0;
    for (int k : {+1, -1}) {
      const Complex p = std::polar(1.0, s.angle + k * x);
      const Complex mid = (p + sp) / 2.0;  // interior: H_s f at the probe
      const Complex lhs = g.eval_strip(chart.to_strip(mid));
      const Complex rhs = g.eval_strip(chart.to_strip(p) - std::log(2.0));
      dev = std::max(dev, std::abs(lhs - rhs));
    }
    report.lines.push_back(HalfShiftLine{x, dev});
  }
  report.strictly_decreasing = true;
  for (std::size_t i = 1; i < report.lines.size(); ++i)
    if (report.lines[i].deviation >= report.lines[i - 1].deviation)
      report.strictly_decreasing = false;
  if (!report.lines.empty()) report.last_deviation = report.lines.back().deviation;
  return report;
}

TangentialReport tangential_check(const SAPModel& m, const BoundaryPoint& s0,
                                  const std::vector<std::pair<Complex, double>>& sequence,
                                  double tol) {
  TangentialReport report;
  const Complex s0p = s0.point();

  // boundary trace for the Poisson cross-check
  const std::size_t n = 8192;
  std::vector<Complex> trace(n);
  for (std::size_t j = 0; j < n; ++j) {
    double angle = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n);
    try {
      trace[j] = m.eval(angle);
    } catch (const std::exception&) {
      trace[j] = m.eval(angle + 1e-7);  // nudge off a singular grid angle
    }
  }

  int idx = 0;
  for (const auto& [zn, sn_angle] : sequence) {
    ++idx;
    const Complex snp = std::polar(1.0, sn_angle);
    TangentialLine line;
    line.n = idx;
    const double denom = std::abs(s0p - snp);
    line.ratio = denom > 0.0 ? std::abs(zn - snp) / denom : 0.0;
    line.boundary_value = m.eval(sn_angle);
    line.interior_value = m.eval_interior(zn);
    line.difference = std::abs(line.interior_value - line.boundary_value);
    if (std::abs(zn) <= 0.95) {
      Complex p = poisson_extend(trace, zn);
      line.poisson_resolved = std::abs(p - line.interior_value) <= 1e-2;
    }
    report.lines.push_back(line);
  }
  if (!report.lines.empty()) {
    report.last_difference = report.lines.back().difference;
    const double first = report.lines.front().ratio;
    const double last = report.lines.back().ratio;
    report.condition_satisfied = last <= std::min(0.1, 0.5 * std::max(first, 1e-12));
    report.pass = report.condition_satisfied && report.last_difference < tol;
  }
  return report;
}

void ExpBinomial::validate() const {
  if (lambda <= 0.0) throw std::invalid_argument("binomial lambda must be positive");
  if (std::abs(c) == 0.0) throw std::invalid_argument("binomial c must be non-zero");
}

std::vector<Complex> binomial_zeros(const ExpBinomial& b, double window) {
  b.validate();
  if (window <= 0.0) throw std::invalid_argument("zero window must be positive");
  const double im = -std::log(std::abs(b.c)) / b.lambda;
  const double arg_c = std::arg(b.c);
  std::vector<Complex> zeros;
  // Re z = (Arg c + 2 pi l)/lambda
  const double step = 2.0 * kPi / b.lambda;
  long l_min = static_cast<long>(std::floor((-window * b.lambda - arg_c) / (2.0 * kPi)));
  long l_max = static_cast<long>(std::ceil((window * b.lambda - arg_c) / (2.0 * kPi)));
  for (long l = l_min; l <= l_max; ++l) {
    double re = (arg_c + 2.0 * kPi * static_cast<double>(l)) / b.lambda;
    if (std::abs(re) <= window) zeros.emplace_back(re, im);
  }
  (void)step;
  return zeros;
}

InvertibilityVerdict binomial_invertible(const ExpBinomial& b, const SemigroupSpec* sigma,
                                         const Frequency* lambda_exact) {
  b.validate();
  InvertibilityVerdict v;
  const double mod = std::abs(b.c);
  // zeros have Im z = -ln|c|/lambda; they avoid the closed strip exactly when
  // |c| leaves [e^{-lambda pi}, 1]
  v.analytic_invertible = mod > 1.0 || mod < std::exp(-b.lambda * kPi);
  if (sigma && lambda_exact)
    v.inverse_exponent_membership = sigma->contains(-*lambda_exact);
  return v;
}

double binomial_strip_infimum(const ExpBinomial& b, int nx, int ny, bool refine) {
  b.validate();
  const double x_max = 2.0 * kPi / b.lambda;
  double best = std::numeric_limits<double>::max();
  double best_x = 0.0, best_y = 0.0;
#pragma omp parallel
  {
    double local = std::numeric_limits<double>::max();
    double lx = 0.0, ly = 0.0;
#pragma omp for nowait
    for (int iy = 0; iy < ny; ++iy) {
      const double y = kPi * static_cast<double>(iy) / static_cast<double>(ny - 1);
      const double rho = std::exp(-b.lambda * y);
      for (int ix = 0; ix < nx; ++ix) {
        const double x = x_max * static_cast<double>(ix) / static_cast<double>(nx - 1);
        const double d = std::abs(rho * std::polar(1.0, b.lambda * x) - b.c);
        if (d < local) { local = d; lx = x; ly = y; }
      }
    }
#pragma omp critical
    if (local < best) { best = local; best_x = lx; best_y = ly; }
  }

  if (refine) {
    // fine subgrids around the best cell; stays a direct evaluation search
    double hx = x_max / static_cast<double>(nx - 1);
    double hy = kPi / static_cast<double>(ny - 1);
    for (int round = 0; round < 6; ++round) {
      double cx = best_x, cy = best_y;
      for (int iy = -10; iy <= 10; ++iy) {
        double y = std::clamp(cy + hy * static_cast<double>(iy) / 10.0, 0.0, kPi);
        double rho = std::exp(-b.lambda * y);
        for (int ix = -10; ix <= 10; ++ix) {
          double x = cx + hx * static_cast<double>(ix) / 10.0;
          double d = std::abs(rho * std::polar(1.0, b.lambda * x) - b.c);
          if (d < best) { best = d; best_x = x; best_y = y; }
        }
      }
      hx /= 10.0;
      hy /= 10.0;
    }
  }
  return best;
}

}  // namespace sapkit
