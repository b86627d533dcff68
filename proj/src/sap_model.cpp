#include "sapkit/sap_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sapkit/errors.hpp"
#include "sapkit/parallel.hpp"

namespace sapkit {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kAngleEps = 1e-9;

double angle_distance(double a, double b) {
  double d = std::fmod(std::abs(a - b), kTwoPi);
  return std::min(d, kTwoPi - d);
}
}  // namespace

Complex CircleFunction::eval_arc(const BoundaryPoint& s, int k, double log_x) const {
  return eval(s.angle + k * std::exp(log_x));
}

SingularProfile SingularProfile::holomorphic_profile(BoundaryPoint s, ExponentialSum g) {
  SingularProfile p{std::move(s), true, std::move(g), std::nullopt, std::nullopt};
  return p;
}

SingularProfile SingularProfile::pair_profile(BoundaryPoint s, ExponentialSum on_real_axis,
                                              ExponentialSum on_shifted_axis) {
  SingularProfile p{std::move(s), false, ExponentialSum::zero(on_real_axis.basis()),
                    std::move(on_real_axis), std::move(on_shifted_axis)};
  return p;
}

ExponentialSum SingularProfile::side(int k) const {
  if (holomorphic) {
    auto [g1, g2] = strip_sum.boundary_pair();
    return k == kRealAxisSide ? g1 : g2;
  }
  return k == kRealAxisSide ? *line_real : *line_shifted;
}

Complex ContinuousPart::eval(double angle) const {
  Complex acc(0.0);
  for (const auto& [n, c] : fourier) acc += c * std::polar(1.0, n * angle);
  if (!samples.empty()) {
    double a = std::fmod(angle, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    auto it = std::lower_bound(samples.begin(), samples.end(), a,
                               [](const auto& p, double v) { return p.first < v; });
    // wrap-around linear interpolation
    double a0, a1;
    Complex v0, v1;
    if (it == samples.begin() || it == samples.end()) {
      a0 = samples.back().first;
      v0 = samples.back().second;
      a1 = samples.front().first + kTwoPi;
      v1 = samples.front().second;
      if (a < a0) a += kTwoPi;
    } else {
      a0 = (it - 1)->first;
      v0 = (it - 1)->second;
      a1 = it->first;
      v1 = it->second;
    }
    double t = a1 > a0 ? (a - a0) / (a1 - a0) : 0.0;
    acc += v0 + (v1 - v0) * t;
  }
  return acc;
}

Complex ContinuousPart::eval_interior(Complex z) const {
  const double r = std::abs(z);
  const double theta = std::arg(z);
  Complex acc(0.0);
  for (const auto& [n, c] : fourier)
    acc += c * std::pow(r, std::abs(n)) * std::polar(1.0, n * theta);
  if (!samples.empty()) {
    const std::size_t n = 8192;
    std::vector<Complex> grid(n);
    for (std::size_t j = 0; j < n; ++j)
      grid[j] = eval(kTwoPi * static_cast<double>(j) / static_cast<double>(n)) -
                (fourier.empty() ? Complex(0.0) : Complex(0.0));
    // remove the polynomial part already extended above
    if (!fourier.empty()) {
      ContinuousPart poly{fourier, {}};
      for (std::size_t j = 0; j < n; ++j)
        grid[j] -= poly.eval(kTwoPi * static_cast<double>(j) / static_cast<double>(n));
    }
    acc += poisson_extend(grid, z);
  }
  return acc;
}

SAPModel::SAPModel(BasisPtr basis, ContinuousPart continuous,
                   std::vector<ModelSingularity> singularities)
    : basis_(std::move(basis)),
      continuous_(std::move(continuous)),
      singularities_(std::move(singularities)) {
  if (!basis_) throw std::invalid_argument("null basis");
  for (std::size_t i = 0; i < singularities_.size(); ++i)
    for (std::size_t j = i + 1; j < singularities_.size(); ++j)
      if (angle_distance(singularities_[i].profile.s.angle,
                         singularities_[j].profile.s.angle) < kAngleEps)
        throw std::invalid_argument("singular points must be pairwise distinct");
}

const ModelSingularity* SAPModel::find_singularity(const BoundaryPoint& s) const {
  for (const auto& sing : singularities_)
    if (angle_distance(sing.profile.s.angle, s.angle) < kAngleEps) return &sing;
  return nullptr;
}

Complex SAPModel::eval(double angle) const {
  const BoundaryPoint p = BoundaryPoint::from_angle(angle);
  if (find_singularity(p))
    throw singular_point("model value undefined at a singular point");
  Complex acc = continuous_.eval(p.angle);
  const Complex z = p.point();
  for (const auto& sing : singularities_) {
    const StripChart chart{sing.profile.s};
    const Complex w = chart.to_strip(z);
    if (sing.profile.holomorphic) {
      acc += sing.profile.strip_sum.eval_strip(w);
    } else {
      const int k = w.imag() < std::numbers::pi / 2.0 ? kRealAxisSide : -kRealAxisSide;
      acc += sing.profile.side(k).eval_line(w.real());
    }
  }
  return acc;
}

Complex SAPModel::eval_arc(const BoundaryPoint& s, int k, double log_x) const {
  const double x = std::exp(log_x);
  const double angle = s.angle + k * x;
  Complex acc = continuous_.eval(angle);
  const Complex z = std::polar(1.0, angle);
  for (const auto& sing : singularities_) {
    if (angle_distance(sing.profile.s.angle, s.angle) < kAngleEps) {
      const StripChart chart{sing.profile.s};
      const double u = chart.arc_to_strip_real(log_x);
      if (sing.profile.holomorphic)
        acc += sing.profile.strip_sum.eval_strip(Complex(u, side_line_imag(k)));
      else
        acc += sing.profile.side(k).eval_line(u);
      continue;
    }
    const StripChart chart{sing.profile.s};
    const Complex w = chart.to_strip(z);
    if (sing.profile.holomorphic) {
      acc += sing.profile.strip_sum.eval_strip(w);
    } else {
      const int side = w.imag() < std::numbers::pi / 2.0 ? kRealAxisSide : -kRealAxisSide;
      acc += sing.profile.side(side).eval_line(w.real());
    }
  }
  return acc;
}

Complex SAPModel::eval_interior(Complex z) const {
  if (std::abs(z) >= 1.0)
    throw std::domain_error("interior evaluation requires |z| < 1");
  Complex acc = continuous_.eval_interior(z);
  for (const auto& sing : singularities_) {
    if (!sing.profile.holomorphic)
      throw std::logic_error("interior evaluation requires holomorphic profiles");
    const StripChart chart{sing.profile.s};
    acc += sing.profile.strip_sum.eval_strip(chart.to_strip(z));
  }
  return acc;
}

SingularProfile SAPModel::extract_profile(const BoundaryPoint& s) const {
  if (const ModelSingularity* sing = find_singularity(s)) return sing->profile;
  // continuous at s: the profile is the constant pair f(s)
  Complex v = eval(s.angle);
  return SingularProfile::holomorphic_profile(s, ExponentialSum::constant(basis_, v));
}

void OneSidedConfig::validate() const {
  if (window < 1.0) throw std::invalid_argument("one-sided window must be >= 1");
  if (samples_per_unit < 8)
    throw std::invalid_argument("one-sided samples_per_unit must be >= 8");
  if (std::exp(-offset) >= kTwoPi)
    throw std::domain_error("one-sided window reaches x >= 2pi");
}

namespace {

// Trapezoid average of t -> f(s e^{ik e^t}) e^{-i lambda t} over [a, b].
Complex arc_window_average(const CircleFunction& f, const BoundaryPoint& s, int k,
                           double lambda, double a, double b, int spp) {
  const long n = std::max<long>(1, static_cast<long>((b - a) * spp));
  const double h = (b - a) / static_cast<double>(n);
  double re = 0.0, im = 0.0;
  bool bad = false;
  std::string error;
#pragma omp parallel for reduction(+ : re, im) reduction(|| : bad)
  for (long j = 0; j <= n; ++j) {
    if (bad) continue;
    try {
      const double t = a + h * static_cast<double>(j);
      Complex v = f.eval_arc(s, k, t);
      if (lambda != 0.0) v *= std::polar(1.0, -lambda * t);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        bad = true;
        continue;
      }
      const double w = (j == 0 || j == n) ? 0.5 : 1.0;
      re += w * v.real();
      im += w * v.imag();
    } catch (const std::exception& e) {
#pragma omp critical
      error = e.what();
      bad = true;
    }
  }
  if (bad) throw numeric_failure("one-sided quadrature failed" +
                                 (error.empty() ? std::string() : ": " + error));
  return Complex(re, im) * (h / (b - a));
}

}  // namespace

OneSidedMean one_sided_mean(const CircleFunction& f, const BoundaryPoint& s, int k,
                            const OneSidedConfig& cfg) {
  cfg.validate();
  const double b = -cfg.offset;
  const double a = b - cfg.window;
  OneSidedMean out;
  out.value = arc_window_average(f, s, k, 0.0, a, b, cfg.samples_per_unit);
  out.half_window_value =
      arc_window_average(f, s, k, 0.0, b - cfg.window / 2.0, b, cfg.samples_per_unit);
  out.converged = std::abs(out.value - out.half_window_value) <= cfg.tolerance;
  return out;
}

Complex one_sided_coefficient(const CircleFunction& f, const BoundaryPoint& s, int k,
                              double lambda, const OneSidedConfig& cfg) {
  cfg.validate();
  const double b = -cfg.offset;
  const double a = b - cfg.window;
  return arc_window_average(f, s, k, lambda, a, b, cfg.samples_per_unit);
}

std::vector<SpectrumLine> spectrum_scan(const CircleFunction& f, const BoundaryPoint& s,
                                        int k, const std::vector<double>& candidates,
                                        const OneSidedConfig& cfg, double threshold) {
  std::vector<SpectrumLine> lines;
  for (double lambda : candidates) {
    Complex c = one_sided_coefficient(f, s, k, lambda, cfg);
    if (std::abs(c) > threshold) lines.push_back(SpectrumLine{lambda, c});
  }
  return lines;
}

SigmaReport validate_sigma(const SAPModel& m) {
  SigmaReport report;
  for (std::size_t i = 0; i < m.singularities().size(); ++i) {
    const auto& sing = m.singularities()[i];
    for (int k : {-1, +1}) {
      const auto& sigma = sing.sigma.side(k);
      if (!sigma) continue;
      for (const auto& lambda : sing.profile.side(k).spectrum()) {
        Membership v = sigma->contains(lambda);
        if (v != Membership::member) report.pass = false;
        report.entries.push_back(SigmaVerdict{i, k, lambda, v});
      }
    }
  }
  return report;
}

namespace {

// kappa* f = f o kappa as a circle function, with a stable deep-arc path
// through the boundary stretch of kappa at the new singular point.
class PulledBackModel final : public CircleFunction {
 public:
  PulledBackModel(const SAPModel& m, const DiskAutomorphism& kappa)
      : model_(m), kappa_(kappa) {}

  Complex eval(double angle) const override {
    Complex w = kappa_.apply(std::polar(1.0, angle));
    return model_.eval(std::arg(w));
  }

  Complex eval_arc(const BoundaryPoint& s, int k, double log_x) const override {
    if (log_x > -18.0) return CircleFunction::eval_arc(s, k, log_x);
    const BoundaryPoint target = kappa_.apply_boundary(s);
    const double stretch = kappa_.boundary_stretch(s);
    return model_.eval_arc(target, k, log_x + std::log(stretch));
  }

 private:
  const SAPModel& model_;
  const DiskAutomorphism& kappa_;
};

}  // namespace

std::pair<SAPModel, PullbackReport> mobius_pullback(const SAPModel& m,
                                                    const DiskAutomorphism& kappa,
                                                    const OneSidedConfig& cfg) {
  const DiskAutomorphism inv = kappa.inverse();
  std::vector<BoundaryPoint> new_points;
  for (const auto& sing : m.singularities())
    new_points.push_back(inv.apply_boundary(sing.profile.s));
  for (std::size_t i = 0; i < new_points.size(); ++i)
    for (std::size_t j = i + 1; j < new_points.size(); ++j)
      if (angle_distance(new_points[i].angle, new_points[j].angle) < kAngleEps)
        throw std::invalid_argument("pullback collapses two singular points");

  const PulledBackModel pulled(m, kappa);
  PullbackReport report;
  std::vector<ModelSingularity> new_singularities;

  for (std::size_t i = 0; i < m.singularities().size(); ++i) {
    const auto& sing = m.singularities()[i];
    const BoundaryPoint sp = new_points[i];

    std::vector<Frequency> freqs;
    std::vector<double> candidates;
    for (const auto& lambda : sing.profile.side(kRealAxisSide).spectrum()) {
      freqs.push_back(lambda);
      candidates.push_back(lambda.value());
    }

    std::vector<std::pair<Frequency, Complex>> new_terms;
    for (int k : {+1, -1}) {
      ExponentialSum orig_side = sing.profile.side(k);
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        Complex detected = one_sided_coefficient(pulled, sp, k, candidates[c], cfg);
        Complex original = orig_side.coefficient(freqs[c]);
        PullbackLine line;
        line.s_angle = sing.profile.s.angle;
        line.new_angle = sp.angle;
        line.k = k;
        line.lambda = candidates[c];
        line.original = original;
        line.detected = detected;
        line.magnitude_error = std::abs(std::abs(detected) - std::abs(original));
        report.max_magnitude_error =
            std::max(report.max_magnitude_error, line.magnitude_error);
        report.lines.push_back(line);
        if (k == kRealAxisSide) new_terms.emplace_back(freqs[c], detected);
      }
    }
    // (kappa_* Sigma)(s') = Sigma(kappa(s'))
    new_singularities.push_back(ModelSingularity{
        SingularProfile::holomorphic_profile(
            sp, ExponentialSum(m.basis(), std::move(new_terms))),
        sing.sigma});
  }

  // Continuous remainder of the pullback, tabulated off the singular angles.
  ContinuousPart cont;
  const std::size_t n = 1024;
  SAPModel shell(m.basis(), ContinuousPart{}, new_singularities);
  for (std::size_t j = 0; j < n; ++j) {
    double angle = kTwoPi * (static_cast<double>(j) + 0.5) / static_cast<double>(n);
    bool near_singular = false;
    for (const auto& p : new_points)
      if (angle_distance(p.angle, angle) < 1e-3) near_singular = true;
    if (near_singular) continue;
    try {
      cont.samples.emplace_back(angle, pulled.eval(angle) - shell.eval(angle));
    } catch (const std::exception&) {
      // skip points the charts cannot evaluate
    }
  }
  return {SAPModel(m.basis(), std::move(cont), std::move(new_singularities)), report};
}

}  // namespace sapkit
