#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sapkit/disk_geometry.hpp"
#include "sapkit/exp_sum.hpp"

namespace sapkit {

// A bounded function on the circle. eval_arc evaluates at the boundary point
// s e^{i k x} given ln x, so deep one-sided windows stay representable after
// x itself underflows; the default falls back to plain evaluation.
class CircleFunction {
 public:
  virtual ~CircleFunction() = default;
  virtual Complex eval(double angle) const = 0;
  virtual Complex eval_arc(const BoundaryPoint& s, int k, double log_x) const;
};

class CallableCircleFunction final : public CircleFunction {
 public:
  explicit CallableCircleFunction(std::function<Complex(double)> fn)
      : fn_(std::move(fn)) {}
  Complex eval(double angle) const override { return fn_(angle); }

 private:
  std::function<Complex(double)> fn_;
};

// The exponential-sum profile carried at one singular point. Holomorphic
// profiles store the strip sum (both boundary lines follow from it); the
// general case stores the two line sums separately.
struct SingularProfile {
  BoundaryPoint s;
  bool holomorphic = true;
  ExponentialSum strip_sum;
  std::optional<ExponentialSum> line_real;     // side k = kRealAxisSide
  std::optional<ExponentialSum> line_shifted;  // the other side

  static SingularProfile holomorphic_profile(BoundaryPoint s, ExponentialSum g);
  static SingularProfile pair_profile(BoundaryPoint s, ExponentialSum on_real_axis,
                                      ExponentialSum on_shifted_axis);

  // Boundary-line sum for side k, as a function of the real strip coordinate.
  ExponentialSum side(int k) const;
};

// Continuous part: a trigonometric polynomial in the angle, or a boundary
// sample table interpolated linearly in angle.
struct ContinuousPart {
  std::map<int, Complex> fourier;
  std::vector<std::pair<double, Complex>> samples;  // strictly increasing angles

  bool uses_samples() const { return !samples.empty(); }
  Complex eval(double angle) const;
  // Harmonic extension to |z| < 1 (r^|n| damping for the polynomial case,
  // Poisson integral of a uniform resampling for the sample case).
  Complex eval_interior(Complex z) const;
};

struct SigmaPair {
  std::optional<SemigroupSpec> minus;  // k = -1
  std::optional<SemigroupSpec> plus;   // k = +1

  const std::optional<SemigroupSpec>& side(int k) const { return k > 0 ? plus : minus; }
};

struct ModelSingularity {
  SingularProfile profile;
  SigmaPair sigma;
};

// Semi-almost periodic boundary model: continuous part plus finitely many
// chart pullbacks of exponential-sum profiles.
class SAPModel final : public CircleFunction {
 public:
  SAPModel(BasisPtr basis, ContinuousPart continuous,
           std::vector<ModelSingularity> singularities);

  const BasisPtr& basis() const { return basis_; }
  const ContinuousPart& continuous() const { return continuous_; }
  const std::vector<ModelSingularity>& singularities() const { return singularities_; }

  Complex eval(double angle) const override;  // throws singular_point at any s
  Complex eval_arc(const BoundaryPoint& s, int k, double log_x) const override;
  // Chart-based evaluation at |z| < 1 (holomorphic profiles + harmonic
  // extension of the continuous part).
  Complex eval_interior(Complex z) const;

  const ModelSingularity* find_singularity(const BoundaryPoint& s) const;
  // Stored profile at a singular point; constant profile f(s) elsewhere.
  SingularProfile extract_profile(const BoundaryPoint& s) const;

 private:
  BasisPtr basis_;
  ContinuousPart continuous_;
  std::vector<ModelSingularity> singularities_;
};

// Quadrature window for the one-sided limits: the average is taken over
// t in [-(offset + window), -offset] with x = e^t.
struct OneSidedConfig {
  double window = 8192.0;
  double offset = 6.0;
  int samples_per_unit = 32;
  double tolerance = 1e-3;

  void validate() const;
};

struct OneSidedMean {
  Complex value;
  Complex half_window_value;
  bool converged = false;  // |value - half_window_value| <= tolerance
};

OneSidedMean one_sided_mean(const CircleFunction& f, const BoundaryPoint& s, int k,
                            const OneSidedConfig& cfg = {});
Complex one_sided_coefficient(const CircleFunction& f, const BoundaryPoint& s, int k,
                              double lambda, const OneSidedConfig& cfg = {});

struct SpectrumLine {
  double lambda = 0.0;
  Complex coeff;
};

// All candidates whose one-sided coefficient exceeds the threshold in modulus.
std::vector<SpectrumLine> spectrum_scan(const CircleFunction& f, const BoundaryPoint& s,
                                        int k, const std::vector<double>& candidates,
                                        const OneSidedConfig& cfg = {},
                                        double threshold = 1e-2);

struct SigmaVerdict {
  std::size_t singularity_index = 0;
  int k = 0;
  Frequency lambda;
  Membership verdict = Membership::member;
};

struct SigmaReport {
  std::vector<SigmaVerdict> entries;
  bool pass = true;  // every entry a member
};

SigmaReport validate_sigma(const SAPModel& m);

struct PullbackLine {
  double s_angle = 0.0;       // original singular angle
  double new_angle = 0.0;
  int k = 0;
  double lambda = 0.0;
  Complex original;           // side coefficient of the stored profile
  Complex detected;           // scan result on the pulled-back function
  double magnitude_error = 0.0;
};

struct PullbackReport {
  std::vector<PullbackLine> lines;
  double max_magnitude_error = 0.0;
};

// Pullback by a disk automorphism: singular points move to kappa^{-1}(s),
// sigma transfers unchanged, and profiles are re-estimated by scanning the
// pulled-back function at the stored spectrum. Coefficient magnitudes are the
// invariant compared in the report; phases pick up the chart shift
// e^{i lambda ln|kappa'(s')|}.
std::pair<SAPModel, PullbackReport> mobius_pullback(const SAPModel& m,
                                                    const DiskAutomorphism& kappa,
                                                    const OneSidedConfig& cfg = {});

}  // namespace sapkit
