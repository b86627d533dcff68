#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sapkit/sap_model.hpp"

namespace sapkit {

// h(z) = 1 + (i/pi) Log(phi_s(z)): holomorphic on the disk, Re h on the circle
// is the indicator of one of the two arcs bounded by s and -s, h(0) = 1/2 + i ln2/pi.
Complex char_arc_h(const BoundaryPoint& s, Complex z);

// (z + s) e^{lambda h(z)}; the vanishing first factor tames the pole at -s
// (value defined as 0 there).
Complex generator_eval(const BoundaryPoint& s, double lambda, Complex z);

// The generator restricted to the circle, with a stable deep-arc path for
// one-sided scans at s.
class GeneratorFunction final : public CircleFunction {
 public:
  GeneratorFunction(BoundaryPoint s, double lambda) : s_(s), lambda_(lambda) {}
  Complex eval(double angle) const override;
  Complex eval_arc(const BoundaryPoint& s, int k, double log_x) const override;

  const BoundaryPoint& anchor() const { return s_; }
  double lambda() const { return lambda_; }

 private:
  BoundaryPoint s_;
  double lambda_;
};

struct Prop34Line {
  double lambda = 0.0;
  Complex coeff_real_axis;     // one-sided coefficient on the R side
  Complex coeff_shifted_axis;  // on the R + i pi side
  double residual = 0.0;       // |a_R - e^{lambda pi} a_{R+i pi}|
  double relative_residual = 0.0;
};

struct Prop34Report {
  std::vector<Prop34Line> lines;
  double max_relative_residual = 0.0;
  double exact_identity_residual = 0.0;  // boundary_pair identity, representation-exact
  bool pass = false;
};

// Quadrature check of the boundary coefficient relation between the two sides
// of L_s(g), together with its exact counterpart on the representation.
Prop34Report prop34_check(const ExponentialSum& g, const BoundaryPoint& s = {},
                          const OneSidedConfig& cfg = {}, double tol = 5e-2);

struct HalfShiftLine {
  double probe = 0.0;
  double deviation = 0.0;  // max over both sides
};

struct HalfShiftReport {
  std::vector<HalfShiftLine> lines;
  bool strictly_decreasing = false;
  double last_deviation = 0.0;
};

// Compares f((p + s)/2) with the ln 2 shift of the strip profile at boundary
// probes p = s e^{ikx}; the deviation vanishes as x -> 0.
HalfShiftReport half_shift_check(const ExponentialSum& g, const BoundaryPoint& s,
                                 const std::vector<double>& probes);

struct TangentialLine {
  int n = 0;
  double ratio = 0.0;  // |z_n - s_n| / |s0 - s_n|
  Complex boundary_value;
  Complex interior_value;
  double difference = 0.0;
  bool poisson_resolved = false;  // interior value cross-checked by Poisson
};

struct TangentialReport {
  std::vector<TangentialLine> lines;
  bool condition_satisfied = false;  // ratios decreasing toward 0
  double last_difference = 0.0;
  bool pass = false;
};

// Interior points z_n are evaluated through the charts; the Poisson integral
// (N = 8192) cross-checks each point that stays inside its resolved radius.
TangentialReport tangential_check(const SAPModel& m, const BoundaryPoint& s0,
                                  const std::vector<std::pair<Complex, double>>& sequence,
                                  double tol = 1e-2);

// e^{i lambda z} - c on the strip.
struct ExpBinomial {
  double lambda = 0.0;
  Complex c = 0.0;

  void validate() const;
};

// All zeros z = (Arg c + 2 pi l)/lambda - i ln|c|/lambda with |Re z| <= window.
std::vector<Complex> binomial_zeros(const ExpBinomial& b, double window);

struct InvertibilityVerdict {
  bool analytic_invertible = false;  // zeros avoid the closed strip
  // For the pure-exponential companion query: does e^{-i lambda z} stay in the
  // subalgebra, i.e. is -lambda in Sigma?
  std::optional<Membership> inverse_exponent_membership;
};

InvertibilityVerdict binomial_invertible(const ExpBinomial& b,
                                         const SemigroupSpec* sigma = nullptr,
                                         const Frequency* lambda_exact = nullptr);

// Brute-force infimum of |e^{i lambda z} - c| over one period-cell of the
// strip, on an nx-by-ny grid; optional local refinement around the best cell.
// Independent oracle for the invertibility verdict.
double binomial_strip_infimum(const ExpBinomial& b, int nx = 2000, int ny = 1000,
                              bool refine = true);

}  // namespace sapkit
