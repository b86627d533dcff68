#pragma once

#include <utility>
#include <vector>

#include "sapkit/exp_sum.hpp"

namespace sapkit {

// A product Fejer-type kernel over a selection of basis axes. Axis j of the
// selection contributes grid frequencies (nu/orders[j]) * scales[j] * beta_j,
// |nu| <= orders[j], with weight 1 - |nu|/orders[j]. scales[j] = 1 gives the
// plain kernel; larger integer scales widen the frequency grid so that the
// damping of a fixed frequency tends to 1.
struct KernelSpec {
  BasisPtr basis;
  std::vector<std::size_t> selection;   // axis indices, strictly increasing
  std::vector<long long> orders;        // n_j >= 1
  std::vector<long long> scales;        // M_j >= 1; empty means all 1

  void validate() const;
  long long scale(std::size_t j) const { return scales.empty() ? 1 : scales[j]; }
};

// Materializes the kernel as an exponential sum; term count is the product of
// (2 n_j + 1) over the selection.
ExponentialSum kernel_build(const KernelSpec& spec);

// Damping weight of the finite-rank operator at frequency mu: the product of
// per-axis Fejer weights when mu lies on the kernel grid, else 0. Exact.
Rational bf_weight(const KernelSpec& spec, const Frequency& mu);

// The finite-rank operator: damp each coefficient by bf_weight. Provably equal
// to the convolution mean against the kernel on exponential sums; a numeric
// integration oracle cross-checks this in the tests.
ExponentialSum bf_project(const ExponentialSum& f, const KernelSpec& spec);

struct ApproxStep {
  long long m = 0;
  std::vector<long long> orders;
  double sup_error = 0.0;
};

// Escalates the kernel (m in 1, 2, 4, ..., 2^14) until the grid sup norm of
// Tf - f drops below eps. Throws std::runtime_error if the schedule runs out.
std::pair<KernelSpec, ExponentialSum> bf_approximate(
    const ExponentialSum& f, double eps, std::vector<ApproxStep>* trace = nullptr);

}  // namespace sapkit
