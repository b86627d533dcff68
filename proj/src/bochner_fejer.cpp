#include "sapkit/bochner_fejer.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace sapkit {

void KernelSpec::validate() const {
  if (!basis) throw std::invalid_argument("kernel spec: null basis");
  if (selection.empty()) throw std::invalid_argument("kernel spec: empty selection");
  if (orders.size() != selection.size())
    throw std::invalid_argument("kernel spec: orders/selection size mismatch");
  if (!scales.empty() && scales.size() != selection.size())
    throw std::invalid_argument("kernel spec: scales/selection size mismatch");
  for (std::size_t j = 0; j < selection.size(); ++j) {
    if (selection[j] >= basis->size())
      throw std::invalid_argument("kernel spec: selection out of range");
    if (j > 0 && selection[j] <= selection[j - 1])
      throw std::invalid_argument("kernel spec: selection must be increasing");
    if (orders[j] < 1) throw std::invalid_argument("kernel spec: orders must be >= 1");
    if (!scales.empty() && scales[j] < 1)
      throw std::invalid_argument("kernel spec: scales must be >= 1");
  }
}

ExponentialSum kernel_build(const KernelSpec& spec) {
  spec.validate();
  const std::size_t r = spec.selection.size();
  std::vector<long long> nu(r, 0);
  for (std::size_t j = 0; j < r; ++j) nu[j] = -spec.orders[j];

  std::vector<std::pair<Frequency, Complex>> terms;
  bool done = false;
  while (!done) {
    Rational weight(1);
    for (std::size_t j = 0; j < r; ++j)
      weight *= Rational(spec.orders[j] - std::llabs(nu[j]), spec.orders[j]);
    if (weight.numerator() != 0) {
      std::vector<Rational> coords(spec.basis->size(), Rational(0));
      for (std::size_t j = 0; j < r; ++j)
        coords[spec.selection[j]] = Rational(-nu[j] * spec.scale(j), spec.orders[j]);
      double w = static_cast<double>(weight.numerator()) /
                 static_cast<double>(weight.denominator());
      terms.emplace_back(Frequency(spec.basis, std::move(coords)), Complex(w, 0.0));
    }
    // advance the nu multi-index
    std::size_t j = 0;
    for (; j < r; ++j) {
      if (nu[j] < spec.orders[j]) { ++nu[j]; break; }
      nu[j] = -spec.orders[j];
    }
    done = j == r;
  }
  return ExponentialSum(spec.basis, std::move(terms));
}

Rational bf_weight(const KernelSpec& spec, const Frequency& mu) {
  spec.validate();
  require_same_basis(mu, Frequency::zero(spec.basis));
  std::vector<bool> selected(spec.basis->size(), false);
  for (std::size_t s : spec.selection) selected[s] = true;
  for (std::size_t j = 0; j < spec.basis->size(); ++j)
    if (!selected[j] && mu.coords()[j].numerator() != 0) return Rational(0);

  Rational weight(1);
  for (std::size_t j = 0; j < spec.selection.size(); ++j) {
    const Rational& q = mu.coords()[spec.selection[j]];
    // need q = nu * scale / order with integer |nu| <= order
    Rational nu = q * Rational(spec.orders[j], spec.scale(j));
    if (nu.denominator() != 1) return Rational(0);
    long long n = std::llabs(nu.numerator());
    if (n > spec.orders[j]) return Rational(0);
    weight *= Rational(spec.orders[j] - n, spec.orders[j]);
  }
  return weight;
}

ExponentialSum bf_project(const ExponentialSum& f, const KernelSpec& spec) {
  std::vector<std::pair<Frequency, Complex>> damped;
  damped.reserve(f.size());
  for (const auto& [mu, c] : f.terms()) {
    Rational w = bf_weight(spec, mu);
    if (w.numerator() == 0) continue;
    double wd = static_cast<double>(w.numerator()) / static_cast<double>(w.denominator());
    damped.emplace_back(mu, c * wd);
  }
  return ExponentialSum(f.basis(), std::move(damped));
}

std::pair<KernelSpec, ExponentialSum> bf_approximate(const ExponentialSum& f, double eps,
                                                     std::vector<ApproxStep>* trace) {
  if (eps <= 0.0) throw std::invalid_argument("bf_approximate: eps must be positive");
  if (f.empty()) {
    KernelSpec spec{f.basis(), {0}, {1}, {1}};
    return {spec, f};
  }

  const std::size_t rank = f.basis()->size();
  std::vector<bool> used(rank, false);
  std::vector<long long> denom(rank, 1);
  std::vector<long long> numer_max(rank, 0);
  double min_abs_freq = 0.0;
  for (const auto& [mu, c] : f.terms()) {
    double lv = std::abs(mu.value());
    if (lv > 1e-12 && (min_abs_freq == 0.0 || lv < min_abs_freq)) min_abs_freq = lv;
    for (std::size_t j = 0; j < rank; ++j) {
      const Rational& q = mu.coords()[j];
      if (q.numerator() == 0) continue;
      used[j] = true;
      denom[j] = std::lcm(denom[j], q.denominator());
      // ceil(|q|)
      long long c_q = (std::llabs(q.numerator()) + q.denominator() - 1) / q.denominator();
      numer_max[j] = std::max(numer_max[j], c_q);
    }
  }

  KernelSpec spec;
  spec.basis = f.basis();
  for (std::size_t j = 0; j < rank; ++j)
    if (used[j]) spec.selection.push_back(j);
  if (spec.selection.empty()) spec.selection.push_back(0);  // constant input

  const double period_scale =
      min_abs_freq > 0.0 ? 2.0 * std::numbers::pi / min_abs_freq : 1.0;
  const double grid_len = 10.0 * std::max(period_scale, 1.0);
  const int grid_n = 10000;

  for (long long m = 1; m <= (1 << 14); m *= 2) {
    spec.orders.clear();
    spec.scales.clear();
    for (std::size_t s : spec.selection) {
      long long scale = m * std::max<long long>(1, numer_max[s]);
      spec.orders.push_back(denom[s] * scale);
      spec.scales.push_back(scale);
    }
    ExponentialSum tf = bf_project(f, spec);
    ExponentialSum diff = tf - f;
    double err = grid_sup_abs([&](double x) { return diff.eval_line(x); }, 0.0,
                              grid_len, grid_n);
    if (trace) trace->push_back(ApproxStep{m, spec.orders, err});
    if (err < eps) return {spec, tf};
  }
  throw std::runtime_error("bf_approximate: escalation schedule exhausted");
}

}  // namespace sapkit
