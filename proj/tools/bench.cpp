// Timing comparison of the parallel kernels against their serial references.

#include <chrono>
#include <cstdio>
#include <numbers>
#include <vector>

#include "sapkit/disk_geometry.hpp"
#include "sapkit/exp_sum.hpp"
#include "sapkit/parallel.hpp"

using namespace sapkit;

namespace {

template <typename F>
double time_ms(F&& fn, int reps = 3) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main() {
  apply_thread_cap();
  std::printf("threads: %d\n\n", max_threads());
  std::printf("%-28s %12s %12s %8s\n", "kernel", "serial ms", "parallel ms", "speedup");

  {
    auto basis = FrequencyBasis::unit_sqrt2();
    ExponentialSum f = ExponentialSum::monomial(basis, 0, Rational(1), 1.0) +
                       ExponentialSum::monomial(basis, 1, Rational(1, 2), Complex(0.3, 0.4)) +
                       ExponentialSum::monomial(basis, 0, Rational(-3, 2), 0.25);
    QuadratureConfig cfg;
    cfg.window_T = 2048.0;
    auto fn = [&](double x) { return f.eval_line(x); };
    volatile double sink = 0.0;
    double ts = time_ms([&] { sink = sink + std::abs(mean_numeric_serial(fn, cfg)); });
    double tp = time_ms([&] { sink = sink + std::abs(mean_numeric(fn, cfg)); });
    std::printf("%-28s %12.2f %12.2f %8.2f\n", "mean_numeric T=2048", ts, tp, ts / tp);
  }

  {
    const std::size_t n = 1 << 15;
    std::vector<Complex> samples(n);
    for (std::size_t j = 0; j < n; ++j) {
      double t = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
      samples[j] = Complex(std::cos(3 * t), std::sin(5 * t));
    }
    std::vector<Complex> points;
    for (int i = 0; i < 200; ++i)
      points.push_back(std::polar(0.9 * i / 200.0, 0.01 * i));
    volatile double sink = 0.0;
    double ts = time_ms([&] {
      for (auto z : points) sink = sink + std::abs(poisson_extend_serial(samples, z));
    });
    double tp = time_ms([&] {
      for (auto z : points) sink = sink + std::abs(poisson_extend(samples, z));
    });
    std::printf("%-28s %12.2f %12.2f %8.2f\n", "poisson_extend N=32768x200", ts, tp, ts / tp);
  }

  return 0;
}
