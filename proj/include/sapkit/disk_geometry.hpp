#pragma once

#include <complex>
#include <span>
#include <vector>

#include "sapkit/exp_sum.hpp"

namespace sapkit {

// Point s = e^{it} on the unit circle, stored as its angle in [0, 2pi).
struct BoundaryPoint {
  double angle = 0.0;

  static BoundaryPoint from_angle(double t);
  Complex point() const { return std::polar(1.0, angle); }
};

// Orientation convention: the arc s e^{ikx}, x > 0, with k = +1 (going
// counterclockwise from s) maps under Log o phi_s onto the real axis; the
// k = -1 arc maps onto R + i pi. This follows from phi_s(s e^{ix}) = 2 tan(x/2).
inline constexpr int kRealAxisSide = +1;

// Imaginary offset of the boundary line the side-k arc maps to.
double side_line_imag(int k);

// Conformal chart from the disk (minus the pole -s) to the strip, via the
// half-plane: z -> Log(phi_s(z)) with phi_s(z) = 2i(s - z)/(s + z).
struct StripChart {
  BoundaryPoint s;

  Complex to_halfplane(Complex z) const;  // phi_s; throws chart_pole at -s
  Complex to_strip(Complex z) const;      // throws chart_directed_infinity at s

  // Real part of the strip coordinate of the boundary point s e^{ikx}, taking
  // ln x as input; stable for arbitrarily small x. Equals ln(2 tan(x/2)).
  double arc_to_strip_real(double log_x) const;
};

// log_s^k boundary coordinate: s e^{ikx} -> ln x for 0 < x < 2pi.
double log_coordinate(int k, double x);

// |Log(phi_s(s e^{ikx})) - (ln x + i * side line)|; test helper quantifying
// the chart asymptotics near s.
double chart_asymptotics_check(const StripChart& chart, int k, double x);

// kappa(z) = e^{i theta} (z - a)/(1 - conj(a) z), |a| < 1.
struct DiskAutomorphism {
  double theta = 0.0;
  Complex a = 0.0;

  static DiskAutomorphism identity() { return {}; }
  static DiskAutomorphism rotation(double phase) { return {phase, 0.0}; }

  Complex apply(Complex z) const;  // requires |z| <= 1 (small tolerance)
  DiskAutomorphism inverse() const;
  BoundaryPoint apply_boundary(const BoundaryPoint& p) const;
  // |kappa'(z)| for |z| = 1: the stretch factor of the induced circle
  // diffeomorphism at p.
  double boundary_stretch(const BoundaryPoint& p) const;
};

// Trapezoid Poisson integral of boundary samples on the uniform angle grid
// 2 pi j / N. Requires |z| <= 1 - 10/N so the kernel stays resolved; error
// O((1-r)^{-1}/N). Throws unresolved_point beyond that radius.
Complex poisson_extend(std::span<const Complex> samples, Complex z);
Complex poisson_extend_serial(std::span<const Complex> samples, Complex z);

double poisson_r_max(std::size_t n_samples);

}  // namespace sapkit
