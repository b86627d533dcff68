#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sapkit/disk_geometry.hpp"
#include "sapkit/errors.hpp"

using namespace sapkit;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("half-plane chart") {
  StripChart chart{BoundaryPoint::from_angle(0.8)};
  const Complex s = chart.s.point();
  CHECK(std::abs(chart.to_halfplane(s)) < 1e-14);          // phi_s(s) = 0
  CHECK(std::abs(chart.to_halfplane(0.0) - Complex(0, 2)) < 1e-14);  // 2i s/s

  StripChart unit{BoundaryPoint::from_angle(0.0)};
  CHECK(std::abs(unit.to_halfplane(Complex(0, 1)) - Complex(2.0)) < 1e-14);

  CHECK_THROWS_AS(chart.to_halfplane(-s), chart_pole);
}

TEST_CASE("strip chart") {
  StripChart unit{BoundaryPoint::from_angle(0.0)};
  Complex w = unit.to_strip(0.0);
  CHECK(std::abs(w - Complex(std::log(2.0), kPi / 2)) < 1e-14);  // Log(2i)

  // boundary arcs: k = +1 lands on R, k = -1 on R + i pi
  for (int i = 1; i <= 1000; ++i) {
    double x = 2.0 * kPi * i / 1001.0;
    if (std::abs(x - kPi) < 1e-6) continue;  // the pole -s
    Complex plus = unit.to_strip(std::polar(1.0, x));
    if (x < kPi) {
      CHECK(std::abs(plus.imag() - side_line_imag(+1)) < 1e-9);
      CHECK(std::abs(plus.real() - std::log(2 * std::tan(x / 2))) < 1e-9);
    } else {
      CHECK(std::abs(plus.imag() - side_line_imag(-1)) < 1e-9);
    }
  }

  // interior points land inside the closed strip
  std::mt19937 rng(55);
  std::uniform_real_distribution<double> rad(0.0, 0.999), ang(0.0, 2 * kPi);
  for (int i = 0; i < 100; ++i) {
    Complex z = std::polar(rad(rng), ang(rng));
    Complex im = unit.to_strip(z);
    CHECK(im.imag() >= -1e-12);
    CHECK(im.imag() <= kPi + 1e-12);
  }

  CHECK_THROWS_AS(unit.to_strip(Complex(1.0, 0.0)), chart_directed_infinity);
}

TEST_CASE("logarithmic boundary coordinate") {
  CHECK(log_coordinate(+1, 1.0) == 0.0);
  CHECK(log_coordinate(-1, std::exp(1.0)) == doctest::Approx(1.0));
  CHECK(log_coordinate(+1, 0.01) == doctest::Approx(std::log(0.01)));  // -4.6052
  CHECK_THROWS(log_coordinate(+1, 0.0));
  CHECK_THROWS(log_coordinate(+1, 7.0));
}

TEST_CASE("chart asymptotics near the anchor") {
  StripChart chart{BoundaryPoint::from_angle(1.3)};
  for (int k : {+1, -1}) {
    CHECK(chart_asymptotics_check(chart, k, 0.3) < 0.01);
    CHECK(chart_asymptotics_check(chart, k, 0.001) < 1e-7);
    // series bound |ln(2 tan(x/2)) - ln x| <= x^2/10 for x <= 0.3
    for (double x : {0.05, 0.1, 0.2, 0.3})
      CHECK(chart_asymptotics_check(chart, k, x) <= x * x / 10.0);
  }
}

TEST_CASE("stable deep-arc chart coordinate") {
  StripChart chart{BoundaryPoint::from_angle(0.4)};
  // agrees with the direct formula while x is representable...
  for (double lx : {-1.0, -5.0, -20.0, -300.0})
    CHECK(chart.arc_to_strip_real(lx) ==
          doctest::Approx(std::log(2 * std::tan(std::exp(lx) / 2))).epsilon(1e-12));
  // ...and stays finite far past the underflow threshold
  CHECK(chart.arc_to_strip_real(-5000.0) == doctest::Approx(-5000.0).epsilon(1e-12));
}

TEST_CASE("disk automorphisms") {
  DiskAutomorphism id = DiskAutomorphism::identity();
  CHECK(std::abs(id.apply(Complex(0.3, 0.2)) - Complex(0.3, 0.2)) < 1e-15);

  DiskAutomorphism k{0.0, Complex(0.5, 0.0)};
  CHECK(std::abs(k.apply(Complex(0.5, 0.0))) < 1e-15);  // kappa(a) = 0

  std::mt19937 rng(99);
  std::uniform_real_distribution<double> u(-0.6, 0.6), ang(0.0, 2 * kPi);
  for (int i = 0; i < 50; ++i) {
    DiskAutomorphism m{ang(rng), Complex(u(rng), u(rng))};
    DiskAutomorphism inv = m.inverse();
    Complex z(0.3, 0.2);
    CHECK(std::abs(inv.apply(m.apply(z)) - z) < 1e-12);
    CHECK(std::abs(m.apply(inv.apply(z)) - z) < 1e-12);

    // the circle maps to the circle
    Complex b = std::polar(1.0, ang(rng));
    CHECK(std::abs(std::abs(m.apply(b)) - 1.0) < 1e-12);

    // boundary action agrees with apply, and the stretch is |kappa'|
    BoundaryPoint p = BoundaryPoint::from_angle(ang(rng));
    CHECK(std::abs(m.apply_boundary(p).point() - m.apply(p.point())) < 1e-12);
    double h = 1e-6;
    BoundaryPoint q = BoundaryPoint::from_angle(p.angle + h);
    double numeric = std::abs(m.apply(q.point()) - m.apply(p.point())) / h;
    CHECK(m.boundary_stretch(p) == doctest::Approx(numeric).epsilon(1e-4));
  }

  CHECK_THROWS(k.apply(Complex(1.5, 0.0)));
}

TEST_CASE("poisson extension") {
  SUBCASE("constant boundary") {
    std::vector<Complex> samples(512, Complex(2, -3));
    CHECK(std::abs(poisson_extend(samples, Complex(0.0)) - Complex(2, -3)) < 1e-10);
  }

  SUBCASE("harmonic extension of z is z") {
    const std::size_t n = 4096;
    std::vector<Complex> samples(n);
    for (std::size_t j = 0; j < n; ++j)
      samples[j] = std::polar(1.0, 2 * kPi * static_cast<double>(j) / n);
    CHECK(std::abs(poisson_extend(samples, Complex(0.5, 0.0)) - Complex(0.5)) < 1e-6);
  }

  SUBCASE("resolution guard") {
    std::vector<Complex> tiny(100, Complex(1.0));
    CHECK_THROWS(poisson_extend(tiny, Complex(0.0)));  // N too small
    std::vector<Complex> samples(512, Complex(1.0));
    CHECK(poisson_r_max(512) == doctest::Approx(1.0 - 10.0 / 512));
    CHECK_THROWS_AS(poisson_extend(samples, Complex(0.999, 0.0)), unresolved_point);
  }

  SUBCASE("parallel matches serial") {
    const std::size_t n = 2048;
    std::vector<Complex> samples(n);
    for (std::size_t j = 0; j < n; ++j) {
      double t = 2 * kPi * static_cast<double>(j) / n;
      samples[j] = Complex(std::cos(2 * t), std::sin(3 * t));
    }
    for (Complex z : {Complex(0.3, 0.1), Complex(-0.7, 0.2), Complex(0.0, 0.9)})
      CHECK(std::abs(poisson_extend(samples, z) - poisson_extend_serial(samples, z)) <
            1e-13);
  }
}

TEST_CASE("boundary points normalize their angle") {
  CHECK(BoundaryPoint::from_angle(2 * kPi + 0.5).angle == doctest::Approx(0.5));
  CHECK(BoundaryPoint::from_angle(-0.5).angle == doctest::Approx(2 * kPi - 0.5));
}
