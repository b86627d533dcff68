#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sapkit/errors.hpp"
#include "sapkit/sap_model.hpp"

using namespace sapkit;

namespace {

constexpr double kPi = std::numbers::pi;

ExponentialSum mono(const BasisPtr& b, const Rational& q, Complex c) {
  return ExponentialSum::monomial(b, 0, q, c);
}

SAPModel single_profile_model(const BasisPtr& b, double angle, ExponentialSum g,
                              ContinuousPart cont = {}) {
  return SAPModel(
      b, std::move(cont),
      {ModelSingularity{
          SingularProfile::holomorphic_profile(BoundaryPoint::from_angle(angle), g), {}}});
}

// quadrature window small enough that the naive (non-stable) arc path stays finite
OneSidedConfig callable_cfg() {
  OneSidedConfig cfg;
  cfg.window = 256.0;
  return cfg;
}

}  // namespace

TEST_CASE("sap_eval") {
  auto b1 = FrequencyBasis::unit();

  SUBCASE("continuous model") {
    SAPModel m(b1, ContinuousPart{{{0, Complex(1.0)}}, {}}, {});
    for (double t : {0.0, 1.0, 4.5}) CHECK(m.eval(t) == Complex(1.0));
  }

  SUBCASE("single pullback profile") {
    const double s_angle = 0.9, lambda = 1.5;
    SAPModel m = single_profile_model(b1, s_angle, mono(b1, Rational(3, 2), 1.0));
    for (double u : {0.3, 1.0, 2.0}) {  // k = +1 arc, phi_s = 2 tan(u/2) > 0
      Complex expect = std::exp(Complex(0, lambda * std::log(2 * std::tan(u / 2))));
      CHECK(std::abs(m.eval(s_angle + u) - expect) < 1e-12);
    }
    CHECK_THROWS_AS(m.eval(s_angle), singular_point);
  }

  SUBCASE("superposition is term-by-term") {
    ExponentialSum g1 = mono(b1, Rational(1), 1.0);
    ExponentialSum g2 = mono(b1, Rational(2), Complex(0, 0.5));
    ContinuousPart cont{{{0, Complex(0.25)}}, {}};
    SAPModel sum(b1, cont,
                 {ModelSingularity{SingularProfile::holomorphic_profile(
                                       BoundaryPoint::from_angle(0.5), g1), {}},
                  ModelSingularity{SingularProfile::holomorphic_profile(
                                       BoundaryPoint::from_angle(3.5), g2), {}}});
    SAPModel only1 = single_profile_model(b1, 0.5, g1);
    SAPModel only2 = single_profile_model(b1, 3.5, g2);
    for (double t : {1.7, 2.2, 5.9})
      CHECK(std::abs(sum.eval(t) - (only1.eval(t) + only2.eval(t) + 0.25)) < 1e-12);
  }

  SUBCASE("distinct singular points required") {
    ExponentialSum g = mono(b1, Rational(1), 1.0);
    CHECK_THROWS(SAPModel(
        b1, ContinuousPart{},
        {ModelSingularity{SingularProfile::holomorphic_profile(
                              BoundaryPoint::from_angle(1.0), g), {}},
         ModelSingularity{SingularProfile::holomorphic_profile(
                              BoundaryPoint::from_angle(1.0), g), {}}}));
  }
}

TEST_CASE("extract_profile") {
  auto b1 = FrequencyBasis::unit();
  ExponentialSum g = mono(b1, Rational(1), 1.0) + mono(b1, Rational(1, 2), 0.5);
  ContinuousPart cont{{{0, Complex(1.0)}, {1, Complex(0, 0.5)}}, {}};
  const double s_angle = 2.0;
  SAPModel m = single_profile_model(b1, s_angle, g, cont);

  SUBCASE("stored profile comes back verbatim") {
    SingularProfile p = m.extract_profile(BoundaryPoint::from_angle(s_angle));
    CHECK(p.holomorphic);
    CHECK(p.strip_sum.terms() == g.terms());
  }

  SUBCASE("non-singular points give the constant profile f(s)") {
    BoundaryPoint other = BoundaryPoint::from_angle(5.0);
    SingularProfile p = m.extract_profile(other);
    CHECK(p.strip_sum.spectrum().size() <= 1);
    CHECK(std::abs(p.strip_sum.mean_exact() - m.eval(other.angle)) < 1e-12);
  }

  SUBCASE("residual after removing the profile is continuous at s") {
    SAPModel shell = single_profile_model(b1, s_angle, g);
    double prev = 1e300;
    for (double x : {1e-2, 1e-4, 1e-6}) {
      double r = 0.0;
      for (int k : {+1, -1}) {
        Complex residual = m.eval(s_angle + k * x) - shell.eval(s_angle + k * x) -
                           cont.eval(s_angle);
        r = std::max(r, std::abs(residual));
      }
      CHECK(r < prev);
      prev = r;
    }
    CHECK(prev < 1e-5);
  }
}

TEST_CASE("one-sided means") {
  auto b1 = FrequencyBasis::unit();
  const BoundaryPoint s = BoundaryPoint::from_angle(1.0);

  SUBCASE("constant function") {
    CallableCircleFunction c([](double) { return Complex(2, 1); });
    OneSidedMean m = one_sided_mean(c, s, +1, callable_cfg());
    CHECK(std::abs(m.value - Complex(2, 1)) < 1e-10);
    CHECK(m.converged);
  }

  SUBCASE("profile mean via the stable model path") {
    SAPModel m = single_profile_model(b1, s.angle,
                                      ExponentialSum::constant(b1, 3.0) +
                                          mono(b1, Rational(1), 1.0));
    OneSidedMean r = one_sided_mean(m, s, +1);
    CHECK(std::abs(r.value - Complex(3.0)) < 1e-3);
  }

  SUBCASE("norm bound |M| <= sup|f|") {
    CallableCircleFunction f([](double t) { return std::exp(Complex(0, 3 * t)); });
    OneSidedMean r = one_sided_mean(f, s, -1, callable_cfg());
    CHECK(std::abs(r.value) <= 1.0 + 1e-9);
  }

  SUBCASE("window reaching x >= 2pi is rejected") {
    OneSidedConfig bad;
    bad.offset = -2.0;  // window starts at x = e^2 > 2pi
    CHECK_THROWS(bad.validate());
  }
}

TEST_CASE("one-sided coefficients") {
  auto b1 = FrequencyBasis::unit();
  const BoundaryPoint s = BoundaryPoint::from_angle(4.0);
  const Complex c(0.7, -0.2);
  SAPModel m = single_profile_model(b1, s.angle, mono(b1, Rational(1), c));

  // matching side and frequency recovers the coefficient
  CHECK(std::abs(one_sided_coefficient(m, s, +1, 1.0) - c) < 1e-3);
  // the k = -1 side carries the e^{-lambda pi}-damped coefficient
  CHECK(std::abs(one_sided_coefficient(m, s, -1, 1.0) - c * std::exp(-kPi)) < 1e-3);
  // mismatched frequency averages out
  CHECK(std::abs(one_sided_coefficient(m, s, +1, 1.7)) < 2e-3);
  // continuous function: only lambda = 0 survives
  CallableCircleFunction g([](double t) { return Complex(std::cos(t), 0); });
  CHECK(std::abs(one_sided_coefficient(g, s, +1, 1.0, callable_cfg())) < 2e-2);
}

TEST_CASE("spectrum scan") {
  auto b1 = FrequencyBasis::unit();
  const BoundaryPoint s = BoundaryPoint::from_angle(0.3);
  SAPModel m = single_profile_model(
      b1, s.angle, mono(b1, Rational(1), 1.0) + mono(b1, Rational(2), 0.5));

  auto lines = spectrum_scan(m, s, +1, {0.5, 1.0, 2.0, 3.0});
  REQUIRE(lines.size() == 2);
  CHECK(lines[0].lambda == 1.0);
  CHECK(std::abs(lines[0].coeff - Complex(1.0)) < 1e-3);
  CHECK(lines[1].lambda == 2.0);
  CHECK(std::abs(lines[1].coeff - Complex(0.5)) < 1e-3);

  // short window: threshold sits above the 2/(W lambda) window bound
  CallableCircleFunction flat([](double) { return Complex(1.0); });
  CHECK(spectrum_scan(flat, s, +1, {0.5, 1.0}, callable_cfg(), 5e-2).empty());
  CHECK(spectrum_scan(m, s, +1, {}).empty());
}

TEST_CASE("sigma validation") {
  auto b1 = FrequencyBasis::unit();
  auto freq = [&](long long p) { return Frequency::axis(b1, 0, Rational(p)); };
  auto profile = mono(b1, Rational(1), 1.0) + mono(b1, Rational(2), 1.0);

  auto model_with_sigma = [&](ExponentialSum g, SemigroupSpec sg) {
    SigmaPair sigma;
    sigma.plus = sg;
    return SAPModel(b1, ContinuousPart{},
                    {ModelSingularity{SingularProfile::holomorphic_profile(
                                          BoundaryPoint::from_angle(1.0), g),
                                      sigma}});
  };

  CHECK(validate_sigma(model_with_sigma(profile, SemigroupSpec::nonneg_span({freq(1)})))
            .pass);
  SigmaReport fail = validate_sigma(
      model_with_sigma(mono(b1, Rational(-1), 1.0), SemigroupSpec::nonneg_span({freq(1)})));
  CHECK_FALSE(fail.pass);
  CHECK(fail.entries.front().verdict == Membership::non_member);
  CHECK(validate_sigma(model_with_sigma(mono(b1, Rational(1), 1.0),
                                        SemigroupSpec::group_span({freq(2), freq(3)})))
            .pass);
}

TEST_CASE("mobius pullback") {
  auto b1 = FrequencyBasis::unit();
  SAPModel m = single_profile_model(
      b1, 1.0, mono(b1, Rational(1), 1.0) + mono(b1, Rational(2), 0.5),
      ContinuousPart{{{0, Complex(0.3)}}, {}});

  SUBCASE("identity preserves everything") {
    auto [pulled, report] = mobius_pullback(m, DiskAutomorphism::identity());
    CHECK(report.max_magnitude_error < 1e-3);  // pure quadrature error
    CHECK(pulled.singularities().front().profile.s.angle == doctest::Approx(1.0));
  }

  SUBCASE("rotation relocates the singular point") {
    auto [pulled, report] = mobius_pullback(m, DiskAutomorphism::rotation(0.7));
    // singular points move to kappa^{-1}(s): a rotation by -0.7
    CHECK(pulled.singularities().front().profile.s.angle == doctest::Approx(1.0 - 0.7));
    CHECK(report.max_magnitude_error < 5e-2);
  }

  SUBCASE("general automorphism keeps coefficient magnitudes") {
    auto [pulled, report] = mobius_pullback(m, DiskAutomorphism{0.0, Complex(0.3, 0.0)});
    CHECK(report.max_magnitude_error < 5e-2);
    // spectra agree as sets
    CHECK(pulled.singularities().front().profile.strip_sum.spectrum().size() == 2);
  }
}
