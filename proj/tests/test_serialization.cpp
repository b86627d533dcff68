#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "sapkit/serialization.hpp"

using namespace sapkit;

namespace {

Json sample_model_json() {
  return Json::parse(R"({
    "basis": [{"label": "1", "value": "1"},
              {"label": "sqrt2", "value": "1.41421356237309504880168872420969808"}],
    "continuous": {"fourier": [{"n": 0, "re": 1.0, "im": 0.0},
                               {"n": 2, "re": 0.0, "im": -0.5}]},
    "singularities": [{
      "angle": 1.25,
      "profile": {"terms": [{"coords": ["1", "0"], "re": 1.0, "im": 0.0},
                            {"coords": ["0", "1/2"], "re": 0.25, "im": 0.25}]},
      "sigma_plus": {"variant": "nonneg_span", "generators": [["1", "0"], ["0", "1/2"]],
                     "search_bound": 64}
    }]
  })");
}

}  // namespace

TEST_CASE("exponential sum codec") {
  Json j = Json::parse(R"({
    "basis": [{"label": "1", "value": "1"}],
    "terms": [{"coords": ["3/2"], "re": 1.0, "im": -2.0}]
  })");
  ExponentialSum f = exp_sum_from_json(j);
  CHECK(f.size() == 1);
  CHECK(f.coefficient(Frequency::axis(f.basis(), 0, Rational(3, 2))) == Complex(1, -2));

  // canonical save -> load -> save is byte-stable
  std::string once = canonical_dump(exp_sum_to_json(f));
  std::string twice = canonical_dump(exp_sum_to_json(exp_sum_from_json(Json::parse(once))));
  CHECK(once == twice);

  CHECK_THROWS(terms_from_json(Json::parse(R"([{"coords": ["1", "1"], "re": 1, "im": 0}])"),
                               f.basis()));  // rank mismatch
  CHECK_THROWS(exp_sum_from_json(Json::parse(R"({"terms": []})")));  // missing basis
}

TEST_CASE("model codec round-trips byte-identically") {
  SAPModel m = model_from_json(sample_model_json());
  CHECK(m.singularities().size() == 1);
  CHECK(m.singularities().front().profile.s.angle == doctest::Approx(1.25));
  REQUIRE(m.singularities().front().sigma.plus.has_value());
  CHECK(m.singularities().front().sigma.plus->kind == SemigroupKind::nonneg_span);

  std::string once = canonical_dump(model_to_json(m));
  std::string twice = canonical_dump(model_to_json(model_from_json(Json::parse(once))));
  CHECK(once == twice);
}

TEST_CASE("semigroup codec") {
  auto b = FrequencyBasis::unit();
  for (const char* variant :
       {"all", "half_line_plus", "half_line_minus", "nonneg_span", "group_span"}) {
    Json j{{"variant", variant}};
    if (std::string(variant).find("span") != std::string::npos)
      j["generators"] = Json::array({Json::array({"1"})});
    SemigroupSpec sg = semigroup_from_json(j, b);
    SemigroupSpec back = semigroup_from_json(semigroup_to_json(sg), b);
    CHECK(back.kind == sg.kind);
    CHECK(back.generators.size() == sg.generators.size());
  }
  CHECK_THROWS(semigroup_from_json(Json{{"variant", "bogus"}}, b));
  // nonneg_span generators must be positive
  CHECK_THROWS(semigroup_from_json(
      Json{{"variant", "nonneg_span"}, {"generators", Json::array({Json::array({"-1"})})}},
      b));
}

TEST_CASE("boundary CSV") {
  std::vector<std::pair<double, Complex>> samples{
      {0.0, Complex(1.0, 0.0)}, {1.5, Complex(-0.25, 0.125)}, {3.0, Complex(0, 1)}};
  std::string csv = boundary_csv(samples);
  CHECK(csv.rfind("angle,re,im\n", 0) == 0);

  const char* path = "serialization_test.csv";
  write_text_file(path, csv);
  auto loaded = load_boundary_csv(path);
  REQUIRE(loaded.size() == samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    CHECK(loaded[i].first == doctest::Approx(samples[i].first));
    CHECK(std::abs(loaded[i].second - samples[i].second) < 1e-15);
  }

  write_text_file(path, "angle,re,im\n2.0,1,0\n1.0,1,0\n");
  CHECK_THROWS(load_boundary_csv(path));  // angles must increase
  std::remove(path);
  CHECK_THROWS(load_boundary_csv("does_not_exist.csv"));
}
