#include "sapkit/serialization.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sapkit {

namespace {

std::vector<Rational> coords_from_json(const Json& arr, std::size_t rank) {
  if (!arr.is_array() || arr.size() != rank)
    throw std::invalid_argument("coords array must match basis rank");
  std::vector<Rational> coords;
  coords.reserve(rank);
  for (const auto& c : arr) coords.push_back(parse_rational(c.get<std::string>()));
  return coords;
}

Json coords_to_json(const Frequency& f) {
  Json arr = Json::array();
  for (const auto& q : f.coords()) arr.push_back(format_rational(q));
  return arr;
}

}  // namespace

Json basis_to_json(const FrequencyBasis& basis) {
  Json arr = Json::array();
  for (const auto& e : basis.elements())
    arr.push_back(Json{{"label", e.label}, {"value", e.decimal}});
  return arr;
}

BasisPtr basis_from_json(const Json& j) {
  std::vector<BasisElement> elems;
  for (const auto& e : j)
    elems.push_back(make_basis_element(e.at("label").get<std::string>(),
                                       e.at("value").get<std::string>()));
  return std::make_shared<FrequencyBasis>(std::move(elems));
}

Json terms_to_json(const ExponentialSum& f) {
  Json arr = Json::array();
  for (const auto& [lambda, c] : f.terms())
    arr.push_back(Json{{"coords", coords_to_json(lambda)}, {"re", c.real()}, {"im", c.imag()}});
  return arr;
}

ExponentialSum terms_from_json(const Json& j, const BasisPtr& basis) {
  std::vector<std::pair<Frequency, Complex>> terms;
  for (const auto& t : j) {
    Frequency lambda(basis, coords_from_json(t.at("coords"), basis->size()));
    terms.emplace_back(lambda,
                       Complex(t.at("re").get<double>(), t.at("im").get<double>()));
  }
  return ExponentialSum(basis, std::move(terms));
}

Json exp_sum_to_json(const ExponentialSum& f) {
  return Json{{"basis", basis_to_json(*f.basis())}, {"terms", terms_to_json(f)}};
}

ExponentialSum exp_sum_from_json(const Json& j) {
  BasisPtr basis = basis_from_json(j.at("basis"));
  return terms_from_json(j.at("terms"), basis);
}

namespace {
const char* kind_name(SemigroupKind k) {
  switch (k) {
    case SemigroupKind::all: return "all";
    case SemigroupKind::half_line_plus: return "half_line_plus";
    case SemigroupKind::half_line_minus: return "half_line_minus";
    case SemigroupKind::nonneg_span: return "nonneg_span";
    case SemigroupKind::group_span: return "group_span";
  }
  return "?";
}

SemigroupKind kind_from_name(const std::string& name) {
  if (name == "all") return SemigroupKind::all;
  if (name == "half_line_plus") return SemigroupKind::half_line_plus;
  if (name == "half_line_minus") return SemigroupKind::half_line_minus;
  if (name == "nonneg_span") return SemigroupKind::nonneg_span;
  if (name == "group_span") return SemigroupKind::group_span;
  throw std::invalid_argument("unknown semigroup variant: " + name);
}
}  // namespace

Json semigroup_to_json(const SemigroupSpec& sg) {
  Json j{{"variant", kind_name(sg.kind)}};
  if (!sg.generators.empty()) {
    Json gens = Json::array();
    for (const auto& g : sg.generators) gens.push_back(coords_to_json(g));
    j["generators"] = gens;
  }
  j["search_bound"] = sg.search_bound;
  return j;
}

SemigroupSpec semigroup_from_json(const Json& j, const BasisPtr& basis) {
  SemigroupSpec sg;
  sg.kind = kind_from_name(j.at("variant").get<std::string>());
  if (j.contains("generators"))
    for (const auto& g : j["generators"])
      sg.generators.emplace_back(basis, coords_from_json(g, basis->size()));
  if (j.contains("search_bound")) sg.search_bound = j["search_bound"].get<int>();
  if (sg.kind == SemigroupKind::nonneg_span)
    for (const auto& g : sg.generators)
      if (g.value() <= 0.0)
        throw std::invalid_argument("nonneg_span generators must be positive");
  return sg;
}

Json model_to_json(const SAPModel& m) {
  Json j;
  j["basis"] = basis_to_json(*m.basis());

  Json cont;
  if (!m.continuous().fourier.empty()) {
    Json arr = Json::array();
    for (const auto& [n, c] : m.continuous().fourier)
      arr.push_back(Json{{"n", n}, {"re", c.real()}, {"im", c.imag()}});
    cont["fourier"] = arr;
  }
  if (!m.continuous().samples.empty()) {
    Json arr = Json::array();
    for (const auto& [angle, c] : m.continuous().samples)
      arr.push_back(Json{{"angle", angle}, {"re", c.real()}, {"im", c.imag()}});
    cont["samples"] = arr;
  }
  j["continuous"] = cont;

  Json sings = Json::array();
  for (const auto& sing : m.singularities()) {
    Json s{{"angle", sing.profile.s.angle}};
    if (sing.profile.holomorphic) {
      s["profile"] = Json{{"terms", terms_to_json(sing.profile.strip_sum)}};
    } else {
      s["profile_pair"] = Json{{"real_axis", terms_to_json(*sing.profile.line_real)},
                               {"shifted_axis", terms_to_json(*sing.profile.line_shifted)}};
    }
    if (sing.sigma.minus) s["sigma_minus"] = semigroup_to_json(*sing.sigma.minus);
    if (sing.sigma.plus) s["sigma_plus"] = semigroup_to_json(*sing.sigma.plus);
    sings.push_back(s);
  }
  j["singularities"] = sings;
  return j;
}

SAPModel model_from_json(const Json& j) {
  BasisPtr basis = basis_from_json(j.at("basis"));

  ContinuousPart cont;
  if (j.contains("continuous")) {
    const Json& c = j["continuous"];
    if (c.contains("fourier"))
      for (const auto& t : c["fourier"])
        cont.fourier[t.at("n").get<int>()] =
            Complex(t.at("re").get<double>(), t.at("im").get<double>());
    if (c.contains("samples")) {
      for (const auto& t : c["samples"])
        cont.samples.emplace_back(t.at("angle").get<double>(),
                                  Complex(t.at("re").get<double>(), t.at("im").get<double>()));
      for (std::size_t i = 1; i < cont.samples.size(); ++i)
        if (cont.samples[i - 1].first >= cont.samples[i].first)
          throw std::invalid_argument("sample angles must be strictly increasing");
    }
  }

  std::vector<ModelSingularity> sings;
  if (j.contains("singularities")) {
    for (const auto& s : j["singularities"]) {
      BoundaryPoint p = BoundaryPoint::from_angle(s.at("angle").get<double>());
      auto make_profile = [&]() -> SingularProfile {
        if (s.contains("profile"))
          return SingularProfile::holomorphic_profile(
              p, terms_from_json(s["profile"].at("terms"), basis));
        if (s.contains("profile_pair"))
          return SingularProfile::pair_profile(
              p, terms_from_json(s["profile_pair"].at("real_axis"), basis),
              terms_from_json(s["profile_pair"].at("shifted_axis"), basis));
        throw std::invalid_argument("singularity needs profile or profile_pair");
      };
      ModelSingularity ms{make_profile(), {}};
      if (s.contains("sigma_minus"))
        ms.sigma.minus = semigroup_from_json(s["sigma_minus"], basis);
      if (s.contains("sigma_plus"))
        ms.sigma.plus = semigroup_from_json(s["sigma_plus"], basis);
      sings.push_back(std::move(ms));
    }
  }
  return SAPModel(basis, std::move(cont), std::move(sings));
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << content;
}

std::vector<std::pair<double, Complex>> load_boundary_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::vector<std::pair<double, Complex>> samples;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (first && line.rfind("angle", 0) == 0) { first = false; continue; }
    first = false;
    std::istringstream row(line);
    std::string field;
    double vals[3] = {0, 0, 0};
    for (int i = 0; i < 3; ++i) {
      if (!std::getline(row, field, ',')) throw std::invalid_argument("bad CSV row: " + line);
      vals[i] = std::stod(field);
    }
    samples.emplace_back(vals[0], Complex(vals[1], vals[2]));
  }
  for (std::size_t i = 1; i < samples.size(); ++i)
    if (samples[i - 1].first >= samples[i].first)
      throw std::invalid_argument("CSV angles must be strictly increasing");
  return samples;
}

std::string boundary_csv(const std::vector<std::pair<double, Complex>>& samples) {
  std::ostringstream out;
  out << "angle,re,im\n";
  out.precision(17);
  for (const auto& [angle, c] : samples)
    out << angle << "," << c.real() << "," << c.imag() << "\n";
  return out.str();
}

}  // namespace sapkit
