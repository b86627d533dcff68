#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "sapkit/sap_model.hpp"

namespace sapkit {

using Json = nlohmann::ordered_json;

// JSON codecs. Rationals travel as strings to preserve exactness; saving is
// canonical, so load-then-save is byte-stable.

Json basis_to_json(const FrequencyBasis& basis);
BasisPtr basis_from_json(const Json& j);

Json exp_sum_to_json(const ExponentialSum& f);                 // with basis
ExponentialSum exp_sum_from_json(const Json& j);
Json terms_to_json(const ExponentialSum& f);                   // terms only
ExponentialSum terms_from_json(const Json& j, const BasisPtr& basis);

Json semigroup_to_json(const SemigroupSpec& sg);
SemigroupSpec semigroup_from_json(const Json& j, const BasisPtr& basis);

Json model_to_json(const SAPModel& m);
SAPModel model_from_json(const Json& j);

std::string canonical_dump(const Json& j);

Json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// Boundary sample CSV: header "angle,re,im", angles strictly increasing.
std::vector<std::pair<double, Complex>> load_boundary_csv(const std::string& path);
std::string boundary_csv(const std::vector<std::pair<double, Complex>>& samples);

}  // namespace sapkit
