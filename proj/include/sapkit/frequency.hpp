#pragma once

#include <boost/rational.hpp>

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sapkit/errors.hpp"

namespace sapkit {

using Rational = boost::rational<long long>;

// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& q);

// One declared base real: a label, a decimal string with >= 30 significant
// digits where the value is irrational, and its long-double evaluation.
struct BasisElement {
  std::string label;
  std::string decimal;
  long double value = 0.0L;
};

BasisElement make_basis_element(const std::string& label, const std::string& decimal);

// Ordered list of base reals asserted (not verified) to be rationally
// independent. Values must be positive and strictly increasing.
class FrequencyBasis {
 public:
  explicit FrequencyBasis(std::vector<BasisElement> elements);

  static std::shared_ptr<const FrequencyBasis> unit();          // {1}
  static std::shared_ptr<const FrequencyBasis> unit_sqrt2();    // {1, sqrt2}

  std::size_t size() const { return elements_.size(); }
  const BasisElement& at(std::size_t j) const { return elements_.at(j); }
  const std::vector<BasisElement>& elements() const { return elements_; }

  bool operator==(const FrequencyBasis& other) const;

 private:
  std::vector<BasisElement> elements_;
};

using BasisPtr = std::shared_ptr<const FrequencyBasis>;

// A frequency as an exact rational coordinate vector over a basis. Identity is
// exact equality of coordinates; the real value is for evaluation only.
class Frequency {
 public:
  Frequency(BasisPtr basis, std::vector<Rational> coords);

  static Frequency zero(const BasisPtr& basis);
  // Single nonzero coordinate q on axis j.
  static Frequency axis(const BasisPtr& basis, std::size_t j, const Rational& q);

  const BasisPtr& basis() const { return basis_; }
  const std::vector<Rational>& coords() const { return coords_; }
  bool is_zero() const;
  double value() const;

  Frequency operator+(const Frequency& other) const;
  Frequency operator-(const Frequency& other) const;
  Frequency operator-() const;

  bool operator==(const Frequency& other) const;
  bool operator!=(const Frequency& other) const { return !(*this == other); }
  bool operator<(const Frequency& other) const;  // lexicographic on coords

 private:
  BasisPtr basis_;
  std::vector<Rational> coords_;
};

void require_same_basis(const Frequency& a, const Frequency& b);

enum class Membership { member, non_member, bound_exhausted };

const char* to_string(Membership m);

enum class SemigroupKind { all, half_line_plus, half_line_minus, nonneg_span, group_span };

// Unital additive semigroup of frequencies. Span variants decide membership by
// bounded exhaustive search over integer combinations of the generators, so
// the answer is three-valued.
struct SemigroupSpec {
  SemigroupKind kind = SemigroupKind::all;
  std::vector<Frequency> generators;
  int search_bound = 64;

  static SemigroupSpec all_frequencies();
  static SemigroupSpec half_line(int sign);
  static SemigroupSpec nonneg_span(std::vector<Frequency> gens, int bound = 64);
  static SemigroupSpec group_span(std::vector<Frequency> gens, int bound = 64);

  Membership contains(const Frequency& f) const;
};

std::set<Frequency> spectrum_sum_set(const std::set<Frequency>& a,
                                     const std::set<Frequency>& b);

}  // namespace sapkit
