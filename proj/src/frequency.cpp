#include "sapkit/frequency.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace sapkit {

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(std::stoll(text));
    }
    long long num = std::stoll(text.substr(0, slash));
    long long den = std::stoll(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational: " + text);
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("rational out of range: " + text);
  }
}

std::string format_rational(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

BasisElement make_basis_element(const std::string& label, const std::string& decimal) {
  BasisElement e;
  e.label = label;
  e.decimal = decimal;
  char* end = nullptr;
  e.value = std::strtold(decimal.c_str(), &end);
  if (end == decimal.c_str() || e.value <= 0.0L || !std::isfinite(double(e.value)))
    throw std::invalid_argument("bad basis decimal: " + decimal);
  return e;
}

FrequencyBasis::FrequencyBasis(std::vector<BasisElement> elements)
    : elements_(std::move(elements)) {
  if (elements_.empty()) throw std::invalid_argument("empty frequency basis");
  for (std::size_t j = 0; j < elements_.size(); ++j) {
    if (elements_[j].value <= 0.0L)
      throw std::invalid_argument("basis values must be positive");
    if (j > 0 && elements_[j - 1].value >= elements_[j].value)
      throw std::invalid_argument("basis values must be strictly increasing");
  }
}

BasisPtr FrequencyBasis::unit() {
  static const BasisPtr b = std::make_shared<FrequencyBasis>(
      std::vector<BasisElement>{make_basis_element("1", "1")});
  return b;
}

BasisPtr FrequencyBasis::unit_sqrt2() {
  static const BasisPtr b = std::make_shared<FrequencyBasis>(std::vector<BasisElement>{
      make_basis_element("1", "1"),
      make_basis_element("sqrt2", "1.41421356237309504880168872420969808")});
  return b;
}

bool FrequencyBasis::operator==(const FrequencyBasis& other) const {
  if (elements_.size() != other.elements_.size()) return false;
  for (std::size_t j = 0; j < elements_.size(); ++j)
    if (elements_[j].decimal != other.elements_[j].decimal ||
        elements_[j].label != other.elements_[j].label)
      return false;
  return true;
}

Frequency::Frequency(BasisPtr basis, std::vector<Rational> coords)
    : basis_(std::move(basis)), coords_(std::move(coords)) {
  if (!basis_) throw std::invalid_argument("null basis");
  if (coords_.size() != basis_->size())
    throw std::invalid_argument("coordinate count does not match basis rank");
}

Frequency Frequency::zero(const BasisPtr& basis) {
  return Frequency(basis, std::vector<Rational>(basis->size(), Rational(0)));
}

Frequency Frequency::axis(const BasisPtr& basis, std::size_t j, const Rational& q) {
  std::vector<Rational> c(basis->size(), Rational(0));
  c.at(j) = q;
  return Frequency(basis, std::move(c));
}

bool Frequency::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Rational& q) { return q.numerator() == 0; });
}

double Frequency::value() const {
  long double v = 0.0L;
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    v += (static_cast<long double>(coords_[j].numerator()) /
          static_cast<long double>(coords_[j].denominator())) *
         basis_->at(j).value;
  }
  return static_cast<double>(v);
}

void require_same_basis(const Frequency& a, const Frequency& b) {
  if (a.basis() == b.basis()) return;
  if (*a.basis() == *b.basis()) return;
  throw basis_mismatch("frequencies over different bases");
}

Frequency Frequency::operator+(const Frequency& other) const {
  require_same_basis(*this, other);
  std::vector<Rational> c(coords_.size());
  for (std::size_t j = 0; j < coords_.size(); ++j) c[j] = coords_[j] + other.coords_[j];
  return Frequency(basis_, std::move(c));
}

Frequency Frequency::operator-(const Frequency& other) const {
  return *this + (-other);
}

Frequency Frequency::operator-() const {
  std::vector<Rational> c(coords_.size());
  for (std::size_t j = 0; j < coords_.size(); ++j) c[j] = -coords_[j];
  return Frequency(basis_, std::move(c));
}

bool Frequency::operator==(const Frequency& other) const {
  require_same_basis(*this, other);
  return coords_ == other.coords_;
}

bool Frequency::operator<(const Frequency& other) const {
  require_same_basis(*this, other);
  return coords_ < other.coords_;
}

const char* to_string(Membership m) {
  switch (m) {
    case Membership::member: return "member";
    case Membership::non_member: return "non-member";
    case Membership::bound_exhausted: return "bound-exhausted";
  }
  return "?";
}

SemigroupSpec SemigroupSpec::all_frequencies() {
  return SemigroupSpec{SemigroupKind::all, {}, 64};
}

SemigroupSpec SemigroupSpec::half_line(int sign) {
  return SemigroupSpec{sign >= 0 ? SemigroupKind::half_line_plus
                                 : SemigroupKind::half_line_minus,
                       {}, 64};
}

SemigroupSpec SemigroupSpec::nonneg_span(std::vector<Frequency> gens, int bound) {
  for (const auto& g : gens)
    if (g.value() <= 0.0)
      throw std::invalid_argument("nonneg_span generators must be positive");
  return SemigroupSpec{SemigroupKind::nonneg_span, std::move(gens), bound};
}

SemigroupSpec SemigroupSpec::group_span(std::vector<Frequency> gens, int bound) {
  return SemigroupSpec{SemigroupKind::group_span, std::move(gens), bound};
}

namespace {

// Is `target` a rational (not necessarily integer) combination of the
// generator coordinate vectors? Gaussian elimination over exact rationals.
// A negative answer certifies non-membership in any integer span.
bool rational_span_solvable(const std::vector<Frequency>& gens, const Frequency& target) {
  const std::size_t r = target.coords().size();
  const std::size_t g = gens.size();
  // rows: coordinates; columns: generators + rhs
  std::vector<std::vector<Rational>> m(r, std::vector<Rational>(g + 1, Rational(0)));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < g; ++j) m[i][j] = gens[j].coords()[i];
    m[i][g] = target.coords()[i];
  }
  std::size_t row = 0;
  for (std::size_t col = 0; col < g && row < r; ++col) {
    std::size_t pivot = row;
    while (pivot < r && m[pivot][col].numerator() == 0) ++pivot;
    if (pivot == r) continue;
    std::swap(m[row], m[pivot]);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == row || m[i][col].numerator() == 0) continue;
      Rational factor = m[i][col] / m[row][col];
      for (std::size_t k = col; k <= g; ++k) m[i][k] -= factor * m[row][k];
    }
    ++row;
  }
  for (std::size_t i = 0; i < r; ++i) {
    bool all_zero = true;
    for (std::size_t j = 0; j < g; ++j)
      if (m[i][j].numerator() != 0) { all_zero = false; break; }
    if (all_zero && m[i][g].numerator() != 0) return false;
  }
  return true;
}

// Does an integer n with lo <= n <= hi satisfy target == n * gen exactly?
bool solve_single(const Frequency& gen, const Frequency& target, long long lo,
                  long long hi, long long* out) {
  std::optional<long long> n;
  bool gen_zero = true;
  for (std::size_t j = 0; j < target.coords().size(); ++j) {
    const Rational& gq = gen.coords()[j];
    const Rational& tq = target.coords()[j];
    if (gq.numerator() == 0) {
      if (tq.numerator() != 0) return false;
      continue;
    }
    gen_zero = false;
    Rational ratio = tq / gq;
    if (ratio.denominator() != 1) return false;
    if (n && *n != ratio.numerator()) return false;
    n = ratio.numerator();
  }
  if (gen_zero) {
    // zero generator contributes nothing; target must be zero here
    if (!target.is_zero()) return false;
    *out = 0;
    return true;
  }
  if (*n < lo || *n > hi) return false;
  *out = *n;
  return true;
}

bool search_combination(const std::vector<Frequency>& gens, std::size_t idx,
                        const Frequency& remaining, long long lo, long long hi) {
  if (idx + 1 == gens.size()) {
    long long n = 0;
    return solve_single(gens[idx], remaining, lo, hi, &n);
  }
  for (long long n = lo; n <= hi; ++n) {
    Frequency next = remaining;
    if (n != 0) {
      Frequency scaled = gens[idx];
      std::vector<Rational> c(scaled.coords().size());
      for (std::size_t j = 0; j < c.size(); ++j)
        c[j] = remaining.coords()[j] - Rational(n) * gens[idx].coords()[j];
      next = Frequency(remaining.basis(), std::move(c));
    }
    if (search_combination(gens, idx + 1, next, lo, hi)) return true;
  }
  return false;
}

}  // namespace

Membership SemigroupSpec::contains(const Frequency& f) const {
  if (f.is_zero()) return Membership::member;  // unital
  switch (kind) {
    case SemigroupKind::all:
      return Membership::member;
    case SemigroupKind::half_line_plus:
    case SemigroupKind::half_line_minus: {
      int sign = 0;  // exact when coords are single-signed (basis values positive)
      bool has_pos = false, has_neg = false;
      for (const auto& q : f.coords()) {
        if (q.numerator() > 0) has_pos = true;
        if (q.numerator() < 0) has_neg = true;
      }
      if (has_pos && !has_neg) sign = 1;
      else if (has_neg && !has_pos) sign = -1;
      else sign = f.value() >= 0.0 ? 1 : -1;  // decimal fallback
      bool ok = (kind == SemigroupKind::half_line_plus) ? sign >= 0 : sign <= 0;
      return ok ? Membership::member : Membership::non_member;
    }
    case SemigroupKind::nonneg_span:
    case SemigroupKind::group_span:
      break;
  }
  if (generators.empty()) return Membership::non_member;
  for (const auto& g : generators) require_same_basis(g, f);

  if (!rational_span_solvable(generators, f)) return Membership::non_member;

  const bool nonneg = kind == SemigroupKind::nonneg_span;
  const long long lo = nonneg ? 0 : -static_cast<long long>(search_bound);
  const long long hi = search_bound;
  if (search_combination(generators, 0, f, lo, hi)) return Membership::member;

  if (nonneg) {
    // All generators have positive real value. If every coefficient that
    // could possibly contribute fits under the bound, the search was
    // exhaustive and failure is a proof.
    double fv = f.value();
    if (fv < -1e-12) return Membership::non_member;
    double min_gen = generators.front().value();
    for (const auto& g : generators) min_gen = std::min(min_gen, g.value());
    if (min_gen > 0.0 && fv / min_gen <= static_cast<double>(search_bound) - 0.5)
      return Membership::non_member;
  }
  return Membership::bound_exhausted;
}

std::set<Frequency> spectrum_sum_set(const std::set<Frequency>& a,
                                     const std::set<Frequency>& b) {
  std::set<Frequency> out;
  for (const auto& x : a)
    for (const auto& y : b) out.insert(x + y);
  return out;
}

}  // namespace sapkit
