#include <doctest.h>

#include <cmath>
#include <random>

#include "sapkit/frequency.hpp"

using namespace sapkit;

namespace {
Frequency unit_freq(const BasisPtr& b, long long p, long long q = 1) {
  return Frequency::axis(b, 0, Rational(p, q));
}
}  // namespace

TEST_CASE("rational parsing round-trips") {
  CHECK(parse_rational("3/2") == Rational(3, 2));
  CHECK(parse_rational("-3/7") == Rational(-3, 7));
  CHECK(parse_rational("5") == Rational(5));
  CHECK(format_rational(Rational(3, 2)) == "3/2");
  CHECK(format_rational(Rational(4)) == "4");
  CHECK(format_rational(Rational(-1, 3)) == "-1/3");
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("frequency values") {
  auto b1 = FrequencyBasis::unit();
  auto b2 = FrequencyBasis::unit_sqrt2();

  CHECK(Frequency::zero(b2).value() == 0.0);
  CHECK(unit_freq(b1, 3, 2).value() == doctest::Approx(1.5).epsilon(1e-15));

  Frequency both(b2, {Rational(1), Rational(1)});
  CHECK(both.value() ==
        doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-15));  // 2.41421356...
}

TEST_CASE("frequency arithmetic is exact and coordinate-wise") {
  auto b1 = FrequencyBasis::unit();
  auto b2 = FrequencyBasis::unit_sqrt2();

  CHECK(unit_freq(b1, 1, 2) + unit_freq(b1, 1, 2) == unit_freq(b1, 1));
  Frequency e1(b2, {Rational(1), Rational(0)});
  Frequency e2(b2, {Rational(0), Rational(1)});
  CHECK(e1 + e2 == Frequency(b2, {Rational(1), Rational(1)}));
  CHECK(-unit_freq(b1, 3, 7) == unit_freq(b1, -3, 7));
  CHECK_THROWS_AS((void)(unit_freq(b1, 1) + e1), basis_mismatch);
}

TEST_CASE("identity lives in the lattice, not in the floats") {
  auto b2 = FrequencyBasis::unit_sqrt2();
  // 886731088897/627013566048 is a continued-fraction convergent of sqrt(2):
  // the real values differ by ~1e-24, the coordinates differ exactly.
  Frequency close(b2, {Rational(886731088897LL, 627013566048LL), Rational(0)});
  Frequency root(b2, {Rational(0), Rational(1)});
  CHECK(std::abs(close.value() - root.value()) < 1e-12);
  CHECK(close != root);
}

TEST_CASE("semigroup membership") {
  auto b1 = FrequencyBasis::unit();

  SUBCASE("zero belongs to every semigroup") {
    for (auto sg : {SemigroupSpec::all_frequencies(), SemigroupSpec::half_line(+1),
                    SemigroupSpec::half_line(-1),
                    SemigroupSpec::nonneg_span({unit_freq(b1, 1)}),
                    SemigroupSpec::group_span({unit_freq(b1, 2)})})
      CHECK(sg.contains(Frequency::zero(b1)) == Membership::member);
  }

  SUBCASE("half lines") {
    auto plus = SemigroupSpec::half_line(+1);
    auto minus = SemigroupSpec::half_line(-1);
    CHECK(plus.contains(unit_freq(b1, 5, 3)) == Membership::member);
    CHECK(plus.contains(unit_freq(b1, -1)) == Membership::non_member);
    CHECK(minus.contains(unit_freq(b1, -1)) == Membership::member);
  }

  SUBCASE("nonnegative span") {
    auto sg = SemigroupSpec::nonneg_span({unit_freq(b1, 1)});
    CHECK(sg.contains(unit_freq(b1, 3)) == Membership::member);
    CHECK(sg.contains(unit_freq(b1, -1)) == Membership::non_member);

    auto coarse = SemigroupSpec::nonneg_span({unit_freq(b1, 3), unit_freq(b1, 5)});
    CHECK(coarse.contains(unit_freq(b1, 1)) == Membership::non_member);  // exhaustive
    CHECK(coarse.contains(unit_freq(b1, 8)) == Membership::member);

    // 100 = 100 * 1 needs a coefficient beyond the bound
    auto tight = SemigroupSpec::nonneg_span({unit_freq(b1, 1)}, 64);
    CHECK(tight.contains(unit_freq(b1, 100)) == Membership::bound_exhausted);
  }

  SUBCASE("group span") {
    auto sg = SemigroupSpec::group_span({unit_freq(b1, 2), unit_freq(b1, 3)});
    CHECK(sg.contains(unit_freq(b1, 1)) == Membership::member);  // 3 - 2
    auto even = SemigroupSpec::group_span({unit_freq(b1, 2)});
    CHECK(even.contains(unit_freq(b1, 4)) == Membership::member);
    // parity obstruction is not provable by the bounded search
    CHECK(even.contains(unit_freq(b1, 1)) != Membership::member);

    auto b2 = FrequencyBasis::unit_sqrt2();
    Frequency e2(b2, {Rational(0), Rational(1)});
    auto mixed = SemigroupSpec::group_span({e2});
    // sqrt2-axis generators cannot reach the rational axis: exact certificate
    CHECK(mixed.contains(Frequency(b2, {Rational(1), Rational(0)})) ==
          Membership::non_member);
  }

  SUBCASE("group membership is symmetric when the witness fits") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<long long> coeff(-5, 5);
    auto sg = SemigroupSpec::group_span({unit_freq(b1, 2), unit_freq(b1, 5)});
    for (int trial = 0; trial < 50; ++trial) {
      Frequency f = unit_freq(b1, 2 * coeff(rng) + 5 * coeff(rng));
      if (sg.contains(f) == Membership::member)
        CHECK(sg.contains(-f) == Membership::member);
    }
  }
}

TEST_CASE("spectrum sum sets") {
  auto b2 = FrequencyBasis::unit_sqrt2();
  Frequency z = Frequency::zero(b2);
  Frequency one(b2, {Rational(1), Rational(0)});
  Frequency two(b2, {Rational(2), Rational(0)});
  Frequency root(b2, {Rational(0), Rational(1)});

  CHECK(spectrum_sum_set({z}, {z}) == std::set<Frequency>{z});
  CHECK(spectrum_sum_set({one, two}, {z}) == std::set<Frequency>{one, two});
  CHECK(spectrum_sum_set({one, root}, {one}) ==
        std::set<Frequency>{two, Frequency(b2, {Rational(1), Rational(1)})});
}

TEST_CASE("basis invariants") {
  CHECK_THROWS_AS(FrequencyBasis({make_basis_element("a", "2"),
                                  make_basis_element("b", "1")}),
                  std::invalid_argument);  // not increasing
  CHECK_THROWS_AS(FrequencyBasis({make_basis_element("a", "-1")}),
                  std::invalid_argument);  // not positive
}
