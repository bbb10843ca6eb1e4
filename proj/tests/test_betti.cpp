#include <doctest.h>

#include <algorithm>
#include <set>

#include "hilbstrata/betti.hpp"
#include "hilbstrata/rng.hpp"

using namespace hilbstrata;

namespace {

DegreeMap dm(std::vector<std::pair<long, Int>> entries) {
  return degree_map_from(entries);
}

DegreeMap random_map(SplitMix64& gen, bool allow_negative) {
  DegreeMap m;
  size_t len = gen.below(5);
  for (size_t i = 0; i < len; ++i) {
    long deg = static_cast<long>(gen.below(7));
    long mult = static_cast<long>(gen.below(7)) - (allow_negative ? 2 : 0);
    if (mult != 0) m[deg] += mult;
  }
  for (auto it = m.begin(); it != m.end();)
    it = it->second == 0 ? m.erase(it) : std::next(it);
  return m;
}

}  // namespace

TEST_CASE("degree map helpers") {
  DegreeMap m = dm({{2, 2}, {3, 1}, {5, 0}});
  CHECK(m.size() == 2);  // zero multiplicities dropped
  CHECK(degree_map_total(m) == 3);
  CHECK(degree_map_to_poly(m) == LaurentPoly::from_coeffs(2, {2, 1}));
  CHECK(degree_map_to_poly({}).is_zero());
  CHECK(degree_map_total({}) == 0);
  CHECK(expand_sequence(m) == std::vector<long>{2, 2, 3});
  CHECK(expand_sequence({}).empty());
  CHECK_THROWS_AS(expand_sequence(dm({{1, -2}})), std::invalid_argument);
}

TEST_CASE("betti pair basics") {
  BettiPair pair{dm({{2, 2}, {3, 1}}), dm({{3, 1}, {4, 1}})};
  CHECK(pair.numerator() == LaurentPoly::from_coeffs(2, {2, 0, -1}));
  CHECK_FALSE(pair.is_minimal());  // degree 3 on both sides

  BettiPair min{dm({{2, 2}}), dm({{4, 1}})};
  CHECK(min.numerator() == LaurentPoly::from_coeffs(2, {2, 0, -1}));
  CHECK(min.is_minimal());
}

TEST_CASE("ladder of a degree sequence pair") {
  // S(a) = (2, 2, 3), S(b) = (3, 4): cell (alpha, beta) iff S(a)_alpha < S(b)_beta.
  Ladder l = build_ladder(BettiPair{dm({{2, 2}, {3, 1}}), dm({{3, 1}, {4, 1}})});
  CHECK(l.rows == 3);
  CHECK(l.cols == 2);
  CHECK(l.row_degrees == std::vector<long>{2, 2, 3});
  CHECK(l.col_degrees == std::vector<long>{3, 4});
  CHECK(l.contains(1, 1));
  CHECK(l.contains(2, 1));
  CHECK(l.contains(1, 2));
  CHECK(l.contains(2, 2));
  CHECK(l.contains(3, 2));
  CHECK_FALSE(l.contains(3, 1));  // 3 < 3 fails
  CHECK_FALSE(l.contains(0, 1));
  CHECK_FALSE(l.contains(4, 1));
  CHECK_FALSE(l.contains(1, 3));

  CHECK_THROWS_AS(build_ladder(BettiPair{dm({{2, 1}}), dm({{3, 1}})}),
                  std::invalid_argument);  // sum a must exceed sum b
}

TEST_CASE("condition sets on known pairs") {
  ConditionVerdicts disjoint = check_conditions(dm({{2, 2}}), dm({{4, 1}}));
  CHECK(disjoint.agree());
  CHECK(disjoint.all());

  ConditionVerdicts overlapping =
      check_conditions(dm({{2, 2}, {3, 1}}), dm({{3, 1}, {4, 1}}));
  CHECK(overlapping.agree());
  CHECK(overlapping.all());

  // b occupied at sigma itself: all three sets reject.
  ConditionVerdicts bad = check_conditions(dm({{2, 2}}), dm({{2, 1}}));
  CHECK(bad.agree());
  CHECK_FALSE(bad.all());

  ConditionVerdicts empty = check_conditions({}, {});
  CHECK(empty.agree());
  CHECK_FALSE(empty.all());
}

TEST_CASE("condition sets agree on random sequences") {
  SplitMix64 gen{0xc0ffee1234567890ULL};
  long holds = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    DegreeMap a = random_map(gen, trial % 2 == 0);
    DegreeMap b = random_map(gen, trial % 2 == 0);
    ConditionVerdicts v = check_conditions(a, b);
    CHECK(v.agree());
    if (v.all()) ++holds;
  }
  CHECK(holds > 100);  // the sample must actually hit positive cases
}

TEST_CASE("enumeration for one relation degree") {
  // s = t: q = 1 - (1-t)^2 t = ... with numerator 2t - t^2 at sigma 1.
  LaurentPoly q = series_from_castelnuovo(CastelnuovoPoly::validate({1})).numerator;
  CHECK(q == LaurentPoly::from_coeffs(1, {2, -1}));
  auto pairs = enumerate_betti(q);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].a == dm({{1, 2}}));
  CHECK(pairs[0].b == dm({{2, 1}}));
  CHECK(pairs[0].is_minimal());
}

TEST_CASE("enumeration matches hand-built lists") {
  // s = (1, 2, 2, 1): q = t^2 + t^3 - t^5, one free choice a_4 in {0, 1}.
  LaurentPoly q =
      series_from_castelnuovo(CastelnuovoPoly::validate({1, 2, 2, 1})).numerator;
  CHECK(q == LaurentPoly::from_coeffs(2, {1, 1, 0, -1}));
  auto pairs = enumerate_betti(q);
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].a == dm({{2, 1}, {3, 1}}));
  CHECK(pairs[0].b == dm({{5, 1}}));
  CHECK(pairs[0].is_minimal());
  CHECK(pairs[1].a == dm({{2, 1}, {3, 1}, {4, 1}}));
  CHECK(pairs[1].b == dm({{4, 1}, {5, 1}}));
  CHECK_FALSE(pairs[1].is_minimal());
}

TEST_CASE("enumerated pairs are exactly the sequences passing the conditions") {
  for (long n = 0; n <= 8; ++n)
    for (const auto& s : CastelnuovoPoly::enumerate(n)) {
      LaurentPoly q = series_from_castelnuovo(s).numerator;
      auto pairs = enumerate_betti(q);
      CHECK(Int(pairs.size()) == count_resolutions(s));
      CHECK(pairs.front() == minimal_betti(q));
      std::set<std::pair<std::vector<long>, std::vector<long>>> seen;
      for (const auto& pair : pairs) {
        CHECK(pair.numerator() == q);
        CHECK(check_conditions(pair).all());
        seen.insert({expand_sequence(pair.a), expand_sequence(pair.b)});
      }
      CHECK(seen.size() == pairs.size());  // no duplicates
      // Only the first pair is minimal.
      for (size_t i = 1; i < pairs.size(); ++i) CHECK_FALSE(pairs[i].is_minimal());
    }
}

TEST_CASE("count matches the staircase drop formula") {
  CHECK(count_resolutions(CastelnuovoPoly::validate({})) == 1);
  CHECK(count_resolutions(CastelnuovoPoly::validate({1})) == 1);
  CHECK(count_resolutions(CastelnuovoPoly::validate({1, 2, 2, 1})) == 2);
  CHECK(count_resolutions(CastelnuovoPoly::validate({1, 2, 1})) == 2);
  CHECK(count_resolutions(CastelnuovoPoly::validate({1, 1, 1})) == 1);
}

TEST_CASE("enumeration guards") {
  CHECK_THROWS_AS(enumerate_betti(LaurentPoly::from_coeffs(1, {2, -3, 2})),
                  NotAdmissibleError);
  CHECK_THROWS_AS(enumerate_betti(LaurentPoly()), NotAdmissibleError);
  // Rank two: admissible but infinitely many pairs without a cutoff.
  CHECK_THROWS_AS(enumerate_betti(LaurentPoly::constant(2)),
                  InfiniteFamilyError);
  CHECK_THROWS_AS(enumerate_betti(LaurentPoly::from_coeffs(1, {2, -3, 2}), 5),
                  NotAdmissibleError);
}

TEST_CASE("higher rank with a cutoff") {
  LaurentPoly q = LaurentPoly::constant(2);
  auto pairs = enumerate_betti(q, 1);
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].a == dm({{0, 2}}));
  CHECK(pairs[0].b.empty());
  CHECK(pairs[1].a == dm({{0, 2}, {1, 1}}));
  CHECK(pairs[1].b == dm({{1, 1}}));
  for (const auto& pair : pairs) {
    CHECK(pair.numerator() == q);
    CHECK(check_conditions(pair).all());
  }
  // The cutoff only adds room; the rank-one list is unchanged by a larger one.
  LaurentPoly q1 =
      series_from_castelnuovo(CastelnuovoPoly::validate({1, 2, 1})).numerator;
  CHECK(enumerate_betti(q1, 12) == enumerate_betti(q1));
}

TEST_CASE("partial sums of the numerator track staircase drops") {
  // sum_{i<=l} q_i = 1 + s_{l-1} - s_l for l > sigma; this is what makes the
  // choice intervals finite.
  for (long n = 1; n <= 10; ++n)
    for (const auto& s : CastelnuovoPoly::enumerate(n)) {
      LaurentPoly q = series_from_castelnuovo(s).numerator;
      auto sval = [&](long i) {
        return i >= 0 && i <= s.degree() ? s.values()[static_cast<size_t>(i)]
                                         : 0;
      };
      Int run = 0;
      for (long l = q.lowest_degree(); l <= s.degree() + 2; ++l) {
        run += q.coeff(l);
        if (l > s.sigma()) CHECK(run == Int(1 + sval(l - 1) - sval(l)));
      }
    }
}

TEST_CASE("minimal pair splits the numerator by sign") {
  LaurentPoly q = LaurentPoly::from_coeffs(1, {1, 0, 1, -1});  // t + t^3 - t^4
  BettiPair m = minimal_betti(q);
  CHECK(m.a == dm({{1, 1}, {3, 1}}));
  CHECK(m.b == dm({{4, 1}}));
  CHECK(m.is_minimal());
  CHECK(m.numerator() == q);
  CHECK_THROWS_AS(minimal_betti(LaurentPoly()), NotAdmissibleError);
}

TEST_CASE("resolution rendering") {
  BettiPair two_quadrics{dm({{2, 2}}), dm({{4, 1}})};
  CHECK(render_resolution(two_quadrics) ==
        "0 → A(-4) → A(-2)^2 → I → 0");
  CHECK(render_resolution(two_quadrics, true) == "0 -> A(-4) -> A(-2)^2 -> I -> 0");

  BettiPair free_rank_one{dm({{0, 1}}), {}};
  CHECK(render_resolution(free_rank_one, true) == "0 -> A -> I -> 0");

  BettiPair mixed{dm({{2, 1}, {3, 1}, {4, 1}}), dm({{4, 1}, {5, 1}})};
  CHECK(render_resolution(mixed, true) ==
        "0 -> A(-4) (+) A(-5) -> A(-2) (+) A(-3) (+) A(-4) -> I -> 0");
}
