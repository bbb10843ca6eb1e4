#include <doctest.h>

#include "hilbstrata/hilbert.hpp"
#include "hilbstrata/rng.hpp"
#include "hilbstrata/series.hpp"

using namespace hilbstrata;

namespace {

LaurentPoly poly(long lowest, std::vector<long> coeffs) {
  std::vector<Int> cs(coeffs.begin(), coeffs.end());
  return LaurentPoly::from_coeffs(lowest, std::move(cs));
}

LaurentPoly random_poly(SplitMix64& rng) {
  long lowest = static_cast<long>(rng.below(9)) - 4;
  size_t len = rng.below(7);
  std::vector<Int> cs;
  for (size_t i = 0; i < len; ++i)
    cs.push_back(Int(static_cast<long>(rng.below(19)) - 9));
  return LaurentPoly::from_coeffs(lowest, std::move(cs));
}

}  // namespace

TEST_CASE("laurent polynomials keep a canonical trimmed form") {
  CHECK(poly(2, {0, 0, 0}) == LaurentPoly{});
  CHECK(poly(-1, {0, 1, 2, 0}) == poly(0, {1, 2}));
  CHECK(LaurentPoly{}.is_zero());
  CHECK(LaurentPoly::constant(0).is_zero());
  CHECK(poly(0, {1, 2}).lowest_degree() == 0);
  CHECK(poly(0, {1, 2}).degree() == 1);
  CHECK_THROWS_AS(LaurentPoly{}.degree(), std::domain_error);
  CHECK(poly(-3, {5}).lowest_degree() == -3);
  CHECK(poly(0, {1, 0, 7}).coeff(1) == 0);
  CHECK(poly(0, {1, 0, 7}).coeff(2) == 7);
  CHECK(poly(0, {1, 0, 7}).coeff(99) == 0);
  CHECK(poly(0, {1, 0, 7}).coeff(-1) == 0);
}

TEST_CASE("ring operations match hand convolutions") {
  CHECK(poly(0, {1, 1}) + poly(1, {-1, 2}) == poly(0, {1, 0, 2}));
  CHECK(poly(0, {1, 1}) - poly(0, {1, 1}) == LaurentPoly{});
  CHECK(poly(0, {1, -2, 1}) == pow_one_minus_t(2));
  // (1-t)^2 (1 + 2t + t^2) has the internal zeros 1 + 0t - 2t^2 + 0t^3 + t^4.
  LaurentPoly product = pow_one_minus_t(2) * poly(0, {1, 2, 1});
  CHECK(product == poly(0, {1, 0, -2, 0, 1}));
  CHECK(product.coeff(1) == 0);
  CHECK(product.coeff(3) == 0);
  CHECK(product.to_string() == "1 - 2t^2 + t^4");
  // Same value through the numerator construction: 1 - (1-t)^2 s for
  // s = 1 + 2t + t^2 is the weight-4 numerator 2t^2 - t^4.
  CastelnuovoPoly s = CastelnuovoPoly::validate({1, 2, 1});
  CHECK(LaurentPoly::constant(1) - product == series_from_castelnuovo(s).numerator);
  CHECK((LaurentPoly::constant(1) - product).to_string() == "2t^2 - t^4");
}

TEST_CASE("ring axioms hold on random triples") {
  SplitMix64 rng(0x5eed5eedULL);
  for (int iter = 0; iter < 200; ++iter) {
    LaurentPoly p = random_poly(rng), q = random_poly(rng),
                r = random_poly(rng);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p + LaurentPoly{} == p);
    CHECK(p * LaurentPoly::constant(1) == p);
    CHECK(p - p == LaurentPoly{});
  }
}

TEST_CASE("invert_t reverses the coefficient window") {
  LaurentPoly p = poly(-1, {2, 3, 0, 1});  // 2/t + 3 + t^2
  CHECK(p.invert_t() == poly(-2, {1, 0, 3, 2}));
  CHECK(LaurentPoly{}.invert_t().is_zero());
  SplitMix64 rng(0xabcdef12ULL);
  for (int iter = 0; iter < 200; ++iter) {
    LaurentPoly p1 = random_poly(rng), p2 = random_poly(rng);
    CHECK(p1.invert_t().invert_t() == p1);
    CHECK((p1 * p2).invert_t() == p1.invert_t() * p2.invert_t());
    CHECK((p1 + p2).invert_t() == p1.invert_t() + p2.invert_t());
    CHECK(p1.invert_t().at_one() == p1.at_one());
  }
}

TEST_CASE("series expansion of 1/(1-t)^3 gives triangle numbers") {
  TruncatedSeries e = divide_one_minus_t_pow(LaurentPoly::constant(1), 3, 5);
  CHECK(e.coeffs() == std::vector<Int>{1, 3, 6, 10, 15, 21});
  TruncatedSeries geo = divide_one_minus_t_pow(LaurentPoly::constant(1), 1, 4);
  CHECK(geo.coeffs() == std::vector<Int>{1, 1, 1, 1, 1});
}

TEST_CASE("series expansion of a shifted numerator") {
  TruncatedSeries e = divide_one_minus_t_pow(poly(2, {2, 0, -1}), 3, 6);
  CHECK(e.coeffs() == std::vector<Int>{0, 0, 2, 6, 11, 17, 24});
  CHECK(e.truncation_degree() == 6);
  CHECK(e.at(4) == 11);
}

TEST_CASE("window queries outside a truncation are refused") {
  TruncatedSeries e = divide_one_minus_t_pow(LaurentPoly::constant(1), 3, 5);
  CHECK_THROWS_AS(e.at(6), std::out_of_range);
  CHECK_THROWS_AS(e.at(-1), std::out_of_range);
  CHECK(TruncatedSeries{}.truncation_degree() == -1);
  CHECK_THROWS_AS(TruncatedSeries{}.at(0), std::out_of_range);
}

TEST_CASE("expansion rejects bad inputs") {
  CHECK_THROWS_AS(divide_one_minus_t_pow(poly(-1, {1}), 3, 5),
                  std::invalid_argument);
  CHECK_THROWS_AS(divide_one_minus_t_pow(LaurentPoly::constant(1), 0, 5),
                  std::invalid_argument);
  CHECK_THROWS_AS(divide_one_minus_t_pow(LaurentPoly::constant(1), 3, -1),
                  std::invalid_argument);
}

TEST_CASE("dividing and multiplying by (1-t) powers round trip") {
  SplitMix64 rng(0x77aa77aaULL);
  for (int iter = 0; iter < 200; ++iter) {
    LaurentPoly p = random_poly(rng);
    if (!p.is_zero() && p.lowest_degree() < 0) continue;
    int k = 1 + static_cast<int>(rng.below(3));
    long window = (p.is_zero() ? 0 : p.degree()) + 3;
    // (p * (1-t)^k) / (1-t)^k restores the dense coefficients of p.
    TruncatedSeries e =
        divide_one_minus_t_pow(p * pow_one_minus_t(k), k, window);
    for (long d = 0; d <= window; ++d) CHECK(e.at(d) == p.coeff(d));
    // One running-sum round also inverts exactly: the difference of adjacent
    // coefficients of p/(1-t) is p.
    TruncatedSeries f = divide_one_minus_t_pow(p, 1, window);
    for (long d = 1; d <= window; ++d)
      CHECK(f.at(d) - f.at(d - 1) == p.coeff(d));
  }
}

TEST_CASE("exact division by (1-t) detects divisibility") {
  CHECK(divide_one_minus_t(LaurentPoly::constant(1)) == std::nullopt);
  CHECK(divide_one_minus_t(LaurentPoly{}) == LaurentPoly{});
  SplitMix64 rng(0x12341234ULL);
  for (int iter = 0; iter < 200; ++iter) {
    LaurentPoly p = random_poly(rng);
    auto q = divide_one_minus_t(p * LaurentPoly::one_minus_t());
    REQUIRE(q.has_value());
    CHECK(*q == p);
    if (p.at_one() != 0) CHECK(divide_one_minus_t(p) == std::nullopt);
  }
}

TEST_CASE("constant term of the duality product") {
  // (1/t - 1/t^2) s(1/t) s(t) for s = 1 + 2t + 2t^2.
  LaurentPoly s = poly(0, {1, 2, 2});
  LaurentPoly weight = LaurentPoly::monomial(1, -1) - LaurentPoly::monomial(1, -2);
  CHECK((weight * s.invert_t() * s).constant_term() == 4);
  CHECK(poly(1, {7}).constant_term() == 0);
  CHECK(poly(0, {3, 1}).at_one() == 4);
}

TEST_CASE("polynomial printing") {
  CHECK(LaurentPoly{}.to_string() == "0");
  CHECK(poly(0, {1}).to_string() == "1");
  CHECK(poly(0, {-1, 1}).to_string() == "-1 + t");
  CHECK(poly(2, {2, 0, -1}).to_string() == "2t^2 - t^4");
  CHECK(poly(-2, {1, -1}).to_string() == "t^-2 - t^-1");
  CHECK(poly(1, {1}).to_string() == "t");
  CHECK(poly(0, {0, 1, 1}).to_string() == "t + t^2");
}
