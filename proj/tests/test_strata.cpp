#include <doctest.h>

#include <algorithm>
#include <set>

#include "hilbstrata/strata.hpp"

using namespace hilbstrata;

namespace {

std::vector<long> dims_of(const std::vector<StratumRecord>& records) {
  std::vector<long> out;
  for (const auto& rec : records) out.push_back(to_long(rec.dim));
  return out;
}

int find_node(const StrataPoset& poset, const std::vector<long>& values) {
  for (size_t i = 0; i < poset.nodes.size(); ++i)
    if (poset.nodes[i].s.values() == values) return static_cast<int>(i);
  return -1;
}

}  // namespace

TEST_CASE("dimension examples") {
  ExtDimension d1 = ext_dimension(CastelnuovoPoly::validate({1}));
  CHECK(d1.dim == 2);
  CHECK(d1.c == 0);

  ExtDimension d5 = ext_dimension(CastelnuovoPoly::validate({1, 2, 2}));
  CHECK(d5.dim == 10);
  CHECK(d5.c == 4);

  ExtDimension ones = ext_dimension(CastelnuovoPoly::validate({1, 1, 1, 1, 1, 1}));
  CHECK(ones.dim == 8);
  CHECK(ones.c == 1);

  ExtDimension triangle = ext_dimension(CastelnuovoPoly::validate({1, 2, 3}));
  CHECK(triangle.dim == 12);
  CHECK(triangle.c == 5);

  ExtDimension empty = ext_dimension(CastelnuovoPoly::validate({}));
  CHECK(empty.dim == 0);
  CHECK(empty.c == 0);
}

TEST_CASE("dimension bounds with equality exactly at the extremes") {
  for (long n = 1; n <= 14; ++n) {
    long lower = std::min(n + 2, 2 * n);
    for (const StratumRecord& rec : build_strata(n)) {
      CHECK(rec.dim == 1 + rec.s.weight() + rec.c);
      CHECK(rec.dim >= lower);
      CHECK(rec.dim <= 2 * n);
      CHECK((rec.dim == 2 * n) == rec.is_hmin);
      CHECK((rec.dim == lower) == rec.is_hmax);
    }
  }
}

TEST_CASE("strata of weight six") {
  std::vector<StratumRecord> records = build_strata(6);
  REQUIRE(records.size() == 4);
  CHECK(dims_of(records) == std::vector<long>{12, 11, 9, 8});
  CHECK(records[0].s.values() == std::vector<long>{1, 2, 3});
  CHECK(records[1].s.values() == std::vector<long>{1, 2, 2, 1});
  CHECK(records[2].s.values() == std::vector<long>{1, 2, 1, 1, 1});
  CHECK(records[3].s.values() == std::vector<long>{1, 1, 1, 1, 1, 1});
  CHECK(records[0].is_hmin);
  CHECK_FALSE(records[0].is_hmax);
  CHECK(records[3].is_hmax);
  CHECK_FALSE(records[3].is_hmin);
  for (const StratumRecord& rec : records) {
    CHECK(Int(rec.resolutions.size()) == count_resolutions(rec.s));
    CHECK(rec.minimal == rec.resolutions.front());
    CHECK(rec.h.expansion.truncation_degree() >= 8);
  }
}

TEST_CASE("degenerate weights") {
  std::vector<StratumRecord> zero = build_strata(0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].dim == 0);
  CHECK(zero[0].s.is_zero());
  CHECK(zero[0].is_hmin);
  CHECK(zero[0].is_hmax);
  REQUIRE(zero[0].resolutions.size() == 1);
  CHECK(zero[0].resolutions[0].a == degree_map_from({{0, 1}}));
  CHECK(zero[0].resolutions[0].b.empty());

  std::vector<StratumRecord> two = build_strata(2);
  REQUIRE(two.size() == 1);
  CHECK(two[0].dim == 4);
  CHECK(two[0].is_hmin);
  CHECK(two[0].is_hmax);
}

TEST_CASE("the top stratum") {
  for (long n = 1; n <= 10; ++n) {
    StratumRecord top = max_stratum(n);
    CHECK(top.dim == Int(2) * n);
    CHECK(top.is_hmin);
    CHECK(top.s == h_min_shape(n));
  }
  CHECK_THROWS_AS(max_stratum(0), std::invalid_argument);
}

TEST_CASE("poset of weight three") {
  StrataPoset poset = build_poset(3);
  REQUIRE(poset.nodes.size() == 2);
  CHECK(poset.nodes[0].s.values() == std::vector<long>{1, 2});
  CHECK(poset.nodes[1].s.values() == std::vector<long>{1, 1, 1});
  CHECK(poset.covers == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(poset.incomparable.empty());
}

TEST_CASE("poset of weight six is a chain") {
  StrataPoset poset = build_poset(6);
  REQUIRE(poset.nodes.size() == 4);
  CHECK(poset.covers ==
        std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(poset.incomparable.empty());
}

TEST_CASE("weight nine has incomparable strata") {
  StrataPoset poset = build_poset(9);
  CHECK_FALSE(poset.incomparable.empty());
  int i = find_node(poset, {1, 2, 3, 1, 1, 1});
  int j = find_node(poset, {1, 2, 2, 2, 2});
  REQUIRE(i >= 0);
  REQUIRE(j >= 0);
  std::pair<int, int> key{std::min(i, j), std::max(i, j)};
  CHECK(std::find(poset.incomparable.begin(), poset.incomparable.end(), key) !=
        poset.incomparable.end());
}

TEST_CASE("poset has a unique bottom and top") {
  for (long n = 1; n <= 12; ++n) {
    StrataPoset poset = build_poset(n);
    std::set<int> has_below, has_above;
    for (const auto& [lo, hi] : poset.covers) {
      has_above.insert(lo);
      has_below.insert(hi);
    }
    int bottom_count = 0, top_count = 0;
    for (int i = 0; i < static_cast<int>(poset.nodes.size()); ++i) {
      if (!has_below.count(i)) {
        ++bottom_count;
        CHECK(poset.nodes[static_cast<size_t>(i)].is_hmin);
      }
      if (!has_above.count(i)) {
        ++top_count;
        CHECK(poset.nodes[static_cast<size_t>(i)].is_hmax);
      }
    }
    CHECK(bottom_count == 1);
    CHECK(top_count == 1);
  }
}

TEST_CASE("cover relations are irredundant and sound") {
  for (long n : {6L, 9L, 10L}) {
    StrataPoset poset = build_poset(n);
    for (const auto& [lo, hi] : poset.covers) {
      CHECK(compare(poset.nodes[static_cast<size_t>(lo)].h,
                    poset.nodes[static_cast<size_t>(hi)].h) == SeriesOrder::less);
      // No node strictly between the two ends of a cover.
      for (size_t k = 0; k < poset.nodes.size(); ++k) {
        if (static_cast<int>(k) == lo || static_cast<int>(k) == hi) continue;
        bool between =
            compare(poset.nodes[static_cast<size_t>(lo)].h, poset.nodes[k].h) ==
                SeriesOrder::less &&
            compare(poset.nodes[k].h, poset.nodes[static_cast<size_t>(hi)].h) ==
                SeriesOrder::less;
        CHECK_FALSE(between);
      }
    }
  }
}

TEST_CASE("dot rendering") {
  std::string dot = poset_to_dot(build_poset(3));
  CHECK(dot.find("digraph strata {") != std::string::npos);
  CHECK(dot.find("potential degenerations, weight 3") != std::string::npos);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(dot.find("s = 1 + 2t") != std::string::npos);
  CHECK(dot.find("dim 6") != std::string::npos);
  CHECK(dot.find("s0 -> s1;") != std::string::npos);
}
