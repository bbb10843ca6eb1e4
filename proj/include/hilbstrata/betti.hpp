/*
   Copyright 2026 The hilbstrata Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef HILBSTRATA_BETTI_HPP
#define HILBSTRATA_BETTI_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hilbstrata/hilbert.hpp"

namespace hilbstrata {

// Finitely supported integer sequence indexed by degree. Canonical form
// drops zero values; helpers below maintain that.
using DegreeMap = std::map<long, Int>;

DegreeMap degree_map_from(const std::vector<std::pair<long, Int>>& entries);
LaurentPoly degree_map_to_poly(const DegreeMap& m);
Int degree_map_total(const DegreeMap& m);

// Graded Betti numbers of a length-one free resolution
// 0 -> sum A(-i)^{b_i} -> sum A(-i)^{a_i} -> M -> 0.
struct BettiPair {
  DegreeMap a;  // generator degrees, non-negative multiplicities
  DegreeMap b;  // relation degrees, non-negative multiplicities

  LaurentPoly numerator() const;  // sum (a_i - b_i) t^i
  bool is_minimal() const;        // disjoint supports
  bool operator==(const BettiPair&) const = default;
};

// Degrees listed with multiplicity in ascending order: S(c)_1 <= S(c)_2 <= ...
// Requires non-negative multiplicities.
std::vector<long> expand_sequence(const DegreeMap& c);

// The staircase region L = {(alpha, beta) : S(a)_alpha < S(b)_beta} inside
// the rectangle [1, sum a] x [1, sum b]. Closed under moving up (smaller
// alpha) and right (larger beta).
struct Ladder {
  long rows = 0;
  long cols = 0;
  std::vector<long> row_degrees;  // S(a)
  std::vector<long> col_degrees;  // S(b)
  std::vector<std::uint8_t> cells;

  bool contains(long alpha, long beta) const {  // 1-based
    return alpha >= 1 && alpha <= rows && beta >= 1 && beta <= cols &&
           cells[static_cast<size_t>((alpha - 1) * cols + (beta - 1))] != 0;
  }
};

// Requires sum a > sum b >= 0.
Ladder build_ladder(const BettiPair& pair);

// Three equivalent characterizations of the pairs that occur as graded Betti
// numbers, evaluated independently on arbitrary finitely supported integer
// sequences:
//   set1: conditions on q = a - b (vanishing below sigma, a_sigma = q_sigma,
//         max(q_l, 0) <= a_l < sum_{i<=l} q_i above sigma);
//   set2: b vanishes through sigma_a and sum_{i<=l} b_i < sum_{i<l} a_i;
//   set3: sum b < sum a and the band beta >= alpha - 1 lies inside the ladder.
struct ConditionVerdicts {
  bool set1 = false;
  bool set2 = false;
  bool set3 = false;
  bool agree() const { return set1 == set2 && set2 == set3; }
  bool all() const { return set1 && set2 && set3; }
};
ConditionVerdicts check_conditions(const DegreeMap& a, const DegreeMap& b);
ConditionVerdicts check_conditions(const BettiPair& pair);

struct InfiniteFamilyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All Betti pairs with the given admissible numerator, in ascending
// lexicographic order of the free choices above sigma. The rank-one overload
// terminates on its own; ranks above one admit infinitely many pairs and
// require an explicit degree cutoff.
std::vector<BettiPair> enumerate_betti(const LaurentPoly& q);
std::vector<BettiPair> enumerate_betti(const LaurentPoly& q,
                                       long degree_cutoff);

// Closed-form count of the rank-one pairs for a Castelnuovo polynomial:
// product over l > sigma of 1 + min(s_{l-1} - s_l, s_{l-2} - s_{l-1}).
Int count_resolutions(const CastelnuovoPoly& s);

// The unique pair with disjoint supports: a_i = max(q_i, 0), b_i = max(-q_i, 0).
BettiPair minimal_betti(const LaurentPoly& q);

// "0 -> sum A(-i)^{b_i} -> sum A(-i)^{a_i} -> I -> 0" with unicode arrows
// and direct sums, or pure ASCII when requested.
std::string render_resolution(const BettiPair& pair, bool ascii = false);

}  // namespace hilbstrata

#endif
