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

#ifndef HILBSTRATA_CASTELNUOVO_HPP
#define HILBSTRATA_CASTELNUOVO_HPP

#include <string>
#include <vector>

#include "hilbstrata/series.hpp"

namespace hilbstrata {

// Raised when a coefficient sequence is not a Castelnuovo polynomial;
// index points at the first position where the shape breaks.
struct NonCastelnuovoError : std::runtime_error {
  long index;
  NonCastelnuovoError(long index_, const std::string& what_)
      : std::runtime_error(what_), index(index_) {}
};

// A Castelnuovo polynomial: coefficients 1, 2, ..., sigma followed by a
// non-increasing non-negative tail. The zero polynomial (sigma = 0) is
// allowed. Stored trimmed, so the last value is positive unless empty.
class CastelnuovoPoly {
 public:
  CastelnuovoPoly() = default;  // zero, weight 0

  // Checks the staircase shape; trailing zeros are trimmed first.
  // Throws NonCastelnuovoError naming the first violated index.
  static CastelnuovoPoly validate(std::vector<long> values);

  // All Castelnuovo polynomials of the given weight, in descending
  // lexicographic order of their coefficient sequences.
  static std::vector<CastelnuovoPoly> enumerate(long weight);

  const std::vector<long>& values() const { return values_; }
  bool is_zero() const { return values_.empty(); }
  long degree() const {  // -1 for the zero polynomial
    return static_cast<long>(values_.size()) - 1;
  }
  long sigma() const { return sigma_; }  // = max coefficient
  Int weight() const;                    // sum of coefficients

  LaurentPoly to_laurent() const;

  // The columns of the staircase diagram read as rows: part j counts the
  // positions with value >= j. The result is a strictly decreasing partition
  // of the weight, and the map is a bijection onto such partitions.
  std::vector<long> to_distinct_partition() const;

  // ASCII staircase, one text row per diagram row, column i of height
  // values()[i]; top row first.
  std::string render_diagram() const;

  std::string to_string() const;
  bool operator==(const CastelnuovoPoly&) const = default;

 private:
  std::vector<long> values_;
  long sigma_ = 0;
};

// Number of partitions of n into distinct parts / into odd parts. The two
// agree (Euler), and both count Castelnuovo polynomials of weight n.
Int count_distinct_part_partitions(long n);
Int count_odd_part_partitions(long n);

}  // namespace hilbstrata

#endif
