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

#ifndef HILBSTRATA_STRATA_HPP
#define HILBSTRATA_STRATA_HPP

#include <string>
#include <utility>
#include <vector>

#include "hilbstrata/betti.hpp"

namespace hilbstrata {

// One stratum of the moduli space: the Castelnuovo polynomial, its series,
// the stratum dimension, every Betti pair, and the extremality flags.
struct StratumRecord {
  CastelnuovoPoly s;
  AdmissibleSeries h;
  Int dim;
  Int c;  // dim = 1 + n + c for n >= 1
  std::vector<BettiPair> resolutions;
  BettiPair minimal;
  bool is_hmin = false;
  bool is_hmax = false;
};

struct ExtDimension {
  Int dim;
  Int c;
};

// c is computed two ways, as the constant term of (1/t - 1/t^2) s(1/t) s(t)
// and as sum_j s_j (s_{j-1} - s_{j-2}); they must agree. dim = 1 + n + c for
// n >= 1 and 0 for the empty stratum.
ExtDimension ext_dimension(const CastelnuovoPoly& s);

// All strata of weight n, ordered by descending dimension with ties broken
// by the enumeration order of s.
std::vector<StratumRecord> build_strata(long n);

// The unique stratum of dimension 2n (n >= 1).
StratumRecord max_stratum(long n);

struct StrataPoset {
  long n = 0;
  std::vector<StratumRecord> nodes;
  // Cover relations (lower, upper) under coefficientwise series comparison;
  // the minimal series sits at the bottom.
  std::vector<std::pair<int, int>> covers;
  std::vector<std::pair<int, int>> incomparable;  // i < j, order-independent
};

StrataPoset build_poset(long n);

// Graphviz rendering; edges follow the comparison order and are labelled as
// potential degenerations only, since comparability is a necessary condition
// for closure, not a proof.
std::string poset_to_dot(const StrataPoset& poset);

}  // namespace hilbstrata

#endif
