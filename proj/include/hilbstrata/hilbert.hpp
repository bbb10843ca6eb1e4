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

#ifndef HILBSTRATA_HILBERT_HPP
#define HILBSTRATA_HILBERT_HPP

#include <utility>

#include "hilbstrata/castelnuovo.hpp"
#include "hilbstrata/series.hpp"

namespace hilbstrata {

struct NotAdmissibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A Hilbert series of the shape 1/(1-t)^3 - s(t)/(1-t) with s Castelnuovo.
// Carries the exact numerator q(t) = 1 - (1-t)^2 s(t), the source polynomial
// s, the invariant n = s(1), and an expansion window.
struct AdmissibleSeries {
  LaurentPoly numerator;
  Int invariant = 0;
  CastelnuovoPoly source;
  TruncatedSeries expansion;
};

// Expansion through degree max_degree (>= deg s + 3); pass a negative value
// for the default window deg s + 8.
AdmissibleSeries series_from_castelnuovo(const CastelnuovoPoly& s,
                                         long max_degree = -1);

// Inverse direction: recover s from a numerator q via s = (1 - q)/(1-t)^2.
// Throws NotAdmissibleError when the division fails or the quotient is not
// a Castelnuovo polynomial.
CastelnuovoPoly castelnuovo_from_series(const LaurentPoly& q);

struct Admissibility {
  bool admissible = false;
  long sigma = 0;  // lowest degree with a positive partial sum; valid on true
};

// A numerator q is admissible when the partial sums of its coefficients
// vanish below some degree sigma and are strictly positive from sigma on.
Admissibility is_admissible_numerator(const LaurentPoly& q);

// q/(1-t)^3 = rank/(1-t)^3 + a/(1-t)^2 + b/(1-t) + tail(t), computed by
// three exact divisions. Never fails: t = 1 is a root at every step.
struct SeriesDecomposition {
  Int rank;
  Int a;
  Int b;
  LaurentPoly tail;
};
SeriesDecomposition decompose(const LaurentPoly& numerator);

// Shapes of the minimal and maximal series of a given weight: the staircase
// filled greedily (triangle plus remainder row) and the all-ones sequence.
CastelnuovoPoly h_min_shape(long n);
CastelnuovoPoly h_max_shape(long n);
std::pair<AdmissibleSeries, AdmissibleSeries> h_min_max(long n);

enum class SeriesOrder { less, equal, greater, incomparable };

// Coefficientwise comparison of the full expansions, computed exactly:
// the difference of two series with equal invariant is (s1 - s2)/(1-t),
// so the comparison reduces to the signs of the partial sums of s1 - s2,
// which stabilize at zero. Requires equal invariants.
SeriesOrder compare(const AdmissibleSeries& h1, const AdmissibleSeries& h2);

}  // namespace hilbstrata

#endif
