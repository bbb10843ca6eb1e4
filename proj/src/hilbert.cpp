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

#include "hilbstrata/hilbert.hpp"

#include <algorithm>

namespace hilbstrata {

AdmissibleSeries series_from_castelnuovo(const CastelnuovoPoly& s,
                                         long max_degree) {
  if (max_degree < 0) max_degree = s.degree() + 8;
  if (max_degree < s.degree() + 3)
    throw std::invalid_argument(
        "expansion window must reach at least three degrees past s");
  LaurentPoly q = LaurentPoly::constant(1) - pow_one_minus_t(2) * s.to_laurent();
  return AdmissibleSeries{q, s.weight(), s,
                          divide_one_minus_t_pow(q, 3, max_degree)};
}

CastelnuovoPoly castelnuovo_from_series(const LaurentPoly& q) {
  LaurentPoly num = LaurentPoly::constant(1) - q;
  auto once = divide_one_minus_t(num);
  if (once) {
    if (auto twice = divide_one_minus_t(*once)) {
      const LaurentPoly& sp = *twice;
      if (!sp.is_zero() && sp.lowest_degree() < 0)
        throw NotAdmissibleError(
            "recovered coefficient sequence has negative-degree terms");
      std::vector<long> values(static_cast<size_t>(
                                   sp.is_zero() ? 0 : sp.degree() + 1),
                               0);
      for (size_t i = 0; i < sp.coeffs().size(); ++i)
        values[static_cast<size_t>(sp.lowest_degree()) + i] =
            to_long(sp.coeffs()[i]);
      try {
        return CastelnuovoPoly::validate(std::move(values));
      } catch (const NonCastelnuovoError& e) {
        throw NotAdmissibleError(
            std::string("recovered sequence is not Castelnuovo: ") + e.what());
      }
    }
  }
  throw NotAdmissibleError("(1-t)^2 does not divide 1 - q");
}

Admissibility is_admissible_numerator(const LaurentPoly& q) {
  if (q.is_zero()) return {};
  long lo = q.lowest_degree();
  Int run = 0;
  for (long d = lo; d <= q.degree(); ++d) {
    run += q.coeff(d);
    if (run <= 0) return {};  // partial sums must be positive from lo on
  }
  // Beyond the top degree the partial sum stays at q(1) > 0.
  return {true, lo};
}

SeriesDecomposition decompose(const LaurentPoly& numerator) {
  LaurentPoly cur = numerator;
  Int parts[3];
  for (int i = 0; i < 3; ++i) {
    parts[i] = cur.at_one();
    cur = *divide_one_minus_t(cur - LaurentPoly::constant(parts[i]));
  }
  return SeriesDecomposition{parts[0], parts[1], parts[2], cur};
}

CastelnuovoPoly h_min_shape(long n) {
  if (n < 0) throw std::invalid_argument("negative weight");
  std::vector<long> values;
  long u = 0;
  while ((u + 1) * (u + 2) / 2 <= n) ++u;
  for (long i = 1; i <= u; ++i) values.push_back(i);
  long rest = n - u * (u + 1) / 2;
  if (rest > 0) values.push_back(rest);
  return CastelnuovoPoly::validate(std::move(values));
}

CastelnuovoPoly h_max_shape(long n) {
  if (n < 0) throw std::invalid_argument("negative weight");
  return CastelnuovoPoly::validate(std::vector<long>(static_cast<size_t>(n), 1));
}

std::pair<AdmissibleSeries, AdmissibleSeries> h_min_max(long n) {
  return {series_from_castelnuovo(h_min_shape(n)),
          series_from_castelnuovo(h_max_shape(n))};
}

SeriesOrder compare(const AdmissibleSeries& h1, const AdmissibleSeries& h2) {
  if (h1.invariant != h2.invariant)
    throw std::invalid_argument("series have different invariants: " +
                                h1.invariant.str() + " vs " +
                                h2.invariant.str());
  const auto& v1 = h1.source.values();
  const auto& v2 = h2.source.values();
  long top = std::max(h1.source.degree(), h2.source.degree());
  bool some_pos = false, some_neg = false;
  Int run = 0;
  for (long d = 0; d <= top; ++d) {
    long a = d <= h1.source.degree() ? v1[static_cast<size_t>(d)] : 0;
    long b = d <= h2.source.degree() ? v2[static_cast<size_t>(d)] : 0;
    run += a - b;
    if (run > 0) some_pos = true;
    if (run < 0) some_neg = true;
  }
  // Past the joint support the partial sums equal n - n = 0, so the window
  // above is the whole story. run > 0 at degree d means h2 exceeds h1 there.
  if (some_pos && some_neg) return SeriesOrder::incomparable;
  if (some_pos) return SeriesOrder::less;
  if (some_neg) return SeriesOrder::greater;
  return SeriesOrder::equal;
}

}  // namespace hilbstrata
