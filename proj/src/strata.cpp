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

#include "hilbstrata/strata.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hilbstrata {

ExtDimension ext_dimension(const CastelnuovoPoly& s) {
  LaurentPoly sp = s.to_laurent();
  LaurentPoly weight_factor =
      LaurentPoly::monomial(1, -1) - LaurentPoly::monomial(1, -2);
  Int c_series = (weight_factor * sp.invert_t() * sp).constant_term();

  const auto& v = s.values();
  auto at = [&](long i) -> long {
    return (i >= 0 && i <= s.degree()) ? v[static_cast<size_t>(i)] : 0;
  };
  Int c_sum = 0;
  for (long j = 0; j <= s.degree(); ++j)
    c_sum += Int(at(j)) * (at(j - 1) - at(j - 2));
  if (c_series != c_sum)
    throw std::logic_error("the two computations of c disagree: " +
                           c_series.str() + " vs " + c_sum.str());

  Int n = s.weight();
  Int dim = (n == 0) ? Int(0) : Int(1) + n + c_series;
  return ExtDimension{dim, c_series};
}

namespace {

StratumRecord build_record(const CastelnuovoPoly& s, const CastelnuovoPoly& smin,
                           const CastelnuovoPoly& smax) {
  StratumRecord rec;
  rec.s = s;
  rec.h = series_from_castelnuovo(s, std::max(8L, s.degree() + 8));
  ExtDimension ext = ext_dimension(s);
  rec.dim = ext.dim;
  rec.c = ext.c;
  rec.resolutions = enumerate_betti(rec.h.numerator);
  rec.minimal = minimal_betti(rec.h.numerator);
  rec.is_hmin = (s == smin);
  rec.is_hmax = (s == smax);
  return rec;
}

}  // namespace

std::vector<StratumRecord> build_strata(long n) {
  CastelnuovoPoly smin = h_min_shape(n);
  CastelnuovoPoly smax = h_max_shape(n);
  std::vector<CastelnuovoPoly> polys = CastelnuovoPoly::enumerate(n);
  std::vector<StratumRecord> records;
  records.reserve(polys.size());
  for (const auto& s : polys) records.push_back(build_record(s, smin, smax));
  std::vector<size_t> order(records.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t i, size_t j) {
    return records[i].dim > records[j].dim;
  });
  std::vector<StratumRecord> out;
  out.reserve(records.size());
  for (size_t i : order) out.push_back(std::move(records[i]));
  return out;
}

StratumRecord max_stratum(long n) {
  if (n < 1) throw std::invalid_argument("need weight >= 1");
  std::vector<StratumRecord> records = build_strata(n);
  if (records.empty() || records.front().dim != Int(2) * n)
    throw std::logic_error("no stratum of dimension 2n");
  if (records.size() > 1 && records[1].dim == records.front().dim)
    throw std::logic_error("top dimension is not unique");
  return records.front();
}

StrataPoset build_poset(long n) {
  StrataPoset poset;
  poset.n = n;
  poset.nodes = build_strata(n);
  int count = static_cast<int>(poset.nodes.size());
  // strictly_less[i][j] means the series of node i is coefficientwise below
  // the series of node j.
  std::vector<std::vector<bool>> less(static_cast<size_t>(count),
                                      std::vector<bool>(count, false));
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j) {
      SeriesOrder ord = compare(poset.nodes[static_cast<size_t>(i)].h,
                                poset.nodes[static_cast<size_t>(j)].h);
      switch (ord) {
        case SeriesOrder::less:
          less[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
          break;
        case SeriesOrder::greater:
          less[static_cast<size_t>(j)][static_cast<size_t>(i)] = true;
          break;
        case SeriesOrder::incomparable:
          poset.incomparable.emplace_back(i, j);
          break;
        case SeriesOrder::equal:
          throw std::logic_error("two distinct strata share a series");
      }
    }
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j) {
      if (!less[static_cast<size_t>(i)][static_cast<size_t>(j)]) continue;
      bool cover = true;
      for (int k = 0; k < count && cover; ++k)
        if (less[static_cast<size_t>(i)][static_cast<size_t>(k)] &&
            less[static_cast<size_t>(k)][static_cast<size_t>(j)])
          cover = false;
      if (cover) poset.covers.emplace_back(i, j);
    }
  return poset;
}

std::string poset_to_dot(const StrataPoset& poset) {
  std::ostringstream os;
  os << "digraph strata {\n";
  os << "  label=\"potential degenerations, weight " << poset.n
     << " (coefficientwise series order; comparability is necessary for "
        "closure, not sufficient)\";\n";
  os << "  rankdir=BT;\n";
  for (size_t i = 0; i < poset.nodes.size(); ++i) {
    const StratumRecord& rec = poset.nodes[i];
    os << "  s" << i << " [label=\"s = " << rec.s.to_string()
       << "\\ndim " << rec.dim.str() << "\"];\n";
  }
  for (const auto& [lo, hi] : poset.covers)
    os << "  s" << lo << " -> s" << hi << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace hilbstrata
