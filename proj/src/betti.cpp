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

#include "hilbstrata/betti.hpp"

#include <algorithm>
#include <sstream>

namespace hilbstrata {

DegreeMap degree_map_from(const std::vector<std::pair<long, Int>>& entries) {
  DegreeMap m;
  for (const auto& [deg, mult] : entries) {
    Int& v = m[deg];
    v += mult;
    if (v == 0) m.erase(deg);
  }
  return m;
}

LaurentPoly degree_map_to_poly(const DegreeMap& m) {
  LaurentPoly p;
  for (const auto& [deg, mult] : m) p = p + LaurentPoly::monomial(mult, deg);
  return p;
}

Int degree_map_total(const DegreeMap& m) {
  Int t = 0;
  for (const auto& [deg, mult] : m) t += mult;
  return t;
}

LaurentPoly BettiPair::numerator() const {
  return degree_map_to_poly(a) - degree_map_to_poly(b);
}

bool BettiPair::is_minimal() const {
  for (const auto& [deg, mult] : a)
    if (b.count(deg)) return false;
  return true;
}

std::vector<long> expand_sequence(const DegreeMap& c) {
  std::vector<long> out;
  for (const auto& [deg, mult] : c) {
    if (mult < 0)
      throw std::invalid_argument("negative multiplicity at degree " +
                                  std::to_string(deg));
    for (long r = 0, m = to_long(mult); r < m; ++r) out.push_back(deg);
  }
  return out;
}

Ladder build_ladder(const BettiPair& pair) {
  Int ta = degree_map_total(pair.a);
  Int tb = degree_map_total(pair.b);
  if (!(ta > tb && tb >= 0))
    throw std::invalid_argument(
        "ladder needs more generators than relations (rank >= 1)");
  Ladder l;
  l.row_degrees = expand_sequence(pair.a);
  l.col_degrees = expand_sequence(pair.b);
  l.rows = static_cast<long>(l.row_degrees.size());
  l.cols = static_cast<long>(l.col_degrees.size());
  l.cells.assign(static_cast<size_t>(l.rows * l.cols), 0);
  for (long alpha = 1; alpha <= l.rows; ++alpha)
    for (long beta = 1; beta <= l.cols; ++beta)
      if (l.row_degrees[static_cast<size_t>(alpha - 1)] <
          l.col_degrees[static_cast<size_t>(beta - 1)])
        l.cells[static_cast<size_t>((alpha - 1) * l.cols + (beta - 1))] = 1;
  // Closure under up/right moves follows from the sortedness of S(a), S(b);
  // verify anyway since downstream support patterns rely on it.
  for (long alpha = 1; alpha <= l.rows; ++alpha)
    for (long beta = 1; beta <= l.cols; ++beta)
      if (!l.contains(alpha, beta) &&
          ((alpha + 1 <= l.rows && l.contains(alpha + 1, beta)) ||
           (beta > 1 && l.contains(alpha, beta - 1))))
        throw std::logic_error("ladder region is not closed");
  return l;
}

namespace {

long min_degree(const DegreeMap& m) { return m.begin()->first; }
long max_degree(const DegreeMap& m) { return m.rbegin()->first; }

Int value_at(const DegreeMap& m, long d) {
  auto it = m.find(d);
  return it == m.end() ? Int(0) : it->second;
}

bool any_negative(const DegreeMap& m) {
  for (const auto& [deg, mult] : m)
    if (mult < 0) return true;
  return false;
}

bool set1_holds(const DegreeMap& a, const DegreeMap& b) {
  DegreeMap q = a;
  for (const auto& [deg, mult] : b) {
    Int& v = q[deg];
    v -= mult;
    if (v == 0) q.erase(deg);
  }
  if (q.empty() || a.empty()) return false;
  long sigma = min_degree(q);
  if (q.begin()->second <= 0) return false;
  if (min_degree(a) < sigma) return false;
  if (value_at(a, sigma) != q.begin()->second) return false;
  long top = std::max(max_degree(a), max_degree(q)) + 1;
  Int psum = q.begin()->second;
  for (long l = sigma + 1; l <= top; ++l) {
    psum += value_at(q, l);
    Int al = value_at(a, l);
    Int lo = value_at(q, l);
    if (lo < 0) lo = 0;
    if (!(lo <= al && al < psum)) return false;
  }
  // Beyond top both a and q vanish, so the condition freezes at
  // 0 <= 0 < q(1), which the last loop iteration already saw.
  return true;
}

bool set2_holds(const DegreeMap& a, const DegreeMap& b) {
  if (a.empty() || any_negative(a) || any_negative(b)) return false;
  long sigma = min_degree(a);
  if (!b.empty() && min_degree(b) <= sigma) return false;
  long top = max_degree(a) + 1;
  if (!b.empty()) top = std::max(top, max_degree(b) + 1);
  Int bsum = 0, asum_below = 0;
  for (long l = sigma + 1; l <= top; ++l) {
    bsum += value_at(b, l);
    asum_below += value_at(a, l - 1);
    if (!(bsum < asum_below)) return false;
  }
  return true;
}

bool set3_holds(const DegreeMap& a, const DegreeMap& b) {
  if (a.empty() || any_negative(a) || any_negative(b)) return false;
  if (!(degree_map_total(b) < degree_map_total(a))) return false;
  std::vector<long> sa = expand_sequence(a);
  std::vector<long> sb = expand_sequence(b);
  long m = static_cast<long>(sa.size());
  long n = static_cast<long>(sb.size());
  for (long alpha = 1; alpha <= m; ++alpha)
    for (long beta = std::max(alpha - 1, 1L); beta <= n; ++beta)
      if (!(sa[static_cast<size_t>(alpha - 1)] <
            sb[static_cast<size_t>(beta - 1)]))
        return false;
  return true;
}

}  // namespace

ConditionVerdicts check_conditions(const DegreeMap& a, const DegreeMap& b) {
  return ConditionVerdicts{set1_holds(a, b), set2_holds(a, b),
                           set3_holds(a, b)};
}

ConditionVerdicts check_conditions(const BettiPair& pair) {
  return check_conditions(pair.a, pair.b);
}

namespace {

std::vector<BettiPair> enumerate_impl(const LaurentPoly& q, long top) {
  auto adm = is_admissible_numerator(q);
  if (!adm.admissible)
    throw NotAdmissibleError("numerator is not admissible: " + q.to_string());
  long sigma = adm.sigma;
  // Free choices live at degrees sigma < l <= top; a_sigma is pinned to
  // q_sigma and everything beyond top is forced to zero.
  std::vector<long> degrees;
  std::vector<Int> lo, hi;  // inclusive choice ranges
  Int psum = q.coeff(sigma);
  for (long l = sigma + 1; l <= top; ++l) {
    psum += q.coeff(l);
    Int lo_l = q.coeff(l);
    if (lo_l < 0) lo_l = 0;
    Int hi_l = psum - 1;
    if (lo_l > hi_l)
      throw std::logic_error("empty choice interval for admissible numerator");
    if (hi_l > lo_l || lo_l > 0) {
      degrees.push_back(l);
      lo.push_back(lo_l);
      hi.push_back(hi_l);
    }
  }
  std::vector<Int> choice = lo;
  std::vector<BettiPair> out;
  for (;;) {
    BettiPair pair;
    pair.a[sigma] = q.coeff(sigma);
    for (size_t i = 0; i < degrees.size(); ++i)
      if (choice[i] > 0) pair.a[degrees[i]] = choice[i];
    for (const auto& [deg, mult] : pair.a) {
      Int bv = mult - q.coeff(deg);
      if (bv < 0) throw std::logic_error("negative relation count");
      if (bv > 0) pair.b[deg] = bv;
    }
    for (long d = q.lowest_degree(); d <= q.degree(); ++d) {
      if (q.coeff(d) < 0 && !pair.a.count(d)) pair.b[d] = -q.coeff(d);
    }
    out.push_back(std::move(pair));
    // Odometer with the last position least significant, giving ascending
    // lexicographic order on (a_{sigma+1}, a_{sigma+2}, ...).
    bool advanced = false;
    for (size_t i = degrees.size(); i-- > 0;) {
      if (choice[i] < hi[i]) {
        ++choice[i];
        for (size_t j = i + 1; j < degrees.size(); ++j) choice[j] = lo[j];
        advanced = true;
        break;
      }
    }
    if (!advanced) return out;
  }
}

}  // namespace

std::vector<BettiPair> enumerate_betti(const LaurentPoly& q) {
  if (!is_admissible_numerator(q).admissible)
    throw NotAdmissibleError("numerator is not admissible: " + q.to_string());
  if (q.at_one() > 1)
    throw InfiniteFamilyError(
        "rank " + q.at_one().str() +
        " admits infinitely many pairs; supply a degree cutoff");
  return enumerate_impl(q, q.degree());
}

std::vector<BettiPair> enumerate_betti(const LaurentPoly& q,
                                       long degree_cutoff) {
  if (!is_admissible_numerator(q).admissible)
    throw NotAdmissibleError("numerator is not admissible: " + q.to_string());
  return enumerate_impl(q, std::max(degree_cutoff, q.degree()));
}

Int count_resolutions(const CastelnuovoPoly& s) {
  const auto& v = s.values();
  auto at = [&](long i) -> long {
    return (i >= 0 && i <= s.degree()) ? v[static_cast<size_t>(i)] : 0;
  };
  Int prod = 1;
  for (long l = s.sigma() + 1; l <= s.degree() + 2; ++l)
    prod *= 1 + std::min(at(l - 1) - at(l), at(l - 2) - at(l - 1));
  return prod;
}

BettiPair minimal_betti(const LaurentPoly& q) {
  if (!is_admissible_numerator(q).admissible)
    throw NotAdmissibleError("numerator is not admissible: " + q.to_string());
  BettiPair pair;
  for (long d = q.lowest_degree(); d <= q.degree(); ++d) {
    Int c = q.coeff(d);
    if (c > 0) pair.a[d] = c;
    if (c < 0) pair.b[d] = -c;
  }
  return pair;
}

namespace {

std::string render_side(const DegreeMap& m, const char* oplus) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [deg, mult] : m) {
    if (!first) os << " " << oplus << " ";
    first = false;
    os << "A";
    if (deg != 0) os << "(" << -deg << ")";
    if (mult != 1) os << "^" << mult.str();
  }
  return os.str();
}

}  // namespace

std::string render_resolution(const BettiPair& pair, bool ascii) {
  const char* arrow = ascii ? "->" : "→";
  const char* oplus = ascii ? "(+)" : "⊕";
  std::ostringstream os;
  os << "0 " << arrow << " ";
  if (!pair.b.empty()) os << render_side(pair.b, oplus) << " " << arrow << " ";
  os << render_side(pair.a, oplus) << " " << arrow << " I " << arrow << " 0";
  return os.str();
}

}  // namespace hilbstrata
