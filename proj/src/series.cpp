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

#include "hilbstrata/series.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace hilbstrata {

long to_long(const Int& v) {
  if (v < std::numeric_limits<long>::min() ||
      v > std::numeric_limits<long>::max()) {
    throw std::overflow_error("integer does not fit in a machine word: " +
                              v.str());
  }
  return static_cast<long>(v);
}

LaurentPoly LaurentPoly::from_coeffs(long lowest_degree,
                                     std::vector<Int> coeffs) {
  size_t lo = 0;
  while (lo < coeffs.size() && coeffs[lo] == 0) ++lo;
  size_t hi = coeffs.size();
  while (hi > lo && coeffs[hi - 1] == 0) --hi;
  LaurentPoly p;
  if (lo == hi) return p;  // zero
  p.lowest_ = lowest_degree + static_cast<long>(lo);
  p.coeffs_.assign(coeffs.begin() + lo, coeffs.begin() + hi);
  return p;
}

LaurentPoly LaurentPoly::constant(Int c) {
  return monomial(std::move(c), 0);
}

LaurentPoly LaurentPoly::monomial(Int c, long degree) {
  std::vector<Int> v;
  v.push_back(std::move(c));
  return from_coeffs(degree, std::move(v));
}

LaurentPoly LaurentPoly::one_minus_t() {
  return from_coeffs(0, {Int(1), Int(-1)});
}

long LaurentPoly::degree() const {
  if (is_zero()) throw std::domain_error("degree of the zero polynomial");
  return lowest_ + static_cast<long>(coeffs_.size()) - 1;
}

Int LaurentPoly::coeff(long d) const {
  if (is_zero() || d < lowest_ ||
      d >= lowest_ + static_cast<long>(coeffs_.size()))
    return Int(0);
  return coeffs_[static_cast<size_t>(d - lowest_)];
}

Int LaurentPoly::at_one() const {
  Int s = 0;
  for (const Int& c : coeffs_) s += c;
  return s;
}

LaurentPoly LaurentPoly::invert_t() const {
  if (is_zero()) return {};
  std::vector<Int> rev(coeffs_.rbegin(), coeffs_.rend());
  return from_coeffs(-degree(), std::move(rev));
}

LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero()) return q;
  if (q.is_zero()) return p;
  long lo = std::min(p.lowest_, q.lowest_);
  long hi = std::max(p.degree(), q.degree());
  std::vector<Int> out(static_cast<size_t>(hi - lo + 1), Int(0));
  for (size_t i = 0; i < p.coeffs_.size(); ++i)
    out[static_cast<size_t>(p.lowest_ - lo) + i] += p.coeffs_[i];
  for (size_t i = 0; i < q.coeffs_.size(); ++i)
    out[static_cast<size_t>(q.lowest_ - lo) + i] += q.coeffs_[i];
  return LaurentPoly::from_coeffs(lo, std::move(out));
}

LaurentPoly operator-(const LaurentPoly& p) {
  LaurentPoly out = p;
  for (Int& c : out.coeffs_) c = -c;
  return out;
}

LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) {
  return p + (-q);
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<Int> out(p.coeffs_.size() + q.coeffs_.size() - 1, Int(0));
  for (size_t i = 0; i < p.coeffs_.size(); ++i)
    for (size_t j = 0; j < q.coeffs_.size(); ++j)
      out[i + j] += p.coeffs_[i] * q.coeffs_[j];
  return LaurentPoly::from_coeffs(p.lowest_ + q.lowest_, std::move(out));
}

namespace {

void append_term(std::ostringstream& os, const Int& c, long d, bool first) {
  Int a = c < 0 ? Int(-c) : c;
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (a != 1 || d == 0) os << a.str();
  if (d != 0) {
    os << "t";
    if (d != 1) os << "^" << d;
  }
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    append_term(os, coeffs_[i], lowest_ + static_cast<long>(i), first);
    first = false;
  }
  return os.str();
}

TruncatedSeries::TruncatedSeries(std::vector<Int> coeffs)
    : coeffs_(std::move(coeffs)) {}

const Int& TruncatedSeries::at(long d) const {
  if (d < 0 || d > truncation_degree())
    throw std::out_of_range("series coefficient " + std::to_string(d) +
                            " outside truncation window 0.." +
                            std::to_string(truncation_degree()));
  return coeffs_[static_cast<size_t>(d)];
}

TruncatedSeries divide_one_minus_t_pow(const LaurentPoly& p, int k,
                                       long max_degree) {
  if (k < 1) throw std::invalid_argument("need at least one factor of 1/(1-t)");
  if (max_degree < 0) throw std::invalid_argument("negative truncation degree");
  if (!p.is_zero() && p.lowest_degree() < 0)
    throw std::invalid_argument(
        "series expansion requires a numerator without negative-degree terms");
  std::vector<Int> c(static_cast<size_t>(max_degree) + 1, Int(0));
  for (long d = 0; d <= max_degree; ++d)
    c[static_cast<size_t>(d)] = p.coeff(d);
  // Multiplying by 1/(1-t) is a running sum; higher-degree terms of p cannot
  // reach back into the window.
  for (int round = 0; round < k; ++round)
    for (long d = 1; d <= max_degree; ++d)
      c[static_cast<size_t>(d)] += c[static_cast<size_t>(d - 1)];
  return TruncatedSeries(std::move(c));
}

std::optional<LaurentPoly> divide_one_minus_t(const LaurentPoly& p) {
  if (p.is_zero()) return LaurentPoly{};
  if (p.at_one() != 0) return std::nullopt;
  // p = (1-t) q means the coefficients of q are the partial sums of p.
  std::vector<Int> out;
  out.reserve(p.coeffs().size());
  Int run = 0;
  for (const Int& c : p.coeffs()) {
    run += c;
    out.push_back(run);
  }
  // The last partial sum is p(1) = 0 and gets trimmed.
  return LaurentPoly::from_coeffs(p.lowest_degree(), std::move(out));
}

LaurentPoly pow_one_minus_t(int k) {
  if (k < 0) throw std::invalid_argument("negative power of (1-t)");
  LaurentPoly out = LaurentPoly::constant(1);
  for (int i = 0; i < k; ++i) out = out * LaurentPoly::one_minus_t();
  return out;
}

}  // namespace hilbstrata
