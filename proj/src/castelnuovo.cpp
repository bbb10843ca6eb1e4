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

#include "hilbstrata/castelnuovo.hpp"

#include <algorithm>
#include <sstream>

namespace hilbstrata {

CastelnuovoPoly CastelnuovoPoly::validate(std::vector<long> values) {
  while (!values.empty() && values.back() == 0) values.pop_back();
  long sigma = 0;
  bool in_prefix = true;
  for (long i = 0; i < static_cast<long>(values.size()); ++i) {
    long v = values[static_cast<size_t>(i)];
    if (v < 0)
      throw NonCastelnuovoError(i, "negative coefficient at index " +
                                       std::to_string(i));
    if (in_prefix) {
      if (v == i + 1) {
        sigma = i + 1;
        continue;
      }
      in_prefix = false;
      if (i == 0)
        throw NonCastelnuovoError(0, "coefficient sequence must start with 1");
      if (v > values[static_cast<size_t>(i - 1)])
        throw NonCastelnuovoError(
            i, "coefficient at index " + std::to_string(i) +
                   " exceeds the staircase prefix");
    } else if (v > values[static_cast<size_t>(i - 1)]) {
      throw NonCastelnuovoError(i, "tail increases at index " +
                                       std::to_string(i));
    }
  }
  CastelnuovoPoly s;
  s.values_ = std::move(values);
  s.sigma_ = sigma;
  return s;
}

Int CastelnuovoPoly::weight() const {
  Int w = 0;
  for (long v : values_) w += v;
  return w;
}

LaurentPoly CastelnuovoPoly::to_laurent() const {
  std::vector<Int> c(values_.begin(), values_.end());
  return LaurentPoly::from_coeffs(0, std::move(c));
}

std::vector<long> CastelnuovoPoly::to_distinct_partition() const {
  std::vector<long> parts;
  for (long j = 1; j <= sigma_; ++j) {
    long count = 0;
    for (long v : values_)
      if (v >= j) ++count;
    parts.push_back(count);
  }
  return parts;  // strictly decreasing because the prefix hits every height
}

std::string CastelnuovoPoly::render_diagram() const {
  std::ostringstream os;
  for (long j = sigma_; j >= 1; --j) {
    long last = -1;
    for (long i = 0; i < static_cast<long>(values_.size()); ++i)
      if (values_[static_cast<size_t>(i)] >= j) last = i;
    for (long i = 0; i <= last; ++i)
      os << (values_[static_cast<size_t>(i)] >= j ? '#' : ' ');
    if (j > 1) os << '\n';
  }
  return os.str();
}

std::string CastelnuovoPoly::to_string() const {
  return to_laurent().to_string();
}

namespace {

// Strictly decreasing partitions of n, largest part first.
void gen_distinct(long n, long max_part, std::vector<long>& cur,
                  std::vector<std::vector<long>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (long p = std::min(n, max_part); p >= 1; --p) {
    // The remaining weight must fit under parts < p.
    if ((p - 1) * p / 2 < n - p) continue;
    cur.push_back(p);
    gen_distinct(n - p, p - 1, cur, out);
    cur.pop_back();
  }
}

CastelnuovoPoly from_partition(const std::vector<long>& parts) {
  // Conjugating a strictly decreasing partition gives column heights in
  // which every height 1..k occurs at least once (k = number of parts):
  // height h occurs parts[h-1] - parts[h] times, reading parts[k] as 0.
  // One copy of each height forms the staircase prefix 1..k; the leftover
  // copies, listed in descending height, form the tail.
  long k = static_cast<long>(parts.size());
  std::vector<long> values;
  for (long h = 1; h <= k; ++h) values.push_back(h);
  for (long h = k; h >= 1; --h) {
    long next = (h == k) ? 0 : parts[static_cast<size_t>(h)];
    long extra = parts[static_cast<size_t>(h - 1)] - next - 1;
    for (long r = 0; r < extra; ++r) values.push_back(h);
  }
  return CastelnuovoPoly::validate(std::move(values));
}

}  // namespace

std::vector<CastelnuovoPoly> CastelnuovoPoly::enumerate(long weight) {
  if (weight < 0) throw std::invalid_argument("negative weight");
  std::vector<std::vector<long>> parts;
  std::vector<long> cur;
  gen_distinct(weight, weight, cur, parts);
  std::vector<CastelnuovoPoly> out;
  out.reserve(parts.size());
  for (const auto& p : parts) out.push_back(from_partition(p));
  std::sort(out.begin(), out.end(),
            [](const CastelnuovoPoly& a, const CastelnuovoPoly& b) {
              return std::lexicographical_compare(
                  b.values().begin(), b.values().end(), a.values().begin(),
                  a.values().end());
            });
  return out;
}

Int count_distinct_part_partitions(long n) {
  if (n < 0) throw std::invalid_argument("negative weight");
  std::vector<Int> dp(static_cast<size_t>(n) + 1, Int(0));
  dp[0] = 1;
  for (long part = 1; part <= n; ++part)
    for (long w = n; w >= part; --w)
      dp[static_cast<size_t>(w)] += dp[static_cast<size_t>(w - part)];
  return dp[static_cast<size_t>(n)];
}

Int count_odd_part_partitions(long n) {
  if (n < 0) throw std::invalid_argument("negative weight");
  std::vector<Int> dp(static_cast<size_t>(n) + 1, Int(0));
  dp[0] = 1;
  for (long part = 1; part <= n; part += 2)
    for (long w = part; w <= n; ++w)
      dp[static_cast<size_t>(w)] += dp[static_cast<size_t>(w - part)];
  return dp[static_cast<size_t>(n)];
}

}  // namespace hilbstrata
