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

#ifndef HILBSTRATA_SERIES_HPP
#define HILBSTRATA_SERIES_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hilbstrata {

// All coefficient arithmetic is exact; cpp_int makes overflow impossible even
// though the numbers in this problem stay small.
using Int = boost::multiprecision::cpp_int;

// Throws std::overflow_error if v does not fit in a long.
long to_long(const Int& v);

// Integer Laurent polynomial in one variable t, kept in canonical form: the
// coefficient vector has non-zero first and last entries, and the zero
// polynomial is the unique instance with an empty vector and lowest degree 0.
// Equality is therefore structural.
class LaurentPoly {
 public:
  LaurentPoly() = default;  // zero

  // Trims leading/trailing zero coefficients; coeffs[i] is the coefficient
  // of t^(lowest_degree + i).
  static LaurentPoly from_coeffs(long lowest_degree, std::vector<Int> coeffs);
  static LaurentPoly constant(Int c);
  static LaurentPoly monomial(Int c, long degree);
  static LaurentPoly one_minus_t();

  bool is_zero() const { return coeffs_.empty(); }
  long lowest_degree() const { return lowest_; }
  long degree() const;  // highest exponent; throws std::domain_error on zero
  const std::vector<Int>& coeffs() const { return coeffs_; }

  // Coefficient of t^d; zero outside the support. A polynomial is an exact
  // object, so this is a real answer, unlike the truncated-series case below.
  Int coeff(long d) const;
  Int constant_term() const { return coeff(0); }
  Int at_one() const;  // evaluate at t = 1

  LaurentPoly invert_t() const;  // substitute t -> 1/t
  std::string to_string() const;

  friend LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q);
  friend LaurentPoly operator-(const LaurentPoly& p);
  friend LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q);
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
  bool operator==(const LaurentPoly&) const = default;

 private:
  long lowest_ = 0;
  std::vector<Int> coeffs_;
};

// Finite window of a power series: coefficients for degrees 0..truncation
// degree. Queries beyond the window throw instead of returning zero, because
// a truncation has no information there. Default-constructed instances carry
// an empty window (truncation degree -1).
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(std::vector<Int> coeffs);

  long truncation_degree() const {
    return static_cast<long>(coeffs_.size()) - 1;
  }
  const Int& at(long d) const;  // throws std::out_of_range outside 0..D
  const std::vector<Int>& coeffs() const { return coeffs_; }
  bool operator==(const TruncatedSeries&) const = default;

 private:
  std::vector<Int> coeffs_;
};

// p(t) / (1-t)^k expanded through degree max_degree. Requires k >= 1,
// max_degree >= 0 and p with no negative-degree terms.
TruncatedSeries divide_one_minus_t_pow(const LaurentPoly& p, int k,
                                       long max_degree);

// Exact quotient p / (1-t), or nullopt when (1-t) does not divide p,
// i.e. when p(1) != 0.
std::optional<LaurentPoly> divide_one_minus_t(const LaurentPoly& p);

LaurentPoly pow_one_minus_t(int k);  // (1-t)^k, k >= 0

}  // namespace hilbstrata

#endif
