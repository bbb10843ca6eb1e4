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

#ifndef HILBSTRATA_WITNESS_HPP
#define HILBSTRATA_WITNESS_HPP

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "hilbstrata/betti.hpp"

namespace hilbstrata {

// Number of monomials of degree d in three variables: (d+1)(d+2)/2, zero for
// negative d.
long monomial_count(long d);

// Entry support pattern for sampled matrices. The full ladder is the honest
// model; the two-diagonal band (beta in {alpha, alpha-1}) is a smaller
// exploratory pattern.
enum class MatrixSupport { full_ladder, two_diagonal };

struct GradedMatrixSpec {
  BettiPair pair;
  std::uint64_t prime = 0;
  MatrixSupport support = MatrixSupport::full_ladder;
  std::uint64_t seed = 0;
};

// Homogeneous form in F_p[x,y,z], coefficients indexed by the degree-lex
// monomial order (x > y > z). Empty coefficient vector means the zero entry.
struct HomogeneousForm {
  long degree = 0;
  std::vector<std::uint64_t> coeffs;
  bool is_zero() const { return coeffs.empty(); }
};

// A matrix over F_p[x,y,z] with rows of degree S(a)_alpha and columns of
// degree S(b)_beta; entry (alpha, beta) is homogeneous of the difference
// degree. Represents a map sum A(-S(b)_beta) -> sum A(-S(a)_alpha).
struct GradedMatrix {
  std::vector<long> row_degrees;
  std::vector<long> col_degrees;
  std::vector<HomogeneousForm> entries;  // row-major
  std::uint64_t prime = 0;

  long rows() const { return static_cast<long>(row_degrees.size()); }
  long cols() const { return static_cast<long>(col_degrees.size()); }
  const HomogeneousForm& entry(long r, long c) const {
    return entries[static_cast<size_t>(r * cols() + c)];
  }
};

// Draws uniformly random forms on the allowed support, entries visited in
// row-major order, coefficients in degree-lex order. Requires an odd prime
// below 2^31, a pair passing the occurrence conditions, and a support
// pattern that fits inside the ladder.
GradedMatrix sample_matrix(const GradedMatrixSpec& spec);

// Degreewise scalar data of the cokernel through max_degree: dimensions,
// plus whether each degree block of the matrix has full column rank.
struct CokernelProfile {
  std::vector<Int> dims;              // degrees 0..max_degree
  std::vector<std::uint8_t> injective;
};
CokernelProfile cokernel_profile(const GradedMatrix& m, long max_degree);
std::vector<Int> cokernel_hilbert_function(const GradedMatrix& m,
                                           long max_degree);

struct DegreeCheck {
  long degree = 0;
  Int predicted;  // coefficient of (sum (a_i - b_i) t^i) / (1-t)^3
  Int computed;   // dimension of the sampled cokernel
  bool injective = false;
};

struct WitnessReport {
  GradedMatrixSpec spec;  // seed here is the per-trial seed
  long trial = 0;
  std::vector<DegreeCheck> degrees;
  bool success = false;  // every degree matches and every block is injective
};

struct WitnessRun {
  BettiPair pair;
  long trials = 0;
  long successes = 0;
  std::vector<WitnessReport> reports;
};

// For every Betti pair of the rank-one numerator attached to s: sample
// `trials` matrices (trial i uses seed + i) and compare the cokernel against
// the predicted series through max_degree (>= deg s + 3).
std::vector<WitnessRun> run_witness(
    const CastelnuovoPoly& s, long trials, std::uint64_t prime,
    long max_degree, std::uint64_t seed,
    MatrixSupport support = MatrixSupport::full_ladder);

nlohmann::json report_to_json(const WitnessReport& report);
nlohmann::json runs_to_json(const std::vector<WitnessRun>& runs);

}  // namespace hilbstrata

#endif
