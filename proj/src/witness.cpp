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

#include "hilbstrata/witness.hpp"

#include <algorithm>
#include <string>

#include "hilbstrata/jsonutil.hpp"
#include "hilbstrata/rng.hpp"

namespace hilbstrata {

long monomial_count(long d) { return d < 0 ? 0 : (d + 1) * (d + 2) / 2; }

namespace {

// Monomials of fixed degree d in x, y, z, ordered lexicographically with
// x > y > z; the exponent of z is implied.
struct Monomial {
  long ex = 0;
  long ey = 0;
};

long monomial_rank(long d, long ex, long ey) {
  return (d - ex) * (d - ex + 1) / 2 + (d - ex - ey);
}

std::vector<Monomial> monomials_of_degree(long d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  out.reserve(static_cast<size_t>(monomial_count(d)));
  for (long ex = d; ex >= 0; --ex)
    for (long ey = d - ex; ey >= 0; --ey) out.push_back({ex, ey});
  return out;
}

void validate_prime(std::uint64_t p) {
  if (p < 3 || p % 2 == 0 || p >= (1ULL << 31))
    throw std::invalid_argument(
        "prime must be an odd prime below 2^31, got " + std::to_string(p));
  for (std::uint64_t f = 3; f * f <= p; f += 2)
    if (p % f == 0)
      throw std::invalid_argument(std::to_string(p) + " is not prime");
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t acc = 1;
  base %= p;
  while (exp) {
    if (exp & 1) acc = acc * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return acc;
}

// Row-echelon rank of a dense rows x cols matrix over F_p, in place.
long rank_mod_p(std::vector<std::uint64_t>& m, long rows, long cols,
                std::uint64_t p) {
  long rank = 0;
  for (long col = 0; col < cols && rank < rows; ++col) {
    long pivot = -1;
    for (long r = rank; r < rows; ++r)
      if (m[static_cast<size_t>(r * cols + col)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (long c = col; c < cols; ++c)
        std::swap(m[static_cast<size_t>(pivot * cols + c)],
                  m[static_cast<size_t>(rank * cols + c)]);
    std::uint64_t inv =
        pow_mod(m[static_cast<size_t>(rank * cols + col)], p - 2, p);
    for (long r = rank + 1; r < rows; ++r) {
      std::uint64_t v = m[static_cast<size_t>(r * cols + col)];
      if (v == 0) continue;
      std::uint64_t factor = v * inv % p;
      for (long c = col; c < cols; ++c) {
        std::uint64_t sub =
            factor * m[static_cast<size_t>(rank * cols + c)] % p;
        std::uint64_t& cell = m[static_cast<size_t>(r * cols + c)];
        cell = (cell + p - sub) % p;
      }
    }
    ++rank;
  }
  return rank;
}

bool cell_allowed(const Ladder& ladder, MatrixSupport support, long alpha,
                  long beta) {
  switch (support) {
    case MatrixSupport::full_ladder:
      return ladder.contains(alpha, beta);
    case MatrixSupport::two_diagonal:
      return beta == alpha || beta == alpha - 1;
  }
  return false;
}

}  // namespace

GradedMatrix sample_matrix(const GradedMatrixSpec& spec) {
  validate_prime(spec.prime);
  if (!check_conditions(spec.pair).all())
    throw std::invalid_argument(
        "pair does not satisfy the occurrence conditions");
  Ladder ladder = build_ladder(spec.pair);
  if (spec.support == MatrixSupport::two_diagonal)
    for (long alpha = 1; alpha <= ladder.rows; ++alpha)
      for (long beta = std::max(alpha - 1, 1L);
           beta <= std::min(alpha, ladder.cols); ++beta)
        if (!ladder.contains(alpha, beta))
          throw std::invalid_argument(
              "two-diagonal support infeasible: cell (" +
              std::to_string(alpha) + ", " + std::to_string(beta) +
              ") lies outside the ladder");

  GradedMatrix m;
  m.prime = spec.prime;
  m.row_degrees = ladder.row_degrees;
  m.col_degrees = ladder.col_degrees;
  m.entries.assign(static_cast<size_t>(ladder.rows * ladder.cols), {});
  SplitMix64 rng(spec.seed);
  // Fixed visitation order (rows outer, columns inner; coefficients in
  // degree-lex order) keeps runs reproducible from the seed alone.
  for (long alpha = 1; alpha <= ladder.rows; ++alpha)
    for (long beta = 1; beta <= ladder.cols; ++beta) {
      if (!cell_allowed(ladder, spec.support, alpha, beta)) continue;
      long e = ladder.col_degrees[static_cast<size_t>(beta - 1)] -
               ladder.row_degrees[static_cast<size_t>(alpha - 1)];
      HomogeneousForm form;
      form.degree = e;
      form.coeffs.resize(static_cast<size_t>(monomial_count(e)));
      for (auto& c : form.coeffs) c = rng.below(spec.prime);
      m.entries[static_cast<size_t>((alpha - 1) * ladder.cols + (beta - 1))] =
          std::move(form);
    }
  return m;
}

CokernelProfile cokernel_profile(const GradedMatrix& m, long max_degree) {
  if (max_degree < 0) throw std::invalid_argument("negative degree window");
  CokernelProfile out;
  for (long d = 0; d <= max_degree; ++d) {
    std::vector<long> row_off(static_cast<size_t>(m.rows()) + 1, 0);
    for (long r = 0; r < m.rows(); ++r)
      row_off[static_cast<size_t>(r + 1)] =
          row_off[static_cast<size_t>(r)] +
          monomial_count(d - m.row_degrees[static_cast<size_t>(r)]);
    std::vector<long> col_off(static_cast<size_t>(m.cols()) + 1, 0);
    for (long c = 0; c < m.cols(); ++c)
      col_off[static_cast<size_t>(c + 1)] =
          col_off[static_cast<size_t>(c)] +
          monomial_count(d - m.col_degrees[static_cast<size_t>(c)]);
    long R = row_off[static_cast<size_t>(m.rows())];
    long C = col_off[static_cast<size_t>(m.cols())];

    long rank = 0;
    if (R > 0 && C > 0) {
      std::vector<std::uint64_t> block(static_cast<size_t>(R * C), 0);
      for (long c = 0; c < m.cols(); ++c) {
        long cd = d - m.col_degrees[static_cast<size_t>(c)];
        if (cd < 0) continue;
        auto col_monos = monomials_of_degree(cd);
        for (size_t jm = 0; jm < col_monos.size(); ++jm) {
          long col = col_off[static_cast<size_t>(c)] + static_cast<long>(jm);
          for (long r = 0; r < m.rows(); ++r) {
            const HomogeneousForm& f = m.entry(r, c);
            if (f.is_zero()) continue;
            long rd = d - m.row_degrees[static_cast<size_t>(r)];
            auto form_monos = monomials_of_degree(f.degree);
            for (size_t jn = 0; jn < form_monos.size(); ++jn) {
              if (f.coeffs[jn] == 0) continue;
              long row = row_off[static_cast<size_t>(r)] +
                         monomial_rank(rd, form_monos[jn].ex + col_monos[jm].ex,
                                       form_monos[jn].ey + col_monos[jm].ey);
              block[static_cast<size_t>(row * C + col)] = f.coeffs[jn];
            }
          }
        }
      }
      rank = rank_mod_p(block, R, C, m.prime);
    }
    out.dims.push_back(Int(R - rank));
    out.injective.push_back(rank == C ? 1 : 0);
  }
  return out;
}

std::vector<Int> cokernel_hilbert_function(const GradedMatrix& m,
                                           long max_degree) {
  return cokernel_profile(m, max_degree).dims;
}

std::vector<WitnessRun> run_witness(const CastelnuovoPoly& s, long trials,
                                    std::uint64_t prime, long max_degree,
                                    std::uint64_t seed, MatrixSupport support) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  validate_prime(prime);
  if (max_degree < s.degree() + 3)
    throw std::invalid_argument(
        "degree window must reach at least three degrees past s");
  AdmissibleSeries h = series_from_castelnuovo(s, max_degree);
  std::vector<BettiPair> pairs = enumerate_betti(h.numerator);
  std::vector<WitnessRun> runs;
  runs.reserve(pairs.size());
  for (const BettiPair& pair : pairs) {
    WitnessRun run;
    run.pair = pair;
    run.trials = trials;
    for (long t = 0; t < trials; ++t) {
      WitnessReport report;
      report.spec = GradedMatrixSpec{pair, prime, support,
                                     seed + static_cast<std::uint64_t>(t)};
      report.trial = t;
      GradedMatrix m = sample_matrix(report.spec);
      CokernelProfile profile = cokernel_profile(m, max_degree);
      report.success = true;
      for (long d = 0; d <= max_degree; ++d) {
        DegreeCheck check;
        check.degree = d;
        check.predicted = h.expansion.at(d);
        // Same number through the pair: sum (a_i - b_i) * monomial_count(d-i).
        Int direct = 0;
        for (const auto& [deg, mult] : pair.a)
          direct += mult * monomial_count(d - deg);
        for (const auto& [deg, mult] : pair.b)
          direct -= mult * monomial_count(d - deg);
        if (direct != check.predicted)
          throw std::logic_error("pair and series disagree on the prediction");
        check.computed = profile.dims[static_cast<size_t>(d)];
        check.injective = profile.injective[static_cast<size_t>(d)] != 0;
        if (check.computed != check.predicted || !check.injective)
          report.success = false;
        if (check.computed < check.predicted)
          throw std::logic_error(
              "sampled cokernel smaller than predicted; rank bound broken");
        report.degrees.push_back(std::move(check));
      }
      if (report.success) ++run.successes;
      run.reports.push_back(std::move(report));
    }
    runs.push_back(std::move(run));
  }
  return runs;
}

namespace {

nlohmann::json degree_map_json(const DegreeMap& m) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [deg, mult] : m)
    out.push_back({deg, json_int(mult)});
  return out;
}

const char* support_name(MatrixSupport s) {
  return s == MatrixSupport::full_ladder ? "full-ladder" : "two-diagonal";
}

}  // namespace

nlohmann::json report_to_json(const WitnessReport& report) {
  nlohmann::json degrees = nlohmann::json::array();
  for (const DegreeCheck& c : report.degrees)
    degrees.push_back({{"degree", c.degree},
                       {"predicted", json_int(c.predicted)},
                       {"computed", json_int(c.computed)},
                       {"injective", c.injective}});
  return nlohmann::json{
      {"pair",
       {{"a", degree_map_json(report.spec.pair.a)},
        {"b", degree_map_json(report.spec.pair.b)}}},
      {"prime", report.spec.prime},
      {"support", support_name(report.spec.support)},
      {"seed", report.spec.seed},
      {"trial", report.trial},
      {"degrees", degrees},
      {"verdict", report.success ? "success" : "failure"}};
}

nlohmann::json runs_to_json(const std::vector<WitnessRun>& runs) {
  nlohmann::json jruns = nlohmann::json::array();
  for (const WitnessRun& run : runs) {
    nlohmann::json reports = nlohmann::json::array();
    for (const WitnessReport& r : run.reports) reports.push_back(report_to_json(r));
    jruns.push_back({{"pair",
                      {{"a", degree_map_json(run.pair.a)},
                       {"b", degree_map_json(run.pair.b)}}},
                     {"trials", run.trials},
                     {"successes", run.successes},
                     {"reports", std::move(reports)}});
  }
  return nlohmann::json{{"schema_version", 1}, {"runs", std::move(jruns)}};
}

}  // namespace hilbstrata
