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

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hilbstrata/jsonutil.hpp"
#include "hilbstrata/tables.hpp"
#include "hilbstrata/witness.hpp"

namespace {

using namespace hilbstrata;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<long> parse_coefficients(const std::string& text) {
  std::vector<long> values;
  if (text.empty()) return values;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    size_t begin = token.find_first_not_of(" \t");
    size_t end = token.find_last_not_of(" \t");
    if (begin == std::string::npos)
      throw UsageError("empty coefficient in \"" + text + "\"");
    token = token.substr(begin, end - begin + 1);
    try {
      size_t used = 0;
      long v = std::stol(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      values.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("cannot parse coefficient \"" + token + "\"");
    }
  }
  return values;
}

std::string check_prime_flag(std::string& input) {
  try {
    size_t used = 0;
    unsigned long long v = std::stoull(input, &used);
    if (used != input.size()) return "not an integer: " + input;
    if (v < 3 || v % 2 == 0 || v >= (1ULL << 31))
      return "must be an odd prime below 2^31";
    for (unsigned long long f = 3; f * f <= v; f += 2)
      if (v % f == 0) return input + " is not prime";
  } catch (const std::exception&) {
    return "not an integer: " + input;
  }
  return {};
}

nlohmann::json pair_json(const DegreeMap& m) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [deg, mult] : m) out.push_back({deg, json_int(mult)});
  return out;
}

std::string partition_string(const std::vector<long>& parts) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) os << ",";
    os << parts[i];
  }
  os << ")";
  return os.str();
}

int cmd_enumerate(long weight, const std::string& format) {
  auto polys = CastelnuovoPoly::enumerate(weight);
  if (format == "json") {
    nlohmann::json items = nlohmann::json::array();
    for (const auto& s : polys)
      items.push_back({{"values", s.values()},
                       {"sigma", s.sigma()},
                       {"weight", json_int(s.weight())},
                       {"distinct_partition", s.to_distinct_partition()},
                       {"diagram", s.render_diagram()}});
    nlohmann::json out{{"schema_version", 1},
                       {"weight", weight},
                       {"count", polys.size()},
                       {"polynomials", std::move(items)}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "weight " << weight << ": " << polys.size()
            << " Castelnuovo polynomial" << (polys.size() == 1 ? "" : "s")
            << " (distinct-part partitions: "
            << count_distinct_part_partitions(weight).str()
            << ", odd-part partitions: "
            << count_odd_part_partitions(weight).str() << ")\n";
  for (const auto& s : polys) {
    std::cout << "\ns(t) = " << s.to_string() << "   [sigma " << s.sigma()
              << ", partition " << partition_string(s.to_distinct_partition())
              << "]\n";
    std::string diagram = s.render_diagram();
    if (!diagram.empty()) std::cout << diagram << "\n";
  }
  return 0;
}

int cmd_table(long max_weight, const std::string& format, bool ascii) {
  StrataTable table = build_table(max_weight);
  TableFormat fmt = format == "json"  ? TableFormat::json
                    : format == "csv" ? TableFormat::csv
                                      : TableFormat::text;
  std::cout << emit(table, fmt, ascii);
  return 0;
}

int cmd_betti(const std::vector<long>& values, const std::string& format,
              bool ascii) {
  CastelnuovoPoly s = CastelnuovoPoly::validate(values);
  AdmissibleSeries h = series_from_castelnuovo(s);
  auto pairs = enumerate_betti(h.numerator);
  BettiPair minimal = minimal_betti(h.numerator);
  Int closed_form = count_resolutions(s);
  if (format == "json") {
    nlohmann::json items = nlohmann::json::array();
    for (const auto& pair : pairs)
      items.push_back({{"a", pair_json(pair.a)},
                       {"b", pair_json(pair.b)},
                       {"minimal", pair == minimal},
                       {"rendered", render_resolution(pair, ascii)}});
    nlohmann::json out{{"schema_version", 1},
                       {"s", s.values()},
                       {"numerator", h.numerator.to_string()},
                       {"count", pairs.size()},
                       {"count_closed_form", json_int(closed_form)},
                       {"resolutions", std::move(items)}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "s(t) = " << s.to_string() << "\n";
  std::cout << "q(t) = " << h.numerator.to_string() << "\n";
  std::cout << "weight " << s.weight().str() << ", sigma " << s.sigma()
            << "\n";
  std::cout << "resolutions: " << pairs.size() << " (closed form "
            << closed_form.str() << ")\n";
  for (const auto& pair : pairs)
    std::cout << (pair == minimal ? "* " : "  ")
              << render_resolution(pair, ascii) << "\n";
  return 0;
}

int cmd_dim(const std::vector<long>& values, const std::string& format) {
  CastelnuovoPoly s = CastelnuovoPoly::validate(values);
  ExtDimension ext = ext_dimension(s);
  if (format == "json") {
    nlohmann::json out{{"schema_version", 1},
                       {"s", s.values()},
                       {"n", json_int(s.weight())},
                       {"c", json_int(ext.c)},
                       {"dim", json_int(ext.dim)}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "s(t) = " << s.to_string() << "\n";
  std::cout << "n = " << s.weight().str() << "\n";
  std::cout << "c = " << ext.c.str() << "\n";
  std::cout << "dim = " << ext.dim.str() << "\n";
  return 0;
}

int cmd_poset(long weight, const std::string& format, bool dot) {
  StrataPoset poset = build_poset(weight);
  if (dot) {
    std::cout << poset_to_dot(poset);
    return 0;
  }
  if (format == "json") {
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& rec : poset.nodes)
      nodes.push_back({{"s", rec.s.values()},
                       {"dim", json_int(rec.dim)},
                       {"is_hmin", rec.is_hmin},
                       {"is_hmax", rec.is_hmax}});
    nlohmann::json out{{"schema_version", 1},
                       {"weight", weight},
                       {"nodes", std::move(nodes)},
                       {"covers", poset.covers},
                       {"incomparable", poset.incomparable}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "weight " << weight << ": " << poset.nodes.size() << " strat"
            << (poset.nodes.size() == 1 ? "um" : "a") << "\n";
  for (size_t i = 0; i < poset.nodes.size(); ++i) {
    const auto& rec = poset.nodes[i];
    std::cout << i << ": s = " << rec.s.to_string() << " (dim "
              << rec.dim.str() << ")" << (rec.is_hmin ? " [min series]" : "")
              << (rec.is_hmax ? " [max series]" : "") << "\n";
  }
  std::cout << "covers (lower -> upper):\n";
  for (const auto& [lo, hi] : poset.covers)
    std::cout << "  " << lo << " -> " << hi << "\n";
  std::cout << "incomparable pairs: " << poset.incomparable.size() << "\n";
  for (const auto& [i, j] : poset.incomparable)
    std::cout << "  " << i << " ~ " << j << "\n";
  return 0;
}

int cmd_witness(const std::vector<long>& values, std::uint64_t prime,
                long trials, long max_degree, std::uint64_t seed,
                const std::string& support_name, const std::string& format,
                bool ascii) {
  CastelnuovoPoly s = CastelnuovoPoly::validate(values);
  if (max_degree < 0) max_degree = s.degree() + 8;
  MatrixSupport support =
      (support_name == "two-diagonal" || support_name == "diag")
          ? MatrixSupport::two_diagonal
          : MatrixSupport::full_ladder;
  auto runs = run_witness(s, trials, prime, max_degree, seed, support);
  if (format == "json") {
    nlohmann::json out = runs_to_json(runs);
    out["s"] = s.values();
    out["max_degree"] = max_degree;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "s(t) = " << s.to_string() << ", prime " << prime << ", "
            << trials << " trials, degrees 0.." << max_degree << ", seed "
            << seed << ", support " << support_name << "\n";
  for (const auto& run : runs) {
    std::cout << render_resolution(run.pair, ascii) << "\n    "
              << run.successes << "/" << run.trials
              << " trials matched the predicted series\n";
  }
  return 0;
}

int cmd_check(long max_weight) {
  bool all_ok = true;
  auto report = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
    if (!ok) all_ok = false;
  };

  bool counts_ok = true;
  for (long n = 0; n <= max_weight; ++n) {
    Int count = Int(CastelnuovoPoly::enumerate(n).size());
    if (count != count_distinct_part_partitions(n) ||
        count != count_odd_part_partitions(n))
      counts_ok = false;
  }
  report("partition counts agree with the enumeration", counts_ok);

  bool res_ok = true, sigma_ok = true, formula_ok = true;
  for (long n = 0; n <= max_weight; ++n)
    for (const auto& s : CastelnuovoPoly::enumerate(n)) {
      AdmissibleSeries h = series_from_castelnuovo(s);
      if (Int(enumerate_betti(h.numerator).size()) != count_resolutions(s))
        res_ok = false;
      auto adm = is_admissible_numerator(h.numerator);
      if (!adm.admissible || adm.sigma != s.sigma()) sigma_ok = false;
      try {
        ext_dimension(s);
      } catch (const std::logic_error&) {
        formula_ok = false;
      }
    }
  report("resolution counts match the closed form", res_ok);
  report("numerator sigma equals the maximal coefficient of s", sigma_ok);
  report("both dimension formulas agree", formula_ok);

  bool bounds_ok = true;
  for (long n = 1; n <= max_weight; ++n) {
    auto records = build_strata(n);
    Int upper = Int(2) * n;
    Int lower = std::min(Int(n) + 2, upper);
    long at_upper = 0, at_lower = 0;
    for (const auto& rec : records) {
      if (rec.dim < lower || rec.dim > upper) bounds_ok = false;
      if (rec.dim == upper) {
        ++at_upper;
        if (!rec.is_hmin) bounds_ok = false;
      }
      if (rec.dim == lower) {
        ++at_lower;
        if (!rec.is_hmax) bounds_ok = false;
      }
    }
    if (at_upper != 1 || at_lower != 1) bounds_ok = false;
  }
  report("dimension bounds hold with the extremal equality cases", bounds_ok);

  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Castelnuovo polynomials, admissible Hilbert series, Betti numbers and "
      "stratum dimensions for rank-one torsion-free modules on projective "
      "planes"};
  app.require_subcommand(1);

  long weight = 0, max_weight = 0, trials = 20, max_degree = -1;
  std::string s_text, format = "text", support = "full-ladder";
  std::uint64_t prime = 101, seed = 0;
  bool ascii = false, dot = false;

  CLI::Validator prime_check(check_prime_flag, "ODDPRIME", "odd prime");

  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "List Castelnuovo polynomials of a weight");
  enumerate_cmd->add_option("--weight", weight, "Weight to enumerate")
      ->required()
      ->check(CLI::NonNegativeNumber);
  enumerate_cmd->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* table_cmd =
      app.add_subcommand("table", "Classification table for all weights up to a bound");
  table_cmd->add_option("--max-weight", max_weight, "Largest weight included")
      ->required()
      ->check(CLI::NonNegativeNumber);
  table_cmd->add_option("--format", format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  table_cmd->add_flag("--ascii", ascii, "ASCII arrows and direct sums");

  auto* betti_cmd =
      app.add_subcommand("betti", "Betti numbers of every resolution for one s");
  betti_cmd
      ->add_option("--s", s_text,
                   "Comma-separated coefficients s_0,s_1,...; empty for weight 0")
      ->required();
  betti_cmd->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  betti_cmd->add_flag("--ascii", ascii, "ASCII arrows and direct sums");

  auto* dim_cmd = app.add_subcommand("dim", "Stratum dimension for one s");
  dim_cmd->add_option("--s", s_text, "Comma-separated coefficients")->required();
  dim_cmd->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* poset_cmd =
      app.add_subcommand("poset", "Comparison poset of the strata of a weight");
  poset_cmd->add_option("--weight", weight, "Weight of the strata")
      ->required()
      ->check(CLI::NonNegativeNumber);
  poset_cmd->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  poset_cmd->add_flag("--dot", dot, "Graphviz output");

  auto* witness_cmd = app.add_subcommand(
      "witness", "Sample finite-field matrices realizing each resolution");
  witness_cmd->add_option("--s", s_text, "Comma-separated coefficients")
      ->required();
  witness_cmd->add_option("--prime", prime, "Odd prime modulus")
      ->check(prime_check);
  witness_cmd->add_option("--trials", trials, "Samples per resolution")
      ->check(CLI::PositiveNumber);
  witness_cmd->add_option("--max-degree", max_degree,
                          "Degree window (default: deg s + 8)");
  witness_cmd->add_option("--seed", seed, "Base seed; trial i uses seed + i");
  witness_cmd
      ->add_option("--support", support,
                   "Entry support pattern: full-ladder (alias full) or "
                   "two-diagonal (alias diag)")
      ->check(CLI::IsMember({"full-ladder", "two-diagonal", "full", "diag"}));
  witness_cmd->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  witness_cmd->add_flag("--ascii", ascii, "ASCII arrows and direct sums");

  auto* check_cmd =
      app.add_subcommand("check", "Run the identity suite and print a summary");
  check_cmd->add_option("--max-weight", max_weight, "Largest weight covered")
      ->required()
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(enumerate_cmd)) return cmd_enumerate(weight, format);
    if (app.got_subcommand(table_cmd)) return cmd_table(max_weight, format, ascii);
    if (app.got_subcommand(betti_cmd))
      return cmd_betti(parse_coefficients(s_text), format, ascii);
    if (app.got_subcommand(dim_cmd))
      return cmd_dim(parse_coefficients(s_text), format);
    if (app.got_subcommand(poset_cmd)) return cmd_poset(weight, format, dot);
    if (app.got_subcommand(witness_cmd))
      return cmd_witness(parse_coefficients(s_text), prime, trials, max_degree,
                         seed, support, format, ascii);
    if (app.got_subcommand(check_cmd)) return cmd_check(max_weight);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NonCastelnuovoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const NotAdmissibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InfiniteFamilyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
