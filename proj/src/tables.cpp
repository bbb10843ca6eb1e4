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

#include "hilbstrata/tables.hpp"

#include <sstream>

#include "hilbstrata/jsonutil.hpp"

namespace hilbstrata {

StrataTable build_table(long max_weight) {
  if (max_weight < 0) throw std::invalid_argument("negative weight bound");
  StrataTable table;
  table.max_weight = max_weight;
  for (long n = 0; n <= max_weight; ++n)
    table.by_weight.push_back(build_strata(n));
  return table;
}

namespace {

std::string series_prefix_string(const TruncatedSeries& expansion, long upto) {
  LaurentPoly shown;
  for (long d = 0; d <= upto; ++d)
    shown = shown + LaurentPoly::monomial(expansion.at(d), d);
  std::string body = shown.to_string();
  return body == "0" ? "0 + ..." : body + " + ...";
}

std::string emit_text(const StrataTable& table, bool ascii) {
  std::ostringstream os;
  for (long n = 0; n <= table.max_weight; ++n) {
    if (n > 0) os << "\n";
    os << "n = " << n << "\n";
    const auto& rows = table.by_weight[static_cast<size_t>(n)];
    for (size_t i = 0; i < rows.size(); ++i) {
      const StratumRecord& rec = rows[i];
      if (i > 0) os << "  --\n";
      os << "  h(t) = "
         << series_prefix_string(rec.h.expansion, kTableSeriesWindow) << "\n";
      os << "  s(t) = " << rec.s.to_string() << "\n";
      os << "  dim = " << rec.dim.str() << "\n";
      for (const BettiPair& pair : rec.resolutions)
        os << "  " << render_resolution(pair, ascii) << "\n";
    }
  }
  return os.str();
}

std::string csv_field(const std::string& value) {
  bool needs_quotes = value.find_first_of(",\"\r\n") != std::string::npos;
  if (!needs_quotes) return value;
  std::string out = "\"";
  for (char ch : value) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string emit_csv(const StrataTable& table, bool ascii) {
  std::ostringstream os;
  os << "n,s,dim,num_resolutions,resolutions\r\n";
  for (long n = 0; n <= table.max_weight; ++n)
    for (const StratumRecord& rec : table.by_weight[static_cast<size_t>(n)]) {
      std::ostringstream svals;
      for (size_t i = 0; i < rec.s.values().size(); ++i) {
        if (i > 0) svals << ",";
        svals << rec.s.values()[i];
      }
      std::ostringstream res;
      for (size_t i = 0; i < rec.resolutions.size(); ++i) {
        if (i > 0) res << "; ";
        res << render_resolution(rec.resolutions[i], ascii);
      }
      os << n << "," << csv_field(svals.str()) << "," << rec.dim.str() << ","
         << rec.resolutions.size() << "," << csv_field(res.str()) << "\r\n";
    }
  return os.str();
}

}  // namespace

nlohmann::json stratum_to_json(const StratumRecord& rec, bool ascii) {
  nlohmann::json series = nlohmann::json::array();
  for (long d = 0; d <= kTableSeriesWindow; ++d)
    series.push_back(json_int(rec.h.expansion.at(d)));
  nlohmann::json resolutions = nlohmann::json::array();
  for (const BettiPair& pair : rec.resolutions)
    resolutions.push_back(render_resolution(pair, ascii));
  return nlohmann::json{
      {"n", json_int(rec.s.weight())},
      {"s", rec.s.values()},
      {"sigma", rec.s.sigma()},
      {"series", std::move(series)},
      {"dim", json_int(rec.dim)},
      {"c", json_int(rec.c)},
      {"num_resolutions", rec.resolutions.size()},
      {"resolutions", std::move(resolutions)},
      {"minimal_resolution", render_resolution(rec.minimal, ascii)},
      {"is_hmin", rec.is_hmin},
      {"is_hmax", rec.is_hmax}};
}

nlohmann::json table_to_json(const StrataTable& table, bool ascii) {
  nlohmann::json strata = nlohmann::json::array();
  for (long n = 0; n <= table.max_weight; ++n)
    for (const StratumRecord& rec : table.by_weight[static_cast<size_t>(n)])
      strata.push_back(stratum_to_json(rec, ascii));
  return nlohmann::json{{"schema_version", 1},
                        {"max_weight", table.max_weight},
                        {"strata", std::move(strata)}};
}

std::string emit(const StrataTable& table, TableFormat format, bool ascii) {
  switch (format) {
    case TableFormat::text:
      return emit_text(table, ascii);
    case TableFormat::json:
      return table_to_json(table, ascii).dump(2) + "\n";
    case TableFormat::csv:
      return emit_csv(table, ascii);
  }
  throw std::invalid_argument("unknown table format");
}

}  // namespace hilbstrata
