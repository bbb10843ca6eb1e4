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

#ifndef HILBSTRATA_TABLES_HPP
#define HILBSTRATA_TABLES_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "hilbstrata/strata.hpp"

namespace hilbstrata {

// Series coefficients shown per stratum: degrees 0 through this bound.
inline constexpr long kTableSeriesWindow = 8;

struct StrataTable {
  long max_weight = 0;
  std::vector<std::vector<StratumRecord>> by_weight;  // index = weight
};

StrataTable build_table(long max_weight);

enum class TableFormat { text, json, csv };

// text mirrors the classification row layout (series, s, dim, resolutions);
// json is the versioned schema below; csv has the fixed header
// n,s,dim,num_resolutions,resolutions with RFC 4180 quoting.
std::string emit(const StrataTable& table, TableFormat format,
                 bool ascii = false);

nlohmann::json table_to_json(const StrataTable& table, bool ascii = false);
nlohmann::json stratum_to_json(const StratumRecord& rec, bool ascii = false);

}  // namespace hilbstrata

#endif
