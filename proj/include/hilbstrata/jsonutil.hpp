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

#ifndef HILBSTRATA_JSONUTIL_HPP
#define HILBSTRATA_JSONUTIL_HPP

#include <cstdint>
#include <limits>

#include <json.hpp>

#include "hilbstrata/series.hpp"

namespace hilbstrata {

// Exact integers serialize as JSON numbers while they fit and as decimal
// strings beyond that, so nothing is ever rounded.
inline nlohmann::json json_int(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return nlohmann::json(static_cast<std::int64_t>(v));
  return nlohmann::json(v.str());
}

}  // namespace hilbstrata

#endif
