// Copyright 2026 The pslq Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON interchange and human-readable rendering. Rationals are always
// strings ("p/q" or "p") in JSON; decimals appear only in CSV and are
// display-only.
//
// Market document:
//   {"projects": [{"name": "a", "lower": "1", "upper": "2" | null}, ...],
//    "preferences": [["a", "b", "c"], ...]}
// Assignment document:
//   {"projects": ["a", "b", "c"], "matrix": [["3/4", "0", "1/4"], ...]}

#ifndef PSLQ_IO_HPP_
#define PSLQ_IO_HPP_

#include <string>
#include <string_view>

#include <json.hpp>

#include "pslq/decomposition.hpp"
#include "pslq/eating.hpp"
#include "pslq/market.hpp"

namespace pslq {

using Json = nlohmann::ordered_json;

// Throws InputError with the offending field path (or the parser's
// line/column for malformed JSON).
Market parse_market(std::string_view text);
Market market_from_json(const Json& doc);
Json market_to_json(const Market& market);

Json matrix_to_json(const Matrix& r, const Market& market);
// Columns are matched by name when the document lists "projects".
Matrix matrix_from_json(const Json& doc, const Market& market);
Matrix parse_matrix(std::string_view text, const Market& market);

Json lottery_to_json(const Lottery& lottery, const Market& market);
Lottery lottery_from_json(const Json& doc, const Market& market);

Json trace_to_json(const EatingTrace& trace, const Market& market);
EatingTrace trace_from_json(const Json& doc, const Market& market);

enum class Format { kTable, kJson, kCsv };
Format parse_format(std::string_view name);

// table: exact rationals aligned by column; json: matrix_to_json;
// csv: one line per cell with exact and 20-significant-digit decimal values.
std::string render(const Matrix& r, const Market& market, Format format);
std::string render_trace(const EatingTrace& trace, const Market& market);

std::string read_file(const std::string& path);

}  // namespace pslq

#endif  // PSLQ_IO_HPP_
