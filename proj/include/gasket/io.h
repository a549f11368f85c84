// Copyright 2026 The Gasket Walk Authors
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

#ifndef GASKET_IO_H_
#define GASKET_IO_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gasket/config.h"
#include "gasket/coupling.h"
#include "gasket/exact.h"
#include "gasket/graph.h"
#include "gasket/histogram.h"
#include "gasket/measures.h"

namespace gasket {

// "gasket-walk <version>". Every CSV starts with "# " followed by this line;
// every JSON document carries it in a "generator" field.
std::string version_string();

// Writes through a sibling temporary file and renames it into place.
void write_atomically(const std::filesystem::path& path, std::string_view content);

// Shortest decimal that reads back as the same double.
std::string format_double(double v);

// Thrown by the parsers on malformed input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// word,count,fraction
std::string histogram_csv(const CellHistogram& hist);
CellHistogram parse_histogram_csv(std::string_view text, const GasketConfig& cfg);

// word,probability,decimal. Exact laws print probabilities as p/q; the
// approximate ones repeat the decimal.
std::string exit_csv(const ExactDist& dist, const GasketConfig& cfg);
std::string exit_csv(const ApproxDist& dist, const GasketConfig& cfg);
ExactDist parse_exit_csv(std::string_view text, const GasketConfig& cfg);

// x,y,value,exact_flag over all state pairs with a nonzero entry.
std::string green_csv(const TruncatedGreen& green);
struct GreenEntry {
  Word x;
  Word y;
  std::string value;
  bool exact = false;
};
std::vector<GreenEntry> parse_green_csv(std::string_view text, const GasketConfig& cfg);

// src,dst,kind with kind v or h.
std::string graph_csv(std::size_t max_level, const GasketConfig& cfg);
struct GraphEdge {
  Word src;
  Word dst;
  EdgeKind kind;
  bool operator==(const GraphEdge&) const = default;
};
std::vector<GraphEdge> parse_graph_csv(std::string_view text, const GasketConfig& cfg);

nlohmann::ordered_json trace_json(const CouplingTrace& trace);
CouplingTrace parse_trace_json(const nlohmann::json& doc);

nlohmann::ordered_json report_json(const VerificationReport& report);

}  // namespace gasket

#endif  // GASKET_IO_H_
