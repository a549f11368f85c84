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

#include "gasket/io.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <system_error>

#include <unistd.h>

namespace gasket {
namespace {

std::string csv_field(const std::string& s) {
  return s.find(',') == std::string::npos ? s : '"' + s + '"';
}

std::string word_field(const Word& w, const GasketConfig& cfg) {
  return csv_field(to_string(w, cfg));
}

std::string csv_preamble(std::string_view columns) {
  std::string out = "# " + version_string() + "\n";
  out += columns;
  out += '\n';
  return out;
}

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
    } else if (c == ',' && !quoted) {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  if (quoted) throw ParseError("unterminated quote in CSV line");
  return out;
}

// Data rows of a CSV document after its comment lines and column header.
std::vector<std::vector<std::string>> csv_rows(std::string_view text, std::string_view columns) {
  std::vector<std::vector<std::string>> rows;
  bool header_seen = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      if (line != columns) throw ParseError("expected CSV header '" + std::string(columns) + "'");
      header_seen = true;
      continue;
    }
    rows.push_back(split_fields(line));
    if (rows.back().size() != split_fields(columns).size()) {
      throw ParseError("wrong number of CSV fields in '" + std::string(line) + "'");
    }
  }
  if (!header_seen) throw ParseError("missing CSV header");
  return rows;
}

std::uint64_t parse_count(const std::string& s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError("bad count '" + s + "'");
  return v;
}

nlohmann::ordered_json optional_json(const auto& value, auto convert) {
  if (!value) return nullptr;
  return convert(*value);
}

}  // namespace

std::string version_string() { return std::string("gasket-walk ") + GASKET_WALK_VERSION; }

void write_atomically(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw std::runtime_error("failed writing " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw std::runtime_error("cannot format double");
  return std::string(buf, ptr);
}

std::string histogram_csv(const CellHistogram& hist) {
  const GasketConfig& cfg = hist.config();
  std::string out = csv_preamble("word,count,fraction");
  for (std::uint64_t r = 0; r < hist.num_cells(); ++r) {
    const std::uint64_t c = hist.count_rank(r);
    const double f = hist.total() ? static_cast<double>(c) / hist.total() : 0.0;
    out += word_field(unrank(r, hist.level(), cfg), cfg) + ',' + std::to_string(c) + ',' +
           format_double(f) + '\n';
  }
  return out;
}

CellHistogram parse_histogram_csv(std::string_view text, const GasketConfig& cfg) {
  const auto rows = csv_rows(text, "word,count,fraction");
  if (rows.empty()) throw ParseError("histogram has no cells");
  const Word first = parse_word(rows.front()[0], cfg);
  CellHistogram hist(first.size(), cfg);
  for (const auto& row : rows) {
    const Word w = parse_word(row[0], cfg);
    if (w.size() != hist.level()) throw ParseError("histogram cells of mixed length");
    hist.add(w, parse_count(row[1]));
  }
  return hist;
}

std::string exit_csv(const ExactDist& dist, const GasketConfig& cfg) {
  std::string out = csv_preamble("word,probability,decimal");
  for (std::size_t k = 0; k < dist.support.size(); ++k) {
    out += word_field(dist.support[k], cfg) + ',' + to_string(dist.probs[k]) + ',' +
           format_double(dist.probs[k].get_d()) + '\n';
  }
  return out;
}

std::string exit_csv(const ApproxDist& dist, const GasketConfig& cfg) {
  std::string out = csv_preamble("word,probability,decimal");
  for (std::size_t k = 0; k < dist.support.size(); ++k) {
    const std::string p = format_double(dist.probs[k]);
    out += word_field(dist.support[k], cfg) + ',' + p + ',' + p + '\n';
  }
  return out;
}

ExactDist parse_exit_csv(std::string_view text, const GasketConfig& cfg) {
  ExactDist dist;
  for (const auto& row : csv_rows(text, "word,probability,decimal")) {
    dist.support.push_back(parse_word(row[0], cfg));
    try {
      dist.probs.push_back(parse_rational(row[1]));
    } catch (const std::exception&) {
      throw ParseError("probability '" + row[1] + "' is not an exact rational");
    }
  }
  if (!dist.support.empty()) dist.level = dist.support.front().size();
  return dist;
}

std::string green_csv(const TruncatedGreen& green) {
  const GasketConfig& cfg = green.config();
  std::string out = csv_preamble("x,y,value,exact_flag");
  for (const Word& x : green.states()) {
    const std::string xs = word_field(x, cfg) + ',';
    for (const Word& y : green.states()) {
      std::string value;
      if (green.exact()) {
        const Rational& g = green.at(x, y);
        if (g == 0) continue;
        value = to_string(g);
      } else {
        const long double g = green.value(x, y);
        if (g == 0) continue;
        value = format_double(static_cast<double>(g));
      }
      out += xs + word_field(y, cfg) + ',' + value + ',' + (green.exact() ? "1" : "0") + '\n';
    }
  }
  return out;
}

std::vector<GreenEntry> parse_green_csv(std::string_view text, const GasketConfig& cfg) {
  std::vector<GreenEntry> out;
  for (const auto& row : csv_rows(text, "x,y,value,exact_flag")) {
    if (row[3] != "0" && row[3] != "1") throw ParseError("exact_flag must be 0 or 1");
    out.push_back({parse_word(row[0], cfg), parse_word(row[1], cfg), row[2], row[3] == "1"});
  }
  return out;
}

std::string graph_csv(std::size_t max_level, const GasketConfig& cfg) {
  std::string out = csv_preamble("src,dst,kind");
  for_each_edge(max_level, cfg, [&](const Word& a, const Word& b, EdgeKind kind) {
    out += word_field(a, cfg) + ',' + word_field(b, cfg) + ',' +
           (kind == EdgeKind::kVertical ? "v" : "h") + '\n';
  });
  return out;
}

std::vector<GraphEdge> parse_graph_csv(std::string_view text, const GasketConfig& cfg) {
  std::vector<GraphEdge> out;
  for (const auto& row : csv_rows(text, "src,dst,kind")) {
    if (row[2] != "v" && row[2] != "h") throw ParseError("edge kind must be v or h");
    out.push_back({parse_word(row[0], cfg), parse_word(row[1], cfg),
                   row[2] == "v" ? EdgeKind::kVertical : EdgeKind::kHorizontal});
  }
  return out;
}

nlohmann::ordered_json trace_json(const CouplingTrace& trace) {
  const GasketConfig cfg(trace.d);
  auto word = [&](const Word& w) { return to_string(w, cfg); };
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const TraceRow& r : trace.rows) {
    nlohmann::ordered_json row;
    row["n"] = r.n;
    row["z"] = word(r.z);
    row["k"] = optional_json(r.k, [](std::size_t v) { return v; });
    row["y"] = optional_json(r.y, word);
    row["l"] = optional_json(r.l, [](std::size_t v) { return v; });
    row["g"] = optional_json(r.g, [](const Permutation& g) { return to_string(g); });
    row["g_label"] = optional_json(r.g, [](const Permutation& g) { return label(g); });
    row["z_tilde"] = optional_json(r.z_tilde, word);
    rows.push_back(std::move(row));
  }
  nlohmann::ordered_json doc;
  doc["generator"] = version_string();
  doc["d"] = trace.d;
  doc["rows"] = std::move(rows);
  return doc;
}

CouplingTrace parse_trace_json(const nlohmann::json& doc) {
  try {
    CouplingTrace trace;
    trace.d = doc.at("d").get<int>();
    const GasketConfig cfg(trace.d);
    for (const auto& row : doc.at("rows")) {
      TraceRow r{row.at("n").get<std::size_t>(), parse_word(row.at("z").get<std::string>(), cfg),
                 {}, {}, {}, {}, {}};
      if (!row.at("k").is_null()) r.k = row.at("k").get<std::size_t>();
      if (!row.at("y").is_null()) r.y = parse_word(row.at("y").get<std::string>(), cfg);
      if (!row.at("l").is_null()) r.l = row.at("l").get<std::size_t>();
      if (!row.at("g").is_null()) r.g = parse_permutation(row.at("g").get<std::string>(), cfg);
      if (!row.at("z_tilde").is_null()) {
        r.z_tilde = parse_word(row.at("z_tilde").get<std::string>(), cfg);
      }
      trace.rows.push_back(std::move(r));
    }
    return trace;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed coupling trace: ") + e.what());
  }
}

nlohmann::ordered_json report_json(const VerificationReport& report) {
  nlohmann::ordered_json doc;
  doc["generator"] = version_string();
  doc["identity"] = report.identity;
  doc["d"] = report.d;
  doc["level"] = report.level;
  doc["burn"] = report.burn;
  doc["walks"] = report.walks;
  doc["seed"] = report.seed;
  doc["start"] = report.start;
  doc["pass"] = report.pass();
  nlohmann::ordered_json exact = nlohmann::ordered_json::array();
  for (const ExactCheck& e : report.exact_checks) {
    exact.push_back({{"name", e.name}, {"pass", e.pass}});
  }
  doc["exact_checks"] = std::move(exact);
  if (report.chi_square) {
    doc["chi_square"] = {{"stat", report.chi_square->stat},
                         {"dof", report.chi_square->dof},
                         {"p_value", report.chi_square->p_value}};
  }
  nlohmann::ordered_json comps = nlohmann::ordered_json::array();
  for (const Comparison& c : report.comparisons) {
    nlohmann::ordered_json row;
    row["lhs"] = c.lhs;
    row["rhs"] = c.rhs;
    row["estimate_lhs"] = c.estimate_lhs;
    row["estimate_rhs"] = c.estimate_rhs;
    row["se"] = c.se;
    row["z"] = std::isfinite(c.z) ? nlohmann::ordered_json(c.z) : nlohmann::ordered_json(nullptr);
    row["p_value"] = c.p_value;
    row["pass"] = c.pass;
    comps.push_back(std::move(row));
  }
  doc["comparisons"] = std::move(comps);
  return doc;
}

}  // namespace gasket
