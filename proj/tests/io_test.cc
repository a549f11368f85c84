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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gasket/io.h"
#include "gasket/walk.h"

namespace gasket {
namespace {

const GasketConfig kD1(1), kD2(2);

Word w(std::string_view s) { return parse_word(s, kD2); }

TEST(Csv, HistogramRoundTrip) {
  SimulationSpec spec{Word::root(), 2, 3, 1000, 1, 1, {}};
  const CellHistogram h = simulate_limit_cells(spec, kD2);
  const std::string text = histogram_csv(h);
  EXPECT_EQ(text.rfind("# " + version_string() + "\nword,count,fraction\n", 0), 0u);
  EXPECT_EQ(parse_histogram_csv(text, kD2), h);
  EXPECT_THROW(parse_histogram_csv("word,count\n", kD2), ParseError);
  EXPECT_THROW(parse_histogram_csv("word,count,fraction\n00,x,0\n", kD2), ParseError);
}

TEST(Csv, ExitRoundTrip) {
  const ExactDist d = exit_distribution(w("1"), 2, kD2);
  const ExactDist back = parse_exit_csv(exit_csv(d, kD2), kD2);
  EXPECT_EQ(back.support, d.support);
  EXPECT_EQ(back.probs, d.probs);
  EXPECT_EQ(back.level, 2u);
  const std::string approx = exit_csv(exit_distribution_approx(w("1"), 2, kD2), kD2);
  EXPECT_THROW(parse_exit_csv(approx, kD2), ParseError);
}

TEST(Csv, GreenRoundTrip) {
  const TruncatedGreen g = truncated_green(2, kD1);
  const auto rows = parse_green_csv(green_csv(g), kD1);
  EXPECT_EQ(rows.size(), g.states().size() * g.states().size());
  for (const GreenEntry& e : rows) {
    EXPECT_TRUE(e.exact);
    EXPECT_EQ(parse_rational(e.value), g.at(e.x, e.y));
  }
}

TEST(Csv, GraphRoundTrip) {
  const auto edges = parse_graph_csv(graph_csv(2, kD1), kD1);
  std::vector<GraphEdge> direct;
  for_each_edge(2, kD1, [&](const Word& a, const Word& b, EdgeKind k) {
    direct.push_back({a, b, k});
  });
  EXPECT_EQ(edges, direct);
  EXPECT_EQ(edges.front(), (GraphEdge{Word::root(), w("0"), EdgeKind::kVertical}));
}

TEST(Csv, WideAlphabetIsQuoted) {
  const GasketConfig big(10);
  CellHistogram h(1, big);
  h.add(Word{10}, 2);
  const std::string text = histogram_csv(h);
  EXPECT_NE(text.find("10,2,1\n"), std::string::npos);
  EXPECT_EQ(parse_histogram_csv(text, big), h);
  CellHistogram h2(2, big);
  h2.add(Word{10, 3});
  EXPECT_NE(histogram_csv(h2).find("\"10,3\",1,1\n"), std::string::npos);
  EXPECT_EQ(parse_histogram_csv(histogram_csv(h2), big), h2);
}

TEST(Json, TraceRoundTrip) {
  const CouplingTrace t = fold(parse_path("-,0,-,1,10,100,011,01,00", kD1), kD1);
  const auto doc = trace_json(t);
  EXPECT_EQ(doc["generator"], version_string());
  EXPECT_TRUE(doc["rows"][0]["k"].is_null());
  EXPECT_EQ(doc["rows"][4]["g_label"], "R_01");
  const CouplingTrace back = parse_trace_json(nlohmann::json::parse(doc.dump()));
  ASSERT_EQ(back.rows.size(), t.rows.size());
  for (std::size_t n = 0; n < t.rows.size(); ++n) {
    EXPECT_EQ(back.rows[n].z, t.rows[n].z);
    EXPECT_EQ(back.rows[n].k, t.rows[n].k);
    EXPECT_EQ(back.rows[n].y, t.rows[n].y);
    EXPECT_EQ(back.rows[n].l, t.rows[n].l);
    EXPECT_EQ(back.rows[n].g, t.rows[n].g);
    EXPECT_EQ(back.rows[n].z_tilde, t.rows[n].z_tilde);
  }
  EXPECT_THROW(parse_trace_json(nlohmann::json::parse("{\"d\":1}")), ParseError);
}

TEST(Json, ReportSchema) {
  VerificationReport r;
  r.identity = "group";
  r.d = 2;
  r.level = 2;
  r.comparisons.push_back({"{00}", "{11}", 0.1, 0.11, 0.01, -1, 0.3, true});
  const auto doc = report_json(r);
  for (const char* key : {"identity", "d", "level", "comparisons"}) EXPECT_TRUE(doc.contains(key));
  for (const char* key : {"lhs", "rhs", "estimate_lhs", "estimate_rhs", "se", "pass"}) {
    EXPECT_TRUE(doc["comparisons"][0].contains(key)) << key;
  }
}

TEST(Files, AtomicWrite) {
  const auto dir = std::filesystem::temp_directory_path() / "gasket_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "out.csv";
  write_atomically(path, "first\n");
  write_atomically(path, "second\n");
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  EXPECT_EQ(s.str(), "second\n");
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    EXPECT_EQ(entry.path().filename(), "out.csv");
  }
  std::filesystem::remove_all(dir);
  EXPECT_THROW(write_atomically(dir / "missing" / "x.csv", "x"), std::exception);
}

TEST(Format, ShortestDouble) {
  EXPECT_EQ(format_double(0.125), "0.125");
  EXPECT_EQ(std::stod(format_double(0.1 + 0.2)), 0.1 + 0.2);
}

}  // namespace
}  // namespace gasket
