// Copyright 2026 The Authors.
//
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

#include "blits/io.hpp"

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "blits/errors.hpp"
#include "blits/graph_gen.hpp"
#include "doctest.h"
#include "testutil.hpp"

namespace blits {
namespace {

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

std::string read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::uint64_t bits_of(double x) {
  std::uint64_t u;
  std::memcpy(&u, &x, sizeof(u));
  return u;
}

TEST_CASE("doubles survive the text round trip bit for bit") {
  std::vector<double> values = {
      0.0,
      -0.0,
      1.0 / 3.0,
      0.1,
      4.9406564584124654e-324,  // smallest denormal
      1.7976931348623157e308,
      -2.2250738585072014e-308,
      123456789.123456789,
      3.14159265358979312,
  };
  for (double x : values) {
    // strtod, not std::stod: stod throws out_of_range when ERANGE marks the
    // denormal underflow even though strtod returns the exact value.
    std::string text = format_double(x);
    CHECK(bits_of(std::strtod(text.c_str(), nullptr)) == bits_of(x));
  }
  CHECK(format_double(1.0) == "1");
}

TEST_CASE("edge lists") {
  testutil::TempDir dir("edges");

  SUBCASE("ids remap densely by rank; weights default to one") {
    write_text(dir.file("g.tsv"),
               "# a comment\n"
               "\n"
               "10\t20\t0.5\r\n"
               "7\t10\n"
               "  # indented comment\n");
    CutGraph g = load_edge_list(dir.file("g.tsv"));
    CHECK(g.n == 3);  // ids {7, 10, 20} become {0, 1, 2}
    REQUIRE(g.edges.size() == 2);
    CHECK(g.edges[0].u == 1);
    CHECK(g.edges[0].v == 2);
    CHECK(g.edges[0].w == 0.5);
    CHECK(g.edges[1].u == 0);
    CHECK(g.edges[1].v == 1);
    CHECK(g.edges[1].w == 1.0);
  }

  SUBCASE("parse failures name the line") {
    write_text(dir.file("cols.tsv"), "1\t2\n1\t2\t3\t4\n");
    try {
      load_edge_list(dir.file("cols.tsv"));
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find(":2:") != std::string::npos);
    }
    write_text(dir.file("nan.tsv"), "1\t2\tx\n");
    CHECK_THROWS_AS(load_edge_list(dir.file("nan.tsv")), ParseError);
    write_text(dir.file("neg-id.tsv"), "-1\t2\n");
    CHECK_THROWS_AS(load_edge_list(dir.file("neg-id.tsv")), ParseError);
    write_text(dir.file("short.tsv"), "1\n");
    CHECK_THROWS_AS(load_edge_list(dir.file("short.tsv")), ParseError);
    CHECK_THROWS_AS(load_edge_list(dir.file("missing.tsv")), ParseError);
  }

  SUBCASE("contract failures keep their own type") {
    write_text(dir.file("negw.tsv"), "1\t2\t-0.5\n");
    CHECK_THROWS_AS(load_edge_list(dir.file("negw.tsv")),
                    ContractViolationError);
    write_text(dir.file("loop.tsv"), "3\t3\n");
    CHECK_THROWS_AS(load_edge_list(dir.file("loop.tsv")),
                    ContractViolationError);
  }

  SUBCASE("save and reload reproduce the graph and the bytes") {
    CutGraph g = assign_uniform_weights(gen_erdos_renyi(10, 1.0, 3), 4);
    save_edge_list(dir.file("w.tsv"), g);
    CutGraph back = load_edge_list(dir.file("w.tsv"));
    REQUIRE(back.n == g.n);  // a complete graph leaves nothing isolated
    REQUIRE(back.edges.size() == g.edges.size());
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      CHECK(back.edges[i].u == g.edges[i].u);
      CHECK(back.edges[i].v == g.edges[i].v);
      CHECK(bits_of(back.edges[i].w) == bits_of(g.edges[i].w));
    }
    save_edge_list(dir.file("w2.tsv"), back);
    CHECK(read_bytes(dir.file("w.tsv")) == read_bytes(dir.file("w2.tsv")));
  }
}

TEST_CASE("similarity matrices") {
  testutil::TempDir dir("sim");

  SUBCASE("direct mode wants a square grid") {
    write_text(dir.file("d.csv"), "1,0.5\n0.5,1\n");
    SimilarityMatrix sim =
        load_similarity_matrix(dir.file("d.csv"), SimilarityMode::kDirect);
    CHECK(sim.n == 2);
    CHECK(sim.at(0, 1) == 0.5);
    CHECK(sim.at(1, 1) == 1.0);

    write_text(dir.file("rect.csv"), "1,0.5,0\n0.5,1,0\n");
    CHECK_THROWS_AS(
        load_similarity_matrix(dir.file("rect.csv"), SimilarityMode::kDirect),
        ParseError);
  }

  SUBCASE("ragged rows name the line") {
    write_text(dir.file("rag.csv"), "1,2\n3\n");
    try {
      load_similarity_matrix(dir.file("rag.csv"),
                             SimilarityMode::kInnerProduct);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find(":2:") != std::string::npos);
    }
  }

  SUBCASE("inner product mode multiplies ratings rows") {
    write_text(dir.file("ip.csv"), "1,2\n3,4\n");
    SimilarityMatrix sim = load_similarity_matrix(
        dir.file("ip.csv"), SimilarityMode::kInnerProduct);
    CHECK(sim.n == 2);
    CHECK(sim.at(0, 0) == 5.0);
    CHECK(sim.at(0, 1) == 11.0);
    CHECK(sim.at(1, 0) == 11.0);
    CHECK(sim.at(1, 1) == 25.0);
  }

  SUBCASE("cosine mode normalizes and rejects zero rows") {
    write_text(dir.file("cos.csv"), "1,0\n0,2\n");
    SimilarityMatrix sim =
        load_similarity_matrix(dir.file("cos.csv"), SimilarityMode::kCosine);
    CHECK(sim.at(0, 0) == 1.0);
    CHECK(sim.at(1, 1) == 1.0);
    CHECK(sim.at(0, 1) == 0.0);

    write_text(dir.file("zero.csv"), "0,0\n1,1\n");
    CHECK_THROWS_AS(
        load_similarity_matrix(dir.file("zero.csv"), SimilarityMode::kCosine),
        ContractViolationError);
  }

  SUBCASE("degenerate inputs") {
    write_text(dir.file("empty.csv"), "# nothing here\n");
    CHECK_THROWS_AS(
        load_similarity_matrix(dir.file("empty.csv"), SimilarityMode::kDirect),
        ParseError);
    write_text(dir.file("inf.csv"), "1,inf\ninf,1\n");
    CHECK_THROWS_AS(
        load_similarity_matrix(dir.file("inf.csv"), SimilarityMode::kDirect),
        ContractViolationError);
  }
}

TEST_CASE("trace files") {
  testutil::TempDir dir("trace");
  TraceFile trace;
  trace.records.push_back({"exp-1", "blits", 7, 0, 0, 0, 0.0});
  trace.records.push_back({"exp-1", "blits", 7, 3, 120, 4, 1.0 / 3.0});
  trace.records.push_back({"exp-1", "greedy#error", 8, 0, 0, 0, -0.0});

  SUBCASE("round trip preserves every field") {
    write_trace_file(dir.file("t.csv"), trace);
    TraceFile back = read_trace_file(dir.file("t.csv"));
    REQUIRE(back.records.size() == trace.records.size());
    for (std::size_t i = 0; i < trace.records.size(); ++i) {
      const TraceRecord& a = trace.records[i];
      const TraceRecord& b = back.records[i];
      CHECK(a.experiment_id == b.experiment_id);
      CHECK(a.algorithm == b.algorithm);
      CHECK(a.seed == b.seed);
      CHECK(a.adaptive_round == b.adaptive_round);
      CHECK(a.cumulative_queries == b.cumulative_queries);
      CHECK(a.solution_size == b.solution_size);
      CHECK(bits_of(a.value) == bits_of(b.value));
    }

    std::string bytes = read_bytes(dir.file("t.csv"));
    CHECK(bytes.rfind(std::string(kTraceHeader) + "\n", 0) == 0);
    write_trace_file(dir.file("t2.csv"), back);
    CHECK(bytes == read_bytes(dir.file("t2.csv")));
  }

  SUBCASE("header and column counts are enforced") {
    write_text(dir.file("bad-head.csv"), "algorithm,seed\n");
    CHECK_THROWS_AS(read_trace_file(dir.file("bad-head.csv")), ParseError);

    write_text(dir.file("short.csv"),
               std::string(kTraceHeader) + "\nexp,blits,1,2,3\n");
    try {
      read_trace_file(dir.file("short.csv"));
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find(":2:") != std::string::npos);
    }
  }

  SUBCASE("string fields must stay comma-free") {
    TraceFile bad;
    bad.records.push_back({"exp,1", "blits", 1, 1, 1, 1, 1.0});
    CHECK_THROWS_AS(write_trace_file(dir.file("bad.csv"), bad),
                    InvalidInputError);
    TraceFile empty_field;
    empty_field.records.push_back({"", "blits", 1, 1, 1, 1, 1.0});
    CHECK_THROWS_AS(write_trace_file(dir.file("bad2.csv"), empty_field),
                    InvalidInputError);
  }

  SUBCASE("an empty trace is just the header") {
    write_trace_file(dir.file("none.csv"), TraceFile{});
    CHECK(read_trace_file(dir.file("none.csv")).records.empty());
    CHECK(read_bytes(dir.file("none.csv")) ==
          std::string(kTraceHeader) + "\n");
  }
}

}  // namespace
}  // namespace blits
