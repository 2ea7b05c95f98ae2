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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

#include "blits/errors.hpp"

namespace blits {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

namespace {

std::ifstream open_for_read(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open for reading: " + path);
  return in;
}

std::ofstream open_for_write(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open for writing: " + path);
  return out;
}

bool skippable(const std::string& line) {
  std::size_t at = line.find_first_not_of(" \t\r");
  return at == std::string::npos || line[at] == '#';
}

[[noreturn]] void bad_line(const std::string& path, std::size_t line_no,
                           const std::string& what) {
  throw ParseError(path + ":" + std::to_string(line_no) + ": " + what);
}

double parse_double(const std::string& token, const std::string& path,
                    std::size_t line_no) {
  std::size_t used = 0;
  double v;
  try {
    v = std::stod(token, &used);
  } catch (const std::exception&) {
    bad_line(path, line_no, "not a number: '" + token + "'");
  }
  if (used != token.size()) {
    bad_line(path, line_no, "trailing junk after number: '" + token + "'");
  }
  return v;
}

std::uint64_t parse_uint(const std::string& token, const std::string& path,
                         std::size_t line_no) {
  if (token.empty() || token.find_first_not_of("0123456789") !=
                           std::string::npos) {
    bad_line(path, line_no, "not a non-negative integer: '" + token + "'");
  }
  try {
    return std::stoull(token);
  } catch (const std::exception&) {
    bad_line(path, line_no, "integer out of range: '" + token + "'");
  }
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t at = line.find(sep, start);
    if (at == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, at - start));
    start = at + 1;
  }
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

CutGraph load_edge_list(const std::string& path) {
  std::ifstream in = open_for_read(path);
  struct RawEdge {
    std::uint64_t u, v;
    double w;
  };
  std::vector<RawEdge> raw;
  std::vector<std::uint64_t> ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (skippable(line)) continue;
    std::istringstream fields(line);
    std::string a, b, w;
    if (!(fields >> a >> b)) {
      bad_line(path, line_no, "expected `src<TAB>dst[<TAB>weight]`");
    }
    double weight = 1.0;
    if (fields >> w) weight = parse_double(w, path, line_no);
    std::string extra;
    if (fields >> extra) bad_line(path, line_no, "too many columns");
    RawEdge e{parse_uint(a, path, line_no), parse_uint(b, path, line_no),
              weight};
    if (weight < 0.0 || !std::isfinite(weight)) {
      throw ContractViolationError(path + ":" + std::to_string(line_no) +
                                   ": negative or non-finite edge weight");
    }
    raw.push_back(e);
    ids.push_back(e.u);
    ids.push_back(e.v);
  }

  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  auto rank = [&](std::uint64_t id) {
    return static_cast<Element>(
        std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };

  CutGraph graph;
  graph.n = static_cast<Element>(ids.size());
  graph.edges.reserve(raw.size());
  for (const RawEdge& e : raw) {
    graph.edges.push_back({rank(e.u), rank(e.v), e.w});
  }
  graph.validate();
  return graph;
}

void save_edge_list(const std::string& path, const CutGraph& graph) {
  std::ofstream out = open_for_write(path);
  for (const WeightedEdge& e : graph.edges) {
    out << e.u << '\t' << e.v << '\t' << format_double(e.w) << '\n';
  }
  if (!out) throw ParseError("write failed: " + path);
}

SimilarityMatrix load_similarity_matrix(const std::string& path,
                                        SimilarityMode mode) {
  std::ifstream in = open_for_read(path);
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (skippable(line)) continue;
    std::vector<std::string> cells = split(line, ',');
    std::vector<double> row;
    row.reserve(cells.size());
    for (const std::string& cell : cells) {
      row.push_back(parse_double(cell, path, line_no));
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      bad_line(path, line_no, "ragged row: expected " +
                                  std::to_string(rows.front().size()) +
                                  " columns, got " +
                                  std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError(path + ": empty matrix");

  SimilarityMatrix sim;
  if (mode == SimilarityMode::kDirect) {
    if (rows.front().size() != rows.size()) {
      throw ParseError(path + ": direct mode needs a square grid, got " +
                       std::to_string(rows.size()) + " x " +
                       std::to_string(rows.front().size()));
    }
    sim.n = static_cast<Element>(rows.size());
    sim.data.reserve(rows.size() * rows.size());
    for (const auto& row : rows) {
      sim.data.insert(sim.data.end(), row.begin(), row.end());
    }
  } else {
    const std::size_t n = rows.size();
    std::vector<double> norm(n, 0.0);
    if (mode == SimilarityMode::kCosine) {
      for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (double x : rows[i]) s += x * x;
        if (s <= 0.0) {
          throw ContractViolationError(
              path + ": zero ratings row has no cosine (row " +
              std::to_string(i) + ")");
        }
        norm[i] = std::sqrt(s);
      }
    }
    sim.n = static_cast<Element>(n);
    sim.data.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        double dot = 0.0;
        for (std::size_t d = 0; d < rows[i].size(); ++d) {
          dot += rows[i][d] * rows[j][d];
        }
        if (mode == SimilarityMode::kCosine) dot /= norm[i] * norm[j];
        sim.data[i * n + j] = dot;
        sim.data[j * n + i] = dot;
      }
    }
  }
  sim.validate_finite();
  return sim;
}

namespace {

void require_plain_field(const std::string& s, const char* what) {
  if (s.empty() || s.find(',') != std::string::npos ||
      s.find('\n') != std::string::npos) {
    throw InvalidInputError(std::string("trace ") + what +
                            " must be non-empty and comma-free: '" + s + "'");
  }
}

}  // namespace

void write_trace_file(const std::string& path, const TraceFile& trace) {
  std::ofstream out = open_for_write(path);
  out << kTraceHeader << '\n';
  for (const TraceRecord& rec : trace.records) {
    require_plain_field(rec.experiment_id, "experiment_id");
    require_plain_field(rec.algorithm, "algorithm");
    out << rec.experiment_id << ',' << rec.algorithm << ',' << rec.seed << ','
        << rec.adaptive_round << ',' << rec.cumulative_queries << ','
        << rec.solution_size << ',' << format_double(rec.value) << '\n';
  }
  if (!out) throw ParseError("write failed: " + path);
}

TraceFile read_trace_file(const std::string& path) {
  std::ifstream in = open_for_read(path);
  std::string line;
  if (!std::getline(in, line) || strip_cr(line) != kTraceHeader) {
    throw ParseError(path + ": missing or wrong trace header");
  }
  TraceFile trace;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    std::vector<std::string> cells = split(line, ',');
    if (cells.size() != 7) {
      bad_line(path, line_no, "expected 7 columns, got " +
                                  std::to_string(cells.size()));
    }
    TraceRecord rec;
    rec.experiment_id = cells[0];
    rec.algorithm = cells[1];
    rec.seed = parse_uint(cells[2], path, line_no);
    rec.adaptive_round = parse_uint(cells[3], path, line_no);
    rec.cumulative_queries = parse_uint(cells[4], path, line_no);
    rec.solution_size =
        static_cast<int>(parse_uint(cells[5], path, line_no));
    rec.value = parse_double(cells[6], path, line_no);
    trace.records.push_back(std::move(rec));
  }
  return trace;
}

}  // namespace blits
