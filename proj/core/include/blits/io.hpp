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

#ifndef BLITS_IO_HPP_
#define BLITS_IO_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "blits/objectives.hpp"

namespace blits {

// Formats a double so that reading it back reproduces the exact bits
// (printf %.17g). Every float written by this module goes through it, which
// is what makes repeated runs byte-identical.
std::string format_double(double x);

// Edge lists are tab separated `src<TAB>dst<TAB>weight` lines; the weight
// column is optional and defaults to 1.0. Lines starting with '#' and blank
// lines are skipped. Node ids may be arbitrary non-negative integers; they
// are remapped densely by ascending-id rank.
//
// Malformed lines raise ParseError naming the line number; negative weights
// raise ContractViolationError.
CutGraph load_edge_list(const std::string& path);

// Inverse of load_edge_list for graphs that already use dense ids. Isolated
// vertices have no incident line to carry them, so reloading a graph that
// has any yields a smaller ground set.
void save_edge_list(const std::string& path, const CutGraph& graph);

enum class SimilarityMode {
  kDirect,        // file holds the n x n similarity grid itself
  kInnerProduct,  // file holds ratings rows; s_ij = <row_i, row_j>
  kCosine,        // ratings rows; s_ij = cosine(row_i, row_j)
};

// Comma-separated numeric rows. Direct mode requires a square grid; the
// ratings modes accept n x d and compute the n x n similarity. Ragged rows
// raise ParseError; a zero ratings row in cosine mode raises
// ContractViolationError (its cosine is undefined).
SimilarityMatrix load_similarity_matrix(const std::string& path,
                                        SimilarityMode mode);

// One trace record per (algorithm, seed, round). The error marker records
// appended when a run dies use the algorithm name with "#error" appended
// and zeroed numeric fields.
struct TraceRecord {
  std::string experiment_id;
  std::string algorithm;
  std::uint64_t seed = 0;
  std::uint64_t adaptive_round = 0;
  std::uint64_t cumulative_queries = 0;
  int solution_size = 0;
  double value = 0.0;
};

inline constexpr const char* kTraceHeader =
    "experiment_id,algorithm,seed,adaptive_round,cumulative_queries,"
    "solution_size,value";

struct TraceFile {
  std::vector<TraceRecord> records;
};

// CSV with exactly kTraceHeader as the first line. String fields must not
// contain commas (InvalidInputError); floats go through format_double.
void write_trace_file(const std::string& path, const TraceFile& trace);
TraceFile read_trace_file(const std::string& path);

}  // namespace blits

#endif  // BLITS_IO_HPP_
