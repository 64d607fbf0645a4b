// Copyright 2026 The Atompivot Authors
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

#include "atompivot/graph_io.h"

#include <fstream>
#include <vector>

#include "absl/strings/str_format.h"

namespace atompivot {

absl::StatusOr<Graph> ReadEdgeList(std::istream& in) {
  int64_t n = 0, m = 0;
  if (!(in >> n >> m) || n < 0 || m < 0) {
    return absl::InvalidArgumentError("edge list: bad header, expected 'n m'");
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (int64_t i = 0; i < m; ++i) {
    int64_t u = 0, v = 0;
    if (!(in >> u >> v)) {
      return absl::InvalidArgumentError(
          absl::StrFormat("edge list: expected %d edges, got %d", m, i));
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      return absl::InvalidArgumentError(
          absl::StrFormat("edge list: edge (%d, %d) out of range", u, v));
    }
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  return Graph::FromEdges(n, edges);
}

void WriteEdgeList(const Graph& g, std::ostream& out) {
  const std::vector<Edge> edges = g.Edges();
  out << g.initial_vertex_count() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
}

absl::StatusOr<Clustering> ReadClustering(std::istream& in,
                                          int64_t universe_size) {
  std::vector<int64_t> assignment(universe_size, -1);
  int64_t v = 0, id = 0;
  while (in >> v >> id) {
    if (v < 0 || v >= universe_size || id < 0) {
      return absl::InvalidArgumentError(
          absl::StrFormat("clustering: bad line '%d %d'", v, id));
    }
    if (assignment[v] != -1) {
      return absl::InvalidArgumentError(
          absl::StrFormat("clustering: vertex %d listed twice", v));
    }
    assignment[v] = id;
  }
  if (!in.eof()) return absl::InvalidArgumentError("clustering: parse error");
  return Clustering::FromAssignment(assignment);
}

void WriteClustering(const Clustering& c, std::ostream& out) {
  for (int64_t v = 0; v < c.universe_size(); ++v) {
    const int64_t id = c.ClusterOf(static_cast<VertexId>(v));
    if (id >= 0) out << v << ' ' << id << '\n';
  }
}

absl::StatusOr<Graph> ReadEdgeListFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError("cannot open " + path);
  return ReadEdgeList(in);
}

absl::Status WriteEdgeListFile(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) return absl::UnavailableError("cannot write " + path);
  WriteEdgeList(g, out);
  return out ? absl::OkStatus() : absl::DataLossError("write failed: " + path);
}

absl::StatusOr<Clustering> ReadClusteringFile(const std::string& path,
                                              int64_t universe_size) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError("cannot open " + path);
  return ReadClustering(in, universe_size);
}

absl::Status WriteClusteringFile(const Clustering& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) return absl::UnavailableError("cannot write " + path);
  WriteClustering(c, out);
  return out ? absl::OkStatus() : absl::DataLossError("write failed: " + path);
}

}  // namespace atompivot
