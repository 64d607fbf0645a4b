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

#ifndef ATOMPIVOT_GRAPH_IO_H_
#define ATOMPIVOT_GRAPH_IO_H_

#include <istream>
#include <ostream>
#include <string>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "atompivot/graph.h"

namespace atompivot {

// Edge list: a header line "n m" followed by m lines "u v", 0-indexed and
// whitespace separated. Written with u < v in sorted order.
absl::StatusOr<Graph> ReadEdgeList(std::istream& in);
void WriteEdgeList(const Graph& g, std::ostream& out);

// Clustering: one line "vertex cluster_id" per covered vertex, in vertex
// order. Cluster ids are the clustering's internal indices.
absl::StatusOr<Clustering> ReadClustering(std::istream& in, int64_t universe_size);
void WriteClustering(const Clustering& c, std::ostream& out);

absl::StatusOr<Graph> ReadEdgeListFile(const std::string& path);
absl::Status WriteEdgeListFile(const Graph& g, const std::string& path);
absl::StatusOr<Clustering> ReadClusteringFile(const std::string& path,
                                              int64_t universe_size);
absl::Status WriteClusteringFile(const Clustering& c, const std::string& path);

}  // namespace atompivot

#endif  // ATOMPIVOT_GRAPH_IO_H_
