// Copyright 2026 The SlangLex Authors.
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

// Sentiment propagation over the related-word graph.

#ifndef SLANGLEX_PROPAGATION_H_
#define SLANGLEX_PROPAGATION_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "slanglex/ingestion.h"
#include "slanglex/lexicon.h"

namespace slanglex {

// Undirected simple graph over normalized terms. Node ids follow sorted term
// order; adjacency lists are sorted.
class SynonymGraph {
 public:
  SynonymGraph() = default;

  // Throws std::invalid_argument on duplicate nodes, self-loops or edges with
  // an endpoint that is not a node. Repeated edges in either direction
  // collapse to one.
  static SynonymGraph from_edges(std::vector<std::string> nodes,
                                 const std::vector<std::pair<std::string, std::string>>& edges);

  std::size_t node_count() const { return terms_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  const std::string& term(std::size_t node) const { return terms_[node]; }
  std::optional<std::size_t> node(std::string_view term) const;
  const std::vector<std::uint32_t>& neighbors(std::size_t node) const { return adjacency_[node]; }
  bool has_edge(std::string_view a, std::string_view b) const;

 private:
  std::vector<std::string> terms_;
  std::vector<std::vector<std::uint32_t>> adjacency_;
  std::size_t edge_count_ = 0;
};

// One node per vocabulary term; an edge wherever either side lists the other
// as related. Related terms outside the vocabulary are ignored.
SynonymGraph build_graph(const Vocabulary& vocabulary);

struct PropagationResult {
  Lexicon labeled;  // stage kPropagation; never contains a seed term
  std::size_t iterations = 0;
  std::vector<std::string> unreached;  // sorted
};

// Called once per newly assigned label: (iteration, term, strength).
using LabelObserver = std::function<void(std::size_t, std::string_view, double)>;

// Layered propagation. In each iteration every unlabeled node with at least
// one labeled neighbor takes the mean of those neighbors' strengths as they
// stood at the start of the iteration. Labels never change once assigned.
// Iteration stops after the first pass that assigns nothing, and that pass is
// counted. Seeds that are not graph nodes are ignored.
PropagationResult propagate(const SynonymGraph& graph, const Lexicon& seeds,
                            const LabelObserver& observer = {});

struct StageReport {
  std::map<Stage, std::size_t> by_stage;  // every Stage present, possibly 0
  std::map<int, std::size_t> by_class;    // keys -2..2, possibly 0
  std::size_t total = 0;

  std::string render_text() const;
  std::string render_json() const;
  bool operator==(const StageReport&) const = default;
};

StageReport stage_report(const Lexicon& lexicon);

}  // namespace slanglex

#endif  // SLANGLEX_PROPAGATION_H_
