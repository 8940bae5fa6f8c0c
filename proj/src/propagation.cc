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

#include "slanglex/propagation.h"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "averaging.h"
#include "json.hpp"

namespace slanglex {

SynonymGraph SynonymGraph::from_edges(
    std::vector<std::string> nodes,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  SynonymGraph g;
  std::sort(nodes.begin(), nodes.end());
  if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end()) {
    throw std::invalid_argument("duplicate graph node");
  }
  g.terms_ = std::move(nodes);
  g.adjacency_.resize(g.terms_.size());
  for (const auto& [a, b] : edges) {
    const auto ia = g.node(a);
    const auto ib = g.node(b);
    if (!ia || !ib) throw std::invalid_argument("edge endpoint is not a node: " + a + " - " + b);
    if (*ia == *ib) throw std::invalid_argument("self-loop on '" + a + "'");
    g.adjacency_[*ia].push_back(static_cast<std::uint32_t>(*ib));
    g.adjacency_[*ib].push_back(static_cast<std::uint32_t>(*ia));
  }
  for (auto& list : g.adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    g.edge_count_ += list.size();
  }
  g.edge_count_ /= 2;
  return g;
}

std::optional<std::size_t> SynonymGraph::node(std::string_view term) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), term);
  if (it == terms_.end() || *it != term) return std::nullopt;
  return static_cast<std::size_t>(it - terms_.begin());
}

bool SynonymGraph::has_edge(std::string_view a, std::string_view b) const {
  const auto ia = node(a);
  const auto ib = node(b);
  if (!ia || !ib) return false;
  const auto& list = adjacency_[*ia];
  return std::binary_search(list.begin(), list.end(), static_cast<std::uint32_t>(*ib));
}

SynonymGraph build_graph(const Vocabulary& vocabulary) {
  std::vector<std::string> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [term, entry] : vocabulary) {
    nodes.push_back(term);
    for (const std::string& related : entry.related_terms) {
      if (related != term && vocabulary.contains(related)) edges.emplace_back(term, related);
    }
  }
  return SynonymGraph::from_edges(std::move(nodes), edges);
}

PropagationResult propagate(const SynonymGraph& graph, const Lexicon& seeds,
                            const LabelObserver& observer) {
  PropagationResult result;
  const std::size_t n = graph.node_count();
  if (n == 0) return result;

  std::vector<std::optional<double>> label(n);
  std::vector<std::size_t> frontier;  // labeled during the previous pass
  for (std::size_t v = 0; v < n; ++v) {
    if (const LexiconEntry* e = seeds.find(graph.term(v))) {
      label[v] = e->strength.value();
      frontier.push_back(v);
    }
  }

  for (;;) {
    ++result.iterations;
    // Only neighbors of last pass's new labels can have become reachable.
    std::vector<std::size_t> candidates;
    for (std::size_t v : frontier) {
      for (std::uint32_t u : graph.neighbors(v)) {
        if (!label[u]) candidates.push_back(u);
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<std::pair<std::size_t, double>> assigned;
    for (std::size_t u : candidates) {
      std::vector<double> values;
      for (std::uint32_t w : graph.neighbors(u)) {
        if (label[w]) values.push_back(*label[w]);
      }
      assigned.emplace_back(u, detail::symmetric_mean(std::move(values)));
    }
    if (assigned.empty()) break;

    frontier.clear();
    for (const auto& [u, value] : assigned) {
      label[u] = value;
      frontier.push_back(u);
      if (observer) observer(result.iterations, graph.term(u), value);
      result.labeled.insert(
          {graph.term(u), SentimentStrength::clamped(value), Stage::kPropagation, {}});
    }
  }

  for (std::size_t v = 0; v < n; ++v) {
    if (!label[v]) result.unreached.push_back(graph.term(v));
  }
  return result;
}

StageReport stage_report(const Lexicon& lexicon) {
  StageReport report;
  for (Stage s : {Stage::kSeedLexicon, Stage::kCorpusEstimate, Stage::kPropagation,
                  Stage::kImported}) {
    report.by_stage[s] = 0;
  }
  for (int c = -2; c <= 2; ++c) report.by_class[c] = 0;
  for (const auto& [term, entry] : lexicon) {
    ++report.by_stage[entry.stage];
    ++report.by_class[classify(entry.strength).value()];
    ++report.total;
  }
  return report;
}

std::string StageReport::render_text() const {
  std::string out = "stage         count\n";
  char line[128];
  for (const auto& [stage, count] : by_stage) {
    std::snprintf(line, sizeof line, "%-12s %6zu\n", std::string(stage_name(stage)).c_str(),
                  count);
    out += line;
  }
  std::snprintf(line, sizeof line, "%-12s %6zu\n\n", "total", total);
  out += line;

  out += "class   count   share\n";
  std::size_t largest = 0;
  for (const auto& [cls, count] : by_class) largest = std::max(largest, count);
  for (const auto& [cls, count] : by_class) {
    const double share = total ? 100.0 * static_cast<double>(count) / static_cast<double>(total) : 0.0;
    const std::size_t bar = largest ? (count * 40 + largest - 1) / largest : 0;
    std::snprintf(line, sizeof line, cls == 0 ? "%5d %7zu  %5.1f%%" : "%+5d %7zu  %5.1f%%", cls,
                  count, share);
    out += line;
    if (bar > 0) out.append("  ").append(bar, '#');
    out += '\n';
  }
  return out;
}

std::string StageReport::render_json() const {
  nlohmann::ordered_json j;
  for (const auto& [stage, count] : by_stage) j["stages"][std::string(stage_name(stage))] = count;
  for (const auto& [cls, count] : by_class) j["classes"][std::to_string(cls)] = count;
  j["total"] = total;
  return j.dump(2) + "\n";
}

}  // namespace slanglex
