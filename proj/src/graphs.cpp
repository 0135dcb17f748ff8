#include "raag/graphs.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>

namespace raag {

DefiningGraph::DefiningGraph(const GroupSpec& spec)
    : n_(spec.n_generators()),
      adj_(static_cast<std::size_t>(n_) * n_, false),
      neighbors_(static_cast<std::size_t>(n_)) {
  for (Generator i = 1; i <= n_; ++i) {
    for (Generator j = 1; j <= n_; ++j) {
      if (i != j && !spec.commute(i, j)) {
        adj_[index(i, j)] = true;
        neighbors_[i - 1].push_back(j);
      }
    }
  }
}

std::vector<std::pair<Generator, Generator>> DefiningGraph::edges() const {
  std::vector<std::pair<Generator, Generator>> out;
  for (Generator i = 1; i <= n_; ++i) {
    for (Generator j : neighbors(i)) {
      if (i < j) out.emplace_back(i, j);
    }
  }
  return out;
}

DefiningGraph graph_from_edges(const GroupSpec& spec) { return DefiningGraph(spec); }

GraphFragment induced_subgraph(const DefiningGraph& g,
                               const std::set<Generator>& vs) {
  GraphFragment out;
  out.vertices.assign(vs.begin(), vs.end());
  for (Generator i : out.vertices) {
    for (Generator j : g.neighbors(i)) {
      if (i < j && vs.count(j)) out.edges.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<VertexSet> connected_components(const GraphFragment& g) {
  const auto& vs = g.vertices;
  auto slot = [&](Generator v) {
    return static_cast<std::size_t>(
        std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
  };
  std::vector<std::vector<std::size_t>> adj(vs.size());
  for (auto [a, b] : g.edges) {
    adj[slot(a)].push_back(slot(b));
    adj[slot(b)].push_back(slot(a));
  }

  std::vector<VertexSet> components;
  std::vector<bool> seen(vs.size(), false);
  for (std::size_t start = 0; start < vs.size(); ++start) {
    if (seen[start]) continue;
    VertexSet& comp = components.emplace_back();
    std::queue<std::size_t> todo;
    todo.push(start);
    seen[start] = true;
    while (!todo.empty()) {
      const auto u = todo.front();
      todo.pop();
      comp.push_back(vs[u]);
      for (auto v : adj[u]) {
        if (!seen[v]) {
          seen[v] = true;
          todo.push(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
  }
  // Starting vertices are visited in ascending order, so components are
  // already sorted by their minimum.
  return components;
}

std::vector<VertexSet> factorise(const DefiningGraph& g, const Piling& p) {
  return connected_components(induced_subgraph(g, support(p)));
}

std::vector<Piling> graphs_to_nsfactors(const std::vector<VertexSet>& components,
                                        const Word& w, const GroupSpec& spec) {
  validate_word(w, spec);
  const DefiningGraph graph(spec);
  std::vector<int> owner(static_cast<std::size_t>(spec.n_generators()) + 1, -1);
  for (std::size_t c = 0; c < components.size(); ++c) {
    for (Generator v : components[c]) owner[static_cast<std::size_t>(v)] = static_cast<int>(c);
  }
  std::vector<std::vector<Letter>> parts(components.size());
  for (Letter k : w) {
    const int c = owner[static_cast<std::size_t>(std::abs(k))];
    if (c >= 0) parts[static_cast<std::size_t>(c)].push_back(k);
  }
  std::vector<Piling> out;
  out.reserve(parts.size());
  for (auto& letters : parts) {
    out.push_back(piling_of_word(Word(std::move(letters)), graph));
  }
  return out;
}

FactorList factor_piling(const Piling& p, const GroupSpec& spec) {
  const DefiningGraph graph(spec);
  auto components = factorise(graph, p);
  auto pilings = graphs_to_nsfactors(components, normal_form_word(p, graph), spec);
  FactorList out;
  out.reserve(components.size());
  for (std::size_t i = 0; i < components.size(); ++i) {
    out.push_back({std::move(components[i]), std::move(pilings[i])});
  }
  return out;
}

}  // namespace raag
