#pragma once

// Defining-graph queries and the split of a piling into non-split factors.
//
// The support of an element induces a subgraph of the defining graph; each
// connected component carries one factor, and factors on different
// components commute.

#include <set>
#include <utility>
#include <vector>

#include "raag/defining_graph.hpp"
#include "raag/pilings.hpp"
#include "raag/words.hpp"

namespace raag {

using VertexSet = std::vector<Generator>;  // ascending

/// A subgraph on a subset of the defining graph's vertices.
struct GraphFragment {
  VertexSet vertices;
  std::vector<std::pair<Generator, Generator>> edges;  // i < j, sorted
};

struct Factor {
  VertexSet vertices;
  Piling piling;
};

using FactorList = std::vector<Factor>;

DefiningGraph graph_from_edges(const GroupSpec& spec);

GraphFragment induced_subgraph(const DefiningGraph& g, const std::set<Generator>& vs);

/// Components ordered by their minimal vertex.
std::vector<VertexSet> connected_components(const GraphFragment& g);

std::vector<VertexSet> factorise(const DefiningGraph& g, const Piling& p);

/// For each component, the piling (over all N columns) of the subword of w
/// made of letters on that component.
std::vector<Piling> graphs_to_nsfactors(const std::vector<VertexSet>& components,
                                        const Word& w, const GroupSpec& spec);

/// factorise followed by graphs_to_nsfactors on p's normal form.
FactorList factor_piling(const Piling& p, const GroupSpec& spec);

}  // namespace raag
