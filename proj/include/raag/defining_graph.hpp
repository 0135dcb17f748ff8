#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "raag/words.hpp"

namespace raag {

/// Defining graph: vertices 1..N, with an edge between every pair of
/// generators that do NOT commute.
class DefiningGraph {
 public:
  explicit DefiningGraph(const GroupSpec& spec);

  int n_vertices() const noexcept { return n_; }

  bool adjacent(Generator i, Generator j) const {
    return adj_[index(i, j)];
  }

  /// Neighbors of vertex i, ascending.
  std::span<const Generator> neighbors(Generator i) const {
    return neighbors_[static_cast<std::size_t>(i - 1)];
  }

  /// All edges (i, j) with i < j, in lexicographic order.
  std::vector<std::pair<Generator, Generator>> edges() const;

 private:
  std::size_t index(Generator i, Generator j) const {
    return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
  }

  int n_;
  std::vector<bool> adj_;
  std::vector<std::vector<Generator>> neighbors_;
};

}  // namespace raag
