#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "raag/defining_graph.hpp"
#include "raag/errors.hpp"
#include "raag/pilings.hpp"

namespace raag::detail {

void push_letter_in_place(std::vector<Column>& columns, Letter k,
                          const DefiningGraph& graph);

// View over a piling's columns that supports taking whole letters off the
// bottom and the top without copying. Columns are [lo, hi) ranges.
class ColumnCursor {
 public:
  explicit ColumnCursor(const Piling& p) : piling_(p) {
    lo_.assign(static_cast<std::size_t>(p.n_columns()), 0);
    hi_.reserve(lo_.size());
    for (const auto& c : p.columns()) hi_.push_back(c.size());
  }

  bool empty(Generator i) const { return lo_[i - 1] == hi_[i - 1]; }
  std::size_t size(Generator i) const { return hi_[i - 1] - lo_[i - 1]; }
  Bead bottom(Generator i) const { return piling_.column(i)[lo_[i - 1]]; }
  Bead top(Generator i) const { return piling_.column(i)[hi_[i - 1] - 1]; }

  bool all_empty() const {
    for (std::size_t c = 0; c < lo_.size(); ++c) {
      if (lo_[c] != hi_[c]) return false;
    }
    return true;
  }

  // Removes the signed bead at the bottom of column i and one 0 bead from the
  // bottom of every neighbor column.
  void remove_bottom_letter(Generator i, const DefiningGraph& graph) {
    if (empty(i) || bottom(i) == Bead::zero) fail(i, "bottom");
    for (Generator j : graph.neighbors(i)) {
      if (empty(j) || bottom(j) != Bead::zero) fail(i, "bottom");
    }
    ++lo_[i - 1];
    for (Generator j : graph.neighbors(i)) ++lo_[j - 1];
  }

  void remove_top_letter(Generator i, const DefiningGraph& graph) {
    if (empty(i) || top(i) == Bead::zero) fail(i, "top");
    for (Generator j : graph.neighbors(i)) {
      if (empty(j) || top(j) != Bead::zero) fail(i, "top");
    }
    --hi_[i - 1];
    for (Generator j : graph.neighbors(i)) --hi_[j - 1];
  }

  Piling remaining() const {
    std::vector<Column> cols;
    cols.reserve(lo_.size());
    for (std::size_t c = 0; c < lo_.size(); ++c) {
      const auto& src = piling_.columns()[c];
      cols.emplace_back(src.begin() + static_cast<std::ptrdiff_t>(lo_[c]),
                        src.begin() + static_cast<std::ptrdiff_t>(hi_[c]));
    }
    return Piling(std::move(cols));
  }

 private:
  [[noreturn]] static void fail(Generator i, const char* end) {
    throw MalformedPiling("letter on column " + std::to_string(i) +
                          " is not exposed at the " + end +
                          " of the piling");
  }

  const Piling& piling_;
  std::vector<std::size_t> lo_;
  std::vector<std::size_t> hi_;
};

}  // namespace raag::detail
