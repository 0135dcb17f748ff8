#include "raag/pyramidal.hpp"

#include <cstdlib>
#include <functional>
#include <queue>

#include "detail/column_cursor.hpp"
#include "raag/errors.hpp"
#include "raag/graphs.hpp"

namespace raag {

namespace {

struct Split {
  Word lower;  // normal form of p0
  Piling p1;
};

// Takes letters off the bottom of p, smallest rank first, skipping the
// pivot column, until only the pivot is exposed.
Split split_below_pivot(const Piling& p, const DefiningGraph& graph) {
  const auto supp = support(p);
  if (supp.empty()) throw EmptyPiling();
  const Generator pivot = *supp.begin();

  detail::ColumnCursor cur(p);
  using Entry = std::pair<int, Generator>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> exposed;
  auto offer = [&](Generator i) {
    if (i != pivot && !cur.empty(i) && cur.bottom(i) != Bead::zero) {
      exposed.emplace(letter_rank(bead_value(cur.bottom(i)) * i), i);
    }
  };
  for (Generator i = 1; i <= p.n_columns(); ++i) offer(i);

  std::vector<Letter> lower;
  while (!exposed.empty()) {
    const auto [rank, i] = exposed.top();
    exposed.pop();
    const Letter k = letter_of_rank(rank);
    if (cur.empty(i) || bead_value(cur.bottom(i)) * i != k) continue;
    cur.remove_bottom_letter(i, graph);
    lower.push_back(k);
    offer(i);
    for (Generator j : graph.neighbors(i)) offer(j);
  }
  return {Word(std::move(lower)), cur.remaining()};
}

// Bottom-up extraction of every letter of p in rank order, with the pivot
// column's letters ranked after all others.
Word pivot_last_normal_form(const Piling& p, const DefiningGraph& graph) {
  const auto supp = support(p);
  if (supp.empty()) return Word{};
  const Generator pivot = *supp.begin();
  const int offset = 2 * p.n_columns();
  auto rank_of = [&](Letter k) {
    return letter_rank(k) + (std::abs(k) == pivot ? offset : 0);
  };

  detail::ColumnCursor cur(p);
  using Entry = std::pair<int, Letter>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> exposed;
  auto offer = [&](Generator i) {
    if (!cur.empty(i) && cur.bottom(i) != Bead::zero) {
      const Letter k = bead_value(cur.bottom(i)) * i;
      exposed.emplace(rank_of(k), k);
    }
  };
  for (Generator i = 1; i <= p.n_columns(); ++i) offer(i);

  std::vector<Letter> out;
  out.reserve(p.signed_bead_count());
  while (!exposed.empty()) {
    const Letter k = exposed.top().second;
    exposed.pop();
    const Generator i = std::abs(k);
    if (cur.empty(i) || bead_value(cur.bottom(i)) * i != k) continue;
    cur.remove_bottom_letter(i, graph);
    out.push_back(k);
    offer(i);
    for (Generator j : graph.neighbors(i)) offer(j);
  }
  if (!cur.all_empty()) {
    throw MalformedPiling("no letter is exposed at the bottom of the piling");
  }
  return Word(std::move(out));
}

bool support_connected(const Piling& p, const DefiningGraph& graph) {
  return connected_components(induced_subgraph(graph, support(p))).size() <= 1;
}

}  // namespace

PyramidalDecomposition pyramidal_decomp(const Piling& p, const GroupSpec& spec) {
  const DefiningGraph graph(spec);
  auto split = split_below_pivot(p, graph);
  return {piling_of_word(split.lower, graph), std::move(split.p1)};
}

PyramidalResult pyramidal(const Piling& p, const GroupSpec& spec) {
  const DefiningGraph graph(spec);
  if (p.empty()) throw EmptyPiling();
  if (!support_connected(p, graph)) {
    throw NotNonSplit("pyramidal form requires a connected support");
  }
  const std::size_t max_rounds = p.signed_bead_count();
  std::vector<Letter> conjugator;
  Piling current = p;
  for (std::size_t round = 0;; ++round) {
    auto split = split_below_pivot(current, graph);
    if (split.lower.empty()) {
      return {std::move(current), Word(std::move(conjugator)), round};
    }
    if (round >= max_rounds) {
      throw NotNonSplit("no pyramidal form after " + std::to_string(max_rounds) +
                        " rounds");
    }
    conjugator.insert(conjugator.end(), split.lower.begin(), split.lower.end());
    // p = p0 p1 is conjugate to p1 p0 = p0^-1 p p0.
    current = piling_of_word(
        concat(normal_form_word(split.p1, graph), split.lower), graph);
  }
}

Word cyclic_normal_form(const Piling& pyramid, const GroupSpec& spec) {
  return pivot_last_normal_form(pyramid, DefiningGraph(spec));
}

CyclicPermutationResult is_cyclic_permutation(const Word& w, const Word& v) {
  if (w.size() != v.size()) return {};
  const std::size_t n = w.size();
  if (n == 0) return {true, Word{}};

  // Knuth-Morris-Pratt search for w inside v·v.
  std::vector<std::size_t> fail(n, 0);
  for (std::size_t i = 1, k = 0; i < n; ++i) {
    while (k > 0 && w[i] != w[k]) k = fail[k - 1];
    if (w[i] == w[k]) ++k;
    fail[i] = k;
  }
  for (std::size_t i = 0, k = 0; i < 2 * n - 1; ++i) {
    const Letter c = v[i % n];
    while (k > 0 && c != w[k]) k = fail[k - 1];
    if (c == w[k]) ++k;
    if (k == n) {
      const std::size_t shift = i + 1 - n;
      return {true, Word(std::vector<Letter>(v.begin(),
                                             v.begin() + static_cast<std::ptrdiff_t>(shift)))};
    }
  }
  return {};
}

std::size_t least_rotation_offset(const Word& w) {
  const std::size_t n = w.size();
  std::size_t i = 0;
  std::size_t j = 1;
  std::size_t k = 0;
  while (i < n && j < n && k < n) {
    const int a = letter_rank(w[(i + k) % n]);
    const int b = letter_rank(w[(j + k) % n]);
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return n == 0 ? 0 : std::min(i, j);
}

}  // namespace raag
