#pragma once

#include "raag/words.hpp"

namespace raag::test {

// <a1..a4 | [a1,a4], [a2,a3], [a2,a4]>, defining graph a1-a2, a1-a3, a3-a4.
inline GroupSpec cgw_group() { return GroupSpec(4, {{1, 4}, {2, 3}, {2, 4}}); }

inline Word cgw_w1() { return {-2, -2, -4, 3, 2, 4, 1, 2, -1, 2, 2, -4}; }
inline Word cgw_w2() { return {4, 3, -4, 2, 1, 2, -1, -4}; }

/// All 2^(N(N-1)/2) presentations on n generators.
inline std::vector<GroupSpec> all_specs(int n) {
  std::vector<GroupSpec::Pair> pairs;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<GroupSpec> out;
  for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<GroupSpec::Pair> chosen;
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if (mask & (1u << b)) chosen.push_back(pairs[b]);
    }
    out.emplace_back(n, std::move(chosen));
  }
  return out;
}

/// Every word (reduced or not) over n generators of length <= max_len.
inline std::vector<Word> all_words(int n, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::vector<Word> level{Word{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : level) {
      for (int g = 1; g <= n; ++g) {
        next.push_back(concat(w, Word{g}));
        next.push_back(concat(w, Word{-g}));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

}  // namespace raag::test
