#include "raag/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>

#include "raag/errors.hpp"

namespace raag::oracle {

Word rewrite_reduce(const Word& w, const GroupSpec& spec) {
  validate_word(w, spec);
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter k : w) {
    bool cancelled = false;
    for (std::size_t j = out.size(); j-- > 0;) {
      if (out[j] == -k) {
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
        cancelled = true;
        break;
      }
      if (std::abs(out[j]) == std::abs(k) || !spec.commute(out[j], k)) break;
    }
    if (!cancelled) out.push_back(k);
  }
  return Word(std::move(out));
}

bool rewrite_identity(const Word& w, const GroupSpec& spec) {
  return rewrite_reduce(w, spec).empty();
}

bool rewrite_equal(const Word& u, const Word& v, const GroupSpec& spec) {
  return rewrite_identity(concat(u, inverse(v)), spec);
}

std::vector<Word> equivalent_class(const Word& w, const GroupSpec& spec,
                                   std::size_t max_len, std::size_t state_cap) {
  validate_word(w, spec);
  using Letters = std::vector<Letter>;
  std::set<Letters> seen{w.vector()};
  std::deque<Letters> todo{w.vector()};
  auto visit = [&](Letters next) {
    if (seen.insert(next).second) {
      if (seen.size() > state_cap) {
        throw BudgetExceeded("equivalence class exceeds " +
                             std::to_string(state_cap) + " words");
      }
      todo.push_back(std::move(next));
    }
  };

  const int n = spec.n_generators();
  while (!todo.empty()) {
    const Letters cur = std::move(todo.front());
    todo.pop_front();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (std::abs(cur[i]) != std::abs(cur[i + 1]) && spec.commute(cur[i], cur[i + 1])) {
        Letters next = cur;
        std::swap(next[i], next[i + 1]);
        visit(std::move(next));
      }
      if (cur[i] == -cur[i + 1]) {
        Letters next = cur;
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(i),
                   next.begin() + static_cast<std::ptrdiff_t>(i + 2));
        visit(std::move(next));
      }
    }
    if (cur.size() + 2 <= max_len) {
      for (std::size_t pos = 0; pos <= cur.size(); ++pos) {
        for (Letter g = 1; g <= n; ++g) {
          for (Letter k : {g, -g}) {
            Letters next = cur;
            next.insert(next.begin() + static_cast<std::ptrdiff_t>(pos), {k, -k});
            visit(std::move(next));
          }
        }
      }
    }
  }

  std::vector<Word> out;
  out.reserve(seen.size());
  for (const auto& letters : seen) out.emplace_back(letters);
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

std::vector<Word> reduced_words(int n, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::vector<Word> level{Word{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : level) {
      for (int rank = 1; rank <= 2 * n; ++rank) {
        const Letter k = letter_of_rank(rank);
        if (!w.empty() && w[w.size() - 1] == -k) continue;
        next.push_back(concat(w, Word{k}));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

bool brute_force_is_conjugate(const Word& w1, const Word& w2, const GroupSpec& spec,
                              std::span<const Word> candidates) {
  // Conjugate elements have the same image in the abelianization.
  if (exponent_sums(w1, spec.n_generators()) != exponent_sums(w2, spec.n_generators())) {
    return false;
  }
  for (const auto& x : candidates) {
    if (rewrite_equal(w1, concat(inverse(x), w2, x), spec)) return true;
  }
  return false;
}

bool brute_force_is_conjugate(const Word& w1, const Word& w2, const GroupSpec& spec,
                              std::size_t max_conj_len) {
  validate_word(w1, spec);
  validate_word(w2, spec);
  const auto candidates = reduced_words(spec.n_generators(), max_conj_len);
  return brute_force_is_conjugate(w1, w2, spec, candidates);
}

GroupSpec random_spec(Rng& rng, int n_generators, double commuting_density) {
  std::bernoulli_distribution commutes(commuting_density);
  std::vector<GroupSpec::Pair> pairs;
  for (int i = 1; i <= n_generators; ++i) {
    for (int j = i + 1; j <= n_generators; ++j) {
      if (commutes(rng)) pairs.emplace_back(i, j);
    }
  }
  return GroupSpec(n_generators, std::move(pairs));
}

Word random_word(Rng& rng, int n_generators, std::size_t length) {
  std::uniform_int_distribution<int> rank(1, 2 * n_generators);
  std::vector<Letter> letters(length);
  for (auto& k : letters) k = letter_of_rank(rank(rng));
  return Word(std::move(letters));
}

Word random_rewrite(Rng& rng, const Word& w, const GroupSpec& spec, std::size_t steps) {
  std::vector<Letter> cur = w.vector();
  std::uniform_int_distribution<int> move(0, 2);
  std::uniform_int_distribution<int> rank(1, 2 * spec.n_generators());
  std::vector<std::size_t> spots;
  auto pick = [&](std::size_t count) {
    return std::uniform_int_distribution<std::size_t>(0, count - 1)(rng);
  };
  for (std::size_t s = 0; s < steps; ++s) {
    const int m = move(rng);
    if (m == 1) {
      const Letter k = letter_of_rank(rank(rng));
      cur.insert(cur.begin() + static_cast<std::ptrdiff_t>(pick(cur.size() + 1)), {k, -k});
      continue;
    }
    spots.clear();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      const bool ok = m == 0 ? std::abs(cur[i]) != std::abs(cur[i + 1]) &&
                                   spec.commute(cur[i], cur[i + 1])
                             : cur[i] == -cur[i + 1];
      if (ok) spots.push_back(i);
    }
    if (spots.empty()) continue;
    const std::size_t i = spots[pick(spots.size())];
    if (m == 0) {
      std::swap(cur[i], cur[i + 1]);
    } else {
      cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(i),
                cur.begin() + static_cast<std::ptrdiff_t>(i + 2));
    }
  }
  return Word(std::move(cur));
}

Instance random_instance(std::uint64_t seed, const InstanceBounds& bounds) {
  Rng rng(seed);
  const int n = std::uniform_int_distribution<int>(bounds.min_generators,
                                                   bounds.max_generators)(rng);
  GroupSpec spec = random_spec(rng, n, bounds.commuting_density);
  const auto len = std::uniform_int_distribution<std::size_t>(bounds.min_length,
                                                              bounds.max_length)(rng);
  Word w1 = random_word(rng, n, len);
  if (!bounds.conjugate) {
    const auto len2 = std::uniform_int_distribution<std::size_t>(bounds.min_length,
                                                                 bounds.max_length)(rng);
    Word w2 = random_word(rng, n, len2);
    return {std::move(spec), std::move(w1), std::move(w2), Word{}};
  }
  const auto ulen = std::uniform_int_distribution<std::size_t>(
      0, bounds.max_conjugator_length)(rng);
  Word u = random_word(rng, n, ulen);
  Word w2 = concat(inverse(u), w1, u);
  return {std::move(spec), std::move(w1), std::move(w2), std::move(u)};
}

}  // namespace raag::oracle
