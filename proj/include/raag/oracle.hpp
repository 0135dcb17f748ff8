#pragma once

// Brute-force reference procedures and random instance generation.
//
// Everything here works on words with the group's defining relations
// (commuting swaps, free cancellation) and never touches pilings, so it can
// serve as an independent check of the piling-based algorithms.

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "raag/words.hpp"

namespace raag::oracle {

/// Cancels a letter against an earlier inverse whenever every letter in
/// between commutes with it. The result is a geodesic for w.
Word rewrite_reduce(const Word& w, const GroupSpec& spec);
bool rewrite_identity(const Word& w, const GroupSpec& spec);
bool rewrite_equal(const Word& u, const Word& v, const GroupSpec& spec);

/// All words reachable from w by adjacent commuting swaps, deleting adjacent
/// inverse pairs, and inserting adjacent inverse pairs while staying within
/// max_len letters. Sorted shortlex. Throws BudgetExceeded past state_cap.
std::vector<Word> equivalent_class(const Word& w, const GroupSpec& spec,
                                   std::size_t max_len,
                                   std::size_t state_cap = 1'000'000);

/// Freely reduced words over generators 1..n of length <= max_len, shortlex.
std::vector<Word> reduced_words(int n, std::size_t max_len);

/// True iff some freely reduced x with |x| <= max_conj_len gives
/// w1 = x^-1 w2 x under rewrite_equal.
bool brute_force_is_conjugate(const Word& w1, const Word& w2, const GroupSpec& spec,
                              std::size_t max_conj_len);

/// Same search over a precomputed candidate list (see reduced_words).
bool brute_force_is_conjugate(const Word& w1, const Word& w2, const GroupSpec& spec,
                              std::span<const Word> candidates);

struct InstanceBounds {
  int min_generators = 2;
  int max_generators = 5;
  std::size_t min_length = 0;
  std::size_t max_length = 12;
  std::size_t max_conjugator_length = 6;
  double commuting_density = 0.5;  // probability that a pair commutes
  bool conjugate = true;           // w2 = u^-1 w1 u when set
};

struct Instance {
  GroupSpec spec;
  Word w1;
  Word w2;
  Word conjugator;  // u, empty when bounds.conjugate is false
};

Instance random_instance(std::uint64_t seed, const InstanceBounds& bounds);

using Rng = std::mt19937_64;

GroupSpec random_spec(Rng& rng, int n_generators, double commuting_density);
Word random_word(Rng& rng, int n_generators, std::size_t length);

/// Applies `steps` random relation moves (commuting swap, inverse-pair
/// insertion or deletion). The result represents the same element.
Word random_rewrite(Rng& rng, const Word& w, const GroupSpec& spec, std::size_t steps);

}  // namespace raag::oracle
