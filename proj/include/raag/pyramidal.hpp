#pragma once

// Pyramidal pilings and cyclic comparison of normal forms.
//
// For a non-split, cyclically reduced piling, the pivot is the lowest signed
// bead of the smallest generator in the support. Everything not lying above
// the pivot can be cycled from the bottom to the top; once nothing remains
// to cycle, the piling is a pyramid over the pivot. Its cyclic normal form
// reads the pyramid bottom-up taking the pivot generator's letters as late as
// possible, so that conjugate pyramids give cyclic permutations of one word.

#include <cstddef>
#include <optional>

#include "raag/pilings.hpp"
#include "raag/words.hpp"

namespace raag {

/// p = p0 * p1 with p1 the pyramid above the pivot.
struct PyramidalDecomposition {
  Piling p0;
  Piling p1;
};

/// input = conjugator * pyramidal_piling * conjugator^-1.
struct PyramidalResult {
  Piling pyramidal_piling;
  Word conjugator;
  std::size_t rounds = 0;  // decompositions with a nonempty p0
};

struct CyclicPermutationResult {
  bool is_permutation = false;
  /// Prefix y of v with w = y^-1 * v * y; present iff is_permutation.
  std::optional<Word> witness;
};

/// Throws EmptyPiling on an empty piling.
PyramidalDecomposition pyramidal_decomp(const Piling& p, const GroupSpec& spec);

/// Throws NotNonSplit when the support is disconnected or the number of
/// rounds exceeds the signed bead count of p.
PyramidalResult pyramidal(const Piling& p, const GroupSpec& spec);

/// Normal form of a pyramid under the letter order with the pivot
/// generator's letters moved after all others. Begins with the pivot.
Word cyclic_normal_form(const Piling& pyramid, const GroupSpec& spec);

CyclicPermutationResult is_cyclic_permutation(const Word& w, const Word& v);

/// Smallest k such that rotate(w, k) is the lexicographically least rotation
/// of w under letter_rank.
std::size_t least_rotation_offset(const Word& w);

}  // namespace raag
