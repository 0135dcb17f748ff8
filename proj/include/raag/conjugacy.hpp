#pragma once

// Word and conjugacy problems in right-angled Artin groups.

#include <optional>

#include "raag/words.hpp"

namespace raag {

/// When conjugate, witness x satisfies w1 = x^-1 * w2 * x.
struct ConjugacyResult {
  bool conjugate = false;
  std::optional<Word> witness;
};

enum class Route {
  automatic,  // free / free abelian shortcuts when the presentation allows
  general,    // always run the piling pipeline
};

bool identity(const Word& w, const GroupSpec& spec);
bool equal(const Word& w1, const Word& w2, const GroupSpec& spec);

/// Decides conjugacy and returns a freely reduced witness. Every positive
/// answer is checked with `equal` before returning; a failed check throws
/// WitnessVerificationFailed.
///
/// Witnesses are assembled from per-input canonical conjugators, so
/// swapping w1 and w2 yields the inverse witness as a group element.
ConjugacyResult is_conjugate(const Word& w1, const Word& w2, const GroupSpec& spec,
                             Route route = Route::automatic);

/// Throws NotFreeGroup unless the presentation has no commuting pairs.
ConjugacyResult is_conjugate_free(const Word& w1, const Word& w2,
                                  const GroupSpec& spec);

/// Throws NotAbelianGroup unless every pair of generators commutes.
ConjugacyResult is_conjugate_abelian(const Word& w1, const Word& w2,
                                     const GroupSpec& spec);

}  // namespace raag
