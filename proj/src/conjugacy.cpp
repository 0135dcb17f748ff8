#include "raag/conjugacy.hpp"

#include "raag/errors.hpp"
#include "raag/graphs.hpp"
#include "raag/pilings.hpp"
#include "raag/pyramidal.hpp"

namespace raag {

bool identity(const Word& w, const GroupSpec& spec) {
  return normal_form_word(piling_of_word(w, spec), spec).empty();
}

bool equal(const Word& w1, const Word& w2, const GroupSpec& spec) {
  validate_word(w1, spec);
  validate_word(w2, spec);
  const DefiningGraph graph(spec);
  return normal_form_word(piling_of_word(w1, graph), graph) ==
         normal_form_word(piling_of_word(w2, graph), graph);
}

namespace {

Word prefix(const Word& w, std::size_t k) {
  return Word(std::vector<Letter>(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k)));
}

// y with a = y^-1 * b * y, for cyclic permutations a and b of one another.
// Both sides are rotated to the least rotation, so the result only depends on
// each word separately and y(b, a) = y(a, b)^-1.
Word rotation_witness(const Word& a, const Word& b) {
  const Word to_least_a = prefix(a, least_rotation_offset(a));
  const Word to_least_b = prefix(b, least_rotation_offset(b));
  return concat(to_least_b, inverse(to_least_a));
}

ConjugacyResult finish(const Word& w1, const Word& w2, const Word& x,
                       const GroupSpec& spec) {
  const DefiningGraph graph(spec);
  Word reduced = normal_form_word(piling_of_word(x, graph), graph);
  if (!equal(w1, concat(inverse(reduced), w2, reduced), spec)) {
    throw WitnessVerificationFailed("witness " + format_word(reduced) +
                                    " does not conjugate " + format_word(w2) +
                                    " to " + format_word(w1));
  }
  return {true, std::move(reduced)};
}

ConjugacyResult general_pipeline(const Word& w1, const Word& w2,
                                 const GroupSpec& spec) {
  const DefiningGraph graph(spec);
  // w1 = d1 P d1^-1, w2 = d2 Q d2^-1.
  const auto [p, d1] = cyclically_reduce(piling_of_word(w1, graph), graph);
  const auto [q, d2] = cyclically_reduce(piling_of_word(w2, graph), graph);

  const FactorList p_factors = factor_piling(p, spec);
  const FactorList q_factors = factor_piling(q, spec);
  // Both lists are ordered by minimal vertex and their vertex sets are
  // disjoint, so comparing them in order compares the collections.
  if (p_factors.size() != q_factors.size()) return {};
  for (std::size_t i = 0; i < p_factors.size(); ++i) {
    if (p_factors[i].vertices != q_factors[i].vertices) return {};
  }

  // Per factor: P_i = s P~ s^-1, Q_i = t Q~ t^-1, P~ = y^-1 Q~ y, hence
  // P_i = z^-1 Q_i z with z = t y s^-1.
  std::vector<Letter> z;
  for (std::size_t i = 0; i < p_factors.size(); ++i) {
    const auto pp = pyramidal(p_factors[i].piling, spec);
    const auto qq = pyramidal(q_factors[i].piling, spec);
    const Word a = cyclic_normal_form(pp.pyramidal_piling, spec);
    const Word b = cyclic_normal_form(qq.pyramidal_piling, spec);
    if (!is_cyclic_permutation(a, b).is_permutation) return {};
    const Word zi = concat(qq.conjugator, rotation_witness(a, b),
                           inverse(pp.conjugator));
    z.insert(z.end(), zi.begin(), zi.end());
  }
  return finish(w1, w2, concat(d2, Word(std::move(z)), inverse(d1)), spec);
}

struct FreeCyclicReduction {
  Word reduced;
  Word conjugator;  // w = conjugator * reduced * conjugator^-1
};

FreeCyclicReduction free_cyclic_reduction(const Word& w) {
  std::vector<Letter> stack;
  for (Letter k : w) {
    if (!stack.empty() && stack.back() == -k) {
      stack.pop_back();
    } else {
      stack.push_back(k);
    }
  }
  std::size_t lo = 0;
  std::size_t hi = stack.size();
  while (hi - lo >= 2 && stack[lo] == -stack[hi - 1]) {
    ++lo;
    --hi;
  }
  return {Word(std::vector<Letter>(stack.begin() + static_cast<std::ptrdiff_t>(lo),
                                   stack.begin() + static_cast<std::ptrdiff_t>(hi))),
          Word(std::vector<Letter>(stack.begin(),
                                   stack.begin() + static_cast<std::ptrdiff_t>(lo)))};
}

}  // namespace

ConjugacyResult is_conjugate_free(const Word& w1, const Word& w2,
                                  const GroupSpec& spec) {
  if (!spec.is_free()) throw NotFreeGroup();
  validate_word(w1, spec);
  validate_word(w2, spec);
  const auto r1 = free_cyclic_reduction(w1);
  const auto r2 = free_cyclic_reduction(w2);
  if (!is_cyclic_permutation(r1.reduced, r2.reduced).is_permutation) return {};
  const Word y = rotation_witness(r1.reduced, r2.reduced);
  return finish(w1, w2, concat(r2.conjugator, y, inverse(r1.conjugator)), spec);
}

ConjugacyResult is_conjugate_abelian(const Word& w1, const Word& w2,
                                     const GroupSpec& spec) {
  if (!spec.is_abelian()) throw NotAbelianGroup();
  validate_word(w1, spec);
  validate_word(w2, spec);
  if (exponent_sums(w1, spec.n_generators()) != exponent_sums(w2, spec.n_generators())) {
    return {};
  }
  return finish(w1, w2, Word{}, spec);
}

ConjugacyResult is_conjugate(const Word& w1, const Word& w2, const GroupSpec& spec,
                             Route route) {
  validate_word(w1, spec);
  validate_word(w2, spec);
  if (route == Route::automatic) {
    if (spec.is_abelian()) return is_conjugate_abelian(w1, w2, spec);
    if (spec.is_free()) return is_conjugate_free(w1, w2, spec);
  }
  return general_pipeline(w1, w2, spec);
}

}  // namespace raag
