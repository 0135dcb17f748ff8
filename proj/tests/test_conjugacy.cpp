#include <doctest.h>

#include <ostream>

#include "fixtures.hpp"
#include "raag/conjugacy.hpp"
#include "raag/errors.hpp"
#include "raag/oracle.hpp"
#include "raag/pilings.hpp"

using namespace raag;

namespace {

bool valid_witness(const Word& w1, const Word& w2, const ConjugacyResult& r,
                   const GroupSpec& spec) {
  return r.conjugate && r.witness &&
         oracle::rewrite_equal(w1, concat(inverse(*r.witness), w2, *r.witness), spec);
}

}  // namespace

TEST_CASE("identity") {
  CHECK(identity(Word{1, -1}, GroupSpec::free_group(1)));
  CHECK(identity(Word{}, GroupSpec::free_group(1)));
  CHECK(identity(Word{1, 2, -1, -2}, GroupSpec::free_abelian(2)));
  CHECK_FALSE(identity(Word{1, 2, -1, -2}, GroupSpec::free_group(2)));
  CHECK_THROWS_AS(identity(Word{0}, GroupSpec::free_group(2)), InvalidLetter);
}

TEST_CASE("equal") {
  CHECK(equal(Word{1, 2}, Word{2, 1}, GroupSpec::free_abelian(2)));
  CHECK_FALSE(equal(Word{1, 2}, Word{2, 1}, GroupSpec::free_group(2)));
  const auto cgw = test::cgw_group();
  const Word w = test::cgw_w1();
  CHECK(equal(w, normal_form_word(piling_of_word(w, cgw), cgw), cgw));
  CHECK_THROWS_AS(equal(Word{1}, Word{7}, cgw), InvalidLetter);
}

TEST_CASE("equal agrees with the rewriting oracle on all short words") {
  for (const auto& spec : test::all_specs(3)) {
    const auto words = test::all_words(3, 3);
    for (const auto& u : words) {
      for (const auto& v : words) {
        REQUIRE(equal(u, v, spec) == oracle::rewrite_equal(u, v, spec));
      }
    }
  }
}

TEST_CASE("is_conjugate on the main worked example") {
  const auto cgw = test::cgw_group();
  const Word w1 = test::cgw_w1();
  const Word w2 = test::cgw_w2();
  const auto r = is_conjugate(w1, w2, cgw);
  CHECK(valid_witness(w1, w2, r, cgw));
  // a4^2 a2^2
  CHECK(oracle::rewrite_equal(*r.witness, Word{4, 4, 2, 2}, cgw));
}

TEST_CASE("is_conjugate small cases") {
  const auto f2 = GroupSpec::free_group(2);
  for (auto route : {Route::automatic, Route::general}) {
    const auto refl = is_conjugate(test::cgw_w1(), test::cgw_w1(), test::cgw_group(), route);
    CHECK(valid_witness(test::cgw_w1(), test::cgw_w1(), refl, test::cgw_group()));
    CHECK(refl.witness == Word{});

    const auto no = is_conjugate(Word{1}, Word{2}, f2, route);
    CHECK_FALSE(no.conjugate);
    CHECK_FALSE(no.witness.has_value());

    const auto yes = is_conjugate(Word{1, 2}, Word{2, 1}, f2, route);
    CHECK(valid_witness(Word{1, 2}, Word{2, 1}, yes, f2));
  }
  CHECK(oracle::brute_force_is_conjugate(Word{1, 2}, Word{2, 1}, f2, 1));

  // Trivial elements in a non-free, non-abelian group.
  const auto cgw = test::cgw_group();
  const Word t1{1, 3, -3, -1};
  const Word t2{2, -2};
  CHECK(valid_witness(t1, t2, is_conjugate(t1, t2, cgw), cgw));
  CHECK_FALSE(is_conjugate(Word{}, Word{1}, cgw).conjugate);
  // Different factor vertex sets.
  CHECK_FALSE(is_conjugate(Word{2, 3}, Word{3, 4}, cgw).conjugate);
  // Same supports, different cyclic words.
  CHECK_FALSE(is_conjugate(Word{1, 3, 1, -3}, Word{1, 1, 3, 3}, cgw).conjugate);
}

TEST_CASE("free group fast path") {
  const auto f2 = GroupSpec::free_group(2);
  CHECK(valid_witness(Word{1, 2, -1}, Word{2}, is_conjugate_free(Word{1, 2, -1}, Word{2}, f2), f2));
  CHECK_FALSE(is_conjugate_free(Word{1}, Word{2}, f2).conjugate);
  CHECK(valid_witness(Word{1, 2}, Word{2, 1}, is_conjugate_free(Word{1, 2}, Word{2, 1}, f2), f2));
  CHECK_THROWS_AS(is_conjugate_free(Word{1}, Word{1}, GroupSpec::free_abelian(2)), NotFreeGroup);
}

TEST_CASE("free abelian fast path") {
  const auto z2 = GroupSpec::free_abelian(2);
  const auto r = is_conjugate_abelian(Word{1, 2}, Word{2, 1}, z2);
  CHECK(r.conjugate);
  CHECK(r.witness == Word{});
  CHECK_FALSE(is_conjugate_abelian(Word{1}, Word{1, 1}, z2).conjugate);
  CHECK(is_conjugate_abelian(Word{1, -1}, Word{}, z2).witness == Word{});
  CHECK_THROWS_AS(is_conjugate_abelian(Word{1}, Word{1}, test::cgw_group()), NotAbelianGroup);
}

TEST_CASE("is_conjugate agrees with brute force on N = 2") {
  const auto words = oracle::reduced_words(2, 3);
  const auto candidates = oracle::reduced_words(2, 4);
  for (const auto& spec : test::all_specs(2)) {
    for (const auto& w1 : words) {
      for (const auto& w2 : words) {
        const bool expected = oracle::brute_force_is_conjugate(w1, w2, spec, candidates);
        const auto r = is_conjugate(w1, w2, spec, Route::general);
        REQUIRE_MESSAGE(r.conjugate == expected, w1 << " ~ " << w2);
        if (r.conjugate) REQUIRE(valid_witness(w1, w2, r, spec));
      }
    }
  }
}

TEST_CASE("conjugacy properties on random instances") {
  oracle::InstanceBounds bounds;
  bounds.max_generators = 6;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    bounds.commuting_density = static_cast<double>(seed % 5) / 4.0;
    const auto inst = oracle::random_instance(seed, bounds);
    const auto& spec = inst.spec;

    const auto r12 = is_conjugate(inst.w1, inst.w2, spec);
    const auto r21 = is_conjugate(inst.w2, inst.w1, spec);
    REQUIRE(valid_witness(inst.w1, inst.w2, r12, spec));
    REQUIRE(valid_witness(inst.w2, inst.w1, r21, spec));
    REQUIRE(equal(*r12.witness, inverse(*r21.witness), spec));
    REQUIRE(exponent_sums(inst.w1, spec.n_generators()) ==
            exponent_sums(inst.w2, spec.n_generators()));

    const auto general = is_conjugate(inst.w1, inst.w2, spec, Route::general);
    REQUIRE(valid_witness(inst.w1, inst.w2, general, spec));

    // Transitivity through a third conjugate.
    oracle::Rng rng(seed);
    const Word v = oracle::random_word(rng, spec.n_generators(), rng() % 6);
    const Word w3 = concat(inverse(v), inst.w2, v);
    REQUIRE(is_conjugate(inst.w1, w3, spec).conjugate);
    REQUIRE(is_conjugate(w3, inst.w2, spec).conjugate);
  }
}

TEST_CASE("fast paths agree with the general pipeline") {
  oracle::Rng rng(707);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const bool free = trial % 2 == 0;
    const auto spec = free ? GroupSpec::free_group(n) : GroupSpec::free_abelian(n);
    const Word w1 = oracle::random_word(rng, n, rng() % 8);
    Word w2 = oracle::random_word(rng, n, rng() % 8);
    if (trial % 4 < 2) {
      const Word u = oracle::random_word(rng, n, rng() % 5);
      w2 = concat(u, w1, inverse(u));
    }
    const auto fast = free ? is_conjugate_free(w1, w2, spec) : is_conjugate_abelian(w1, w2, spec);
    const auto general = is_conjugate(w1, w2, spec, Route::general);
    REQUIRE(fast.conjugate == general.conjugate);
    if (fast.conjugate) {
      REQUIRE(valid_witness(w1, w2, fast, spec));
      REQUIRE(valid_witness(w1, w2, general, spec));
    }
  }
}
