#include <doctest.h>

#include <ostream>

#include "fixtures.hpp"
#include "raag/errors.hpp"
#include "raag/graphs.hpp"
#include "raag/oracle.hpp"
#include "raag/pyramidal.hpp"

using namespace raag;

namespace {

const char* kUnbalanced = "[[0,1,0,-1,0],[0,1,0,1],[0,1,0,0],[-1,0]]";

struct NonSplit {
  GroupSpec spec;
  Piling piling;
  VertexSet vertices;
};

// A random non-split, cyclically reduced, nonempty piling: one factor of a
// random cyclically reduced element.
NonSplit random_nonsplit(oracle::Rng& rng) {
  for (;;) {
    const int n = 2 + static_cast<int>(rng() % 5);
    auto spec = oracle::random_spec(rng, n, 0.4);
    const auto p = cyclically_reduce(
                       piling_of_word(oracle::random_word(rng, n, 1 + rng() % 14), spec), spec)
                       .reduced;
    auto factors = factor_piling(p, spec);
    if (factors.empty()) continue;
    auto& f = factors[rng() % factors.size()];
    return {std::move(spec), std::move(f.piling), std::move(f.vertices)};
  }
}

Word nf(const Piling& p, const GroupSpec& spec) { return normal_form_word(p, spec); }

}  // namespace

TEST_CASE("pyramidal_decomp splits off everything below the pivot") {
  const auto cgw = test::cgw_group();
  const auto d = pyramidal_decomp(parse_piling(kUnbalanced), cgw);
  CHECK(format_piling(d.p0) == "[[0],[],[0,1],[-1,0]]");
  CHECK(format_piling(d.p1) == "[[1,0,-1,0],[0,1,0,1],[0,0],[]]");

  const auto f2 = GroupSpec::free_group(2);
  const auto ab = piling_of_word(Word{1, 2}, f2);
  const auto d2 = pyramidal_decomp(ab, f2);
  CHECK(d2.p0.empty());
  CHECK(d2.p1 == ab);

  const auto d3 = pyramidal_decomp(piling_of_word(Word{2, 1}, f2), f2);
  CHECK(format_piling(d3.p0) == "[[0],[1]]");
  CHECK(format_piling(d3.p1) == "[[1],[0]]");
  CHECK(oracle::rewrite_equal(concat(nf(d3.p0, f2), nf(d3.p1, f2)), Word{2, 1}, f2));

  CHECK_THROWS_AS(pyramidal_decomp(empty_piling(f2), f2), EmptyPiling);
}

TEST_CASE("pyramidal iterates to a pyramid") {
  const auto cgw = test::cgw_group();
  const auto p = parse_piling(kUnbalanced);
  const auto r = pyramidal(p, cgw);
  CHECK(r.conjugator == Word{-4, 3, -4});
  CHECK(r.pyramidal_piling == piling_of_word(Word{1, 2, -1, 2, 3, -4}, cgw));
  CHECK(oracle::rewrite_equal(
      nf(p, cgw), concat(r.conjugator, Word{1, 2, -1, 2, 3, -4}, inverse(r.conjugator)), cgw));

  const auto single = piling_of_word(Word{1}, cgw);
  const auto s = pyramidal(single, cgw);
  CHECK(s.pyramidal_piling == single);
  CHECK(s.conjugator.empty());
  CHECK(s.rounds == 0);
}

TEST_CASE("pyramidal rejects split and empty input") {
  const auto cgw = test::cgw_group();
  CHECK_THROWS_AS(pyramidal(piling_of_word(Word{2, 3, -4}, cgw), cgw), NotNonSplit);
  CHECK_THROWS_AS(pyramidal(piling_of_word(Word{2, 4}, cgw), cgw), NotNonSplit);
  CHECK_THROWS_AS(pyramidal(empty_piling(cgw), cgw), EmptyPiling);
}

TEST_CASE("is_cyclic_permutation") {
  const auto r = is_cyclic_permutation(Word{2, 3}, Word{3, 2});
  CHECK(r.is_permutation);
  CHECK(r.witness == Word{3});
  // Free reduction of y^-1 v y gives w.
  CHECK(oracle::rewrite_equal(concat(inverse(*r.witness), Word{3, 2}, *r.witness), Word{2, 3},
                              GroupSpec::free_group(3)));

  const auto same = is_cyclic_permutation(Word{1, 2, 1}, Word{1, 2, 1});
  CHECK(same.is_permutation);
  CHECK(same.witness == Word{});
  CHECK_FALSE(is_cyclic_permutation(Word{1, 2}, Word{1, 3}).is_permutation);
  CHECK_FALSE(is_cyclic_permutation(Word{1, 2}, Word{1, 2, 1}).is_permutation);
  CHECK(is_cyclic_permutation(Word{}, Word{}).witness == Word{});
  // Smallest k wins on periodic words.
  CHECK(is_cyclic_permutation(Word{2, 1, 2, 1}, Word{1, 2, 1, 2}).witness == Word{1});
}

TEST_CASE("rotation witnesses are sound on exhaustive small words") {
  const auto f3 = GroupSpec::free_group(3);
  for (const auto& v : test::all_words(3, 4)) {
    for (std::size_t k = 0; k <= v.size(); ++k) {
      const Word w = rotate(v, k);
      const auto r = is_cyclic_permutation(w, v);
      REQUIRE(r.is_permutation);
      REQUIRE(r.witness->size() <= k % std::max<std::size_t>(v.size(), 1));
      REQUIRE(oracle::rewrite_equal(concat(inverse(*r.witness), v, *r.witness), w, f3));
    }
  }
}

TEST_CASE("least_rotation_offset picks the smallest index of the least rotation") {
  CHECK(least_rotation_offset(Word{}) == 0);
  CHECK(least_rotation_offset(Word{2, 1}) == 1);
  CHECK(least_rotation_offset(Word{-1, 1}) == 1);
  CHECK(least_rotation_offset(Word{2, 1, 2, 1}) == 1);
  for (const auto& w : test::all_words(2, 5)) {
    if (w.empty()) continue;
    std::size_t best = 0;
    for (std::size_t k = 1; k < w.size(); ++k) {
      if (shortlex_less(rotate(w, k), rotate(w, best))) best = k;
    }
    REQUIRE(least_rotation_offset(w) == best);
  }
}

TEST_CASE("pyramidal decomposition and iteration properties") {
  oracle::Rng rng(505);
  for (int trial = 0; trial < 800; ++trial) {
    const auto [spec, p, vertices] = random_nonsplit(rng);
    const Generator pivot = vertices.front();

    const auto d = pyramidal_decomp(p, spec);
    REQUIRE(oracle::rewrite_equal(nf(p, spec), concat(nf(d.p0, spec), nf(d.p1, spec)), spec));
    auto s0 = support(d.p0);
    auto s1 = support(d.p1);
    REQUIRE(s1.count(pivot));
    REQUIRE_FALSE(s0.count(pivot));
    s0.insert(s1.begin(), s1.end());
    REQUIRE(s0 == support(p));

    const auto r = pyramidal(p, spec);
    REQUIRE(r.rounds <= p.signed_bead_count());
    REQUIRE(pyramidal_decomp(r.pyramidal_piling, spec).p0.empty());
    REQUIRE(oracle::rewrite_equal(
        nf(p, spec),
        concat(r.conjugator, nf(r.pyramidal_piling, spec), inverse(r.conjugator)), spec));
  }
}

TEST_CASE("conjugate non-split pilings have rotated pyramidal normal forms") {
  oracle::Rng rng(606);
  int checked = 0;
  while (checked < 800) {
    const auto [spec, p, vertices] = random_nonsplit(rng);
    // Conjugate by letters of the same component and reduce again.
    std::vector<Letter> u;
    for (std::size_t i = rng() % 6; i > 0; --i) {
      const Generator g = vertices[rng() % vertices.size()];
      u.push_back(rng() % 2 ? g : -g);
    }
    const Word a = nf(p, spec);
    const Word b = concat(inverse(Word(u)), a, Word(u));
    const auto q = cyclically_reduce(piling_of_word(b, spec), spec).reduced;
    REQUIRE(support(q) == support(p));

    const Word pa = cyclic_normal_form(pyramidal(p, spec).pyramidal_piling, spec);
    const Word pb = cyclic_normal_form(pyramidal(q, spec).pyramidal_piling, spec);
    REQUIRE_MESSAGE(is_cyclic_permutation(pa, pb).is_permutation,
                    "a=" << a << " u=" << Word(u) << " pa=" << pa << " pb=" << pb);
    ++checked;
  }
}

TEST_CASE("cyclic_normal_form takes pivot letters as late as possible") {
  const GroupSpec spec(5, {{1, 2}, {1, 3}, {1, 5}, {2, 4}});
  const auto p = pyramidal(piling_of_word(Word{-1, -1, -4, -3, 5, 5, 2, -3}, spec), spec);
  const auto q = pyramidal(piling_of_word(Word{-1, -4, -1, -3, 5, 5, 2, -3}, spec), spec);
  CHECK(p.conjugator.empty());
  CHECK(q.conjugator.empty());
  // The shortlex normal forms of these conjugate pyramids are not rotations
  // of each other; the cyclic normal forms are.
  const Word a = cyclic_normal_form(p.pyramidal_piling, spec);
  const Word b = cyclic_normal_form(q.pyramidal_piling, spec);
  CHECK(a == Word{-1, -1, -4, -3, 5, 5, 2, -3});
  CHECK(b == Word{-1, -4, -3, 5, 5, 2, -3, -1});
  CHECK_FALSE(is_cyclic_permutation(nf(p.pyramidal_piling, spec), nf(q.pyramidal_piling, spec))
                  .is_permutation);
  CHECK(is_cyclic_permutation(a, b).is_permutation);
}
