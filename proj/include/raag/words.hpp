#pragma once

// Words over the signed generator alphabet of a right-angled Artin group.
//
// Generator i (1-based) is the letter i, its inverse is -i. Letters are
// ordered 1 < -1 < 2 < -2 < ... and words are compared shortlex.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace raag {

using Letter = std::int32_t;
using Generator = std::int32_t;

/// Immutable sequence of nonzero letters. The empty word is the identity.
class Word {
 public:
  using const_iterator = std::vector<Letter>::const_iterator;

  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const_iterator begin() const noexcept { return letters_.begin(); }
  const_iterator end() const noexcept { return letters_.end(); }
  std::span<const Letter> letters() const noexcept { return letters_; }
  const std::vector<Letter>& vector() const noexcept { return letters_; }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// A RAAG presentation: N generators and the pairs of generators that
/// commute. Pairs are normalized to (a, b) with a < b and kept sorted.
class GroupSpec {
 public:
  using Pair = std::pair<Generator, Generator>;

  /// Throws InvalidSpec on N < 1, self-pairs, out-of-range indices, or
  /// duplicates (including reversed duplicates).
  GroupSpec(int n_generators, std::vector<Pair> commuting_pairs);

  static GroupSpec free_group(int n);
  static GroupSpec free_abelian(int n);

  int n_generators() const noexcept { return n_; }
  const std::vector<Pair>& commuting_pairs() const noexcept { return pairs_; }

  /// True when generators a and b (either sign, a != b) commute.
  bool commute(Generator a, Generator b) const;

  bool is_free() const noexcept { return pairs_.empty(); }
  bool is_abelian() const noexcept {
    return pairs_.size() == static_cast<std::size_t>(n_) * (n_ - 1) / 2;
  }

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.n_ == b.n_ && a.pairs_ == b.pairs_;
  }

 private:
  int n_;
  std::vector<Pair> pairs_;
  std::vector<bool> commute_;  // n_ x n_, 0-based
};

/// Throws InvalidLetter for the first letter that is 0 or exceeds N.
void validate_word(const Word& w, const GroupSpec& spec);

Word inverse(const Word& w);
Word concat(const Word& u, const Word& v);

template <class... Rest>
Word concat(const Word& u, const Word& v, const Word& w, const Rest&... rest) {
  return concat(concat(u, v), w, rest...);
}

/// z·y where w = y·z and |y| = k mod |w|.
Word rotate(const Word& w, std::size_t k);

/// Position of k in the order 1 < -1 < 2 < -2 < ...
constexpr int letter_rank(Letter k) noexcept {
  return k > 0 ? 2 * k - 1 : -2 * k;
}

/// Inverse of letter_rank.
constexpr Letter letter_of_rank(int rank) noexcept {
  return rank % 2 == 1 ? (rank + 1) / 2 : -(rank / 2);
}

bool shortlex_less(const Word& u, const Word& v);

/// Exponent sum of each generator; index 0 is generator 1.
std::vector<long long> exponent_sums(const Word& w, int n_generators);

/// Generators occurring in w, ascending.
std::vector<Generator> word_support(const Word& w);

// Text syntax: "-2,-2,-4,3" with optional whitespace; "" is the identity.
Word parse_word(std::string_view text);
std::string format_word(const Word& w);
std::ostream& operator<<(std::ostream& out, const Word& w);  // [1,-2]

/// Commuting list syntax "1,4;2,3;2,4"; the empty string is the free group.
std::vector<GroupSpec::Pair> parse_commuting(std::string_view text);
std::string format_commuting(const std::vector<GroupSpec::Pair>& pairs);

}  // namespace raag
