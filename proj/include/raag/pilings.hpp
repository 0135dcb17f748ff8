#pragma once

// Pilings: the canonical bead-stack representation of RAAG elements.
//
// A piling has one column per generator. Reading a word left to right, each
// letter k = +-i drops a signed bead onto column i and a 0 bead onto the
// column of every generator that does not commute with i. Columns are stored
// bottom to top. Equal group elements have identical pilings.

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "raag/defining_graph.hpp"
#include "raag/words.hpp"

namespace raag {

enum class Bead : std::int8_t { minus = -1, zero = 0, plus = 1 };

constexpr int bead_value(Bead b) noexcept { return static_cast<int>(b); }

using Column = std::vector<Bead>;

class Piling {
 public:
  Piling() = default;
  explicit Piling(std::vector<Column> columns) : columns_(std::move(columns)) {}

  /// From the bracket notation's integer lists; throws MalformedPiling on a
  /// bead outside {-1, 0, 1}.
  static Piling from_ints(const std::vector<std::vector<int>>& columns);

  int n_columns() const noexcept { return static_cast<int>(columns_.size()); }
  const Column& column(Generator i) const {
    return columns_[static_cast<std::size_t>(i - 1)];
  }
  const std::vector<Column>& columns() const noexcept { return columns_; }

  bool empty() const noexcept;
  std::size_t bead_count() const noexcept;
  /// Number of +1 and -1 beads, i.e. the length of the reduced word.
  std::size_t signed_bead_count() const noexcept;

  std::vector<std::vector<int>> to_ints() const;

  friend bool operator==(const Piling&, const Piling&) = default;

 private:
  std::vector<Column> columns_;
};

/// Piling plus the conjugator removed by cyclic reduction:
/// original = conjugator * reduced * conjugator^-1.
struct CyclicReductionResult {
  Piling reduced;
  Word conjugator;
};

Piling empty_piling(const GroupSpec& spec);

Piling push_letter(const Piling& p, Letter k, const DefiningGraph& graph);

Piling piling_of_word(const Word& w, const GroupSpec& spec);
Piling piling_of_word(const Word& w, const DefiningGraph& graph);

/// Shortlex-least word representing p. Throws MalformedPiling when the
/// columns are nonempty but no letter can be taken off the bottom.
Word normal_form_word(const Piling& p, const GroupSpec& spec);
Word normal_form_word(const Piling& p, const DefiningGraph& graph);

/// Generators whose column holds a signed bead.
std::set<Generator> support(const Piling& p);

CyclicReductionResult cyclically_reduce(const Piling& p, const GroupSpec& spec);
CyclicReductionResult cyclically_reduce(const Piling& p,
                                        const DefiningGraph& graph);

/// Checks column count and the per-column bead-count identity. Throws
/// MalformedPiling with a description of the first violation.
void validate_piling(const Piling& p, const DefiningGraph& graph);

// Bracket notation, e.g. "[[1,0],[0,0,-1],[-1,0]]".
std::string format_piling(const Piling& p);
Piling parse_piling(std::string_view text);
std::ostream& operator<<(std::ostream& out, const Piling& p);

}  // namespace raag
