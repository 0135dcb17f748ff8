#include "raag/pilings.hpp"

#include <cstdlib>
#include <functional>
#include <queue>
#include <sstream>

#include <json.hpp>

#include "detail/column_cursor.hpp"
#include "raag/errors.hpp"

namespace raag {

Piling Piling::from_ints(const std::vector<std::vector<int>>& columns) {
  std::vector<Column> out;
  out.reserve(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    Column col;
    col.reserve(columns[c].size());
    for (int v : columns[c]) {
      if (v < -1 || v > 1) {
        throw MalformedPiling("bead value " + std::to_string(v) +
                              " in column " + std::to_string(c + 1) +
                              " is not one of -1, 0, 1");
      }
      col.push_back(static_cast<Bead>(v));
    }
    out.push_back(std::move(col));
  }
  return Piling(std::move(out));
}

bool Piling::empty() const noexcept {
  for (const auto& c : columns_) {
    if (!c.empty()) return false;
  }
  return true;
}

std::size_t Piling::bead_count() const noexcept {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

std::size_t Piling::signed_bead_count() const noexcept {
  std::size_t n = 0;
  for (const auto& c : columns_) {
    for (Bead b : c) n += b != Bead::zero;
  }
  return n;
}

std::vector<std::vector<int>> Piling::to_ints() const {
  std::vector<std::vector<int>> out;
  out.reserve(columns_.size());
  for (const auto& c : columns_) {
    std::vector<int>& col = out.emplace_back();
    col.reserve(c.size());
    for (Bead b : c) col.push_back(bead_value(b));
  }
  return out;
}

Piling empty_piling(const GroupSpec& spec) {
  return Piling(std::vector<Column>(static_cast<std::size_t>(spec.n_generators())));
}

namespace detail {

void push_letter_in_place(std::vector<Column>& columns, Letter k,
                          const DefiningGraph& graph) {
  const Generator i = std::abs(k);
  const Bead sign = k > 0 ? Bead::plus : Bead::minus;
  const Bead opposite = k > 0 ? Bead::minus : Bead::plus;
  auto& own = columns[static_cast<std::size_t>(i - 1)];
  const auto neighbors = graph.neighbors(i);

  bool cancels = !own.empty() && own.back() == opposite;
  if (cancels) {
    for (Generator j : neighbors) {
      const auto& col = columns[static_cast<std::size_t>(j - 1)];
      if (col.empty() || col.back() != Bead::zero) {
        cancels = false;
        break;
      }
    }
  }
  if (cancels) {
    own.pop_back();
    for (Generator j : neighbors) columns[static_cast<std::size_t>(j - 1)].pop_back();
    return;
  }
  own.push_back(sign);
  for (Generator j : neighbors) {
    columns[static_cast<std::size_t>(j - 1)].push_back(Bead::zero);
  }
}

}  // namespace detail

Piling push_letter(const Piling& p, Letter k, const DefiningGraph& graph) {
  std::vector<Column> columns = p.columns();
  detail::push_letter_in_place(columns, k, graph);
  return Piling(std::move(columns));
}

Piling piling_of_word(const Word& w, const DefiningGraph& graph) {
  std::vector<Column> columns(static_cast<std::size_t>(graph.n_vertices()));
  for (Letter k : w) detail::push_letter_in_place(columns, k, graph);
  return Piling(std::move(columns));
}

Piling piling_of_word(const Word& w, const GroupSpec& spec) {
  validate_word(w, spec);
  return piling_of_word(w, DefiningGraph(spec));
}

namespace {

using RankedColumn = std::pair<int, Generator>;
using MinHeap = std::priority_queue<RankedColumn, std::vector<RankedColumn>,
                                    std::greater<>>;

void check_shape(const Piling& p, const DefiningGraph& graph) {
  if (p.n_columns() != graph.n_vertices()) {
    throw MalformedPiling("piling has " + std::to_string(p.n_columns()) +
                          " columns, expected " +
                          std::to_string(graph.n_vertices()));
  }
}

Letter signed_letter(Generator i, Bead b) {
  return bead_value(b) * i;
}

}  // namespace

Word normal_form_word(const Piling& p, const DefiningGraph& graph) {
  check_shape(p, graph);
  detail::ColumnCursor cur(p);
  MinHeap exposed;
  auto offer = [&](Generator i) {
    if (!cur.empty(i) && cur.bottom(i) != Bead::zero) {
      exposed.emplace(letter_rank(signed_letter(i, cur.bottom(i))), i);
    }
  };
  for (Generator i = 1; i <= p.n_columns(); ++i) offer(i);

  std::vector<Letter> out;
  out.reserve(p.signed_bead_count());
  while (!exposed.empty()) {
    const auto [rank, i] = exposed.top();
    exposed.pop();
    const Letter k = letter_of_rank(rank);
    if (cur.empty(i) || signed_letter(i, cur.bottom(i)) != k) continue;
    cur.remove_bottom_letter(i, graph);
    out.push_back(k);
    offer(i);
    for (Generator j : graph.neighbors(i)) offer(j);
  }
  if (!cur.all_empty()) {
    throw MalformedPiling("no letter is exposed at the bottom of the piling");
  }
  return Word(std::move(out));
}

Word normal_form_word(const Piling& p, const GroupSpec& spec) {
  return normal_form_word(p, DefiningGraph(spec));
}

std::set<Generator> support(const Piling& p) {
  std::set<Generator> gens;
  for (Generator i = 1; i <= p.n_columns(); ++i) {
    for (Bead b : p.column(i)) {
      if (b != Bead::zero) {
        gens.insert(i);
        break;
      }
    }
  }
  return gens;
}

CyclicReductionResult cyclically_reduce(const Piling& p,
                                        const DefiningGraph& graph) {
  check_shape(p, graph);
  detail::ColumnCursor cur(p);
  // Column i is a candidate when its bottom bead is e and its top bead is -e:
  // the letter e*i sits at the bottom and its inverse at the top.
  auto candidate = [&](Generator i) -> Letter {
    if (cur.empty(i)) return 0;
    const Bead b = cur.bottom(i);
    if (b == Bead::zero || bead_value(cur.top(i)) != -bead_value(b)) return 0;
    return signed_letter(i, b);
  };
  MinHeap heap;
  auto offer = [&](Generator i) {
    if (Letter k = candidate(i)) heap.emplace(letter_rank(k), i);
  };
  for (Generator i = 1; i <= p.n_columns(); ++i) offer(i);

  std::vector<Letter> conjugator;
  while (!heap.empty()) {
    const auto [rank, i] = heap.top();
    heap.pop();
    const Letter k = letter_of_rank(rank);
    if (candidate(i) != k) continue;
    cur.remove_bottom_letter(i, graph);
    cur.remove_top_letter(i, graph);
    conjugator.push_back(k);
    offer(i);
    for (Generator j : graph.neighbors(i)) offer(j);
  }
  return {cur.remaining(), Word(std::move(conjugator))};
}

CyclicReductionResult cyclically_reduce(const Piling& p, const GroupSpec& spec) {
  return cyclically_reduce(p, DefiningGraph(spec));
}

void validate_piling(const Piling& p, const DefiningGraph& graph) {
  check_shape(p, graph);
  std::vector<std::size_t> signed_count(static_cast<std::size_t>(p.n_columns()), 0);
  for (Generator i = 1; i <= p.n_columns(); ++i) {
    for (Bead b : p.column(i)) signed_count[i - 1] += b != Bead::zero;
  }
  for (Generator j = 1; j <= p.n_columns(); ++j) {
    std::size_t expected = signed_count[j - 1];
    for (Generator i : graph.neighbors(j)) expected += signed_count[i - 1];
    if (p.column(j).size() != expected) {
      throw MalformedPiling("column " + std::to_string(j) + " has " +
                            std::to_string(p.column(j).size()) +
                            " beads, expected " + std::to_string(expected));
    }
  }
  const Word w = normal_form_word(p, graph);
  if (piling_of_word(w, graph) != p) {
    throw MalformedPiling("piling is not reduced");
  }
}

std::string format_piling(const Piling& p) {
  std::ostringstream out;
  out << '[';
  for (std::size_t c = 0; c < p.columns().size(); ++c) {
    if (c) out << ',';
    out << '[';
    const auto& col = p.columns()[c];
    for (std::size_t b = 0; b < col.size(); ++b) {
      if (b) out << ',';
      out << bead_value(col[b]);
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

std::ostream& operator<<(std::ostream& out, const Piling& p) {
  return out << format_piling(p);
}

Piling parse_piling(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("piling is not valid bracket notation: ") +
                     e.what());
  }
  if (!doc.is_array()) throw ParseError("piling must be a list of columns");
  std::vector<std::vector<int>> columns;
  for (const auto& col : doc) {
    if (!col.is_array()) throw ParseError("each piling column must be a list");
    auto& out = columns.emplace_back();
    for (const auto& bead : col) {
      if (!bead.is_number_integer()) {
        throw ParseError("beads must be integers");
      }
      out.push_back(bead.get<int>());
    }
  }
  return Piling::from_ints(columns);
}

}  // namespace raag
