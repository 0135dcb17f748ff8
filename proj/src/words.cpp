#include "raag/words.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "raag/errors.hpp"

namespace raag {

GroupSpec::GroupSpec(int n_generators, std::vector<Pair> commuting_pairs)
    : n_(n_generators), pairs_(std::move(commuting_pairs)) {
  if (n_ < 1) {
    throw InvalidSpec("generator count must be positive, got " +
                      std::to_string(n_));
  }
  commute_.assign(static_cast<std::size_t>(n_) * n_, false);
  for (auto& [a, b] : pairs_) {
    if (a == b) {
      throw InvalidSpec("self-pair (" + std::to_string(a) + "," +
                        std::to_string(b) + ")");
    }
    if (a < 1 || b < 1 || a > n_ || b > n_) {
      throw InvalidSpec("pair (" + std::to_string(a) + "," +
                        std::to_string(b) + ") outside 1.." +
                        std::to_string(n_));
    }
    if (a > b) std::swap(a, b);
    auto cell = commute_[static_cast<std::size_t>(a - 1) * n_ + (b - 1)];
    if (cell) {
      throw InvalidSpec("duplicate pair (" + std::to_string(a) + "," +
                        std::to_string(b) + ")");
    }
    cell = true;
    commute_[static_cast<std::size_t>(b - 1) * n_ + (a - 1)] = true;
  }
  std::sort(pairs_.begin(), pairs_.end());
}

GroupSpec GroupSpec::free_group(int n) { return GroupSpec(n, {}); }

GroupSpec GroupSpec::free_abelian(int n) {
  std::vector<Pair> pairs;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  }
  return GroupSpec(n, std::move(pairs));
}

bool GroupSpec::commute(Generator a, Generator b) const {
  a = std::abs(a);
  b = std::abs(b);
  if (a == b || a < 1 || b < 1 || a > n_ || b > n_) return false;
  return commute_[static_cast<std::size_t>(a - 1) * n_ + (b - 1)];
}

void validate_word(const Word& w, const GroupSpec& spec) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Letter k = w[i];
    if (k == 0 || std::abs(static_cast<long long>(k)) > spec.n_generators()) {
      throw InvalidLetter(i, k);
    }
  }
}

Word inverse(const Word& w) {
  std::vector<Letter> out(w.size());
  std::transform(w.vector().rbegin(), w.vector().rend(), out.begin(),
                 [](Letter k) { return -k; });
  return Word(std::move(out));
}

Word concat(const Word& u, const Word& v) {
  std::vector<Letter> out;
  out.reserve(u.size() + v.size());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return Word(std::move(out));
}

Word rotate(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  std::vector<Letter> out = w.vector();
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(k % w.size()),
              out.end());
  return Word(std::move(out));
}

bool shortlex_less(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() < v.size();
  return std::lexicographical_compare(
      u.begin(), u.end(), v.begin(), v.end(),
      [](Letter a, Letter b) { return letter_rank(a) < letter_rank(b); });
}

std::vector<long long> exponent_sums(const Word& w, int n_generators) {
  std::vector<long long> sums(static_cast<std::size_t>(n_generators), 0);
  for (Letter k : w) {
    sums[static_cast<std::size_t>(std::abs(k) - 1)] += k > 0 ? 1 : -1;
  }
  return sums;
}

std::vector<Generator> word_support(const Word& w) {
  std::vector<Generator> gens;
  gens.reserve(w.size());
  for (Letter k : w) gens.push_back(std::abs(k));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

int parse_int(std::string_view token, std::string_view context) {
  token = trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() ||
      ptr != token.data() + token.size()) {
    throw ParseError("cannot parse integer '" + std::string(token) + "' in " +
                     std::string(context));
  }
  return value;
}

}  // namespace

Word parse_word(std::string_view text) {
  text = trim(text);
  if (text.empty()) return {};
  std::vector<Letter> letters;
  for (auto token : split(text, ',')) letters.push_back(parse_int(token, "word"));
  return Word(std::move(letters));
}

std::string format_word(const Word& w) {
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << ',';
    out << w[i];
  }
  return out.str();
}

std::ostream& operator<<(std::ostream& out, const Word& w) {
  return out << '[' << format_word(w) << ']';
}

std::vector<GroupSpec::Pair> parse_commuting(std::string_view text) {
  text = trim(text);
  std::vector<GroupSpec::Pair> pairs;
  if (text.empty()) return pairs;
  for (auto item : split(text, ';')) {
    auto fields = split(item, ',');
    if (fields.size() != 2) {
      throw ParseError("commuting pair '" + std::string(trim(item)) +
                       "' must have the form a,b");
    }
    pairs.emplace_back(parse_int(fields[0], "commuting pair"),
                       parse_int(fields[1], "commuting pair"));
  }
  return pairs;
}

std::string format_commuting(const std::vector<GroupSpec::Pair>& pairs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) out << ';';
    out << pairs[i].first << ',' << pairs[i].second;
  }
  return out.str();
}

}  // namespace raag
