#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "raag/conjugacy.hpp"
#include "raag/errors.hpp"
#include "raag/graphs.hpp"
#include "raag/pilings.hpp"
#include "raag/render.hpp"
#include "raag/words.hpp"

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kInvalid = 2;
constexpr int kUnwritable = 3;

struct GroupArgs {
  int n = 0;
  std::string commuting;

  raag::GroupSpec spec() const { return raag::GroupSpec(n, raag::parse_commuting(commuting)); }
};

void add_group_options(CLI::App* cmd, GroupArgs& group) {
  cmd->add_option("--n", group.n, "Number of generators")->required();
  cmd->add_option("--commuting", group.commuting,
                  "Commuting pairs, e.g. \"1,4;2,3\" (empty for the free group)");
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw raag::ParseError("cannot read " + path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

// The i-th word: the inline value when given, else line i of the file.
raag::Word word_arg(const std::optional<std::string>& inline_value, const std::string& file,
                    std::size_t i, const char* name) {
  if (inline_value) return raag::parse_word(*inline_value);
  if (file.empty()) throw raag::ParseError(std::string("missing ") + name);
  const auto lines = read_lines(file);
  if (i >= lines.size()) throw raag::ParseError(file + " has no line for " + name);
  return raag::parse_word(lines[i]);
}

struct PilingInput {
  std::optional<std::string> word;
  std::optional<std::string> piling;
  std::string file;
};

void add_piling_input(CLI::App* cmd, PilingInput& in) {
  auto* word = cmd->add_option("--word", in.word, "Word, e.g. \"1,-2,3\"");
  auto* piling = cmd->add_option("--piling", in.piling, "Piling, e.g. \"[[1,0],[0,-1]]\"");
  auto* file = cmd->add_option("--file", in.file, "File whose first line is the word");
  word->excludes(piling)->excludes(file);
  piling->excludes(file);
}

raag::Piling piling_arg(const PilingInput& in, const raag::GroupSpec& spec) {
  if (in.piling) {
    const auto p = raag::parse_piling(*in.piling);
    raag::validate_piling(p, raag::DefiningGraph(spec));
    return p;
  }
  return raag::piling_of_word(word_arg(in.word, in.file, 0, "--word"), spec);
}

nlohmann::json to_json(const std::optional<raag::Word>& w) {
  if (!w) return nullptr;
  return w->vector();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word and conjugacy problems in right-angled Artin groups"};
  app.require_subcommand(1);
  int status = kTrue;

  GroupArgs group;

  auto* conjugate = app.add_subcommand("conjugate", "Decide whether two words are conjugate");
  std::optional<std::string> w1;
  std::optional<std::string> w2;
  std::string pair_file;
  bool json = false;
  bool force_general = false;
  add_group_options(conjugate, group);
  conjugate->add_option("--w1", w1, "First word");
  conjugate->add_option("--w2", w2, "Second word");
  conjugate->add_option("--file", pair_file, "File with w1 and w2 on its first two lines");
  conjugate->add_flag("--json", json, "Print {\"conjugate\": bool, \"witness\": [...] | null}");
  conjugate->add_flag("--force-general", force_general,
                      "Skip the free and free abelian shortcuts");
  conjugate->callback([&] {
    const auto spec = group.spec();
    const auto a = word_arg(w1, pair_file, 0, "--w1");
    const auto b = word_arg(w2, pair_file, 1, "--w2");
    const auto r = raag::is_conjugate(
        a, b, spec, force_general ? raag::Route::general : raag::Route::automatic);
    if (json) {
      std::cout << nlohmann::json{{"conjugate", r.conjugate}, {"witness", to_json(r.witness)}}
                << '\n';
    } else if (r.conjugate) {
      std::cout << "true\n" << raag::format_word(*r.witness) << '\n';
    } else {
      std::cout << "false\n";
    }
    status = r.conjugate ? kTrue : kFalse;
  });

  auto* normal_form = app.add_subcommand("normal-form", "Shortlex normal form of a word or piling");
  PilingInput nf_in;
  add_group_options(normal_form, group);
  add_piling_input(normal_form, nf_in);
  normal_form->callback([&] {
    const auto spec = group.spec();
    std::cout << raag::format_word(raag::normal_form_word(piling_arg(nf_in, spec), spec)) << '\n';
  });

  auto* equal = app.add_subcommand("equal", "Decide whether two words are equal");
  std::optional<std::string> e1;
  std::optional<std::string> e2;
  std::string equal_file;
  add_group_options(equal, group);
  equal->add_option("--w1", e1, "First word");
  equal->add_option("--w2", e2, "Second word");
  equal->add_option("--file", equal_file, "File with w1 and w2 on its first two lines");
  equal->callback([&] {
    const auto spec = group.spec();
    const bool same = raag::equal(word_arg(e1, equal_file, 0, "--w1"),
                                  word_arg(e2, equal_file, 1, "--w2"), spec);
    std::cout << (same ? "true" : "false") << '\n';
    status = same ? kTrue : kFalse;
  });

  auto* identity = app.add_subcommand("identity", "Decide whether a word is trivial");
  std::optional<std::string> id_word;
  std::string id_file;
  add_group_options(identity, group);
  identity->add_option("--word", id_word, "Word");
  identity->add_option("--file", id_file, "File whose first line is the word");
  identity->callback([&] {
    const bool trivial = raag::identity(word_arg(id_word, id_file, 0, "--word"), group.spec());
    std::cout << (trivial ? "true" : "false") << '\n';
    status = trivial ? kTrue : kFalse;
  });

  auto* reduce = app.add_subcommand(
      "reduce-cyclic", "Cyclically reduce; prints the reduced normal form, then the conjugator");
  PilingInput reduce_in;
  add_group_options(reduce, group);
  add_piling_input(reduce, reduce_in);
  reduce->callback([&] {
    const auto spec = group.spec();
    const auto r = raag::cyclically_reduce(piling_arg(reduce_in, spec), spec);
    std::cout << raag::format_word(raag::normal_form_word(r.reduced, spec)) << '\n'
              << raag::format_word(r.conjugator) << '\n';
  });

  auto* factor = app.add_subcommand("factor", "Non-split factors, one piling per line");
  PilingInput factor_in;
  add_group_options(factor, group);
  add_piling_input(factor, factor_in);
  factor->callback([&] {
    const auto spec = group.spec();
    for (const auto& f : raag::factor_piling(piling_arg(factor_in, spec), spec)) {
      std::cout << raag::format_piling(f.piling) << '\n';
    }
  });

  auto* draw = app.add_subcommand("draw", "Write the piling as an SVG file");
  PilingInput draw_in;
  raag::RenderOptions render;
  add_group_options(draw, group);
  add_piling_input(draw, draw_in);
  draw->add_option("--out", render.filename, "Output path")->capture_default_str();
  draw->add_option("--scale", render.scale, "Column spacing")->capture_default_str();
  draw->add_option("--plus-colour", render.plus_colour)->capture_default_str();
  draw->add_option("--zero-colour", render.zero_colour)->capture_default_str();
  draw->add_option("--minus-colour", render.minus_colour)->capture_default_str();
  draw->callback([&] {
    const auto spec = group.spec();
    const auto svg = raag::draw_piling(piling_arg(draw_in, spec), render);
    std::ofstream out(render.filename, std::ios::binary);
    out << svg;
    out.close();
    if (!out) {
      std::cerr << "error: cannot write " << render.filename << '\n';
      status = kUnwritable;
      return;
    }
    std::cout << render.filename << '\n';
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  } catch (const raag::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return status;
}
