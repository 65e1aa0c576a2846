#include "hnnfree/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hnnfree/elementary.hpp"
#include "hnnfree/errors.hpp"
#include "hnnfree/hnn.hpp"
#include "hnnfree/membership.hpp"
#include "hnnfree/moldavanskii.hpp"
#include "hnnfree/oracle.hpp"
#include "hnnfree/pipeline.hpp"

namespace hnnfree {

namespace {

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

HnnExtension load_extension(const std::string& path) {
  return HnnExtension(parse_extension(read_file(path)));
}

std::vector<Letter> parse_letters(const std::string& text) {
  Word w = Word::parse(text);
  return {w.begin(), w.end()};
}

std::string join(const std::vector<Symbol>& symbols) {
  std::string s;
  for (auto x : symbols) s += (s.empty() ? "" : " ") + x.to_string();
  return s.empty() ? "1" : s;
}

int verdict(std::ostream& out, bool yes, const std::string& detail,
            bool exit_status) {
  out << (yes ? "yes" : "no");
  if (yes && !detail.empty()) out << ' ' << detail;
  out << '\n';
  return !yes && exit_status ? 1 : 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Word and submonoid membership problems in HNN extensions of "
               "free groups"};
  app.name("hnnfree");
  app.require_subcommand(1);

  std::string spec_path;
  std::string word;
  std::string lhs;
  std::string rhs;
  std::string uq;
  std::string stable = "t";
  std::string query;
  std::vector<std::string> gens;
  std::size_t max_len = 6;
  bool exit_status = false;
  bool dump = false;

  auto* reduce = app.add_subcommand("reduce", "Free or HNN reduce a word");
  reduce->add_option("--word", word, "Word to reduce")->required();
  reduce->add_option("--spec", spec_path, "Extension file (HNN reduction)");

  auto* equal = app.add_subcommand("equal", "Britton equality in H*");
  equal->add_option("--spec", spec_path, "Extension file")->required();
  equal->add_option("--lhs", lhs)->required();
  equal->add_option("--rhs", rhs)->required();
  equal->add_flag("--exit-status", exit_status, "Exit 1 when not equal");

  auto* mrf_cmd = app.add_subcommand("mrf", "Print the most reduced forms");
  mrf_cmd->add_option("--spec", spec_path, "Extension file")->required();
  mrf_cmd->add_option("--word", word)->required();

  auto* member = app.add_subcommand("member", "Membership in Mon<U_Q, t, t'>");
  member->add_option("--spec", spec_path, "Extension file")->required();
  member->add_option("--uq", uq, "Generators of Q (default: UQ line)");
  member->add_option("--word", word)->required();
  member->add_flag("--exit-status", exit_status, "Exit 1 on no");

  auto* rho = app.add_subcommand("rho", "Index rewriting by a stable letter");
  rho->add_option("--t", stable, "Stable letter");
  rho->add_option("--word", word)->required();

  auto* pipeline = app.add_subcommand(
      "pipeline", "Splitting of <X, t | w t^(-2 sigma) w = 1>");
  pipeline->add_option("--w", word, "The word w")->required();
  pipeline->add_option("--t", stable, "Stable letter");
  pipeline->add_flag("--dump", dump, "Print an extension file");

  auto* prefix = app.add_subcommand("prefix-member",
                                    "Prefix membership for w t^(-2 sigma) w");
  prefix->add_option("--w", word, "The word w")->required();
  prefix->add_option("--query", query)->required();
  prefix->add_option("--t", stable, "Stable letter");
  prefix->add_flag("--exit-status", exit_status, "Exit 1 on no");

  auto* validate = app.add_subcommand("validate", "Check an extension file");
  validate->add_option("--spec", spec_path, "Extension file")->required();
  validate->add_option("--uq", uq, "Generators of Q (default: UQ line)");
  validate->add_flag("--exit-status", exit_status, "Exit 1 when invalid");

  auto* oracle = app.add_subcommand("oracle", "Independent checks");
  oracle->require_subcommand(1);
  auto* benois = oracle->add_subcommand(
      "benois", "Membership in a submonoid of a free group");
  benois->add_option("--gens", gens, "Generators")->required();
  benois->add_option("--word", word)->required();
  benois->add_flag("--exit-status", exit_status, "Exit 1 on no");
  auto* bfs = oracle->add_subcommand(
      "bfs", "Search for a product of generators equal to a word in H*");
  bfs->add_option("--spec", spec_path, "Extension file")->required();
  bfs->add_option("--gens", gens, "Generators")->required();
  bfs->add_option("--word", word)->required();
  bfs->add_option("--max-len", max_len, "Longest product tried");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*reduce) {
      Word w = Word::parse(word);
      if (spec_path.empty()) {
        out << free_reduce(w) << '\n';
      } else {
        auto e = load_extension(spec_path);
        out << hnn_reduce(w, e).flatten(e.stable()) << '\n';
      }
      return 0;
    }
    if (*equal) {
      auto e = load_extension(spec_path);
      return verdict(out,
                     words_equal(Word::parse(lhs), Word::parse(rhs), e), "",
                     exit_status);
    }
    if (*mrf_cmd) {
      auto e = load_extension(spec_path);
      const MrfSet forms = mrf(Word::parse(word), e);
      for (const auto& m : forms.members())
        out << m.flatten(e.stable()) << '\n';
      return 0;
    }
    if (*member) {
      auto e = load_extension(spec_path);
      auto letters = uq.empty() ? e.spec().uq : parse_letters(uq);
      if (letters.empty())
        throw InvalidInput("no generators for Q: pass --uq or add a UQ line");
      auto result = decide_membership(Word::parse(word),
                                      SubmonoidSpec{{letters.begin(),
                                                     letters.end()}},
                                      e);
      return verdict(
          out, result.member,
          result.witness ? result.witness->flatten(e.stable()).to_string() : "",
          exit_status);
    }
    if (*rho) {
      Symbol t = Symbol::intern(stable);
      Word w = Word::parse(word);
      auto data = rho_t(w, t);
      out << "image: " << data.image << '\n';
      std::vector<Symbol> bases;
      for (const auto& [x, b] : data.bounds) bases.push_back(x);
      std::sort(bases.begin(), bases.end(), alphabetical_less);
      for (auto x : bases)
        out << "bounds: " << x.to_string() << ' ' << data.bounds.at(x).first
            << ' ' << data.bounds.at(x).second << '\n';
      out << "xi: " << join(data.xiw) << '\n';
      if (is_cyclically_reduced(data.image)) {
        auto split = moldavanskii_extension_data(w, t);
        out << "A: " << join(split.a_generators) << '\n';
        out << "B: " << join(split.b_generators) << '\n';
        for (const auto& [from, to] : split.phi)
          out << "phi: " << from.to_string() << " -> " << to.to_string()
              << '\n';
      }
      return 0;
    }
    if (*pipeline) {
      auto p = build_pipeline(validate_wtw(Word::parse(word),
                                           Symbol::intern(stable)));
      std::string text = dump_pipeline(p);
      if (dump) {
        out << text;
        return 0;
      }
      std::istringstream lines(text);
      std::string line;
      while (std::getline(lines, line))
        if (line.rfind("# ", 0) == 0) out << line.substr(2) << '\n';
      return 0;
    }
    if (*prefix) {
      auto p = build_pipeline(validate_wtw(Word::parse(word),
                                           Symbol::intern(stable)));
      return verdict(out, prefix_member(Word::parse(query), p).member, "",
                     exit_status);
    }
    if (*validate) {
      auto spec = parse_extension(read_file(spec_path));
      if (auto problem = validate_extension(spec)) {
        out << "invalid: " << *problem << '\n';
        return exit_status ? 1 : 0;
      }
      HnnExtension e(spec);
      out << "valid\n";
      auto letters = uq.empty() ? spec.uq : parse_letters(uq);
      if (!letters.empty()) {
        auto report = check_compatibility(
            SubmonoidSpec{{letters.begin(), letters.end()}}, e);
        if (report.compatible) {
          out << "compatible\n";
        } else {
          out << "incompatible: " << report.witness->to_string() << '\n';
          return exit_status ? 1 : 0;
        }
      }
      return 0;
    }
    if (*benois) {
      std::vector<Word> g;
      for (const auto& s : gens) g.push_back(Word::parse(s));
      return verdict(out, benois_member(Word::parse(word), g), "",
                     exit_status);
    }
    if (*bfs) {
      auto e = load_extension(spec_path);
      std::vector<Word> g;
      for (const auto& s : gens) g.push_back(Word::parse(s));
      auto result = bfs_member(Word::parse(word), g, e, max_len);
      if (!result.found) {
        out << "unknown\n";
        return 0;
      }
      Word product;
      for (auto i : result.product) product *= g[i];
      out << "yes " << product << '\n';
      return 0;
    }
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace hnnfree
