#include "hnnfree/hnn.hpp"

#include <algorithm>
#include <sstream>

#include "hnnfree/errors.hpp"

namespace hnnfree {

namespace {

std::string_view trim(std::string_view s) {
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<Letter> parse_letter_list(std::string_view text) {
  std::vector<Letter> out;
  if (trim(text).empty()) return out;
  Word w = Word::parse(text);
  out.assign(w.begin(), w.end());
  return out;
}

std::string join(const std::vector<Letter>& letters) {
  std::string out;
  for (const auto& l : letters) {
    out += ' ';
    out += l.to_string();
  }
  return out;
}

bool all_in(const Word& w, const std::set<Letter>& domain) {
  return std::all_of(w.begin(), w.end(),
                     [&](const Letter& l) { return domain.count(l) != 0; });
}

}  // namespace

ExtensionSpec parse_extension(std::string_view text) {
  ExtensionSpec spec;
  bool have_letters = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("expected 'key: value'", line_no);
    auto key = trim(line.substr(0, colon));
    auto value = trim(line.substr(colon + 1));
    try {
      if (key == "letters") {
        for (const auto& l : parse_letter_list(value)) {
          if (l.sign < 0) throw ParseError("ambient letters must be positive");
          spec.ambient.push_back(l.symbol);
        }
        have_letters = true;
      } else if (key == "stable") {
        if (spec.stable.valid()) throw ParseError("stable letter given twice");
        auto letters = parse_letter_list(value);
        if (letters.size() != 1 || letters[0].sign < 0)
          throw ParseError("expected a single positive stable letter");
        spec.stable = letters[0].symbol;
      } else if (key == "basis") {
        auto eq = value.find('=');
        if (eq == std::string_view::npos)
          throw ParseError("expected 'basis: NAME = WORD'");
        auto name = parse_letter_list(value.substr(0, eq));
        if (name.size() != 1 || name[0].sign < 0)
          throw ParseError("expected a single positive basis name");
        spec.basis.push_back(
            {name[0].symbol, Word::parse(trim(value.substr(eq + 1)))});
      } else if (key == "UA") {
        auto ls = parse_letter_list(value);
        spec.ua.insert(spec.ua.end(), ls.begin(), ls.end());
      } else if (key == "UB") {
        auto ls = parse_letter_list(value);
        spec.ub.insert(spec.ub.end(), ls.begin(), ls.end());
      } else if (key == "UQ") {
        auto ls = parse_letter_list(value);
        spec.uq.insert(spec.uq.end(), ls.begin(), ls.end());
      } else if (key == "phi") {
        auto arrow = value.find("->");
        if (arrow == std::string_view::npos)
          throw ParseError("expected 'phi: LETTER -> LETTER'");
        auto lhs = parse_letter_list(value.substr(0, arrow));
        auto rhs = parse_letter_list(value.substr(arrow + 2));
        if (lhs.size() != 1 || rhs.size() != 1)
          throw ParseError("phi maps one letter to one letter");
        spec.phi.emplace_back(lhs[0], rhs[0]);
      } else {
        throw ParseError("unknown key '" + std::string(key) + "'");
      }
    } catch (const ParseError& e) {
      if (e.line() != 0) throw;
      throw ParseError(e.what(), line_no);
    }
  }
  if (!have_letters) throw ParseError("missing 'letters:' line");
  if (!spec.stable.valid()) throw ParseError("missing 'stable:' line");
  return spec;
}

std::string serialize_extension(const ExtensionSpec& spec) {
  std::ostringstream out;
  out << "letters:";
  for (auto s : spec.ambient) out << ' ' << s.to_string();
  out << "\nstable: " << spec.stable.to_string() << '\n';
  for (const auto& b : spec.basis)
    out << "basis: " << b.name.to_string() << " = " << b.definition << '\n';
  out << "UA:" << join(spec.ua) << '\n';
  out << "UB:" << join(spec.ub) << '\n';
  for (const auto& [from, to] : spec.phi)
    out << "phi: " << from << " -> " << to << '\n';
  if (!spec.uq.empty()) out << "UQ:" << join(spec.uq) << '\n';
  return out.str();
}

std::optional<std::string> validate_extension(const ExtensionSpec& spec) {
  if (spec.ambient.empty()) return "ambient alphabet is empty";
  if (!spec.stable.valid()) return "stable letter missing";
  if (std::find(spec.ambient.begin(), spec.ambient.end(), spec.stable) !=
      spec.ambient.end())
    return "stable letter " + spec.stable.to_string() +
           " is in the ambient alphabet";
  std::optional<FreeBasis> basis;
  try {
    basis.emplace(spec.ambient, spec.basis);
  } catch (const InvalidInput& e) {
    return std::string(e.what());
  }
  if (basis->find(spec.stable))
    return "stable letter " + spec.stable.to_string() + " is a basis name";
  if (!verify_free_basis(*basis)) return "basis is not a free basis of FG(X)";

  auto check_subset = [&](const std::vector<Letter>& letters,
                          const char* which) -> std::optional<std::string> {
    std::set<Letter> set(letters.begin(), letters.end());
    for (const auto& l : letters) {
      if (!basis->find(l.symbol))
        return std::string(which) + " letter " + l.to_string() +
               " is not a basis letter";
      if (!set.count(l.inverse()))
        return std::string(which) + " is not closed under inversion (" +
               l.to_string() + ")";
    }
    return std::nullopt;
  };
  if (auto d = check_subset(spec.ua, "UA")) return d;
  if (auto d = check_subset(spec.ub, "UB")) return d;

  std::set<Letter> ua(spec.ua.begin(), spec.ua.end());
  std::set<Letter> ub(spec.ub.begin(), spec.ub.end());
  std::map<Letter, Letter> forward;
  std::map<Letter, Letter> backward;
  for (const auto& [from, to] : spec.phi) {
    if (!ua.count(from))
      return "phi source " + from.to_string() + " outside UA";
    if (!ub.count(to)) return "phi image " + to.to_string() + " outside UB";
    for (auto [a, b] : {std::pair{from, to}, std::pair{from.inverse(),
                                                        to.inverse()}}) {
      if (auto it = forward.find(a); it != forward.end() && it->second != b)
        return "phi is not a function at " + a.to_string();
      if (auto it = backward.find(b); it != backward.end() && it->second != a)
        return "phi is not injective at " + b.to_string();
      forward[a] = b;
      backward[b] = a;
    }
  }
  for (const auto& l : ua)
    if (!forward.count(l)) return "phi is undefined on UA letter " + l.to_string();
  for (const auto& l : ub)
    if (!backward.count(l))
      return "phi does not reach UB letter " + l.to_string();
  return std::nullopt;
}

HnnExtension::HnnExtension(ExtensionSpec spec) : spec_(std::move(spec)) {
  if (auto diagnostic = validate_extension(spec_))
    throw InvalidInput("invalid extension: " + *diagnostic);
  rewriter_ = std::make_shared<const BasisRewriter>(
      FreeBasis(spec_.ambient, spec_.basis));
  ua_.insert(spec_.ua.begin(), spec_.ua.end());
  ub_.insert(spec_.ub.begin(), spec_.ub.end());
  for (const auto& [from, to] : spec_.phi) {
    phi_[from] = to;
    phi_[from.inverse()] = to.inverse();
    phi_inv_[to] = from;
    phi_inv_[to.inverse()] = from.inverse();
  }
}

bool HnnExtension::is_basis_letter(const Letter& l) const {
  return rewriter_->is_basis_symbol(l.symbol);
}

Letter HnnExtension::phi(const Letter& l) const {
  auto it = phi_.find(l);
  if (it == phi_.end())
    throw PreconditionError("phi is undefined on " + l.to_string());
  return it->second;
}

Letter HnnExtension::phi_inverse(const Letter& l) const {
  auto it = phi_inv_.find(l);
  if (it == phi_inv_.end())
    throw PreconditionError("phi^-1 is undefined on " + l.to_string());
  return it->second;
}

std::optional<Letter> HnnExtension::phi_power(const Letter& l, int z) const {
  Letter cur = l;
  const auto& table = z >= 0 ? phi_ : phi_inv_;
  for (int i = 0; i < std::abs(z); ++i) {
    auto it = table.find(cur);
    if (it == table.end()) return std::nullopt;
    cur = it->second;
  }
  return cur;
}

std::vector<Letter> HnnExtension::signed_basis() const {
  std::vector<Letter> out;
  for (const auto& b : spec_.basis) {
    out.emplace_back(b.name, 1);
    out.emplace_back(b.name, -1);
  }
  return out;
}

Word BlockWord::flatten(Symbol stable) const {
  Word out = Word::power(stable, n0);
  for (const auto& b : blocks) {
    out.push_back(b.letter);
    out *= Word::power(stable, b.exponent);
  }
  return out;
}

std::string BlockWord::to_string(Symbol stable) const {
  return flatten(stable).to_string();
}

BlockWord to_block_form(const Word& w, const HnnExtension& e) {
  BlockWord out;
  for (const auto& l : w) {
    if (l.symbol == e.stable()) {
      out.n(out.k()) += l.sign;
    } else if (e.is_basis_letter(l)) {
      out.blocks.push_back({l, 0});
    } else {
      throw InvalidInput("letter " + l.to_string() +
                         " is neither stable nor a basis letter");
    }
  }
  return out;
}

bool is_hnn_reduced(const BlockWord& w, const HnnExtension& e) {
  const std::size_t k = w.k();
  std::size_t j = 1;
  while (j <= k) {
    std::size_t l = j;
    while (l < k && w.n(l) == 0) ++l;
    const int left = w.n(j - 1);
    const int right = w.n(l);
    if (left != 0 && right != 0 && (left < 0) != (right < 0)) {
      Word segment;
      for (std::size_t i = j; i <= l; ++i) segment.push_back(w.u(i));
      segment = free_reduce(segment);
      if (left < 0 && all_in(segment, e.ua())) return false;
      if (left > 0 && all_in(segment, e.ub())) return false;
    }
    j = l + 1;
  }
  return true;
}

BlockWord hnn_reduce(const Word& w, const HnnExtension& e) {
  // Stack of freely reduced basis segments separated by stable letters.
  // No pinch ever sits inside the stack; only the open segment can close one.
  std::vector<Word> segments(1);
  std::vector<int> signs;

  auto append = [&](const Word& add) {
    Word& cur = segments.back();
    std::vector<Letter> letters(cur.begin(), cur.end());
    for (const auto& l : add) {
      if (!letters.empty() && letters.back().is_inverse_of(l)) {
        letters.pop_back();
      } else {
        letters.push_back(l);
      }
    }
    cur = Word(std::move(letters));
  };

  for (const auto& l : w) {
    if (l.symbol == e.stable()) {
      if (!signs.empty() && signs.back() == -l.sign) {
        const Word& seg = segments.back();
        std::optional<Word> image;
        if (l.sign > 0 && all_in(seg, e.ua())) {
          Word m;
          for (const auto& x : seg) m.push_back(e.phi(x));
          image = std::move(m);
        } else if (l.sign < 0 && all_in(seg, e.ub())) {
          Word m;
          for (const auto& x : seg) m.push_back(e.phi_inverse(x));
          image = std::move(m);
        }
        if (image) {
          segments.pop_back();
          signs.pop_back();
          append(*image);
          continue;
        }
      }
      signs.push_back(l.sign);
      segments.emplace_back();
    } else if (e.is_basis_letter(l)) {
      append(Word{l});
    } else if (e.rewriter().is_ambient_symbol(l.symbol)) {
      append(e.rewriter().rewrite(Word{l}));
    } else {
      throw InvalidInput("unknown letter " + l.to_string());
    }
  }

  Word flat = segments[0];
  for (std::size_t i = 0; i < signs.size(); ++i) {
    flat.push_back(Letter(e.stable(), signs[i]));
    flat *= segments[i + 1];
  }
  return to_block_form(flat, e);
}

bool words_equal(const Word& w1, const Word& w2, const HnnExtension& e) {
  return hnn_reduce(w1 * w2.inverse(), e).is_identity();
}

}  // namespace hnnfree
