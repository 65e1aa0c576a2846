#include "hnnfree/word.hpp"

#include <cctype>
#include <cstdlib>
#include <charconv>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

#include "hnnfree/errors.hpp"

namespace hnnfree {

namespace {

struct SymbolEntry {
  std::string name;
  std::optional<int> index;
};

class SymbolTable {
 public:
  static SymbolTable& instance() {
    static SymbolTable table;
    return table;
  }

  std::uint32_t intern(std::string_view name, std::optional<int> index) {
    std::string key(name);
    if (index) {
      key += '[';
      key += std::to_string(*index);
      key += ']';
    }
    {
      std::shared_lock lock(mutex_);
      if (auto it = ids_.find(key); it != ids_.end()) return it->second;
    }
    std::unique_lock lock(mutex_);
    if (auto it = ids_.find(key); it != ids_.end()) return it->second;
    entries_.push_back({std::string(name), index});
    auto id = static_cast<std::uint32_t>(entries_.size());
    ids_.emplace(std::move(key), id);
    return id;
  }

  const SymbolEntry& entry(std::uint32_t id) const {
    std::shared_lock lock(mutex_);
    return entries_.at(id - 1);
  }

 private:
  SymbolTable() = default;

  mutable std::shared_mutex mutex_;
  std::deque<SymbolEntry> entries_;  // stable addresses
  std::unordered_map<std::string, std::uint32_t> ids_;
};

const SymbolEntry& entry_of(std::uint32_t id) {
  if (id == 0) throw InvalidInput("use of an empty symbol");
  return SymbolTable::instance().entry(id);
}

}  // namespace

bool is_valid_name(std::string_view name) {
  if (name.empty() || name.front() < 'a' || name.front() > 'z') return false;
  for (char c : name) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

Symbol Symbol::intern(std::string_view name, std::optional<int> index) {
  if (!is_valid_name(name)) {
    throw ParseError("invalid letter name '" + std::string(name) + "'");
  }
  return Symbol(SymbolTable::instance().intern(name, index));
}

const std::string& Symbol::name() const { return entry_of(id_).name; }

std::optional<int> Symbol::index() const { return entry_of(id_).index; }

Symbol Symbol::base() const {
  return index() ? intern(name()) : *this;
}

Symbol Symbol::with_index(int index) const { return intern(name(), index); }

std::string Symbol::to_string() const {
  const auto& e = entry_of(id_);
  if (!e.index) return e.name;
  return e.name + "[" + std::to_string(*e.index) + "]";
}

bool alphabetical_less(Symbol lhs, Symbol rhs) {
  if (lhs == rhs) return false;
  const auto& a = entry_of(lhs.id());
  const auto& b = entry_of(rhs.id());
  if (a.name != b.name) return a.name < b.name;
  return a.index < b.index;  // nullopt sorts first
}

Letter::Letter(Symbol s, int sg) : symbol(s), sign(sg) {
  if (sg != 1 && sg != -1) throw InvalidInput("letter sign must be +1 or -1");
}

Letter Letter::parse(std::string_view token) {
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("bad token '" + std::string(token) + "': " + why);
  };
  int sign = 1;
  if (!token.empty() && token.back() == '\'') {
    sign = -1;
    token.remove_suffix(1);
  }
  std::optional<int> index;
  if (auto open = token.find('['); open != std::string_view::npos) {
    if (token.back() != ']') throw fail("expected ']'");
    auto digits = token.substr(open + 1, token.size() - open - 2);
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc() ||
        ptr != digits.data() + digits.size()) {
      throw fail("bad index");
    }
    index = value;
    token = token.substr(0, open);
  }
  if (!is_valid_name(token)) throw fail("bad name");
  return Letter(Symbol::intern(token, index), sign);
}

std::string Letter::to_string() const {
  return sign > 0 ? symbol.to_string() : symbol.to_string() + "'";
}

Word Word::parse(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    if (i > start) tokens.push_back(text.substr(start, i - start));
  }
  if (tokens.empty()) throw ParseError("empty word (write 1 for the identity)");
  if (tokens.size() == 1 && tokens.front() == "1") return Word{};
  Word result;
  for (auto token : tokens) {
    if (token == "1") throw ParseError("'1' may only appear on its own");
    result.push_back(Letter::parse(token));
  }
  return result;
}

Word Word::power(Symbol symbol, int exponent) {
  std::vector<Letter> letters;
  Letter l(symbol, exponent < 0 ? -1 : 1);
  for (int i = 0; i < std::abs(exponent); ++i) letters.push_back(l);
  return Word(std::move(letters));
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    out += l.to_string();
  }
  return out;
}

Word& Word::operator*=(const Word& rhs) {
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push_back(it->inverse());
  return Word(std::move(out));
}

Word Word::subword(std::size_t first, std::size_t count) const {
  return Word(std::vector<Letter>(letters_.begin() + first,
                                  letters_.begin() + first + count));
}

std::ostream& operator<<(std::ostream& os, const Letter& letter) {
  return os << letter.to_string();
}

std::ostream& operator<<(std::ostream& os, const Word& word) {
  return os << word.to_string();
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const auto& l : w) {
    if (!stack.empty() && stack.back().is_inverse_of(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

bool is_freely_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i - 1].is_inverse_of(w[i])) return false;
  return true;
}

CyclicDecomposition cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0;
  std::size_t hi = r.size();
  while (hi - lo >= 2 && r[lo].is_inverse_of(r[hi - 1])) {
    ++lo;
    --hi;
  }
  return {r.subword(0, lo), r.subword(lo, hi - lo)};
}

bool is_cyclically_reduced(const Word& w) {
  if (!is_freely_reduced(w)) return false;
  return w.size() < 2 || !w.front().is_inverse_of(w.back());
}

int exponent_sum(const Word& w, Symbol y) {
  int sum = 0;
  for (const auto& l : w)
    if (l.symbol == y) sum += l.sign;
  return sum;
}

std::vector<Word> prefixes(const Word& w) {
  std::vector<Word> out;
  out.reserve(w.size() + 1);
  for (std::size_t i = 0; i <= w.size(); ++i) out.push_back(w.subword(0, i));
  return out;
}

}  // namespace hnnfree
