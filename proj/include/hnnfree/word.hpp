#pragma once

// Words over signed, optionally indexed alphabets.
//
// A letter is an interned symbol (a name such as "b", optionally carrying an
// integer index as in "b[-1]") together with a sign.  Words are plain
// sequences of letters; nothing is reduced implicitly.
//
// Text syntax, used by every tool and file format:
//
//   word  := "1" | token { whitespace token }
//   token := NAME | NAME "'" | NAME "[" INT "]" | NAME "[" INT "]" "'"
//   NAME  := [a-z][a-z0-9_]*
//
// A trailing quote denotes the inverse letter.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace hnnfree {

// Interned (name, index) pair.  Copies are cheap and equality is an integer
// comparison.  The process-wide table is safe for concurrent use.
class Symbol {
 public:
  Symbol() = default;

  static Symbol intern(std::string_view name,
                       std::optional<int> index = std::nullopt);

  const std::string& name() const;
  std::optional<int> index() const;

  // The same name without an index.
  Symbol base() const;
  Symbol with_index(int index) const;

  bool valid() const noexcept { return id_ != 0; }
  std::uint32_t id() const noexcept { return id_; }

  std::string to_string() const;

  // Ordering follows interning order: fast and deterministic within a
  // process, but not alphabetical.  Use `alphabetical_less` for display.
  friend auto operator<=>(Symbol, Symbol) = default;

 private:
  explicit Symbol(std::uint32_t id) : id_(id) {}
  std::uint32_t id_ = 0;
};

// Orders by name, then unindexed before indexed, then by index.
bool alphabetical_less(Symbol lhs, Symbol rhs);

bool is_valid_name(std::string_view name);

struct Letter {
  Symbol symbol;
  int sign = 1;

  Letter() = default;
  Letter(Symbol s, int sg = 1);

  static Letter parse(std::string_view token);

  Letter inverse() const { return Letter(symbol, -sign); }
  Letter positive() const { return Letter(symbol, 1); }
  bool is_inverse_of(const Letter& other) const {
    return symbol == other.symbol && sign == -other.sign;
  }

  std::string to_string() const;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

class Word {
 public:
  using const_iterator = std::vector<Letter>::const_iterator;

  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  // Parses the text syntax above.  Throws ParseError.
  static Word parse(std::string_view text);

  // The letter `symbol` raised to `exponent` (t^n), e.g. stable letter runs.
  static Word power(Symbol symbol, int exponent);

  std::string to_string() const;

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  const Letter& front() const { return letters_.front(); }
  const Letter& back() const { return letters_.back(); }
  const_iterator begin() const { return letters_.begin(); }
  const_iterator end() const { return letters_.end(); }

  void push_back(const Letter& letter) { letters_.push_back(letter); }
  Word& operator*=(const Word& rhs);

  // Reverses the order and flips every sign.
  Word inverse() const;

  // Letters [first, first + count).
  Word subword(std::size_t first, std::size_t count) const;

  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

std::ostream& operator<<(std::ostream& os, const Letter& letter);
std::ostream& operator<<(std::ostream& os, const Word& word);

// Cancels adjacent letter/inverse pairs with a left-to-right stack scan.
Word free_reduce(const Word& w);

bool is_freely_reduced(const Word& w);

// w = conjugator * core * conjugator^-1 after free reduction, with core
// cyclically reduced.
struct CyclicDecomposition {
  Word conjugator;
  Word core;
};

CyclicDecomposition cyclic_reduce(const Word& w);

bool is_cyclically_reduced(const Word& w);

// Occurrences of `y` minus occurrences of `y'`.
int exponent_sum(const Word& w, Symbol y);

// The literal prefixes 1, x_1, x_1 x_2, ..., w (|w| + 1 of them).
std::vector<Word> prefixes(const Word& w);

}  // namespace hnnfree
