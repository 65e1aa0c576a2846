#pragma once

// HNN extensions H* = H *_{t, phi: A -> B} of a free group H, where A and B
// are generated by subsets of a free basis U_H of H and phi restricts to a
// bijection between the signed letters of those subsets.
//
// Words over H* may mix ambient letters (rewritten over U_H on the fly),
// basis letters and the stable letter.

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hnnfree/basis.hpp"
#include "hnnfree/word.hpp"

namespace hnnfree {

// Raw description of an extension, as read from or written to a file.
//
//   letters: a b
//   stable: t
//   basis: g1 = a b
//   UA: g2 g2' g3 g3'
//   UB: g1 g1' g2 g2'
//   phi: g3 -> g1
//   phi: g2' -> g2
//   UQ: g1 g2 g3 g2'        (optional, default submonoid generators)
//
// Only one of each +/- pair needs a phi line; the other is implied.
struct ExtensionSpec {
  std::vector<Symbol> ambient;
  Symbol stable;
  std::vector<BasisElement> basis;
  std::vector<Letter> ua;
  std::vector<Letter> ub;
  std::vector<std::pair<Letter, Letter>> phi;
  std::vector<Letter> uq;

  friend bool operator==(const ExtensionSpec&, const ExtensionSpec&) = default;
};

// Throws ParseError carrying the 1-based line number.
ExtensionSpec parse_extension(std::string_view text);
std::string serialize_extension(const ExtensionSpec& spec);

// First violated invariant, or nullopt when the description is a valid
// extension.
std::optional<std::string> validate_extension(const ExtensionSpec& spec);

class HnnExtension {
 public:
  // Throws InvalidInput with the diagnostic from validate_extension.
  explicit HnnExtension(ExtensionSpec spec);

  const ExtensionSpec& spec() const { return spec_; }
  Symbol stable() const { return spec_.stable; }
  const BasisRewriter& rewriter() const { return *rewriter_; }

  bool is_basis_letter(const Letter& l) const;
  bool in_a(const Letter& l) const { return ua_.count(l) != 0; }
  bool in_b(const Letter& l) const { return ub_.count(l) != 0; }
  const std::set<Letter>& ua() const { return ua_; }
  const std::set<Letter>& ub() const { return ub_; }

  // phi on a letter of UA (resp. its inverse on a letter of UB).
  Letter phi(const Letter& l) const;
  Letter phi_inverse(const Letter& l) const;

  // phi^z(l) when every intermediate letter lies in the right domain.
  std::optional<Letter> phi_power(const Letter& l, int z) const;

  // All signed basis letters.
  std::vector<Letter> signed_basis() const;

 private:
  ExtensionSpec spec_;
  std::shared_ptr<const BasisRewriter> rewriter_;
  std::set<Letter> ua_;
  std::set<Letter> ub_;
  std::map<Letter, Letter> phi_;
  std::map<Letter, Letter> phi_inv_;
};

struct Block {
  Letter letter;
  int exponent = 0;

  friend auto operator<=>(const Block&, const Block&) = default;
};

// t^{n_0} u_1 t^{n_1} ... u_k t^{n_k} with u_i signed basis letters.
// Distinct block words flatten to distinct words, so the structural order
// is an order on the flattened words as well.
struct BlockWord {
  int n0 = 0;
  std::vector<Block> blocks;

  std::size_t k() const { return blocks.size(); }
  bool is_identity() const { return n0 == 0 && blocks.empty(); }

  // Exponent preceding block j (1-based, n_{j-1}); n(0) is n0.
  int n(std::size_t j) const { return j == 0 ? n0 : blocks[j - 1].exponent; }
  int& n(std::size_t j) { return j == 0 ? n0 : blocks[j - 1].exponent; }
  const Letter& u(std::size_t j) const { return blocks[j - 1].letter; }

  Word flatten(Symbol stable) const;
  std::string to_string(Symbol stable) const;

  friend auto operator<=>(const BlockWord&, const BlockWord&) = default;
};

// Requires every non-stable letter to be a signed basis letter.
BlockWord to_block_form(const Word& w, const HnnExtension& e);

bool is_hnn_reduced(const BlockWord& w, const HnnExtension& e);

// Britton reduction: rewrites H-segments over the basis and removes pinches
// t' a t (a in A) and t b t' (b in B), leftmost-innermost.
BlockWord hnn_reduce(const Word& w, const HnnExtension& e);

// Word problem in H* through Britton's lemma.
bool words_equal(const Word& w1, const Word& w2, const HnnExtension& e);

}  // namespace hnnfree
