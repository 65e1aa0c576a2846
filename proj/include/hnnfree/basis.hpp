#pragma once

// Free bases of a free group FG(X) and rewriting over them.
//
// A candidate basis is a list of named words over the ambient alphabet X.
// The subgroup they generate is computed by Stallings folding of the flower
// graph; every edge of the graph carries a tag in the free group on the
// basis names, so that the tags read along a closed path at the base vertex
// spell the same element over the basis.  When the folded graph is the
// bouquet on X and the candidate has |X| elements, the candidate is a free
// basis, and the loop tags give the unique rewriting of each ambient letter.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "hnnfree/word.hpp"

namespace hnnfree {

struct BasisElement {
  Symbol name;
  Word definition;  // over the ambient alphabet, freely reduced, nonempty

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

// A candidate basis.  Construction checks only the local invariants (names
// distinct, definitions reduced, nonempty and over the ambient alphabet);
// freeness is decided by verify_free_basis.
class FreeBasis {
 public:
  FreeBasis(std::vector<Symbol> ambient, std::vector<BasisElement> elements);

  const std::vector<Symbol>& ambient() const { return ambient_; }
  const std::vector<BasisElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  std::optional<std::size_t> find(Symbol name) const;
  bool is_ambient(Symbol s) const;
  const Word& definition(Symbol name) const;

 private:
  std::vector<Symbol> ambient_;
  std::vector<BasisElement> elements_;
};

// Folded graph of the subgroup generated by a candidate basis.
struct FoldedGraph {
  struct Edge {
    std::size_t from;
    std::size_t to;
    Symbol label;  // traversed forwards reads label, backwards label'
    Word tag;      // over basis names
  };
  std::size_t base = 0;
  std::vector<std::size_t> vertices;
  std::vector<Edge> edges;

  bool is_bouquet(const std::vector<Symbol>& ambient) const;
};

FoldedGraph fold_subgroup(const FreeBasis& candidate);

// True iff the candidate has |X| elements and generates FG(X).
bool verify_free_basis(const FreeBasis& candidate);

// A verified free basis with its rewriting table.  Immutable.
class BasisRewriter {
 public:
  // Throws InvalidInput if `basis` is not a free basis of FG(ambient).
  explicit BasisRewriter(FreeBasis basis);

  const FreeBasis& basis() const { return basis_; }

  bool is_basis_symbol(Symbol s) const { return basis_.find(s).has_value(); }
  bool is_ambient_symbol(Symbol s) const { return basis_.is_ambient(s); }

  // Reduced word over the basis names equal to `ambient_word`.
  Word rewrite(const Word& ambient_word) const;

  // Freely reduced ambient word represented by `basis_word`.
  Word expand(const Word& basis_word) const;

 private:
  FreeBasis basis_;
  std::map<Symbol, Word> letter_images_;
};

Word rewrite_to_basis(const Word& w, const BasisRewriter& rewriter);
Word expand_from_basis(const Word& v, const BasisRewriter& rewriter);

}  // namespace hnnfree
