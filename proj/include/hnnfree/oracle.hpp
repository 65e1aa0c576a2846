#pragma once

// Independent checking engines: rational subset membership in a free group
// (Benois), bounded enumeration of products in an HNN extension, and a
// scrambler that rewrites a word into an equal one by elementary operations.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hnnfree/hnn.hpp"
#include "hnnfree/word.hpp"

namespace hnnfree {

// Flower automaton of gens* over the signed alphabet, saturated with epsilon
// edges: whenever p reaches q by reading x x' (epsilons allowed anywhere),
// an epsilon edge p -> q is added.  State 0 is initial and final.
class SaturatedAutomaton {
 public:
  explicit SaturatedAutomaton(const std::vector<Word>& gens);

  std::size_t states() const { return out_.size(); }
  std::size_t epsilon_edges() const { return epsilon_count_; }
  // Epsilon edge count after each saturation round, starting with 0.
  const std::vector<std::size_t>& rounds() const { return rounds_; }

  // True iff the freely reduced form of `w` is read from 0 back to 0.
  bool accepts(const Word& w) const;

 private:
  std::vector<std::size_t> closure(std::vector<std::size_t> from) const;
  std::vector<std::size_t> step(const std::vector<std::size_t>& from,
                                const Letter& x) const;
  void saturate();

  std::vector<std::vector<std::pair<Letter, std::size_t>>> out_;
  std::vector<std::vector<std::size_t>> epsilon_;
  std::size_t epsilon_count_ = 0;
  std::vector<std::size_t> rounds_;
};

// Membership of w in Mon<gens> inside the free group.
bool benois_member(const Word& w, const std::vector<Word>& gens);

struct BfsResult {
  bool found = false;                 // false means unknown, never "no"
  std::vector<std::size_t> product;  // indices into gens when found
};

// Searches products of at most max_len generators equal to w in H*.
BfsResult bfs_member(const Word& w, const std::vector<Word>& gens,
                     const HnnExtension& e, std::size_t max_len);

// Applies `steps` random elementary operations (insertion of u u' for u a
// signed basis or stable letter, or a semicommutation u t <-> t phi(u),
// t' u <-> phi(u) t') to w.  Throws PreconditionError unless w is a word over
// the signed basis and the stable letter.
Word scramble(const Word& w, const HnnExtension& e, std::uint64_t seed,
              std::size_t steps);

}  // namespace hnnfree
