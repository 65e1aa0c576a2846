#pragma once

// Elementary operations on block words and most reduced form sets.
//
// A semicommutation rewrites t^{n_{j-1}} u_j t^{n_j} as
// t^{n_{j-1}+1} phi(u_j) t^{n_j-1} (u_j in UA) or as
// t^{n_{j-1}-1} phi^-1(u_j) t^{n_j+1} (u_j in UB); only moves whose result is
// still HNN reduced count, which excludes hidden insertions of t t'.
// A cancellation removes u_m u_{m+1} = u_m u_m' when n_m = 0.
//
// MRF(w) is computed by alternating a full semicommutation closure with one
// cancellation until no member of the class admits a cancellation; the
// final class is the set of most reduced forms.

#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "hnnfree/hnn.hpp"

namespace hnnfree {

// Results of single semicommutations from `w`, in move order.
std::vector<BlockWord> semicommutation_moves(const BlockWord& w,
                                             const HnnExtension& e);

// Everything reachable from `w` by semicommutations (w included).
// Throws PreconditionError if `w` is not HNN reduced.
std::set<BlockWord> semicommutation_class(const BlockWord& w,
                                          const HnnExtension& e);

// Positions m (1-based) with u_{m+1} = u_m' and n_m = 0.
std::vector<std::size_t> cancellation_sites(const BlockWord& w);

// Throws PreconditionError if m is not a cancellation site.
BlockWord cancel_at(const BlockWord& w, std::size_t m, const HnnExtension& e);

// A finite, nonempty set of most reduced forms, stored sorted.
class MrfSet {
 public:
  explicit MrfSet(std::set<BlockWord> members)
      : members_(members.begin(), members.end()) {}

  const std::vector<BlockWord>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(const BlockWord& w) const;
  bool intersects(const MrfSet& other) const;

  friend bool operator==(const MrfSet&, const MrfSet&) = default;

 private:
  std::vector<BlockWord> members_;
};

// Reported once per cancellation performed by mrf(): `root` is the word the
// semicommutation class was grown from, `member` the class member that was
// cancelled at `site`.
struct CancellationEvent {
  const BlockWord& root;
  const BlockWord& member;
  std::size_t site;
};

struct MrfOptions {
  // When set, the cancellation is drawn uniformly from all (member, site)
  // pairs of the class; otherwise the first site of the first member is used.
  std::mt19937_64* rng = nullptr;
  std::function<void(const CancellationEvent&)> on_cancel;
};

MrfSet mrf(const Word& w, const HnnExtension& e, const MrfOptions& options = {});
MrfSet mrf(const BlockWord& w, const HnnExtension& e,
           const MrfOptions& options = {});

// A member of MRF(w) whose signed basis letters all lie in `allowed`.
// Throws PreconditionError when w itself (after HNN reduction) uses a letter
// outside `allowed`; nullopt would contradict the theory and is reported by
// callers as an internal error.
std::optional<BlockWord> mrf_restricted(const BlockWord& w,
                                        const std::set<Letter>& allowed,
                                        const HnnExtension& e);

bool words_equal_via_mrf(const Word& w1, const Word& w2, const HnnExtension& e);

// True iff every basis letter of w lies in `allowed`.
bool letters_within(const BlockWord& w, const std::set<Letter>& allowed);

}  // namespace hnnfree
