#pragma once

// Membership in P = Mon<Q u {t, t'}> <= H* for Q = Mon<U_Q>, U_Q a set of
// signed basis letters.  Decidable when phi(Q n A) = Q n B, which is checked
// here letter by letter: phi(U_Q n UA) = U_Q n UB.

#include <optional>
#include <set>

#include "hnnfree/elementary.hpp"
#include "hnnfree/errors.hpp"
#include "hnnfree/hnn.hpp"

namespace hnnfree {

struct SubmonoidSpec {
  std::set<Letter> generators;  // U_Q, not necessarily inversion closed
};

struct CompatibilityReport {
  bool compatible = false;
  std::optional<Letter> witness;  // a letter breaking the symmetry
};

CompatibilityReport check_compatibility(const SubmonoidSpec& q,
                                        const HnnExtension& e);

class CompatibilityError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

struct MembershipResult {
  bool member = false;
  std::optional<BlockWord> witness;  // an MRF member written over U_Q and t
};

// Throws CompatibilityError if phi(Q n A) != Q n B, InvalidInput if U_Q
// contains a non-basis letter.
MembershipResult decide_membership(const Word& w, const SubmonoidSpec& q,
                                   const HnnExtension& e);

}  // namespace hnnfree
