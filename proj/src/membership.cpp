#include "hnnfree/membership.hpp"

namespace hnnfree {

namespace {

void check_generators(const SubmonoidSpec& q, const HnnExtension& e) {
  for (const auto& l : q.generators)
    if (!e.is_basis_letter(l))
      throw InvalidInput("submonoid generator " + l.to_string() +
                         " is not a signed basis letter");
}

}  // namespace

CompatibilityReport check_compatibility(const SubmonoidSpec& q,
                                        const HnnExtension& e) {
  check_generators(q, e);
  const auto& uq = q.generators;
  for (const auto& u : uq) {
    if (e.in_a(u) && !uq.count(e.phi(u))) return {false, u};
    if (e.in_b(u) && !uq.count(e.phi_inverse(u))) return {false, u};
  }
  return {true, std::nullopt};
}

MembershipResult decide_membership(const Word& w, const SubmonoidSpec& q,
                                   const HnnExtension& e) {
  auto report = check_compatibility(q, e);
  if (!report.compatible)
    throw CompatibilityError(
        "phi(Q n A) != Q n B (witness " + report.witness->to_string() +
        "); membership needs the submonoid to be compatible with phi");
  const MrfSet forms = mrf(w, e);
  for (const auto& member : forms.members())
    if (letters_within(member, q.generators)) return {true, member};
  return {false, std::nullopt};
}

}  // namespace hnnfree
