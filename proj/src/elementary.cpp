#include "hnnfree/elementary.hpp"

#include <algorithm>
#include <deque>

#include "hnnfree/errors.hpp"

namespace hnnfree {

std::vector<BlockWord> semicommutation_moves(const BlockWord& w,
                                             const HnnExtension& e) {
  std::vector<BlockWord> out;
  for (std::size_t j = 1; j <= w.k(); ++j) {
    const Letter& u = w.u(j);
    if (e.in_a(u)) {
      BlockWord next = w;
      next.n(j - 1) += 1;
      next.blocks[j - 1].letter = e.phi(u);
      next.n(j) -= 1;
      if (is_hnn_reduced(next, e)) out.push_back(std::move(next));
    }
    if (e.in_b(u)) {
      BlockWord next = w;
      next.n(j - 1) -= 1;
      next.blocks[j - 1].letter = e.phi_inverse(u);
      next.n(j) += 1;
      if (is_hnn_reduced(next, e)) out.push_back(std::move(next));
    }
  }
  return out;
}

std::set<BlockWord> semicommutation_class(const BlockWord& w,
                                          const HnnExtension& e) {
  if (!is_hnn_reduced(w, e))
    throw PreconditionError("semicommutation_class needs an HNN reduced word");
  std::set<BlockWord> seen{w};
  std::deque<BlockWord> frontier{w};
  while (!frontier.empty()) {
    BlockWord cur = std::move(frontier.front());
    frontier.pop_front();
    for (auto& next : semicommutation_moves(cur, e)) {
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  return seen;
}

std::vector<std::size_t> cancellation_sites(const BlockWord& w) {
  std::vector<std::size_t> sites;
  for (std::size_t m = 1; m < w.k(); ++m) {
    if (w.n(m) == 0 && w.u(m + 1).is_inverse_of(w.u(m))) sites.push_back(m);
  }
  return sites;
}

BlockWord cancel_at(const BlockWord& w, std::size_t m, const HnnExtension& e) {
  if (m == 0 || m >= w.k() || w.n(m) != 0 || !w.u(m + 1).is_inverse_of(w.u(m)))
    throw PreconditionError("no cancellation site at " + std::to_string(m));
  BlockWord out = w;
  out.n(m - 1) += w.n(m + 1);
  auto first = out.blocks.begin() + static_cast<std::ptrdiff_t>(m - 1);
  out.blocks.erase(first, first + 2);
  if (!is_hnn_reduced(out, e)) return hnn_reduce(out.flatten(e.stable()), e);
  return out;
}

bool MrfSet::contains(const BlockWord& w) const {
  return std::binary_search(members_.begin(), members_.end(), w);
}

bool MrfSet::intersects(const MrfSet& other) const {
  auto a = members_.begin();
  auto b = other.members_.begin();
  while (a != members_.end() && b != other.members_.end()) {
    if (*a == *b) return true;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return false;
}

MrfSet mrf(const Word& w, const HnnExtension& e, const MrfOptions& options) {
  BlockWord current = hnn_reduce(w, e);
  for (;;) {
    std::set<BlockWord> cls = semicommutation_class(current, e);

    const BlockWord* chosen = nullptr;
    std::size_t site = 0;
    if (options.rng) {
      std::vector<std::pair<const BlockWord*, std::size_t>> candidates;
      for (const auto& member : cls)
        for (auto m : cancellation_sites(member))
          candidates.emplace_back(&member, m);
      if (!candidates.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
        std::tie(chosen, site) = candidates[pick(*options.rng)];
      }
    } else {
      for (const auto& member : cls) {
        auto sites = cancellation_sites(member);
        if (!sites.empty()) {
          chosen = &member;
          site = sites.front();
          break;
        }
      }
    }

    if (!chosen) return MrfSet(std::move(cls));
    if (options.on_cancel) options.on_cancel({current, *chosen, site});
    current = cancel_at(*chosen, site, e);
  }
}

MrfSet mrf(const BlockWord& w, const HnnExtension& e,
           const MrfOptions& options) {
  return mrf(w.flatten(e.stable()), e, options);
}

bool letters_within(const BlockWord& w, const std::set<Letter>& allowed) {
  return std::all_of(w.blocks.begin(), w.blocks.end(), [&](const Block& b) {
    return allowed.count(b.letter) != 0;
  });
}

std::optional<BlockWord> mrf_restricted(const BlockWord& w,
                                        const std::set<Letter>& allowed,
                                        const HnnExtension& e) {
  BlockWord reduced = hnn_reduce(w.flatten(e.stable()), e);
  if (!letters_within(w, allowed) || !letters_within(reduced, allowed))
    throw PreconditionError(
        "mrf_restricted: the word uses basis letters outside the allowed set");
  const MrfSet forms = mrf(reduced, e);
  for (const auto& member : forms.members())
    if (letters_within(member, allowed)) return member;
  return std::nullopt;
}

bool words_equal_via_mrf(const Word& w1, const Word& w2, const HnnExtension& e) {
  return mrf(w1, e).intersects(mrf(w2, e));
}

}  // namespace hnnfree
