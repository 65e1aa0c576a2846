#include "hnnfree/oracle.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

#include "hnnfree/errors.hpp"

namespace hnnfree {

SaturatedAutomaton::SaturatedAutomaton(const std::vector<Word>& gens) {
  out_.emplace_back();
  for (const auto& raw : gens) {
    Word g = free_reduce(raw);
    if (g.empty()) continue;
    std::size_t from = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::size_t to = 0;
      if (i + 1 < g.size()) {
        to = out_.size();
        out_.emplace_back();
      }
      out_[from].emplace_back(g[i], to);
      from = to;
    }
  }
  epsilon_.resize(out_.size());
  saturate();
}

std::vector<std::size_t> SaturatedAutomaton::closure(
    std::vector<std::size_t> from) const {
  std::vector<bool> seen(out_.size(), false);
  std::vector<std::size_t> stack;
  for (auto s : from) {
    if (!seen[s]) {
      seen[s] = true;
      stack.push_back(s);
    }
  }
  std::vector<std::size_t> result;
  while (!stack.empty()) {
    auto s = stack.back();
    stack.pop_back();
    result.push_back(s);
    for (auto q : epsilon_[s]) {
      if (!seen[q]) {
        seen[q] = true;
        stack.push_back(q);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<std::size_t> SaturatedAutomaton::step(
    const std::vector<std::size_t>& from, const Letter& x) const {
  std::vector<std::size_t> next;
  for (auto p : from)
    for (const auto& [label, q] : out_[p])
      if (label == x) next.push_back(q);
  return closure(std::move(next));
}

void SaturatedAutomaton::saturate() {
  std::set<Letter> alphabet;
  for (const auto& edges : out_)
    for (const auto& e : edges) alphabet.insert(e.first);
  rounds_.push_back(0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p < out_.size(); ++p) {
      for (const auto& x : alphabet) {
        auto c = closure({p});
        auto mid = step(c, x);
        if (mid.empty()) continue;
        for (auto q : step(mid, x.inverse())) {
          if (std::binary_search(c.begin(), c.end(), q)) continue;
          epsilon_[p].push_back(q);
          ++epsilon_count_;
          changed = true;
          c = closure({p});
        }
      }
    }
    if (changed) rounds_.push_back(epsilon_count_);
  }
}

bool SaturatedAutomaton::accepts(const Word& w) const {
  auto current = closure({0});
  for (const auto& l : free_reduce(w)) {
    current = step(current, l);
    if (current.empty()) return false;
  }
  return std::binary_search(current.begin(), current.end(), 0);
}

bool benois_member(const Word& w, const std::vector<Word>& gens) {
  return SaturatedAutomaton(gens).accepts(w);
}

BfsResult bfs_member(const Word& w, const std::vector<Word>& gens,
                     const HnnExtension& e, std::size_t max_len) {
  const Symbol t = e.stable();
  struct Node {
    Word value;
    std::vector<std::size_t> product;
  };
  std::set<BlockWord> visited;
  std::deque<Node> queue;
  visited.insert(BlockWord{});
  queue.push_back({Word{}, {}});
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    if (words_equal(node.value, w, e)) return {true, node.product};
    if (node.product.size() == max_len) continue;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      BlockWord next = hnn_reduce(node.value * gens[i], e);
      if (!visited.insert(next).second) continue;
      Node child{next.flatten(t), node.product};
      child.product.push_back(i);
      queue.push_back(std::move(child));
    }
  }
  return {};
}

Word scramble(const Word& w, const HnnExtension& e, std::uint64_t seed,
              std::size_t steps) {
  const Symbol t = e.stable();
  for (const auto& l : w)
    if (l.symbol != t && !e.is_basis_letter(l))
      throw PreconditionError("scramble needs a word over the basis and " +
                              t.to_string() + ", got " + l.to_string());

  std::mt19937_64 rng(seed);
  auto basis = e.signed_basis();
  basis.push_back(Letter(t, 1));
  basis.push_back(Letter(t, -1));
  std::vector<Letter> cur(w.begin(), w.end());
  const Letter tp(t, 1);
  const Letter tm(t, -1);

  for (std::size_t s = 0; s < steps; ++s) {
    // Semicommutation sites: (position, replacement pair).
    std::vector<std::pair<std::size_t, std::pair<Letter, Letter>>> moves;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      const Letter& x = cur[i];
      const Letter& y = cur[i + 1];
      // u t = t phi(u), t' u = phi(u) t' for u in A.
      if (y == tp && x.symbol != t && e.in_a(x))
        moves.push_back({i, {tp, e.phi(x)}});
      if (x == tm && y.symbol != t && e.in_a(y))
        moves.push_back({i, {e.phi(y), tm}});
      if (x == tp && y.symbol != t && e.in_b(y))
        moves.push_back({i, {e.phi_inverse(y), tp}});
      if (y == tm && x.symbol != t && e.in_b(x))
        moves.push_back({i, {tm, e.phi_inverse(x)}});
    }
    bool insert = moves.empty() || basis.empty() ||
                  std::uniform_int_distribution<int>(0, 2)(rng) == 0;
    if (insert && !basis.empty()) {
      std::size_t pos =
          std::uniform_int_distribution<std::size_t>(0, cur.size())(rng);
      const Letter& u = basis[std::uniform_int_distribution<std::size_t>(
          0, basis.size() - 1)(rng)];
      cur.insert(cur.begin() + static_cast<std::ptrdiff_t>(pos),
                 {u, u.inverse()});
    } else if (!moves.empty()) {
      const auto& [i, repl] = moves[std::uniform_int_distribution<std::size_t>(
          0, moves.size() - 1)(rng)];
      cur[i] = repl.first;
      cur[i + 1] = repl.second;
    }
  }
  return Word(std::move(cur));
}

}  // namespace hnnfree
