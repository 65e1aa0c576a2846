#include "support/generators.hpp"

#include <algorithm>
#include <numeric>

namespace hnnfree::testing {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::vector<Letter> signed_letters(const std::vector<Symbol>& symbols) {
  std::vector<Letter> out;
  for (auto s : symbols) {
    out.emplace_back(s, 1);
    out.emplace_back(s, -1);
  }
  return out;
}

std::vector<Symbol> symbols(std::initializer_list<const char*> names) {
  std::vector<Symbol> out;
  for (auto n : names) out.push_back(Symbol::intern(n));
  return out;
}

Word random_word(const std::vector<Letter>& alphabet, std::size_t length,
                 Rng& rng) {
  Word w;
  for (std::size_t i = 0; i < length; ++i)
    w.push_back(alphabet[uniform(rng, 0, alphabet.size() - 1)]);
  return w;
}

Word random_reduced_word(const std::vector<Letter>& alphabet,
                         std::size_t length, Rng& rng) {
  Word w;
  while (w.size() < length) {
    const Letter& l = alphabet[uniform(rng, 0, alphabet.size() - 1)];
    if (!w.empty() && w.back().is_inverse_of(l)) continue;
    w.push_back(l);
  }
  return w;
}

ExtensionSpec random_extension_spec(Rng& rng, const ExtensionShape& shape) {
  static const char* const names[] = {"a", "b", "c", "d", "e"};
  const std::size_t rank = uniform(rng, shape.min_rank, shape.max_rank);

  ExtensionSpec spec;
  spec.stable = Symbol::intern("t");
  std::vector<Word> defs;
  for (std::size_t i = 0; i < rank; ++i) {
    spec.ambient.push_back(Symbol::intern(names[i]));
    defs.push_back(Word{Letter(spec.ambient.back())});
  }
  for (std::size_t m = 0; m < shape.nielsen_moves; ++m) {
    std::size_t i = uniform(rng, 0, rank - 1);
    std::size_t j = uniform(rng, 0, rank - 2);
    if (j >= i) ++j;
    Word other = uniform(rng, 0, 1) ? defs[j] : defs[j].inverse();
    Word next = free_reduce(uniform(rng, 0, 1) ? defs[i] * other
                                               : other * defs[i]);
    if (next.size() <= shape.max_definition) defs[i] = next;
  }
  for (std::size_t i = 0; i < rank; ++i)
    spec.basis.push_back(
        {Symbol::intern("g" + std::to_string(i + 1)), defs[i]});

  std::vector<std::size_t> order(rank);
  std::iota(order.begin(), order.end(), 0);
  const std::size_t size = uniform(rng, 1, rank);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::size_t> from(order.begin(), order.begin() + size);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::size_t> to(order.begin(), order.begin() + size);
  std::sort(from.begin(), from.end());
  std::sort(to.begin(), to.end());
  for (auto i : from) {
    spec.ua.emplace_back(spec.basis[i].name, 1);
    spec.ua.emplace_back(spec.basis[i].name, -1);
  }
  for (auto i : to) {
    spec.ub.emplace_back(spec.basis[i].name, 1);
    spec.ub.emplace_back(spec.basis[i].name, -1);
  }
  std::shuffle(to.begin(), to.end(), rng);
  for (std::size_t p = 0; p < size; ++p)
    spec.phi.emplace_back(Letter(spec.basis[from[p]].name),
                          Letter(spec.basis[to[p]].name,
                                 uniform(rng, 0, 1) ? 1 : -1));
  return spec;
}

Word random_extension_word(const HnnExtension& e, std::size_t length,
                           Rng& rng) {
  auto alphabet = e.signed_basis();
  alphabet.emplace_back(e.stable(), 1);
  alphabet.emplace_back(e.stable(), -1);
  return random_word(alphabet, length, rng);
}

SubmonoidSpec random_compatible_submonoid(const HnnExtension& e, Rng& rng) {
  std::set<Letter> q;
  for (const auto& l : e.signed_basis())
    if (uniform(rng, 0, 2) == 0) q.insert(l);
  std::vector<Letter> pending(q.begin(), q.end());
  while (!pending.empty()) {
    Letter u = pending.back();
    pending.pop_back();
    if (e.in_a(u) && q.insert(e.phi(u)).second) pending.push_back(e.phi(u));
    if (e.in_b(u) && q.insert(e.phi_inverse(u)).second)
      pending.push_back(e.phi_inverse(u));
  }
  return {q};
}

Word random_wtw(Rng& rng, std::size_t max_k, int max_gap) {
  static const char* const names[] = {"a", "b", "c", "d", "e", "f"};
  const Symbol t = Symbol::intern("t");
  for (;;) {
    const std::size_t k = uniform(rng, 1, max_k);
    std::vector<std::size_t> order(6);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    Word w;
    int sigma = 0;
    for (std::size_t i = 0; i <= k; ++i) {
      if (i > 0) {
        int n = uniform_int(rng, -max_gap, max_gap);
        sigma += n;
        w *= Word::power(t, n);
      }
      w.push_back(Letter(Symbol::intern(names[order[i]]),
                         uniform(rng, 0, 1) ? 1 : -1));
    }
    if (sigma != 0) return w;
  }
}

ExtensionSpec shift_extension_spec() {
  return parse_extension(
      "letters: a b\n"
      "stable: t\n"
      "basis: a = a\n"
      "basis: b = b\n"
      "UA: a a'\n"
      "UB: b b'\n"
      "phi: a -> b\n");
}

const char* const bta_extension_text =
    "letters: a[1] b[-1] b[0]\n"
    "stable: t\n"
    "basis: g1 = b[0]\n"
    "basis: g2 = b[0] a[1]\n"
    "basis: g3 = b[-1]\n"
    "UA: g2 g2' g3 g3'\n"
    "UB: g1 g1' g2 g2'\n"
    "phi: g3 -> g1\n"
    "phi: g2' -> g2\n"
    "UQ: g1 g2 g3 g2'\n";

std::map<std::string, int> abelianize(const Word& w) {
  std::map<std::string, int> out;
  for (const auto& l : w) out[l.symbol.name()] += l.sign;
  return out;
}

}  // namespace hnnfree::testing
