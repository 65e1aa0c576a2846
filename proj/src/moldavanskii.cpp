#include "hnnfree/moldavanskii.hpp"

#include <algorithm>

#include "hnnfree/errors.hpp"

namespace hnnfree {

RhoData rho_t(const Word& w, Symbol t) {
  if (exponent_sum(w, t) != 0)
    throw InvalidInput("rho_t needs stable letter exponent sum zero, got " +
                       std::to_string(exponent_sum(w, t)));
  if (!is_cyclically_reduced(w))
    throw InvalidInput("rho_t needs a cyclically reduced word");

  RhoData d;
  d.source = w;
  int prefix_sum = 0;
  for (const auto& l : w) {
    if (l.symbol == t) {
      prefix_sum += l.sign;
      continue;
    }
    if (l.symbol.index())
      throw InvalidInput("letter " + l.to_string() + " is already indexed");
    const int index = -prefix_sum;
    d.image.push_back(Letter(l.symbol.with_index(index), l.sign));
    auto [it, inserted] = d.bounds.emplace(l.symbol, std::pair{index, index});
    if (!inserted) {
      it->second.first = std::min(it->second.first, index);
      it->second.second = std::max(it->second.second, index);
    }
  }
  for (const auto& [x, range] : d.bounds)
    for (int i = range.first; i <= range.second; ++i)
      d.xiw.push_back(x.with_index(i));
  std::sort(d.xiw.begin(), d.xiw.end(), alphabetical_less);
  return d;
}

Word rho_inverse(const Word& v, Symbol t) {
  Word out;
  for (const auto& l : v) {
    auto index = l.symbol.index();
    if (!index) {
      out.push_back(l);
      continue;
    }
    out *= Word::power(t, -*index);
    out.push_back(Letter(l.symbol.base(), l.sign));
    out *= Word::power(t, *index);
  }
  return free_reduce(out);
}

std::pair<int, int> xi_bounds(const RhoData& d, Symbol x) {
  auto it = d.bounds.find(x.base());
  return it == d.bounds.end() ? std::pair{0, 0} : it->second;
}

SplittingData moldavanskii_extension_data(const Word& w, Symbol t) {
  RhoData d = rho_t(w, t);
  if (!is_cyclically_reduced(d.image))
    throw InvalidInput("rho_t(w) = " + d.image.to_string() +
                       " is not cyclically reduced");
  SplittingData out;
  out.relator = d.image;
  out.generators = d.xiw;
  for (auto s : d.xiw) {
    auto [mu, m] = xi_bounds(d, s);
    const int i = *s.index();
    if (i < m) {
      out.a_generators.push_back(s);
      out.phi.emplace_back(s, s.with_index(i + 1));
    }
    if (i > mu) out.b_generators.push_back(s);
  }
  return out;
}

}  // namespace hnnfree
