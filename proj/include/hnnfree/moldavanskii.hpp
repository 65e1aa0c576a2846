#pragma once

// Rewriting of a one-relator presentation with a stable letter of exponent
// sum zero into the base group of an HNN splitting.
//
// rho_t deletes the stable letters of w and replaces each other letter x at
// position i by x[-sigma_t(p_i)], p_i the prefix ending at i; x[i] stands for
// t^-i x t^i.  For every base letter x, mu_x and m_x are the least and
// greatest index of x in the image, and Xi_w collects x[mu_x .. m_x].

#include <map>
#include <utility>
#include <vector>

#include "hnnfree/word.hpp"

namespace hnnfree {

struct RhoData {
  Word source;
  Word image;
  std::map<Symbol, std::pair<int, int>> bounds;  // base letter -> (mu, m)
  std::vector<Symbol> xiw;                       // alphabetical
};

// Throws InvalidInput if sigma_t(w) != 0, w is not cyclically reduced, or a
// non-stable letter already carries an index.
RhoData rho_t(const Word& w, Symbol t);

// x[i] -> t^-i x t^i, freely reduced.  Unindexed letters are kept.
Word rho_inverse(const Word& v, Symbol t);

// (0, 0) for letters that do not occur.
std::pair<int, int> xi_bounds(const RhoData& d, Symbol x);

// Presentation data of the splitting G = H *_{t, phi: A -> B} with
// H = < Xi_w | rho_t(w) >, A = < Xi_w minus top layer >,
// B = < Xi_w minus bottom layer > and phi(x[i]) = x[i+1].
struct SplittingData {
  Word relator;
  std::vector<Symbol> generators;
  std::vector<Symbol> a_generators;
  std::vector<Symbol> b_generators;
  std::vector<std::pair<Symbol, Symbol>> phi;
};

// Throws InvalidInput when rho_t(w) is not cyclically reduced.
SplittingData moldavanskii_extension_data(const Word& w, Symbol t);

}  // namespace hnnfree
