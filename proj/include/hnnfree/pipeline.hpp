#pragma once

// Prefix membership for G = < X, t | w t^{-2 sigma} w = 1 > where
//
//   w = x_0^{e_0} t^{n_1} x_1^{e_1} ... t^{n_k} x_k^{e_k},
//
// the x_i are pairwise distinct and sigma = n_1 + ... + n_k != 0.
//
// G splits as an HNN extension of the free group H = < Xi_r | rho_t(r) >.
// Layer subscripts follow rho_t: x_i sits in layer J_i = -sigma_t(prefix
// before x_i) in the first copy of w and in layer J_i + sigma in the second.
// With gamma(i, j) = x_0[J_0 + j] ... x_i[J_i + j] for j between 0 and sigma,
// U_H = Gamma minus gamma(k, sigma) is a free basis of H (gamma(k, sigma) is
// gamma(k, 0)^-1 in H), phi(gamma(i, j)) = gamma(i, j + 1), and the prefix
// monoid becomes Mon< U_Q u {t, t'} > with U_Q the closure of
// U_H u {gamma(k, 0)^-1} under phi and phi^-1.  The closure only adds
// gamma(k, j)^-1 for 0 < |j| < |sigma|, so U_Q = U_H u {gamma(k, 0)^-1}
// when |sigma| = 1.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hnnfree/hnn.hpp"
#include "hnnfree/membership.hpp"
#include "hnnfree/word.hpp"

namespace hnnfree {

struct WtwSpec {
  Word w;  // freely reduced
  Symbol stable;
  std::vector<Letter> letters;  // x_i^{e_i}, i = 0..k
  std::vector<int> gaps;        // n_1 .. n_k
  std::vector<int> layers;      // J_i
  int sigma = 0;

  std::size_t k() const { return letters.size() - 1; }
};

// Throws InvalidInput naming the violated condition.
WtwSpec validate_wtw(const Word& w, Symbol stable);

struct PipelineData {
  WtwSpec spec;
  Word relator;
  std::vector<int> layer_range;  // 0, s, 2s, ..., sigma with s = sign(sigma)
  std::map<std::pair<std::size_t, int>, Word> gamma;           // over Xi_r
  std::map<std::pair<std::size_t, int>, Letter> gamma_letter;  // over U_H
  Symbol eliminated;       // x_k[J_k + sigma], not part of the ambient basis
  Word eliminated_value;   // its value over the remaining Xi letters
  HnnExtension extension;
  SubmonoidSpec seed_uq;  // U_H and gamma(k, 0)^-1
  SubmonoidSpec uq;       // seed_uq closed under phi and phi^-1
  std::map<Symbol, Word> translation;  // x_i -> word over U_H and t

  // Rewrites a word over Xi_r as a reduced word over the basis.
  Word rewrite_xi(const Word& xi_word) const;
};

// Builds and cross-checks the splitting.  Every internal check is proved to
// hold, so a failure raises InternalError naming it.
PipelineData build_pipeline(const WtwSpec& spec);

// x_0, x_0 t^{n_1} x_1, ..., w, t, t'.
std::vector<Word> prefix_generators(const WtwSpec& spec);

// Throws InvalidInput on letters that do not occur in w.
Word translate_query(const Word& v, const PipelineData& p);

MembershipResult prefix_member(const Word& v, const PipelineData& p);

// Extension file for the splitting, preceded by comment lines listing
// Gamma, the translation map and the Xi expansions of the letter sets.
std::string dump_pipeline(const PipelineData& p);

}  // namespace hnnfree
