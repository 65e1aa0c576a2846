#include "hnnfree/pipeline.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hnnfree/errors.hpp"

namespace hnnfree {

namespace {

int sign_of(int x) { return x < 0 ? -1 : 1; }

std::optional<Word> shift_xi(const Word& w, int by,
                             const std::set<Symbol>& xi) {
  Word out;
  for (const auto& l : w) {
    Symbol s = l.symbol.with_index(*l.symbol.index() + by);
    if (!xi.count(s)) return std::nullopt;
    out.push_back(Letter(s, l.sign));
  }
  return out;
}

}  // namespace

WtwSpec validate_wtw(const Word& input, Symbol stable) {
  WtwSpec spec;
  spec.stable = stable;
  spec.w = free_reduce(input);
  const Word& w = spec.w;
  if (w.empty()) throw InvalidInput("w is empty");
  if (w.front().symbol == stable || w.back().symbol == stable)
    throw InvalidInput("w must begin and end with a non-stable letter");

  int prefix_sum = 0;
  int gap = 0;
  std::set<Symbol> seen;
  for (const auto& l : w) {
    if (l.symbol == stable) {
      prefix_sum += l.sign;
      gap += l.sign;
      continue;
    }
    if (l.symbol.index())
      throw InvalidInput("letter " + l.to_string() + " must not be indexed");
    if (!seen.insert(l.symbol).second)
      throw InvalidInput("repeated letter " + l.symbol.to_string() +
                         ": the letters x_i must be pairwise distinct");
    if (!spec.letters.empty()) spec.gaps.push_back(gap);
    gap = 0;
    spec.letters.push_back(l);
    spec.layers.push_back(-prefix_sum);
  }
  spec.sigma = exponent_sum(w, stable);
  if (spec.sigma == 0)
    throw InvalidInput("sigma_t(w) = 0; the stable letter sum must be nonzero");
  return spec;
}

Word PipelineData::rewrite_xi(const Word& xi_word) const {
  Word substituted;
  for (const auto& l : xi_word) {
    if (l.symbol == eliminated) {
      substituted *= l.sign > 0 ? eliminated_value : eliminated_value.inverse();
    } else {
      substituted.push_back(l);
    }
  }
  return extension.rewriter().rewrite(substituted);
}

PipelineData build_pipeline(const WtwSpec& spec) {
  const Symbol t = spec.stable;
  const std::size_t k = spec.k();
  const int sigma = spec.sigma;
  const int step = sign_of(sigma);
  const int lo = std::min(0, sigma);
  const int hi = std::max(0, sigma);

  Word relator = spec.w * Word::power(t, -2 * sigma) * spec.w;

  std::vector<int> layer_range;
  for (int j = 0; j != sigma + step; j += step) layer_range.push_back(j);

  auto xi_letter = [&](std::size_t i, int j) {
    const Letter& x = spec.letters[i];
    return Letter(x.symbol.with_index(spec.layers[i] + j), x.sign);
  };

  std::map<std::pair<std::size_t, int>, Word> gamma;
  std::set<Symbol> xi;
  for (int j : layer_range) {
    Word g;
    for (std::size_t i = 0; i <= k; ++i) {
      g.push_back(xi_letter(i, j));
      xi.insert(g.back().symbol);
      gamma[{i, j}] = g;
    }
  }

  // r's image is gamma(k, 0) gamma(k, sigma); solve it for its last letter.
  const Letter last = xi_letter(k, sigma);
  Word last_value = (gamma[{k, 0}] * gamma[{k - 1, sigma}]).inverse();
  if (last.sign < 0) last_value = last_value.inverse();

  std::vector<Symbol> ambient;
  for (auto s : xi)
    if (s != last.symbol) ambient.push_back(s);
  std::sort(ambient.begin(), ambient.end(), alphabetical_less);

  ExtensionSpec ext_spec;
  ext_spec.ambient = ambient;
  ext_spec.stable = t;
  std::map<std::pair<std::size_t, int>, Letter> gamma_letter;
  for (int j : layer_range) {
    for (std::size_t i = 0; i <= k; ++i) {
      if (i == k && j == sigma) continue;
      Symbol name =
          Symbol::intern("g" + std::to_string(ext_spec.basis.size() + 1));
      ext_spec.basis.push_back({name, gamma[{i, j}]});
      gamma_letter[{i, j}] = Letter(name);
    }
  }
  gamma_letter[{k, sigma}] = gamma_letter[{k, 0}].inverse();

  std::optional<BasisRewriter> rewriter;
  try {
    rewriter.emplace(FreeBasis(ambient, ext_spec.basis));
  } catch (const InvalidInput& e) {
    throw InternalError(std::string("U_H is not a free basis of H: ") +
                        e.what());
  }
  auto to_basis = [&](const Word& xi_word) {
    Word substituted;
    for (const auto& l : xi_word) {
      if (l.symbol == last.symbol) {
        substituted *= l.sign > 0 ? last_value : last_value.inverse();
      } else {
        substituted.push_back(l);
      }
    }
    return rewriter->rewrite(substituted);
  };

  // phi read off the layer shift x[i] -> x[i+1]: u -> v whenever shifting
  // u up (or v down) stays inside Xi_r and lands on a single basis letter.
  std::map<Letter, Letter> shift_phi;
  auto record = [&](const Letter& u, const Letter& v) {
    auto [it, inserted] = shift_phi.emplace(u, v);
    if (!inserted && it->second != v)
      throw InternalError("the layer shift sends " + u.to_string() +
                          " to two different letters");
  };
  for (const auto& b : ext_spec.basis) {
    for (int sg : {1, -1}) {
      const Letter u(b.name, sg);
      const Word d = sg > 0 ? b.definition : b.definition.inverse();
      if (auto up = shift_xi(d, 1, xi)) {
        Word r = to_basis(*up);
        if (r.size() == 1) record(u, r.front());
      }
      if (auto down = shift_xi(d, -1, xi)) {
        Word r = to_basis(*down);
        if (r.size() == 1) record(r.front(), u);
      }
    }
  }

  std::vector<std::pair<Letter, Letter>> phi;
  std::map<Letter, Letter> gamma_phi;
  for (std::size_t i = 0; i <= k; ++i) {
    for (int j = lo; j < hi; ++j) {
      const Letter u = gamma_letter[{i, j}];
      const Letter v = gamma_letter[{i, j + 1}];
      phi.emplace_back(u, v);
      gamma_phi[u] = v;
      gamma_phi[u.inverse()] = v.inverse();
    }
  }
  if (shift_phi != gamma_phi)
    throw InternalError(
        "phi from the layer shift differs from gamma(i, j) -> gamma(i, j+1)");

  std::set<Letter> ua;
  std::set<Letter> ub;
  for (const auto& [from, to] : shift_phi) {
    ua.insert(from);
    ub.insert(to);
  }
  auto basis_order = [&](std::set<Letter> letters) {
    std::vector<Letter> out;
    for (const auto& b : ext_spec.basis)
      for (int sg : {1, -1})
        if (letters.count(Letter(b.name, sg))) out.emplace_back(b.name, sg);
    return out;
  };
  ext_spec.ua = basis_order(ua);
  ext_spec.ub = basis_order(ub);
  ext_spec.phi = phi;
  // U_H and gamma(k, 0)^-1 generate P* together with t and t', but for
  // |sigma| > 1 that set is not closed under phi: gamma(k, 0)^-1 lies in UA
  // and phi sends it to gamma(k, 1)^-1.  Adding phi-images of letters already
  // in the set leaves P* unchanged (phi(u) = t' u t) and makes it closed.
  std::set<Letter> seed;
  for (const auto& b : ext_spec.basis) seed.insert(Letter(b.name));
  seed.insert(gamma_letter[{k, 0}].inverse());
  std::set<Letter> closed = seed;
  std::vector<Letter> pending(seed.begin(), seed.end());
  while (!pending.empty()) {
    Letter u = pending.back();
    pending.pop_back();
    for (const auto& [from, to] : shift_phi) {
      if (from == u && closed.insert(to).second) pending.push_back(to);
      if (to == u && closed.insert(from).second) pending.push_back(from);
    }
  }
  for (int sg : {1, -1})
    for (const auto& b : ext_spec.basis)
      if (closed.count(Letter(b.name, sg))) ext_spec.uq.emplace_back(b.name, sg);

  std::optional<HnnExtension> extension;
  try {
    extension.emplace(ext_spec);
  } catch (const InvalidInput& e) {
    throw InternalError(std::string("derived splitting is not a valid "
                                    "extension: ") + e.what());
  }
  if (!verify_free_basis(extension->rewriter().basis()))
    throw InternalError("U_H is not a free basis of H");

  PipelineData p{spec,
                 relator,
                 layer_range,
                 gamma,
                 gamma_letter,
                 last.symbol,
                 last_value,
                 *extension,
                 SubmonoidSpec{seed},
                 SubmonoidSpec{closed},
                 {}};

  if (ext_spec.basis.size() + 1 != xi.size())
    throw InternalError("|U_H| != |Xi_r| - 1");

  auto report = check_compatibility(p.uq, p.extension);
  if (!report.compatible)
    throw InternalError("U_Q is not compatible with phi at " +
                        report.witness->to_string());

  // A and B must be the subgroups generated by the lower and upper layers.
  std::map<Symbol, std::pair<int, int>> range;
  for (auto s : xi) {
    auto [it, inserted] =
        range.emplace(s.base(), std::pair{*s.index(), *s.index()});
    it->second.first = std::min(it->second.first, *s.index());
    it->second.second = std::max(it->second.second, *s.index());
  }
  for (auto s : xi) {
    auto [mu, m] = range[s.base()];
    Word r = p.rewrite_xi(Word{Letter(s)});
    auto within = [&](const std::set<Letter>& d) {
      return std::all_of(r.begin(), r.end(),
                         [&](const Letter& l) { return d.count(l) != 0; });
    };
    if (*s.index() < m && !within(p.extension.ua()))
      throw InternalError(s.to_string() + " is not in <UA>");
    if (*s.index() > mu && !within(p.extension.ub()))
      throw InternalError(s.to_string() + " is not in <UB>");
  }

  for (std::size_t i = 0; i <= k; ++i) {
    const Letter& x = spec.letters[i];
    const int layer = spec.layers[i];
    Word image = p.rewrite_xi(Word{Letter(x.symbol.with_index(layer))});
    p.translation[x.symbol] =
        Word::power(t, layer) * image * Word::power(t, -layer);
  }

  if (!words_equal(translate_query(relator, p), Word{}, p.extension))
    throw InternalError("the relator does not translate to 1");
  return p;
}

std::vector<Word> prefix_generators(const WtwSpec& spec) {
  std::vector<Word> out;
  Word prefix;
  for (const auto& l : spec.w) {
    prefix.push_back(l);
    if (l.symbol != spec.stable) out.push_back(prefix);
  }
  out.push_back(Word{Letter(spec.stable, 1)});
  out.push_back(Word{Letter(spec.stable, -1)});
  return out;
}

Word translate_query(const Word& v, const PipelineData& p) {
  Word out;
  for (const auto& l : v) {
    if (l.symbol == p.spec.stable) {
      out.push_back(l);
      continue;
    }
    auto it = p.translation.find(l.symbol);
    if (it == p.translation.end())
      throw InvalidInput("letter " + l.to_string() + " does not occur in w");
    out *= l.sign > 0 ? it->second : it->second.inverse();
  }
  return out;
}

MembershipResult prefix_member(const Word& v, const PipelineData& p) {
  return decide_membership(translate_query(v, p), p.uq, p.extension);
}

std::string dump_pipeline(const PipelineData& p) {
  std::ostringstream out;
  const auto& ext = p.extension;
  const auto& basis = ext.rewriter().basis();
  auto expansion = [&](const Letter& l) {
    const Word& d = basis.definition(l.symbol);
    return (l.sign > 0 ? d : d.inverse()).to_string();
  };
  auto list = [&](const char* key, const std::vector<Letter>& letters,
                  bool positive_only) {
    out << "# " << key << ":";
    bool first = true;
    for (const auto& l : letters) {
      if (positive_only && l.sign < 0) continue;
      out << (first ? " " : " | ") << expansion(l);
      first = false;
    }
    out << '\n';
  };

  out << "# w: " << p.spec.w << '\n';
  out << "# sigma: " << p.spec.sigma << '\n';
  out << "# relator: " << p.relator << '\n';
  out << "# gamma:";
  bool first = true;
  for (int j : p.layer_range) {
    for (std::size_t i = 0; i <= p.spec.k(); ++i) {
      out << (first ? " " : " | ") << p.gamma.at({i, j});
      first = false;
    }
  }
  out << '\n';
  for (int j : p.layer_range)
    for (std::size_t i = 0; i <= p.spec.k(); ++i)
      out << "# gamma[" << i << "," << j << "] = " << p.gamma.at({i, j})
          << " = " << p.gamma_letter.at({i, j}) << '\n';
  out << "# eliminated: " << p.eliminated.to_string() << " = "
      << p.eliminated_value << '\n';
  std::vector<Letter> positive;
  for (const auto& b : basis.elements()) positive.emplace_back(b.name);
  list("UH", positive, true);
  list("UA letters", ext.spec().ua, true);
  list("UB letters", ext.spec().ub, true);
  list("UQ", ext.spec().uq, false);
  for (const auto& x : p.spec.letters)
    out << "# translate: " << x.symbol.to_string() << " -> "
        << p.translation.at(x.symbol) << '\n';
  out << serialize_extension(ext.spec());
  return out.str();
}

}  // namespace hnnfree
