#include "hnnfree/basis.hpp"

#include <algorithm>
#include <set>

#include "hnnfree/errors.hpp"

namespace hnnfree {

FreeBasis::FreeBasis(std::vector<Symbol> ambient,
                     std::vector<BasisElement> elements)
    : ambient_(std::move(ambient)), elements_(std::move(elements)) {
  std::set<Symbol> seen_ambient;
  for (auto s : ambient_) {
    if (!seen_ambient.insert(s).second)
      throw InvalidInput("ambient letter " + s.to_string() + " listed twice");
  }
  std::set<Symbol> seen_names;
  for (const auto& e : elements_) {
    const auto name = e.name.to_string();
    if (!seen_names.insert(e.name).second)
      throw InvalidInput("basis name " + name + " used twice");
    if (e.definition.empty())
      throw InvalidInput("basis element " + name + " has an empty definition");
    if (!is_freely_reduced(e.definition))
      throw InvalidInput("basis element " + name + " is not freely reduced");
    for (const auto& l : e.definition) {
      if (!seen_ambient.count(l.symbol))
        throw InvalidInput("basis element " + name + " uses letter " +
                           l.symbol.to_string() +
                           " outside the ambient alphabet");
    }
    // A basis name may shadow an ambient letter only when it stands for it.
    if (seen_ambient.count(e.name) && e.definition != Word{Letter(e.name)})
      throw InvalidInput("basis name " + name +
                         " clashes with a different ambient letter");
  }
}

std::optional<std::size_t> FreeBasis::find(Symbol name) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i].name == name) return i;
  return std::nullopt;
}

bool FreeBasis::is_ambient(Symbol s) const {
  return std::find(ambient_.begin(), ambient_.end(), s) != ambient_.end();
}

const Word& FreeBasis::definition(Symbol name) const {
  auto i = find(name);
  if (!i) throw InvalidInput("unknown basis letter " + name.to_string());
  return elements_[*i].definition;
}

bool FoldedGraph::is_bouquet(const std::vector<Symbol>& ambient) const {
  if (vertices.size() != 1) return false;
  std::set<Symbol> labels;
  for (const auto& e : edges) labels.insert(e.label);
  return labels.size() == edges.size() &&
         labels == std::set<Symbol>(ambient.begin(), ambient.end());
}

namespace {

struct Arc {
  std::size_t edge;
  bool forward;
};

}  // namespace

FoldedGraph fold_subgroup(const FreeBasis& candidate) {
  FoldedGraph g;
  std::size_t next_vertex = 1;
  g.vertices.push_back(0);

  // Flower graph: one petal per basis element, tagged with its name on the
  // first edge.
  for (const auto& element : candidate.elements()) {
    const Word& d = element.definition;
    std::size_t prev = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      std::size_t next = 0;
      if (i + 1 < d.size()) {
        next = next_vertex++;
        g.vertices.push_back(next);
      }
      Word tag = i == 0 ? Word{Letter(element.name)} : Word{};
      if (d[i].sign > 0) {
        g.edges.push_back({prev, next, d[i].symbol, tag});
      } else {
        g.edges.push_back({next, prev, d[i].symbol, tag.inverse()});
      }
      prev = next;
    }
  }

  auto source = [&](const Arc& a) {
    const auto& e = g.edges[a.edge];
    return a.forward ? e.from : e.to;
  };
  auto target = [&](const Arc& a) {
    const auto& e = g.edges[a.edge];
    return a.forward ? e.to : e.from;
  };
  auto arc_tag = [&](const Arc& a) {
    const auto& e = g.edges[a.edge];
    return a.forward ? e.tag : e.tag.inverse();
  };

  for (;;) {
    std::map<std::pair<std::size_t, Letter>, Arc> seen;
    std::optional<std::pair<Arc, Arc>> fold;
    for (std::size_t i = 0; i < g.edges.size() && !fold; ++i) {
      for (bool fwd : {true, false}) {
        Arc a{i, fwd};
        Letter label(g.edges[i].label, fwd ? 1 : -1);
        auto [it, inserted] = seen.emplace(std::pair{source(a), label}, a);
        if (!inserted && it->second.edge != i) {
          fold = std::pair{it->second, a};
          break;
        }
      }
    }
    if (!fold) break;

    auto [keep_arc, drop_arc] = *fold;
    std::size_t keep = target(keep_arc);
    std::size_t drop = target(drop_arc);
    if (keep != drop) {
      if (drop == g.base) {
        std::swap(keep_arc, drop_arc);
        std::swap(keep, drop);
      }
      // Regauge `drop` so that both arcs carry the same tag, then identify.
      Word c = free_reduce(arc_tag(drop_arc).inverse() * arc_tag(keep_arc));
      Word c_inv = c.inverse();
      for (auto& e : g.edges) {
        if (e.to == drop) e.tag = free_reduce(e.tag * c);
        if (e.from == drop) e.tag = free_reduce(c_inv * e.tag);
      }
      for (auto& e : g.edges) {
        if (e.from == drop) e.from = keep;
        if (e.to == drop) e.to = keep;
      }
      g.vertices.erase(
          std::find(g.vertices.begin(), g.vertices.end(), drop));
    }
    // Parallel arcs with distinct tags would be a relation among the
    // candidates; the rank check in verify_free_basis rejects those.
    g.edges.erase(g.edges.begin() +
                  static_cast<std::ptrdiff_t>(drop_arc.edge));
  }
  return g;
}

bool verify_free_basis(const FreeBasis& candidate) {
  if (candidate.ambient().empty())
    throw PreconditionError("ambient alphabet must be nonempty");
  if (candidate.size() != candidate.ambient().size()) return false;
  return fold_subgroup(candidate).is_bouquet(candidate.ambient());
}

BasisRewriter::BasisRewriter(FreeBasis basis) : basis_(std::move(basis)) {
  if (basis_.ambient().empty())
    throw InvalidInput("ambient alphabet must be nonempty");
  if (basis_.size() != basis_.ambient().size())
    throw InvalidInput("not a free basis: " + std::to_string(basis_.size()) +
                       " elements for rank " +
                       std::to_string(basis_.ambient().size()));
  FoldedGraph g = fold_subgroup(basis_);
  if (!g.is_bouquet(basis_.ambient()))
    throw InvalidInput("not a free basis: the elements do not generate "
                       "the whole free group");
  for (const auto& e : g.edges) letter_images_.emplace(e.label, e.tag);
}

Word BasisRewriter::rewrite(const Word& ambient_word) const {
  Word out;
  for (const auto& l : ambient_word) {
    auto it = letter_images_.find(l.symbol);
    if (it == letter_images_.end())
      throw InvalidInput("letter " + l.symbol.to_string() +
                         " is not in the ambient alphabet");
    out *= l.sign > 0 ? it->second : it->second.inverse();
  }
  return free_reduce(out);
}

Word BasisRewriter::expand(const Word& basis_word) const {
  Word out;
  for (const auto& l : basis_word) {
    const Word& d = basis_.definition(l.symbol);
    out *= l.sign > 0 ? d : d.inverse();
  }
  return free_reduce(out);
}

Word rewrite_to_basis(const Word& w, const BasisRewriter& rewriter) {
  return rewriter.rewrite(w);
}

Word expand_from_basis(const Word& v, const BasisRewriter& rewriter) {
  return rewriter.expand(v);
}

}  // namespace hnnfree
