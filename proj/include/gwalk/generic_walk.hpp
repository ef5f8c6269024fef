#pragma once

// The generic Groebner walk. The path between the start and target orderings
// is perturbed symbolically so that it never meets a lower-dimensional face;
// every step crosses exactly one facet. Weights never appear explicitly: facet
// normals are compared through the two ordering matrices, and all reductions
// use the markings only.

#include <algorithm>
#include <vector>

#include "gwalk/error.hpp"
#include "gwalk/groebner.hpp"
#include "gwalk/marked.hpp"
#include "gwalk/ordering.hpp"
#include "gwalk/walk.hpp"

namespace gwalk {

using FacetVector = IntVector;

/// Start and target ordering of a generic walk.
struct OrderingPair {
  TermOrdering start;
  TermOrdering target;
};

/// Remainder of f modulo the marked basis, reducing by markings only.
template <class F>
Polynomial<F> marked_normal_form(const Polynomial<F>& f, const MarkedBasis<F>& g) {
  return marked_division(f, g.elements());
}

namespace detail {

inline IntVector apply(const TermOrdering& ord, const IntVector& v) {
  IntVector out(v.size());
  ord.key_into(v, out.data());
  return out;
}

}  // namespace detail

/// Cone inequalities that the perturbed path leaves through: negative under
/// the target ordering and positive under the start ordering.
template <class F>
std::vector<FacetVector> flippable_facets(const MarkedBasis<F>& g, const OrderingPair& p) {
  std::vector<FacetVector> out;
  for (auto& v : cone_inequalities(g).vectors) {
    if (p.target.lex_sign_of(v) < 0 && p.start.lex_sign_of(v) > 0) out.push_back(std::move(v));
  }
  return out;
}

/// True when the perturbed path meets the hyperplane of u before that of v.
/// Reads (Tu)(Sv)^T - (Tv)(Su)^T row by row; u comes first when the first
/// nonzero entry is negative.
inline bool facet_less(const FacetVector& u, const FacetVector& v, const OrderingPair& p) {
  if (u.size() != v.size() || u.size() != p.start.nvars() || p.start.nvars() != p.target.nvars()) {
    throw DimensionMismatch("facet and ordering dimensions differ");
  }
  const IntVector tu = detail::apply(p.target, u);
  const IntVector tv = detail::apply(p.target, v);
  const IntVector su = detail::apply(p.start, u);
  const IntVector sv = detail::apply(p.start, v);
  for (std::size_t i = 0; i < tu.size(); ++i) {
    for (std::size_t j = 0; j < tu.size(); ++j) {
      const int s = (tu[i] * sv[j] - tv[i] * su[j]).sign();
      if (s != 0) return s < 0;
    }
  }
  return false;
}

/// Basis of the neighbouring cone across the facet with normal w, with
/// markings taken from the target ordering on the facet ideal.
template <class F>
MarkedBasis<F> generic_flip(const MarkedBasis<F>& g, const FacetVector& w, const OrderingPair& p) {
  if (g.empty()) throw InvalidInput("flip of an empty basis");
  const auto ring = g[0].poly().ring();
  std::vector<Polynomial<F>> facet_forms;
  facet_forms.reserve(g.size());
  for (const auto& e : g) {
    std::vector<Term<F>> terms;
    for (const auto& t : e.poly().terms()) {
      if (t.exp == e.mark() || primitive(difference(e.mark(), t.exp)) == w) terms.push_back(t);
    }
    facet_forms.emplace_back(ring, std::move(terms));
  }
  const MarkedBasis<F> m = buchberger(Ideal<F>(ring, std::move(facet_forms)), p.target);
  std::vector<MarkedPolynomial<F>> lifted;
  lifted.reserve(m.size());
  for (const auto& e : m) lifted.emplace_back(e.poly() - marked_normal_form(e.poly(), g), e.mark());
  return interreduce(lifted);
}

template <class F>
WalkResult<F> generic_walk(const Ideal<F>& ideal, const TermOrdering& start, const TermOrdering& target,
                           const WalkOptions& opt = {}) {
  if (start.nvars() != ideal.nvars() || target.nvars() != ideal.nvars()) {
    throw DimensionMismatch("orderings and ideal differ in number of variables");
  }
  const OrderingPair pair{start, target};
  WalkResult<F> res;
  res.trace.algorithm = "generic_walk";
  MarkedBasis<F> g = buchberger(ideal, start, BuchbergerOptions{Selection::Auto, opt.deadline});
  res.trace.basis_sizes.push_back(g.size());
  if (opt.record_bases) res.visited.push_back(g);
  while (true) {
    check_deadline(opt.deadline);
    const auto facets = flippable_facets(g, pair);
    if (facets.empty()) break;
    const FacetVector* best = &facets.front();
    for (const auto& v : facets) {
      if (facet_less(v, *best, pair) || (!facet_less(*best, v, pair) && v < *best)) best = &v;
    }
    g = generic_flip(g, *best, pair);
    res.trace.crossed.push_back(*best);
    res.trace.basis_sizes.push_back(g.size());
    ++res.trace.steps;
    if (opt.record_bases) res.visited.push_back(g);
  }
  if (!g.consistent_with(target)) throw MarkingError("generic walk stopped before reaching the target basis");
  res.basis = std::move(g);
  return res;
}

}  // namespace gwalk
