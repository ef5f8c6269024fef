#pragma once

// The standard Groebner walk. Starting from the marked basis of the start
// ordering, the walk follows the straight segment from the start weight (first
// row of the start matrix) to the target weight (first row of the target
// matrix). At each cone boundary it converts the basis of the initial-form
// ideal to the weight ordering refined by the target, lifts it back to the
// ideal and interreduces.

#include <gmpxx.h>

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gwalk/error.hpp"
#include "gwalk/detail/normal_forms.hpp"
#include "gwalk/groebner.hpp"
#include "gwalk/marked.hpp"
#include "gwalk/ordering.hpp"

namespace gwalk {

/// Primitive vectors marking - other exponent over all basis elements; the
/// closed cone of the basis is {w : <v, w> >= 0 for every v}.
struct ConeInequalities {
  std::vector<IntVector> vectors;  // sorted, deduplicated

  [[nodiscard]] bool contains(std::span<const Int> w) const {
    for (const auto& v : vectors) {
      if (dot(v, w).sign() < 0) return false;
    }
    return true;
  }
};

template <class F>
ConeInequalities cone_inequalities(const MarkedBasis<F>& g) {
  std::set<IntVector> vs;
  for (const auto& e : g) {
    for (const auto& t : e.poly().terms()) {
      if (t.exp != e.mark()) vs.insert(primitive(difference(e.mark(), t.exp)));
    }
  }
  return {{vs.begin(), vs.end()}};
}

/// Walk diagnostics. For the standard walk `crossed` holds the start weight
/// followed by every crossing weight; the generic walk stores facet normals.
struct WalkTrace {
  std::string algorithm;
  std::vector<IntVector> crossed;
  std::size_t steps = 0;
  std::vector<std::size_t> basis_sizes;  // start basis, then after each step
};

inline std::string format_trace(const WalkTrace& t) {
  std::ostringstream os;
  os << "Results for " << t.algorithm << "\n";
  const bool facets = t.algorithm == "generic_walk";
  os << (facets ? "Crossed Facets in:" : "Crossed Cones in:") << "\n";
  for (const auto& w : t.crossed) os << format_vector(w) << "\n";
  os << (facets ? "Facets crossed: " : "Cones crossed: ") << t.crossed.size() << "\n";
  return os.str();
}

template <class F>
struct WalkResult {
  MarkedBasis<F> basis;
  WalkTrace trace;
  std::vector<MarkedBasis<F>> visited;  // filled when WalkOptions::record_bases is set
};

struct WalkOptions {
  bool record_bases = false;
  Deadline deadline{};
};

/// Parameter t at which <v, (1-t) from + t to> vanishes, when the segment
/// leaves the half-space <v, .> >= 0 (i.e. <v, to> < 0 <= <v, from>).
inline std::optional<mpq_class> crossing_parameter(std::span<const Int> v, std::span<const Int> from,
                                                   std::span<const Int> to) {
  const Int at_from = dot(v, from);
  const Int at_to = dot(v, to);
  if (at_to.sign() >= 0 || at_from.sign() < 0) return std::nullopt;
  return mpq_class(at_from.to_mpz(), (at_from - at_to).to_mpz());
}

/// Last point of the segment [w, target] inside the cone, as a primitive
/// integer vector; `target` itself when no inequality cuts the segment.
inline WeightVector next_weight(const ConeInequalities& cone, const WeightVector& w, const WeightVector& target) {
  if (w.size() != target.size()) throw DimensionMismatch("weights differ in length");
  if (!cone.contains(w.entries())) throw OutsideCone("current weight lies outside the cone");
  // Keep t* = num / den as integers to avoid normalizing on every comparison.
  std::optional<std::pair<Int, Int>> best;
  for (const auto& v : cone.vectors) {
    const Int at_w = dot(v, w.entries());
    const Int at_t = dot(v, target.entries());
    if (at_t.sign() >= 0) continue;
    Int num = at_w;
    Int den = at_w - at_t;
    if (!best || num * best->second < best->first * den) best = {std::move(num), std::move(den)};
  }
  if (!best) return target;
  const auto& [num, den] = *best;
  IntVector p(w.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = (den - num) * w[i] + num * target[i];
  return WeightVector(std::move(p));
}

/// Initial forms of the basis elements at w, keeping the markings.
template <class F>
MarkedBasis<F> initial_forms(const MarkedBasis<F>& g, std::span<const Int> w) {
  std::vector<MarkedPolynomial<F>> out;
  out.reserve(g.size());
  for (const auto& e : g) {
    auto in = initial_form(e.poly(), w);
    if (!in.contains(e.mark())) throw OutsideCone("weight lies outside the cone of the basis");
    out.emplace_back(std::move(in), e.mark());
  }
  return MarkedBasis<F>(std::move(out));
}

template <class F>
MarkedBasis<F> initial_forms(const MarkedBasis<F>& g, const WeightVector& w) {
  return initial_forms(g, w.entries());
}

/// {m - nf(m, H)} with the markings of M. Generates the ideal but is not reduced.
template <class F>
std::vector<MarkedPolynomial<F>> lift(const MarkedBasis<F>& m, const MarkedBasis<F>& h, const TermOrdering& ord_h) {
  detail::check_markings(h.elements(), ord_h);
  if (h.empty()) throw InvalidInput("lift against an empty basis");
  const auto ring = h[0].poly().ring();
  detail::Reducer<F> red(ring->field, ord_h);
  std::vector<detail::Divisor<F>> divs;
  divs.reserve(h.size());
  for (const auto& e : h) divs.push_back(red.make_divisor(e));
  std::vector<const detail::Divisor<F>*> ptrs;
  for (const auto& d : divs) ptrs.push_back(&d);
  detail::NormalForms<F> nfs(red, ptrs);
  std::vector<MarkedPolynomial<F>> out;
  out.reserve(m.size());
  for (const auto& e : m) {
    auto nf = red.to_polynomial(nfs.of(red.sort(e.poly())), ring);
    out.emplace_back(e.poly() - nf, e.mark());
  }
  return out;
}

namespace detail {

inline WeightVector first_row_weight(const TermOrdering& ord, const char* which) {
  const IntVector row = ord.row_vector(0);
  for (const auto& x : row) {
    if (x.sign() < 0) {
      throw InvalidInput(std::string(which) + " ordering has a negative entry in its first row; unsupported by the standard walk");
    }
  }
  return WeightVector(row);
}

}  // namespace detail

template <class F>
WalkResult<F> standard_walk(const Ideal<F>& ideal, const TermOrdering& start, const TermOrdering& target,
                            const WalkOptions& opt = {}) {
  if (start.nvars() != ideal.nvars() || target.nvars() != ideal.nvars()) {
    throw DimensionMismatch("orderings and ideal differ in number of variables");
  }
  WeightVector w = detail::first_row_weight(start, "start");
  const WeightVector tau = detail::first_row_weight(target, "target");

  WalkResult<F> res;
  res.trace.algorithm = "standard_walk";
  const BuchbergerOptions gb{Selection::Auto, opt.deadline};
  MarkedBasis<F> g = buchberger(ideal, start, gb);
  TermOrdering current = start;
  res.trace.crossed.push_back(w.vector());
  res.trace.basis_sizes.push_back(g.size());
  if (opt.record_bases) res.visited.push_back(g);

  bool converted_at_target = false;
  while (!g.consistent_with(target)) {
    check_deadline(opt.deadline);
    if (converted_at_target) throw MarkingError("walk reached the target weight without reaching the target basis");
    w = next_weight(cone_inequalities(g), w, tau);
    converted_at_target = w == tau;
    TermOrdering refined = TermOrdering::weight_refinement(w, target);
    const MarkedBasis<F> in = initial_forms(g, w);
    const MarkedBasis<F> m = buchberger(Ideal<F>(ideal.ring(), in.polynomials()), refined, gb);
    g = interreduce(lift(m, g, current), refined);
    current = std::move(refined);
    res.trace.crossed.push_back(w.vector());
    res.trace.basis_sizes.push_back(g.size());
    ++res.trace.steps;
    if (opt.record_bases) res.visited.push_back(g);
  }
  res.basis = std::move(g);
  return res;
}

}  // namespace gwalk
