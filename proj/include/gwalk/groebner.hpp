#pragma once

// Multivariate division, S-polynomials, Buchberger's algorithm and
// interreduction to marked Groebner bases.

#include <algorithm>
#include <chrono>
#include <deque>
#include <optional>
#include <vector>

#include "gwalk/detail/reducer.hpp"
#include "gwalk/error.hpp"
#include "gwalk/marked.hpp"
#include "gwalk/ordering.hpp"
#include "gwalk/polynomial.hpp"

namespace gwalk {

/// Nonempty list of nonzero generators over a common ring.
template <class F>
class Ideal {
 public:
  Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> gens) : ring_(std::move(ring)), gens_(std::move(gens)) { validate(); }
  explicit Ideal(std::vector<Polynomial<F>> gens) : gens_(std::move(gens)) {
    if (!gens_.empty()) ring_ = gens_.front().ring();
    validate();
  }

  [[nodiscard]] const RingPtr<F>& ring() const noexcept { return ring_; }
  [[nodiscard]] const std::vector<Polynomial<F>>& generators() const noexcept { return gens_; }
  [[nodiscard]] std::size_t size() const noexcept { return gens_.size(); }
  [[nodiscard]] std::size_t nvars() const { return ring_->nvars(); }

  friend bool operator==(const Ideal& a, const Ideal& b) { return *a.ring_ == *b.ring_ && a.gens_ == b.gens_; }

 private:
  void validate() const {
    if (gens_.empty()) throw InvalidInput("ideal needs at least one generator");
    for (const auto& g : gens_) {
      if (g.is_zero()) throw InvalidInput("zero generator");
      if (!(*g.ring() == *ring_)) throw RingMismatch();
    }
  }

  RingPtr<F> ring_;
  std::vector<Polynomial<F>> gens_;
};

/// Degree first, then lex; used to pick the next term in marked division.
inline TermOrdering selection_ordering(std::size_t n) {
  std::vector<IntVector> rows(n, IntVector(n));
  for (std::size_t j = 0; j < n; ++j) rows[0][j] = Int(1);
  for (std::size_t i = 1; i < n; ++i) rows[i][i - 1] = Int(1);
  return TermOrdering::from_matrix(rows);
}

namespace detail {

template <class F>
void check_markings(const std::vector<MarkedPolynomial<F>>& g, const TermOrdering& ord) {
  for (const auto& e : g) {
    if (e.mark().size() != ord.nvars()) throw DimensionMismatch("basis element and ordering differ in length");
    if (leading_term(e.poly(), ord).exp != e.mark()) {
      throw MarkingError("marking is not the leading term under the given ordering");
    }
  }
}

template <class F>
RingPtr<F> ring_of(const Polynomial<F>& f, const std::vector<MarkedPolynomial<F>>& g) {
  if (f.ring()) return f.ring();
  if (!g.empty()) return g.front().poly().ring();
  throw InvalidInput("polynomial without ring");
}

}  // namespace detail

template <class F>
struct DivisionResult {
  Polynomial<F> remainder;
  std::vector<Polynomial<F>> quotients;  // f = sum quotients[i] * G[i] + remainder
};

/// Multivariate division by a basis whose markings are leading terms under
/// `ord`; always reduces the greatest reducible term, first divisor wins.
template <class F>
DivisionResult<F> divide(const Polynomial<F>& f, const std::vector<MarkedPolynomial<F>>& g, const TermOrdering& ord) {
  detail::check_markings(g, ord);
  const auto ring = detail::ring_of(f, g);
  if (f.nvars() != ord.nvars()) throw DimensionMismatch("polynomial and ordering differ in length");
  detail::Reducer<F> red(ring->field, ord);
  std::vector<detail::Divisor<F>> divs;
  divs.reserve(g.size());
  for (const auto& e : g) divs.push_back(red.make_divisor(e));
  std::vector<const detail::Divisor<F>*> ptrs;
  for (const auto& d : divs) ptrs.push_back(&d);
  std::vector<typename detail::Reducer<F>::Quotient> qs;
  typename detail::Reducer<F>::Options opt;
  opt.quotients = &qs;
  auto rem = red.reduce(red.sort(f), ptrs, opt);
  DivisionResult<F> out{red.to_polynomial(rem, ring), {}};
  std::vector<std::vector<Term<F>>> qterms(g.size());
  for (auto& q : qs) qterms[q.divisor].push_back({std::move(q.shift), std::move(q.coeff)});
  for (auto& t : qterms) out.quotients.emplace_back(ring, std::move(t));
  return out;
}

template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const std::vector<MarkedPolynomial<F>>& g, const TermOrdering& ord) {
  detail::check_markings(g, ord);
  const auto ring = detail::ring_of(f, g);
  detail::Reducer<F> red(ring->field, ord);
  std::vector<detail::Divisor<F>> divs;
  divs.reserve(g.size());
  for (const auto& e : g) divs.push_back(red.make_divisor(e));
  std::vector<const detail::Divisor<F>*> ptrs;
  for (const auto& d : divs) ptrs.push_back(&d);
  return red.to_polynomial(red.reduce(red.sort(f), ptrs, {}), ring);
}

template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const MarkedBasis<F>& g, const TermOrdering& ord) {
  return normal_form(f, g.elements(), ord);
}

/// Division that consults only the markings: the reducible term that is
/// greatest in degree-then-lex order is reduced next.
template <class F>
Polynomial<F> marked_division(const Polynomial<F>& f, const std::vector<MarkedPolynomial<F>>& g) {
  const auto ring = detail::ring_of(f, g);
  const TermOrdering sel = selection_ordering(ring->nvars());
  detail::Reducer<F> red(ring->field, sel);
  std::vector<detail::Divisor<F>> divs;
  divs.reserve(g.size());
  for (const auto& e : g) divs.push_back(red.make_divisor(e));
  std::vector<const detail::Divisor<F>*> ptrs;
  for (const auto& d : divs) ptrs.push_back(&d);
  typename detail::Reducer<F>::Options opt;
  opt.cycle_guard = true;
  return red.to_polynomial(red.reduce(red.sort(f), ptrs, opt), ring);
}

/// x^(lcm-a) f - x^(lcm-b) g for markings a, b.
template <class F>
Polynomial<F> s_polynomial(const MarkedPolynomial<F>& f, const MarkedPolynomial<F>& g) {
  const Monomial l = lcm(f.mark(), g.mark());
  const auto one = f.poly().field().one();
  return f.poly().mul_term(one, l / f.mark()) - g.poly().mul_term(one, l / g.mark());
}

namespace detail {

// Drops elements whose marking is divisible by an earlier-kept or different
// marking; equal markings keep the first occurrence.
template <class F>
std::vector<MarkedPolynomial<F>> minimalize(const std::vector<MarkedPolynomial<F>>& in) {
  std::vector<MarkedPolynomial<F>> out;
  for (std::size_t i = 0; i < in.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < in.size() && !drop; ++j) {
      if (i == j) continue;
      if (in[j].mark().divides(in[i].mark())) drop = in[j].mark() != in[i].mark() || j < i;
    }
    if (!drop) out.push_back(in[i]);
  }
  return out;
}

}  // namespace detail

/// Turns a Groebner basis with compatible markings into the reduced marked
/// basis, reducing tails by markings only.
template <class F>
MarkedBasis<F> interreduce(const std::vector<MarkedPolynomial<F>>& basis) {
  auto min = detail::minimalize(basis);
  std::vector<MarkedPolynomial<F>> out;
  out.reserve(min.size());
  for (const auto& g : min) {
    auto tail = marked_division(g.tail(), min);
    const auto ring = g.poly().ring();
    out.emplace_back(Polynomial<F>::monomial(ring, g.mark(), ring->field.one()) + tail, g.mark());
  }
  return MarkedBasis<F>(std::move(out));
}

/// Same result as the marking-only version, using `ord` (which the markings
/// must agree with) to steer the reductions.
template <class F>
MarkedBasis<F> interreduce(const std::vector<MarkedPolynomial<F>>& basis, const TermOrdering& ord) {
  detail::check_markings(basis, ord);
  auto min = detail::minimalize(basis);
  if (min.empty()) return MarkedBasis<F>();
  const auto ring = min.front().poly().ring();
  detail::Reducer<F> red(ring->field, ord);
  std::vector<detail::Divisor<F>> divs;
  divs.reserve(min.size());
  for (const auto& e : min) divs.push_back(red.make_divisor(e));
  std::vector<const detail::Divisor<F>*> ptrs;
  for (const auto& d : divs) ptrs.push_back(&d);
  std::vector<MarkedPolynomial<F>> out;
  out.reserve(min.size());
  for (std::size_t i = 0; i < min.size(); ++i) {
    const auto& d = divs[i];
    // The marked term sits first under `ord`; strip it.
    const auto n = static_cast<std::ptrdiff_t>(ord.nvars());
    detail::SortedPoly<F> tail;
    tail.exps.assign(d.poly.exps.begin() + n, d.poly.exps.end());
    tail.keys.assign(d.poly.keys.begin() + n, d.poly.keys.end());
    tail.coeffs.assign(d.poly.coeffs.begin() + 1, d.poly.coeffs.end());
    auto rem = red.reduce(std::move(tail), ptrs, {});
    auto poly = red.to_polynomial(rem, ring) + Polynomial<F>::monomial(ring, min[i].mark(), ring->field.one());
    out.emplace_back(std::move(poly), min[i].mark());
  }
  return MarkedBasis<F>(std::move(out));
}

namespace detail {

// Rational computations run fraction-free on primitive integer polynomials.
template <class F>
struct WorkDomain {
  using type = F;
};
template <>
struct WorkDomain<Rationals> {
  using type = Integers;
};

}  // namespace detail

/// Critical pair selection. Normal picks the smallest lcm; sugar picks the
/// smallest sugar degree first, then the smallest lcm. Auto uses sugar over
/// prime fields and normal over the rationals, where the longer sugar cascades
/// tend to blow up coefficients.
enum class Selection { Auto, Normal, Sugar };

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

inline void check_deadline(const Deadline& d) {
  if (d && std::chrono::steady_clock::now() > *d) throw Timeout();
}

struct BuchbergerOptions {
  Selection selection = Selection::Auto;
  Deadline deadline{};  // throws Timeout once passed
};

namespace detail {

template <class F>
class Buchberger {
  using W = typename WorkDomain<F>::type;
  static constexpr bool kIntegral = std::is_same_v<W, Integers>;

 public:
  Buchberger(const Ideal<F>& ideal, const TermOrdering& ord, const BuchbergerOptions& opt)
      : ring_(ideal.ring()), ord_(ord), opt_(opt), red_(work_field(), ord), n_(ord.nvars()) {
    if (ideal.nvars() != ord.nvars()) throw DimensionMismatch("ideal and ordering differ in number of variables");
    for (const auto& g : ideal.generators()) add(to_work(g), max_degree(g));
  }

  MarkedBasis<F> run() {
    while (!pairs_.empty()) {
      check_deadline(opt_.deadline);
      const std::size_t best = select();
      const Pair p = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      add(spoly(p.i, p.j), p.sugar);
    }
    return finish();
  }

 private:
  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    Int sugar;
    IntVector key;
  };

  const W& work_field() const {
    if constexpr (kIntegral) {
      return integers_;
    } else {
      return ring_->field;
    }
  }

  SortedPoly<W> to_work(const Polynomial<F>& f) const {
    if constexpr (kIntegral) {
      mpz_class den = 1;
      for (const auto& t : f.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
      auto s = red_.sort_with(f, [&](const mpq_class& c) { return mpz_class(c.get_num() * (den / c.get_den())); });
      Reducer<W>::make_primitive(s);
      return s;
    } else {
      return red_.sort(f);
    }
  }

  static Int max_degree(const Polynomial<F>& f) {
    Int d;
    for (const auto& t : f.terms()) d = std::max(d, t.exp.total_degree());
    return d;
  }

  [[nodiscard]] Monomial lead(std::size_t i) const { return red_.exp_of(basis_[i].poly, 0); }

  std::size_t select() const {
    const bool sugar = opt_.selection == Selection::Sugar || (opt_.selection == Selection::Auto && !kIntegral);
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      if (sugar && a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = k;
        continue;
      }
      const int c = red_.compare_keys(a.key.data(), b.key.data());
      if (c < 0 || (c == 0 && std::tie(a.i, a.j) < std::tie(b.i, b.j))) best = k;
    }
    return best;
  }

  SortedPoly<W> spoly(std::size_t i, std::size_t j) const {
    const auto& f = basis_[i].poly;
    const auto& g = basis_[j].poly;
    const Monomial l = lcm(lead(i), lead(j));
    const Monomial sf = l / lead(i);
    const Monomial sg = l / lead(j);
    const IntVector kf = ord_.key(sf);
    const IntVector kg = ord_.key(sg);
    SortedPoly<W> a;
    SortedPoly<W> out;
    if constexpr (kIntegral) {
      // lc(g)/d * x^sf * f - lc(f)/d * x^sg * g
      const mpz_class d = gcd(f.coeffs[0], g.coeffs[0]);
      red_.shifted(f, mpz_class(g.coeffs[0] / d), sf.vector().data(), kf.data(), a);
      red_.sub_shifted(a, 0, mpz_class(f.coeffs[0] / d), sg.vector().data(), kg.data(), g, out);
    } else {
      red_.shifted(f, ring_->field.one(), sf.vector().data(), kf.data(), a);
      red_.sub_shifted(a, 0, ring_->field.one(), sg.vector().data(), kg.data(), g, out);
    }
    return out;
  }

  Pair make_pair(std::size_t i, std::size_t j) const {
    Pair p{i, j, lcm(lead(i), lead(j)), Int(), {}};
    const Int d = p.lcm.total_degree();
    p.sugar = std::max(sugar_[i] + d - lead(i).total_degree(), sugar_[j] + d - lead(j).total_degree());
    p.key = ord_.key(p.lcm);
    return p;
  }

  void add(SortedPoly<W> f, Int sugar) {
    std::vector<const Divisor<W>*> ptrs;
    ptrs.reserve(basis_.size());
    for (const auto& d : basis_) ptrs.push_back(&d);
    SortedPoly<W> r;
    if constexpr (kIntegral) {
      r = red_.pseudo_reduce(std::move(f), ptrs, true);
    } else {
      typename Reducer<W>::Options opt;
      opt.full = true;
      r = red_.reduce(std::move(f), ptrs, opt);
      red_.make_monic(r);
    }
    if (r.empty()) return;
    Divisor<W> d;
    d.poly = std::move(r);
    d.mark_pos = 0;
    d.mask = red_.mask_of(d.poly.exps.data());
    basis_.push_back(std::move(d));
    sugar_.push_back(std::move(sugar));
    active_.push_back(true);
    update(basis_.size() - 1);
  }

  // Gebauer-Moeller installation of the new element h.
  void update(std::size_t h) {
    const Monomial lh = lead(h);
    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < h; ++g) {
      if (active_[g]) candidates.push_back(make_pair(g, h));
    }
    std::vector<char> keep(candidates.size(), 1);
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      if (lead(candidates[a].i).coprime(lh)) continue;
      for (std::size_t b = 0; b < candidates.size(); ++b) {
        if (a == b || !keep[b]) continue;
        if (candidates[b].lcm.divides(candidates[a].lcm) &&
            (candidates[b].lcm != candidates[a].lcm || b < a)) {
          keep[a] = 0;
          break;
        }
      }
    }
    // Old pairs whose lcm is strictly divisible by lead(h) in both directions are redundant.
    std::vector<Pair> kept;
    kept.reserve(pairs_.size());
    for (auto& p : pairs_) {
      if (lh.divides(p.lcm) && lcm(lead(p.i), lh) != p.lcm && lcm(lead(p.j), lh) != p.lcm) continue;
      kept.push_back(std::move(p));
    }
    pairs_ = std::move(kept);
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      if (keep[a] && !lead(candidates[a].i).coprime(lh)) pairs_.push_back(std::move(candidates[a]));
    }
    for (std::size_t g = 0; g < h; ++g) {
      if (active_[g] && lh.divides(lead(g))) active_[g] = false;
    }
  }

  // Minimal elements, reduced in increasing order of their leading terms: a
  // tail term can only be divisible by a smaller leading term, so each element
  // is reduced against already reduced ones.
  MarkedBasis<F> finish() {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Monomial li = lead(i);
      bool drop = false;
      for (std::size_t j = 0; j < basis_.size() && !drop; ++j) {
        if (i == j) continue;
        const Monomial lj = lead(j);
        if (lj.divides(li)) drop = lj != li || j < i;
      }
      if (!drop) keep.push_back(i);
    }
    std::sort(keep.begin(), keep.end(), [&](std::size_t a, std::size_t b) {
      return red_.compare_keys(red_.mark_key(basis_[a]), red_.mark_key(basis_[b])) < 0;
    });
    std::deque<Divisor<W>> reduced;
    std::vector<const Divisor<W>*> ptrs;
    std::vector<MarkedPolynomial<F>> elems;
    for (std::size_t i : keep) {
      SortedPoly<W> r;
      if constexpr (kIntegral) {
        r = red_.pseudo_reduce(basis_[i].poly, ptrs, true);
      } else {
        r = red_.reduce(basis_[i].poly, ptrs, {});
        red_.make_monic(r);
      }
      std::vector<Term<F>> terms;
      terms.reserve(r.size());
      for (std::size_t k = 0; k < r.size(); ++k) terms.push_back({red_.exp_of(r, k), typename F::value_type(r.coeffs[k])});
      elems.emplace_back(Polynomial<F>(ring_, std::move(terms)), red_.exp_of(r, 0));
      Divisor<W> d;
      d.poly = std::move(r);
      d.mask = red_.mask_of(d.poly.exps.data());
      reduced.push_back(std::move(d));
      ptrs.push_back(&reduced.back());
    }
    return MarkedBasis<F>(std::move(elems));
  }

  RingPtr<F> ring_;
  const TermOrdering& ord_;
  BuchbergerOptions opt_;
  Integers integers_;
  Reducer<W> red_;
  std::size_t n_;
  std::deque<Divisor<W>> basis_;
  std::vector<Int> sugar_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

}  // namespace detail

/// Reduced marked Groebner basis of the ideal under `ord`.
template <class F>
MarkedBasis<F> buchberger(const Ideal<F>& ideal, const TermOrdering& ord, const BuchbergerOptions& opt = {}) {
  return detail::Buchberger<F>(ideal, ord, opt).run();
}

/// Minimal generators of the leading ideal, in decreasing order.
template <class F>
std::vector<Monomial> leading_ideal(const Ideal<F>& ideal, const TermOrdering& ord) {
  auto g = buchberger(ideal, ord);
  std::vector<Monomial> out;
  for (const auto& e : g.sorted_by(ord)) out.push_back(e.mark());
  return out;
}

}  // namespace gwalk
