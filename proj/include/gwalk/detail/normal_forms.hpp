#pragma once

// Normal forms against one fixed Groebner basis, memoized per monomial.
//
// nf is linear, so nf(f) is assembled from nf(x^a) over the support of f.
// For x^a = x_i * x^b the cache uses nf(x^a) = nf(x_i * nf(x^b)); once x^b is
// standard and x^a is not, x^a = x^c * lead(g) for some g and nf(x^a) is the
// normal form of -x^c * tail(g). Every monomial met this way is smaller than
// x^a, so the recursion terminates.
// Pays off when many high-degree polynomials are reduced against the same
// basis, as in the lifting step of the walk.

#include <unordered_map>
#include <vector>

#include "gwalk/detail/reducer.hpp"

namespace gwalk::detail {

template <class F>
class NormalForms {
 public:
  using Coeff = typename F::value_type;

  /// The divisors must form a Groebner basis marked by the reducer's ordering.
  NormalForms(const Reducer<F>& red, std::vector<const Divisor<F>*> basis) : red_(red), basis_(std::move(basis)) {}

  [[nodiscard]] SortedPoly<F> of(const SortedPoly<F>& f) {
    const std::size_t n = red_.nvars();
    typename Reducer<F>::Bucket acc(red_);
    SortedPoly<F> scaled;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const SortedPoly<F>& r = monomial(IntVector(f.exps.begin() + static_cast<std::ptrdiff_t>(i * n),
                                                  f.exps.begin() + static_cast<std::ptrdiff_t>((i + 1) * n)));
      red_.scale_into(r, f.coeffs[i], scaled);
      acc.add(std::move(scaled));
    }
    SortedPoly<F> out;
    acc.drain(out);
    return out;
  }

 private:
  const SortedPoly<F>& monomial(const IntVector& a) {
    if (auto it = memo_.find(a); it != memo_.end()) return it->second;
    SortedPoly<F> result = compute(a);
    return memo_.emplace(a, std::move(result)).first->second;
  }

  SortedPoly<F> compute(const IntVector& a) {
    const std::size_t n = red_.nvars();
    const std::size_t d = red_.find_divisor(basis_, a.data());
    if (d == basis_.size()) return single(a);
    std::size_t i = n;
    while (i > 0 && a[i - 1].is_zero()) --i;
    if (i == 0) return {};  // the basis contains a constant
    --i;
    IntVector b = a;
    b[i] -= Int(1);
    const bool b_standard = red_.find_divisor(basis_, b.data()) == basis_.size();
    typename Reducer<F>::Bucket acc(red_);
    SortedPoly<F> scaled;
    if (b_standard) {
      // x^a = x^c * lead(g): replace by -x^c * tail(g).
      const Divisor<F>& g = *basis_[d];
      const Int* me = red_.mark_exps(g);
      IntVector c(n);
      for (std::size_t v = 0; v < n; ++v) c[v] = a[v] - me[v];
      IntVector e(n);
      for (std::size_t j = 0; j < g.poly.size(); ++j) {
        if (j == g.mark_pos) continue;
        for (std::size_t v = 0; v < n; ++v) e[v] = g.poly.exps[j * n + v] + c[v];
        red_.scale_into(monomial(e), red_.field().neg(g.poly.coeffs[j]), scaled);
        acc.add(std::move(scaled));
      }
    } else {
      // x^a = x_i * x^b with nf(x^b) known.
      const SortedPoly<F> rb = monomial(b);
      IntVector e(n);
      for (std::size_t j = 0; j < rb.size(); ++j) {
        for (std::size_t v = 0; v < n; ++v) e[v] = rb.exps[j * n + v];
        e[i] += Int(1);
        red_.scale_into(monomial(e), rb.coeffs[j], scaled);
        acc.add(std::move(scaled));
      }
    }
    SortedPoly<F> out;
    acc.drain(out);
    return out;
  }

  SortedPoly<F> single(const IntVector& a) const {
    SortedPoly<F> s;
    const IntVector key = red_.ordering().key(Monomial(a));
    red_.push(s, a.data(), key.data(), red_.field().one());
    return s;
  }

  const Reducer<F>& red_;
  std::vector<const Divisor<F>*> basis_;
  std::unordered_map<IntVector, SortedPoly<F>, IntVectorHash> memo_;
};

}  // namespace gwalk::detail
