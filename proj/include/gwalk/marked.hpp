#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "gwalk/error.hpp"
#include "gwalk/ordering.hpp"
#include "gwalk/polynomial.hpp"

namespace gwalk {

/// A polynomial together with the exponent chosen as its leading one. The
/// polynomial is scaled so that the marked coefficient is 1.
template <class F>
class MarkedPolynomial {
 public:
  MarkedPolynomial(Polynomial<F> poly, Monomial mark) : poly_(std::move(poly)), mark_(std::move(mark)) {
    if (!poly_.contains(mark_)) throw MarkingError("marked exponent is not in the support");
    const auto c = poly_.coefficient(mark_);
    if (!F::is_one(c)) poly_ = poly_.scaled(poly_.field().inv(c));
  }

  /// Marks the leading term under `ord`.
  static MarkedPolynomial leading(Polynomial<F> poly, const TermOrdering& ord) {
    auto lt = leading_term(poly, ord);
    return MarkedPolynomial(std::move(poly), std::move(lt.exp));
  }

  [[nodiscard]] const Polynomial<F>& poly() const noexcept { return poly_; }
  [[nodiscard]] const Monomial& mark() const noexcept { return mark_; }
  /// Everything except the marked term.
  [[nodiscard]] Polynomial<F> tail() const {
    std::vector<Term<F>> t;
    for (const auto& term : poly_.terms()) {
      if (term.exp != mark_) t.push_back(term);
    }
    return Polynomial<F>(poly_.ring(), std::move(t));
  }

  friend bool operator==(const MarkedPolynomial& a, const MarkedPolynomial& b) {
    return a.mark_ == b.mark_ && a.poly_ == b.poly_;
  }

 private:
  Polynomial<F> poly_;
  Monomial mark_;
};

/// Minimal, monic, reduced basis with explicit markings. Construction checks
/// all three properties; equality is set equality.
template <class F>
class MarkedBasis {
 public:
  MarkedBasis() = default;
  explicit MarkedBasis(std::vector<MarkedPolynomial<F>> elems, std::optional<std::string> provenance = {})
      : elems_(std::move(elems)), provenance_(std::move(provenance)) {
    validate();
    std::sort(elems_.begin(), elems_.end(),
              [](const MarkedPolynomial<F>& a, const MarkedPolynomial<F>& b) { return a.mark() < b.mark(); });
  }

  [[nodiscard]] std::size_t size() const noexcept { return elems_.size(); }
  [[nodiscard]] bool empty() const noexcept { return elems_.empty(); }
  [[nodiscard]] const std::vector<MarkedPolynomial<F>>& elements() const noexcept { return elems_; }
  [[nodiscard]] const MarkedPolynomial<F>& operator[](std::size_t i) const { return elems_[i]; }
  [[nodiscard]] auto begin() const { return elems_.begin(); }
  [[nodiscard]] auto end() const { return elems_.end(); }
  [[nodiscard]] const std::optional<std::string>& provenance() const noexcept { return provenance_; }
  void set_provenance(std::string p) { provenance_ = std::move(p); }

  [[nodiscard]] std::vector<Monomial> markings() const {
    std::vector<Monomial> m;
    for (const auto& e : elems_) m.push_back(e.mark());
    return m;
  }
  [[nodiscard]] std::vector<Polynomial<F>> polynomials() const {
    std::vector<Polynomial<F>> p;
    for (const auto& e : elems_) p.push_back(e.poly());
    return p;
  }
  [[nodiscard]] std::size_t nvars() const { return elems_.empty() ? 0 : elems_.front().mark().size(); }

  /// Elements sorted by decreasing marking under `ord`, for display.
  [[nodiscard]] std::vector<MarkedPolynomial<F>> sorted_by(const TermOrdering& ord) const {
    auto v = elems_;
    std::stable_sort(v.begin(), v.end(), [&](const MarkedPolynomial<F>& a, const MarkedPolynomial<F>& b) {
      return ord.compare(a.mark(), b.mark()) > 0;
    });
    return v;
  }

  /// True when every marking is the leading exponent under `ord`.
  [[nodiscard]] bool consistent_with(const TermOrdering& ord) const {
    return std::all_of(elems_.begin(), elems_.end(),
                       [&](const MarkedPolynomial<F>& g) { return leading_term(g.poly(), ord).exp == g.mark(); });
  }

  friend bool operator==(const MarkedBasis& a, const MarkedBasis& b) { return a.elems_ == b.elems_; }

 private:
  void validate() const {
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      for (std::size_t j = 0; j < elems_.size(); ++j) {
        if (i == j) continue;
        if (elems_[j].mark().divides(elems_[i].mark())) {
          throw MarkingError("marked basis is not minimal");
        }
        for (const auto& t : elems_[i].poly().terms()) {
          if (elems_[j].mark().divides(t.exp)) throw MarkingError("marked basis is not reduced");
        }
      }
    }
  }

  std::vector<MarkedPolynomial<F>> elems_;
  std::optional<std::string> provenance_;
};

/// True when the initial form of every element under w is exactly its marked term.
template <class F>
bool represents(std::span<const Int> w, const MarkedBasis<F>& g) {
  if (g.empty()) throw InvalidInput("represents() on an empty basis");
  if (w.size() != g.nvars()) throw DimensionMismatch("weight length differs from basis");
  for (const auto& e : g) {
    const Int marked = dot(w, e.mark().exponents());
    for (const auto& t : e.poly().terms()) {
      if (t.exp != e.mark() && dot(w, t.exp.exponents()) >= marked) return false;
    }
  }
  return true;
}

template <class F>
bool represents(const WeightVector& w, const MarkedBasis<F>& g) {
  return represents(w.entries(), g);
}

}  // namespace gwalk
