#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gwalk/error.hpp"
#include "gwalk/field.hpp"
#include "gwalk/monomial.hpp"

namespace gwalk {

/// Variable names plus coefficient field.
template <class F>
struct Ring {
  std::vector<std::string> vars;
  F field;

  Ring(std::vector<std::string> names, F f) : vars(std::move(names)), field(std::move(f)) {
    if (vars.empty()) throw InvalidInput("ring needs at least one variable");
    auto sorted = vars;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InvalidInput("duplicate variable name");
    }
  }
  [[nodiscard]] std::size_t nvars() const noexcept { return vars.size(); }

  friend bool operator==(const Ring& a, const Ring& b) { return a.vars == b.vars && a.field == b.field; }
};

template <class F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <class F>
RingPtr<F> make_ring(std::vector<std::string> vars, F field) {
  return std::make_shared<const Ring<F>>(std::move(vars), std::move(field));
}

/// Ring with variables x0..x{n-1}.
template <class F>
RingPtr<F> make_ring(std::size_t nvars, F field, const std::string& prefix = "x") {
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < nvars; ++i) vars.push_back(prefix + std::to_string(i));
  return make_ring(std::move(vars), std::move(field));
}

template <class F>
struct Term {
  Monomial exp;
  typename F::value_type coeff;
};

/// Sparse polynomial in canonical form: terms sorted by monomial storage
/// order, no zero coefficients, no repeated monomials.
template <class F>
class Polynomial {
 public:
  using Coeff = typename F::value_type;
  using TermT = Term<F>;

  Polynomial() = default;
  explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}
  /// Builds the canonical form: sorts, merges repeated monomials, drops zeros.
  Polynomial(RingPtr<F> ring, std::vector<TermT> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    canonicalize();
  }

  static Polynomial constant(RingPtr<F> ring, Coeff c) {
    Monomial one(ring->nvars());
    std::vector<TermT> t;
    t.push_back({std::move(one), std::move(c)});
    return Polynomial(std::move(ring), std::move(t));
  }
  static Polynomial monomial(RingPtr<F> ring, Monomial m, Coeff c) {
    if (m.size() != ring->nvars()) throw DimensionMismatch("monomial length differs from ring");
    std::vector<TermT> t;
    t.push_back({std::move(m), std::move(c)});
    return Polynomial(std::move(ring), std::move(t));
  }
  static Polynomial variable(RingPtr<F> ring, std::size_t i) {
    IntVector e(ring->nvars());
    e.at(i) = Int(1);
    const auto one = ring->field.one();
    return monomial(ring, Monomial(std::move(e)), one);
  }

  [[nodiscard]] const RingPtr<F>& ring() const noexcept { return ring_; }
  [[nodiscard]] const F& field() const { return ring_->field; }
  [[nodiscard]] std::size_t nvars() const { return ring_->nvars(); }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
  [[nodiscard]] const std::vector<TermT>& terms() const noexcept { return terms_; }

  [[nodiscard]] std::vector<Monomial> support() const {
    std::vector<Monomial> s;
    s.reserve(terms_.size());
    for (const auto& t : terms_) s.push_back(t.exp);
    return s;
  }
  [[nodiscard]] bool contains(const Monomial& m) const { return find(m) != nullptr; }
  /// Coefficient of m (zero when absent).
  [[nodiscard]] Coeff coefficient(const Monomial& m) const {
    const TermT* t = find(m);
    return t != nullptr ? t->coeff : field().zero();
  }

  [[nodiscard]] Polynomial scaled(const Coeff& c) const {
    if (F::is_zero(c)) return Polynomial(ring_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = field().mul(t.coeff, c);
    return r;
  }
  /// c * x^m * (*this)
  [[nodiscard]] Polynomial mul_term(const Coeff& c, const Monomial& m) const {
    if (F::is_zero(c)) return Polynomial(ring_);
    std::vector<TermT> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.exp * m, field().mul(t.coeff, c)});
    // Multiplication by a monomial preserves storage order only for lex-like
    // orders, so re-canonicalize.
    return Polynomial(ring_, std::move(out));
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }
  friend Polynomial operator-(const Polynomial& a) {
    Polynomial r(a);
    for (auto& t : r.terms_) t.coeff = a.field().neg(t.coeff);
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a, b);
    std::vector<TermT> out;
    out.reserve(a.size() * b.size());
    const F& k = a.field();
    for (const auto& s : a.terms_) {
      for (const auto& t : b.terms_) out.push_back({s.exp * t.exp, k.mul(s.coeff, t.coeff)});
    }
    return Polynomial(a.ring_, std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.ring_ != b.ring_ && !(a.ring_ && b.ring_ && *a.ring_ == *b.ring_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].exp != b.terms_[i].exp || !F::equal(a.terms_[i].coeff, b.terms_[i].coeff)) return false;
    }
    return true;
  }

  [[nodiscard]] std::size_t hash() const {
    std::size_t h = 0x84222325cbf29ce4ULL;
    for (const auto& t : terms_) {
      h = (h ^ MonomialHash{}(t.exp)) * 0x100000001b3ULL;
      h = (h ^ F::hash(t.coeff)) * 0x100000001b3ULL;
    }
    return h;
  }

 private:
  static void check_same_ring(const Polynomial& a, const Polynomial& b) {
    if (!a.ring_ || !b.ring_) throw InvalidInput("polynomial without ring");
    if (a.ring_ != b.ring_ && !(*a.ring_ == *b.ring_)) throw RingMismatch();
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    check_same_ring(a, b);
    const F& k = a.field();
    std::vector<TermT> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].exp < b.terms_[j].exp)) {
        out.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].exp < a.terms_[i].exp) {
        const auto& t = b.terms_[j++];
        out.push_back({t.exp, subtract ? k.neg(t.coeff) : t.coeff});
      } else {
        auto c = subtract ? k.sub(a.terms_[i].coeff, b.terms_[j].coeff) : k.add(a.terms_[i].coeff, b.terms_[j].coeff);
        if (!F::is_zero(c)) out.push_back({a.terms_[i].exp, std::move(c)});
        ++i;
        ++j;
      }
    }
    Polynomial r(a.ring_);
    r.terms_ = std::move(out);
    return r;
  }

  const TermT* find(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const TermT& t, const Monomial& x) { return t.exp < x; });
    if (it != terms_.end() && it->exp == m) return &*it;
    return nullptr;
  }

  void canonicalize() {
    if (!ring_) throw InvalidInput("polynomial without ring");
    const F& k = ring_->field;
    for (const auto& t : terms_) {
      if (t.exp.size() != ring_->nvars()) throw DimensionMismatch("term length differs from ring");
    }
    std::sort(terms_.begin(), terms_.end(), [](const TermT& a, const TermT& b) { return a.exp < b.exp; });
    std::vector<TermT> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().exp == t.exp) {
        k.add_to(out.back().coeff, t.coeff);
      } else {
        if (!out.empty() && F::is_zero(out.back().coeff)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && F::is_zero(out.back().coeff)) out.pop_back();
    terms_ = std::move(out);
  }

  RingPtr<F> ring_;
  std::vector<TermT> terms_;
};

}  // namespace gwalk
