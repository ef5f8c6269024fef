#pragma once

// Term orderings represented by integer matrices. Monomials are compared by the
// lexicographic order of matrix * exponent; lex and degrevlex carry named fast
// paths that agree with their canonical matrices.

#include <gmpxx.h>

#include <compare>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gwalk/error.hpp"
#include "gwalk/integer.hpp"
#include "gwalk/monomial.hpp"
#include "gwalk/polynomial.hpp"

namespace gwalk {

/// Nonnegative, nonzero integer weight vector kept in primitive form.
class WeightVector {
 public:
  explicit WeightVector(IntVector entries) {
    bool nonzero = false;
    for (const auto& x : entries) {
      if (x.sign() < 0) throw InvalidOrdering("weight vector has a negative entry");
      nonzero = nonzero || !x.is_zero();
    }
    if (!nonzero) throw InvalidOrdering("weight vector is zero");
    w_ = primitive(std::move(entries));
  }
  WeightVector(std::initializer_list<long> entries) : WeightVector(IntVector(entries.begin(), entries.end())) {}

  [[nodiscard]] std::size_t size() const noexcept { return w_.size(); }
  [[nodiscard]] const Int& operator[](std::size_t i) const { return w_[i]; }
  [[nodiscard]] std::span<const Int> entries() const noexcept { return w_; }
  [[nodiscard]] const IntVector& vector() const noexcept { return w_; }
  [[nodiscard]] Int weight(const Monomial& m) const { return dot(w_, m.exponents()); }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  IntVector w_;
};

enum class OrderingKind { Lex, DegRevLex, Matrix, WeightRefinement };

class TermOrdering {
 public:
  [[nodiscard]] static TermOrdering lex(std::size_t n) {
    TermOrdering o(n, OrderingKind::Lex);
    for (std::size_t i = 0; i < n; ++i) o.m_[i * n + i] = Int(1);
    return o;
  }

  /// Rows: all ones, then -e_n, -e_{n-1}, ..., -e_2.
  [[nodiscard]] static TermOrdering degrevlex(std::size_t n) {
    TermOrdering o(n, OrderingKind::DegRevLex);
    for (std::size_t j = 0; j < n; ++j) o.m_[j] = Int(1);
    for (std::size_t i = 1; i < n; ++i) o.m_[i * n + (n - i)] = Int(-1);
    return o;
  }

  /// Square, full-rank matrix whose columns are all lex-positive.
  [[nodiscard]] static TermOrdering from_matrix(const std::vector<IntVector>& rows) {
    const std::size_t n = rows.size();
    if (n == 0) throw InvalidOrdering("empty ordering matrix");
    for (const auto& r : rows) {
      if (r.size() != n) throw InvalidOrdering("ordering matrix must be square");
    }
    if (rank(rows) != n) throw InvalidOrdering("ordering matrix is rank-deficient");
    TermOrdering o(n, OrderingKind::Matrix);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) o.m_[i * n + j] = rows[i][j];
    }
    o.check_columns();
    return o;
  }

  /// The weight row stacked above `inner`, keeping the first n linearly
  /// independent rows.
  [[nodiscard]] static TermOrdering weight_refinement(const WeightVector& w, const TermOrdering& inner) {
    const std::size_t n = inner.n_;
    if (w.size() != n) throw DimensionMismatch("weight length differs from ordering");
    std::vector<IntVector> kept;
    std::vector<std::vector<mpq_class>> echelon;
    auto try_row = [&](const IntVector& row) {
      if (kept.size() == n) return;
      if (extends_rank(echelon, row)) kept.push_back(row);
    };
    try_row(w.vector());
    for (std::size_t i = 0; i < n; ++i) try_row(inner.row_vector(i));
    TermOrdering o(n, OrderingKind::WeightRefinement);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) o.m_[i * n + j] = kept[i][j];
    }
    o.weight_ = w.vector();
    o.inner_ = std::make_shared<const TermOrdering>(inner);
    return o;
  }

  [[nodiscard]] std::size_t nvars() const noexcept { return n_; }
  [[nodiscard]] OrderingKind kind() const noexcept { return kind_; }
  [[nodiscard]] std::span<const Int> row(std::size_t i) const { return {m_.data() + i * n_, n_}; }
  [[nodiscard]] IntVector row_vector(std::size_t i) const {
    auto r = row(i);
    return {r.begin(), r.end()};
  }
  [[nodiscard]] std::vector<IntVector> matrix() const {
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < n_; ++i) rows.push_back(row_vector(i));
    return rows;
  }

  /// matrix * exponents, written to `out` (length n).
  void key_into(std::span<const Int> exps, Int* out) const {
    if (kind_ == OrderingKind::Lex) {
      for (std::size_t i = 0; i < n_; ++i) out[i] = exps[i];
      return;
    }
    for (std::size_t i = 0; i < n_; ++i) out[i] = dot(row(i), exps);
  }
  [[nodiscard]] IntVector key(const Monomial& m) const {
    check_dim(m);
    IntVector k(n_);
    key_into(m.exponents(), k.data());
    return k;
  }

  [[nodiscard]] std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    check_dim(a);
    check_dim(b);
    switch (kind_) {
      case OrderingKind::Lex:
        for (std::size_t i = 0; i < n_; ++i) {
          if (auto c = a[i] <=> b[i]; c != 0) return c;
        }
        return std::strong_ordering::equal;
      case OrderingKind::DegRevLex: {
        if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
        for (std::size_t i = n_; i-- > 0;) {
          if (auto c = b[i] <=> a[i]; c != 0) return c;
        }
        return std::strong_ordering::equal;
      }
      default:
        return compare_by_matrix(a, b);
    }
  }

  /// Comparison through the matrix alone, ignoring named fast paths.
  [[nodiscard]] std::strong_ordering compare_by_matrix(const Monomial& a, const Monomial& b) const {
    check_dim(a);
    check_dim(b);
    const IntVector d = difference(a, b);
    for (std::size_t i = 0; i < n_; ++i) {
      if (const int s = dot(row(i), d).sign(); s != 0) return s > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
  }

  /// Sign of the first nonzero entry of matrix * v.
  [[nodiscard]] int lex_sign_of(std::span<const Int> v) const {
    for (std::size_t i = 0; i < n_; ++i) {
      if (const int s = dot(row(i), v).sign(); s != 0) return s;
    }
    return 0;
  }

  [[nodiscard]] std::string describe(const std::vector<std::string>& vars) const {
    std::string names = "[";
    for (std::size_t i = 0; i < vars.size(); ++i) names += (i ? ", " : "") + vars[i];
    names += "]";
    switch (kind_) {
      case OrderingKind::Lex:
        return "lex(" + names + ")";
      case OrderingKind::DegRevLex:
        return "degrevlex(" + names + ")";
      case OrderingKind::WeightRefinement:
        return "weight_ordering(" + format_vector(weight_) + ", " + inner_->describe(vars) + ")";
      case OrderingKind::Matrix:
        break;
    }
    std::string s = "matrix_ordering(" + names + ", [";
    for (std::size_t i = 0; i < n_; ++i) {
      if (i) s += "; ";
      for (std::size_t j = 0; j < n_; ++j) s += (j ? " " : "") + m_[i * n_ + j].to_string();
    }
    return s + "])";
  }

  /// Equal matrices define equal orderings.
  friend bool operator==(const TermOrdering& a, const TermOrdering& b) { return a.n_ == b.n_ && a.m_ == b.m_; }

  [[nodiscard]] static std::size_t rank(const std::vector<IntVector>& rows) {
    std::vector<std::vector<mpq_class>> echelon;
    std::size_t r = 0;
    for (const auto& row : rows) r += extends_rank(echelon, row) ? 1 : 0;
    return r;
  }

 private:
  TermOrdering(std::size_t n, OrderingKind kind) : n_(n), m_(n * n), kind_(kind) {
    if (n == 0) throw InvalidOrdering("ordering on zero variables");
  }

  void check_dim(const Monomial& m) const {
    if (m.size() != n_) throw DimensionMismatch("monomial length differs from ordering");
  }

  void check_columns() const {
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t i = 0; i < n_; ++i) {
        const int s = m_[i * n_ + j].sign();
        if (s > 0) break;
        if (s < 0 || i + 1 == n_) {
          throw InvalidOrdering("ordering matrix column " + std::to_string(j) + " is not lex-positive");
        }
      }
    }
  }

  // Gaussian elimination step over Q: reduces `row` by the echelon rows and
  // appends it when a nonzero remainder is left.
  static bool extends_rank(std::vector<std::vector<mpq_class>>& echelon, const IntVector& row) {
    std::vector<mpq_class> v;
    v.reserve(row.size());
    for (const auto& x : row) v.emplace_back(x.to_mpz());
    for (const auto& e : echelon) {
      std::size_t p = 0;
      while (sgn(e[p]) == 0) ++p;
      if (sgn(v[p]) == 0) continue;
      const mpq_class f = v[p] / e[p];
      for (std::size_t j = p; j < v.size(); ++j) v[j] -= f * e[j];
    }
    for (const auto& x : v) {
      if (sgn(x) != 0) {
        echelon.push_back(std::move(v));
        return true;
      }
    }
    return false;
  }

  std::size_t n_;
  IntVector m_;
  OrderingKind kind_;
  IntVector weight_;
  std::shared_ptr<const TermOrdering> inner_;
};

/// Elimination orderings for implicitization problems in five variables
/// (three parameters, two coordinates): start and target of the walk.
inline std::vector<IntVector> elimination_sigma_matrix() {
  return {{1, 1, 1, 0, 0}, {0, 0, 0, 1, 1}, {0, 0, 0, 1, 0}, {1, 1, 0, 0, 0}, {1, 0, 0, 0, 0}};
}
inline std::vector<IntVector> elimination_tau_matrix() {
  return {{0, 0, 0, 1, 1}, {1, 1, 1, 0, 0}, {1, 1, 0, 0, 0}, {1, 0, 0, 0, 0}, {0, 0, 0, 1, 0}};
}

/// Declarative description of an ordering, as found in ideal files.
struct OrderingSpec {
  enum class Kind { Named, Matrix, Weight };

  Kind kind = Kind::Named;
  std::string name;                          // Named
  std::vector<IntVector> matrix;             // Matrix
  IntVector weight;                          // Weight
  std::shared_ptr<const OrderingSpec> then;  // Weight

  static OrderingSpec named(std::string n) {
    OrderingSpec s;
    s.name = std::move(n);
    return s;
  }
  static OrderingSpec from_matrix(std::vector<IntVector> rows) {
    OrderingSpec s;
    s.kind = Kind::Matrix;
    s.matrix = std::move(rows);
    return s;
  }
  static OrderingSpec weighted(IntVector w, OrderingSpec inner) {
    OrderingSpec s;
    s.kind = Kind::Weight;
    s.weight = std::move(w);
    s.then = std::make_shared<const OrderingSpec>(std::move(inner));
    return s;
  }

  friend bool operator==(const OrderingSpec& a, const OrderingSpec& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
      case Kind::Named:
        return a.name == b.name;
      case Kind::Matrix:
        return a.matrix == b.matrix;
      case Kind::Weight:
        return a.weight == b.weight && *a.then == *b.then;
    }
    return false;
  }
};

/// Builds and validates an ordering on n variables. Known names: lex,
/// degrevlex, elim-sigma and elim-tau (the last two need n = 5).
inline TermOrdering make_ordering(const OrderingSpec& spec, std::size_t n) {
  switch (spec.kind) {
    case OrderingSpec::Kind::Named:
      if (spec.name == "lex") return TermOrdering::lex(n);
      if (spec.name == "degrevlex") return TermOrdering::degrevlex(n);
      if (spec.name == "elim-sigma" || spec.name == "elim-tau") {
        if (n != 5) throw InvalidOrdering(spec.name + " needs exactly 5 variables");
        return TermOrdering::from_matrix(spec.name == "elim-sigma" ? elimination_sigma_matrix() : elimination_tau_matrix());
      }
      throw InvalidOrdering("unknown ordering '" + spec.name + "'");
    case OrderingSpec::Kind::Matrix:
      if (spec.matrix.size() != n) throw DimensionMismatch("ordering matrix has the wrong number of rows");
      return TermOrdering::from_matrix(spec.matrix);
    case OrderingSpec::Kind::Weight:
      if (!spec.then) throw InvalidOrdering("weight ordering without a tie-breaker");
      return TermOrdering::weight_refinement(WeightVector(spec.weight), make_ordering(*spec.then, n));
  }
  throw InvalidOrdering("unknown ordering kind");
}

/// Leading term of a nonzero polynomial.
template <class F>
Term<F> leading_term(const Polynomial<F>& f, const TermOrdering& ord) {
  if (f.is_zero()) throw InvalidInput("leading term of the zero polynomial");
  if (f.nvars() != ord.nvars()) throw DimensionMismatch("polynomial and ordering have different numbers of variables");
  const Term<F>* best = &f.terms().front();
  for (const auto& t : f.terms()) {
    if (ord.compare(t.exp, best->exp) > 0) best = &t;
  }
  return *best;
}

/// Sum of the terms maximizing <w, exponent>. The zero vector is accepted and yields f.
template <class F>
Polynomial<F> initial_form(const Polynomial<F>& f, std::span<const Int> w) {
  if (f.is_zero()) throw InvalidInput("initial form of the zero polynomial");
  if (w.size() != f.nvars()) throw DimensionMismatch("weight length differs from ring");
  std::vector<Int> weights;
  weights.reserve(f.size());
  for (const auto& t : f.terms()) weights.push_back(dot(w, t.exp.exponents()));
  const Int best = *std::max_element(weights.begin(), weights.end());
  std::vector<Term<F>> out;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] == best) out.push_back(f.terms()[i]);
  }
  return Polynomial<F>(f.ring(), std::move(out));
}

template <class F>
Polynomial<F> initial_form(const Polynomial<F>& f, const WeightVector& w) {
  return initial_form(f, w.entries());
}

}  // namespace gwalk
