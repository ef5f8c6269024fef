#pragma once

#include <algorithm>
#include <compare>
#include <span>
#include <vector>

#include "gwalk/error.hpp"
#include "gwalk/integer.hpp"

namespace gwalk {

/// Exponent vector of a monomial; entries are nonnegative and unbounded.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars) {}
  explicit Monomial(IntVector exps) : e_(std::move(exps)) {
    for (const auto& x : e_) {
      if (x.sign() < 0) throw InvalidInput("negative exponent");
    }
  }
  Monomial(std::initializer_list<long> exps) {
    e_.reserve(exps.size());
    for (long x : exps) {
      if (x < 0) throw InvalidInput("negative exponent");
      e_.emplace_back(x);
    }
  }

  [[nodiscard]] std::size_t size() const noexcept { return e_.size(); }
  [[nodiscard]] const Int& operator[](std::size_t i) const { return e_[i]; }
  [[nodiscard]] std::span<const Int> exponents() const noexcept { return e_; }
  [[nodiscard]] const IntVector& vector() const noexcept { return e_; }

  [[nodiscard]] bool is_one() const noexcept {
    return std::all_of(e_.begin(), e_.end(), [](const Int& x) { return x.is_zero(); });
  }
  [[nodiscard]] Int total_degree() const {
    Int d;
    for (const auto& x : e_) d += x;
    return d;
  }

  /// True when *this divides `other`.
  [[nodiscard]] bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] > other.e_[i]) return false;
    }
    return true;
  }
  [[nodiscard]] bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (!e_[i].is_zero() && !other.e_[i].is_zero()) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    check(a, b);
    Monomial r(a);
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
    return r;
  }
  /// Quotient a / b; b must divide a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    check(a, b);
    Monomial r(a);
    for (std::size_t i = 0; i < r.e_.size(); ++i) {
      r.e_[i] -= b.e_[i];
      if (r.e_[i].sign() < 0) throw InvalidInput("monomial quotient is not exact");
    }
    return r;
  }
  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    check(a, b);
    Monomial r(a);
    for (std::size_t i = 0; i < r.e_.size(); ++i) {
      if (b.e_[i] > r.e_[i]) r.e_[i] = b.e_[i];
    }
    return r;
  }

  /// Storage order only (lexicographic on entries); unrelated to term orderings.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// a - b as a signed vector.
  friend IntVector difference(const Monomial& a, const Monomial& b) {
    check(a, b);
    IntVector d(a.e_);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] -= b.e_[i];
    return d;
  }

 private:
  static void check(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) throw DimensionMismatch("monomials have different numbers of variables");
  }

  IntVector e_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return IntVectorHash{}(m.vector()); }
};

}  // namespace gwalk
