#pragma once

// Coefficient fields. Each field is a small value type carrying whatever
// runtime parameters it needs (the modulus for prime fields); elements are
// plain values manipulated through the field object.

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "gwalk/error.hpp"
#include "gwalk/integer.hpp"

namespace gwalk {

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  const mpz_class z(static_cast<unsigned long>(p));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

/// The rational numbers, with GMP rationals kept in lowest terms.
class Rationals {
 public:
  using value_type = mpq_class;

  [[nodiscard]] static value_type zero() { return value_type(0); }
  [[nodiscard]] static value_type one() { return value_type(1); }
  [[nodiscard]] static value_type from_int(const Int& v) { return value_type(v.to_mpz()); }
  [[nodiscard]] static value_type from_int(long v) { return value_type(v); }

  [[nodiscard]] static bool is_zero(const value_type& a) { return sgn(a) == 0; }
  [[nodiscard]] static bool is_one(const value_type& a) { return a == 1; }
  [[nodiscard]] static bool equal(const value_type& a, const value_type& b) { return a == b; }

  [[nodiscard]] static value_type add(const value_type& a, const value_type& b) { return a + b; }
  [[nodiscard]] static value_type sub(const value_type& a, const value_type& b) { return a - b; }
  [[nodiscard]] static value_type mul(const value_type& a, const value_type& b) { return a * b; }
  [[nodiscard]] static value_type neg(const value_type& a) { return -a; }
  [[nodiscard]] static value_type inv(const value_type& a) {
    if (is_zero(a)) throw std::domain_error("inverse of zero");
    return 1 / a;
  }
  static void add_to(value_type& a, const value_type& b) { a += b; }
  /// a -= c * b
  static void sub_mul(value_type& a, const value_type& c, const value_type& b) { a -= c * b; }

  [[nodiscard]] static bool is_negative(const value_type& a) { return sgn(a) < 0; }
  [[nodiscard]] static std::string to_string(const value_type& a) { return a.get_str(10); }
  [[nodiscard]] static std::size_t hash(const value_type& a) {
    return std::hash<std::string>{}(a.get_str(16));
  }
  [[nodiscard]] static std::string name() { return "QQ"; }

  friend bool operator==(const Rationals&, const Rationals&) { return true; }
};

/// Integers modulo a prime p that fits in 63 bits; representatives live in [0, p).
class PrimeField {
 public:
  using value_type = std::uint64_t;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p >= (std::uint64_t{1} << 63)) throw InvalidInput("field modulus exceeds 63 bits");
    if (!is_prime(p)) throw InvalidInput("field modulus not prime");
  }

  [[nodiscard]] std::uint64_t modulus() const noexcept { return p_; }

  [[nodiscard]] value_type zero() const noexcept { return 0; }
  [[nodiscard]] value_type one() const noexcept { return 1; }
  [[nodiscard]] value_type from_int(const Int& v) const {
    if (v.is_small()) return from_int(static_cast<long>(v.small()));
    mpz_class r;
    const mpz_class z = v.to_mpz();
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(p_));
    return r.get_ui();
  }
  [[nodiscard]] value_type from_int(long v) const noexcept {
    const auto p = static_cast<__int128>(p_);
    auto r = static_cast<__int128>(v) % p;
    if (r < 0) r += p;
    return static_cast<value_type>(r);
  }

  [[nodiscard]] static bool is_zero(value_type a) noexcept { return a == 0; }
  [[nodiscard]] static bool is_one(value_type a) noexcept { return a == 1; }
  [[nodiscard]] static bool equal(value_type a, value_type b) noexcept { return a == b; }

  [[nodiscard]] value_type add(value_type a, value_type b) const noexcept {
    const value_type s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  [[nodiscard]] value_type sub(value_type a, value_type b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
  [[nodiscard]] value_type mul(value_type a, value_type b) const noexcept {
    return static_cast<value_type>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  [[nodiscard]] value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
  [[nodiscard]] value_type inv(value_type a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    // Extended Euclid on signed 128-bit values.
    __int128 t = 0, new_t = 1;
    __int128 r = p_, new_r = a;
    while (new_r != 0) {
      const __int128 q = r / new_r;
      t -= q * new_t;
      std::swap(t, new_t);
      r -= q * new_r;
      std::swap(r, new_r);
    }
    if (t < 0) t += p_;
    return static_cast<value_type>(t);
  }
  void add_to(value_type& a, value_type b) const noexcept { a = add(a, b); }
  void sub_mul(value_type& a, value_type c, value_type b) const noexcept { a = sub(a, mul(c, b)); }

  [[nodiscard]] static bool is_negative(value_type) noexcept { return false; }
  [[nodiscard]] static std::string to_string(value_type a) { return std::to_string(a); }
  [[nodiscard]] static std::size_t hash(value_type a) noexcept { return std::hash<value_type>{}(a); }
  [[nodiscard]] std::string name() const { return "F_" + std::to_string(p_); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
};

/// The prime used throughout the benchmarks.
inline constexpr std::uint64_t kBenchPrime = 11863279;

namespace detail {

/// Integer coefficients for fraction-free computations over the rationals.
/// Not a field: there is no inverse.
class Integers {
 public:
  using value_type = mpz_class;

  [[nodiscard]] static value_type zero() { return value_type(0); }
  [[nodiscard]] static value_type one() { return value_type(1); }
  [[nodiscard]] static bool is_zero(const value_type& a) { return sgn(a) == 0; }
  [[nodiscard]] static bool is_one(const value_type& a) { return a == 1; }
  [[nodiscard]] static value_type mul(const value_type& a, const value_type& b) { return a * b; }
  [[nodiscard]] static value_type neg(const value_type& a) { return -a; }
  static void add_to(value_type& a, const value_type& b) { a += b; }
  static void sub_mul(value_type& a, const value_type& c, const value_type& b) {
    mpz_submul(a.get_mpz_t(), c.get_mpz_t(), b.get_mpz_t());
  }
  [[nodiscard]] static std::size_t hash(const value_type& a) {
    return std::hash<std::string>{}(a.get_str(16));
  }
};

}  // namespace detail

}  // namespace gwalk
