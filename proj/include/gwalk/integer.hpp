#pragma once

// Arbitrary-precision signed integer with an inline fast path.
//
// Values in [-2^62, 2^62) are stored tagged inside a single machine word; larger
// magnitudes spill to a heap-allocated GMP integer. Results are always
// normalized back to the inline form when they fit, so two equal values have
// the same representation kind.

#include <gmp.h>
#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gwalk {

class Int {
 public:
  Int() noexcept = default;
  Int(int v) noexcept : rep_(tag(v)) {}                // NOLINT(google-explicit-constructor)
  Int(long v) { assign_si(static_cast<std::int64_t>(v)); }  // NOLINT
  Int(long long v) { assign_si(static_cast<std::int64_t>(v)); }  // NOLINT
  Int(unsigned long v) { assign_ui(v); }               // NOLINT
  Int(unsigned long long v) { assign_ui(v); }          // NOLINT
  explicit Int(const mpz_class& z) { assign_mpz(z.get_mpz_t()); }
  explicit Int(std::string_view decimal) {
    mpz_class z;
    if (decimal.empty() || z.set_str(std::string(decimal), 10) != 0) {
      throw std::invalid_argument("invalid integer literal '" + std::string(decimal) + "'");
    }
    assign_mpz(z.get_mpz_t());
  }

  Int(const Int& o) {
    if (o.is_small()) {
      rep_ = o.rep_;
    } else {
      rep_ = make_big(o.big());
    }
  }
  Int(Int&& o) noexcept : rep_(std::exchange(o.rep_, kZero)) {}
  Int& operator=(const Int& o) {
    if (this == &o) return *this;
    if (o.is_small()) {
      release();
      rep_ = o.rep_;
    } else if (!is_small()) {
      mpz_set(big_mut(), o.big());
    } else {
      rep_ = make_big(o.big());
    }
    return *this;
  }
  Int& operator=(Int&& o) noexcept {
    std::swap(rep_, o.rep_);
    return *this;
  }
  ~Int() { release(); }

  [[nodiscard]] bool is_small() const noexcept { return (rep_ & 1) != 0; }
  [[nodiscard]] std::int64_t small() const noexcept { return static_cast<std::int64_t>(rep_) >> 1; }
  [[nodiscard]] mpz_srcptr big() const noexcept { return reinterpret_cast<mpz_srcptr>(rep_); }

  [[nodiscard]] mpz_class to_mpz() const {
    if (is_small()) return mpz_class(static_cast<long>(small()));
    return mpz_class(big());
  }
  [[nodiscard]] bool fits_int64() const noexcept { return is_small(); }
  [[nodiscard]] std::int64_t to_int64() const {
    if (!is_small()) {
      if (mpz_fits_slong_p(big()) != 0) return mpz_get_si(big());
      throw std::overflow_error("integer does not fit in 64 bits");
    }
    return small();
  }
  [[nodiscard]] double to_double() const { return is_small() ? static_cast<double>(small()) : mpz_get_d(big()); }

  [[nodiscard]] int sign() const noexcept {
    if (is_small()) return (small() > 0) - (small() < 0);
    return mpz_sgn(big());
  }
  [[nodiscard]] bool is_zero() const noexcept { return rep_ == kZero; }

  [[nodiscard]] std::string to_string() const {
    if (is_small()) return std::to_string(small());
    return to_mpz().get_str(10);
  }

  [[nodiscard]] std::size_t hash() const noexcept {
    if (is_small()) return std::hash<std::int64_t>{}(small());
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    const auto n = mpz_size(big());
    for (std::size_t i = 0; i < n; ++i) h = (h ^ mpz_getlimbn(big(), static_cast<mp_size_t>(i))) * 0x100000001b3ULL;
    return h ^ static_cast<std::size_t>(mpz_sgn(big()));
  }

  Int& operator+=(const Int& o) {
    if (is_small() && o.is_small()) {
      assign_si_checked_add(small(), o.small());
      return *this;
    }
    mpz_class r = to_mpz() + o.to_mpz();
    assign_mpz(r.get_mpz_t());
    return *this;
  }
  Int& operator-=(const Int& o) {
    if (is_small() && o.is_small()) {
      assign_si_checked_add(small(), -o.small());
      return *this;
    }
    mpz_class r = to_mpz() - o.to_mpz();
    assign_mpz(r.get_mpz_t());
    return *this;
  }
  Int& operator*=(const Int& o) {
    if (is_small() && o.is_small()) {
      std::int64_t r;
      if (!__builtin_mul_overflow(small(), o.small(), &r)) {
        assign_si(r);
        return *this;
      }
    }
    mpz_class r = to_mpz() * o.to_mpz();
    assign_mpz(r.get_mpz_t());
    return *this;
  }

  friend Int operator+(Int a, const Int& b) { return a += b; }
  friend Int operator-(Int a, const Int& b) { return a -= b; }
  friend Int operator*(Int a, const Int& b) { return a *= b; }
  friend Int operator-(const Int& a) {
    if (a.is_small()) {
      Int r;
      r.assign_si_checked_add(0, -a.small());
      return r;
    }
    mpz_class r = -a.to_mpz();
    return Int(r);
  }

  friend bool operator==(const Int& a, const Int& b) noexcept {
    if (a.is_small() || b.is_small()) return a.rep_ == b.rep_;
    return mpz_cmp(a.big(), b.big()) == 0;
  }
  friend std::strong_ordering operator<=>(const Int& a, const Int& b) noexcept {
    if (a.is_small() && b.is_small()) return a.small() <=> b.small();
    int c;
    if (a.is_small()) {
      c = -mpz_cmp_si(b.big(), static_cast<long>(a.small()));
    } else if (b.is_small()) {
      c = mpz_cmp_si(a.big(), static_cast<long>(b.small()));
    } else {
      c = mpz_cmp(a.big(), b.big());
    }
    return c <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Int& v) { return os << v.to_string(); }

  /// Exact quotient; the caller guarantees d divides *this.
  [[nodiscard]] Int divexact(const Int& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero");
    if (is_small() && d.is_small()) {
      if (!(small() == INT64_MIN && d.small() == -1)) return Int(static_cast<long long>(small() / d.small()));
    }
    mpz_class r;
    mpz_class a = to_mpz();
    mpz_class b = d.to_mpz();
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return Int(r);
  }

  [[nodiscard]] Int abs() const { return sign() < 0 ? -*this : *this; }

  friend Int gcd(const Int& a, const Int& b) {
    if (a.is_small() && b.is_small()) {
      std::uint64_t x = a.small() < 0 ? 0 - static_cast<std::uint64_t>(a.small()) : static_cast<std::uint64_t>(a.small());
      std::uint64_t y = b.small() < 0 ? 0 - static_cast<std::uint64_t>(b.small()) : static_cast<std::uint64_t>(b.small());
      while (y != 0) {
        x %= y;
        std::swap(x, y);
      }
      return Int(static_cast<unsigned long long>(x));
    }
    mpz_class r;
    mpz_class x = a.to_mpz();
    mpz_class y = b.to_mpz();
    mpz_gcd(r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return Int(r);
  }

 private:
  static constexpr std::intptr_t kZero = 1;
  static constexpr std::int64_t kSmallMax = (std::int64_t{1} << 62) - 1;
  static constexpr std::int64_t kSmallMin = -(std::int64_t{1} << 62);

  static constexpr std::intptr_t tag(std::int64_t v) noexcept {
    return static_cast<std::intptr_t>((static_cast<std::uint64_t>(v) << 1) | 1U);
  }
  static std::intptr_t make_big(mpz_srcptr src) {
    auto* z = new __mpz_struct;
    mpz_init_set(z, src);
    return reinterpret_cast<std::intptr_t>(z);
  }
  mpz_ptr big_mut() noexcept { return reinterpret_cast<mpz_ptr>(rep_); }

  void release() noexcept {
    if (!is_small()) {
      mpz_clear(big_mut());
      delete big_mut();
      rep_ = kZero;
    }
  }
  void assign_si(std::int64_t v) {
    if (v >= kSmallMin && v <= kSmallMax) {
      release();
      rep_ = tag(v);
      return;
    }
    mpz_class z(static_cast<long>(v));
    assign_mpz(z.get_mpz_t());
  }
  void assign_ui(std::uint64_t v) {
    if (v <= static_cast<std::uint64_t>(kSmallMax)) {
      release();
      rep_ = tag(static_cast<std::int64_t>(v));
      return;
    }
    mpz_class z(static_cast<unsigned long>(v));
    assign_mpz(z.get_mpz_t());
  }
  // Both operands are within the inline range, so the sum cannot overflow int64.
  void assign_si_checked_add(std::int64_t a, std::int64_t b) { assign_si(a + b); }

  void assign_mpz(mpz_srcptr z) {
    if (mpz_fits_slong_p(z) != 0) {
      const long v = mpz_get_si(z);
      if (v >= kSmallMin && v <= kSmallMax) {
        release();
        rep_ = tag(v);
        return;
      }
    }
    if (is_small()) {
      rep_ = make_big(z);
    } else {
      mpz_set(big_mut(), z);
    }
  }

  std::intptr_t rep_ = kZero;
};

using IntVector = std::vector<Int>;

inline Int dot(std::span<const Int> a, std::span<const Int> b) {
  Int s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() || b[i].is_zero()) continue;
    s += a[i] * b[i];
  }
  return s;
}

/// Divides out the gcd of the entries; the zero vector is returned unchanged.
inline IntVector primitive(IntVector v) {
  Int g;
  for (const auto& x : v) {
    g = gcd(g, x);
    if (g == Int(1)) return v;
  }
  if (g.is_zero()) return v;
  for (auto& x : v) x = x.divexact(g);
  return v;
}

/// First nonzero entry, or zero when all entries vanish.
inline int lex_sign(std::span<const Int> v) {
  for (const auto& x : v) {
    if (const int s = x.sign(); s != 0) return s;
  }
  return 0;
}

inline std::string format_vector(std::span<const Int> v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ", ";
    s += v[i].to_string();
  }
  return s + "]";
}

struct IntVectorHash {
  std::size_t operator()(const IntVector& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const auto& x : v) h = (h ^ x.hash()) * 0x100000001b3ULL;
    return h;
  }
};

}  // namespace gwalk

template <>
struct std::hash<gwalk::Int> {
  std::size_t operator()(const gwalk::Int& v) const noexcept { return v.hash(); }
};
