#pragma once

// Recursive-descent parser and printer for polynomial expressions:
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor | '/' natural)*
//   factor := base ('^' natural)?
//   base   := integer | variable | '(' expr ')'

#include <cctype>
#include <string>
#include <string_view>

#include "gwalk/error.hpp"
#include "gwalk/ordering.hpp"
#include "gwalk/polynomial.hpp"

namespace gwalk {

namespace detail {

template <class F>
class PolyParser {
 public:
  using Coeff = typename F::value_type;

  PolyParser(std::string_view text, const RingPtr<F>& ring) : s_(text), ring_(ring) {}

  Polynomial<F> parse() {
    auto p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial<F> expr() {
    const bool negate = accept('-');
    Polynomial<F> acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial<F> term() {
    Polynomial<F> acc = factor();
    while (true) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        skip_ws();
        const std::size_t start = pos_;
        const auto d = ring_->field.from_int(natural());
        if (F::is_zero(d)) {
          pos_ = start;
          fail("coefficient not valid in field (division by zero)");
        }
        acc = acc.scaled(ring_->field.inv(d));
      } else {
        return acc;
      }
    }
  }

  Polynomial<F> factor() {
    Polynomial<F> b = base();
    if (!accept('^')) return b;
    skip_ws();
    const std::size_t start = pos_;
    const Int k = natural();
    return power(b, k, start);
  }

  Polynomial<F> base() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      auto e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      return Polynomial<F>::constant(ring_, ring_->field.from_int(natural()));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) != 0 || s_[pos_] == '_')) ++pos_;
      const std::string_view name = s_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < ring_->vars.size(); ++i) {
        if (ring_->vars[i] == name) return Polynomial<F>::variable(ring_, i);
      }
      pos_ = start;
      fail("unknown variable '" + std::string(name) + "'");
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  Int natural() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer");
    return Int(s_.substr(start, pos_ - start));
  }

  Coeff coeff_pow(Coeff c, const Int& k, std::size_t where) {
    const F& field = ring_->field;
    if (F::is_one(c)) return c;
    if (F::is_one(field.neg(c))) {
      const mpz_class z = k.to_mpz();
      return mpz_odd_p(z.get_mpz_t()) != 0 ? c : field.one();
    }
    if (!k.fits_int64() || k.to_int64() > (1 << 20)) {
      if constexpr (std::is_same_v<F, Rationals>) {
        pos_ = where;
        fail("exponent too large for a non-unit coefficient");
      }
    }
    Coeff r = field.one();
    const mpz_class z = k.to_mpz();
    for (auto bit = static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2)); bit-- > 0;) {
      r = field.mul(r, r);
      if (mpz_tstbit(z.get_mpz_t(), static_cast<mp_bitcnt_t>(bit)) != 0) r = field.mul(r, c);
    }
    return r;
  }

  Polynomial<F> power(const Polynomial<F>& b, const Int& k, std::size_t where) {
    if (k.is_zero()) return Polynomial<F>::constant(ring_, ring_->field.one());
    if (b.size() == 1) {
      const auto& t = b.terms().front();
      IntVector e = t.exp.vector();
      for (auto& x : e) x *= k;
      return Polynomial<F>::monomial(ring_, Monomial(std::move(e)), coeff_pow(t.coeff, k, where));
    }
    if (b.is_zero()) return b;
    if (!k.fits_int64() || k.to_int64() > 100000) {
      pos_ = where;
      fail("exponent too large for a multi-term base");
    }
    Polynomial<F> r = Polynomial<F>::constant(ring_, ring_->field.one());
    Polynomial<F> sq = b;
    for (std::int64_t e = k.to_int64(); e > 0; e >>= 1) {
      if ((e & 1) != 0) r *= sq;
      if (e > 1) sq *= sq;
    }
    return r;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  const RingPtr<F>& ring_;
};

}  // namespace detail

template <class F>
Polynomial<F> parse_polynomial(std::string_view text, const RingPtr<F>& ring) {
  return detail::PolyParser<F>(text, ring).parse();
}

/// Monomial part of a term, e.g. "x^2*y"; empty for the constant monomial.
inline std::string format_monomial(const Monomial& m, const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].is_zero()) continue;
    if (!s.empty()) s += '*';
    s += vars[i];
    if (m[i] != Int(1)) s += '^' + m[i].to_string();
  }
  return s;
}

/// Terms in decreasing order under `ord`, e.g. "x + y^12 - y^8 + y^4".
template <class F>
std::string format_polynomial(const Polynomial<F>& f, const TermOrdering& ord) {
  if (f.is_zero()) return "0";
  const F& k = f.field();
  std::vector<const Term<F>*> terms;
  for (const auto& t : f.terms()) terms.push_back(&t);
  std::sort(terms.begin(), terms.end(), [&](const Term<F>* a, const Term<F>* b) { return ord.compare(a->exp, b->exp) > 0; });
  std::string out;
  for (const Term<F>* t : terms) {
    auto c = t->coeff;
    const bool neg = F::is_negative(c);
    if (neg) c = k.neg(c);
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    const std::string mono = format_monomial(t->exp, f.ring()->vars);
    if (mono.empty()) {
      out += F::to_string(c);
    } else if (F::is_one(c)) {
      out += mono;
    } else {
      out += F::to_string(c) + '*' + mono;
    }
  }
  return out;
}

}  // namespace gwalk
