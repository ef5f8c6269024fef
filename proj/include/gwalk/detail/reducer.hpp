#pragma once

// Division engine shared by normal forms, Buchberger and the walks.
//
// Polynomials are held in flat arrays sorted decreasingly under a *selection*
// ordering, with each term's ordering key (matrix * exponent) cached. Keys are
// linear in the exponent, so shifting a polynomial by a monomial just adds the
// monomial's key and keeps the order. When the selection ordering is the one
// the markings come from, every reduction removes the current leading term.
// Otherwise (marked division) a reduction may introduce larger terms, which
// the merge places in front; termination then rests on the markings being
// compatible with some term ordering, and a fingerprint guard detects cycles.

#include <cstdint>
#include <span>
#include <unordered_set>
#include <vector>

#include "gwalk/error.hpp"
#include "gwalk/integer.hpp"
#include "gwalk/marked.hpp"
#include "gwalk/ordering.hpp"
#include "gwalk/polynomial.hpp"

namespace gwalk::detail {

template <class F>
struct SortedPoly {
  using Coeff = typename F::value_type;
  IntVector exps;  // size() * n, row per term
  IntVector keys;  // size() * n
  std::vector<Coeff> coeffs;

  [[nodiscard]] std::size_t size() const noexcept { return coeffs.size(); }
  [[nodiscard]] bool empty() const noexcept { return coeffs.empty(); }
  void clear() {
    exps.clear();
    keys.clear();
    coeffs.clear();
  }
};

template <class F>
struct Divisor {
  SortedPoly<F> poly;
  std::size_t mark_pos = 0;  // index of the marked term inside `poly`
  std::uint64_t mask = 0;    // bit i set when variable i (mod 64) occurs in the marking
};

template <class F>
class Reducer {
 public:
  using Coeff = typename F::value_type;

  Reducer(const F& field, const TermOrdering& selection) : k_(field), ord_(selection), n_(selection.nvars()) {}

  [[nodiscard]] std::size_t nvars() const noexcept { return n_; }
  [[nodiscard]] const F& field() const noexcept { return k_; }
  [[nodiscard]] const TermOrdering& ordering() const noexcept { return ord_; }

  [[nodiscard]] int compare_keys(const Int* a, const Int* b) const {
    for (std::size_t i = 0; i < n_; ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  [[nodiscard]] SortedPoly<F> sort(const Polynomial<F>& f) const {
    return sort_with(f, [](const Coeff& c) { return c; });
  }

  /// Sorts a polynomial over another coefficient domain, converting each coefficient.
  template <class G, class Convert>
  [[nodiscard]] SortedPoly<F> sort_with(const Polynomial<G>& f, Convert convert) const {
    const std::size_t m = f.size();
    std::vector<IntVector> keys(m);
    std::vector<std::size_t> idx(m);
    for (std::size_t i = 0; i < m; ++i) {
      keys[i] = ord_.key(f.terms()[i].exp);
      idx[i] = i;
    }
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return compare_keys(keys[a].data(), keys[b].data()) > 0; });
    SortedPoly<F> s;
    s.exps.reserve(m * n_);
    s.keys.reserve(m * n_);
    s.coeffs.reserve(m);
    for (std::size_t i : idx) {
      const auto& t = f.terms()[i];
      s.exps.insert(s.exps.end(), t.exp.vector().begin(), t.exp.vector().end());
      s.keys.insert(s.keys.end(), keys[i].begin(), keys[i].end());
      s.coeffs.push_back(convert(t.coeff));
    }
    return s;
  }

  [[nodiscard]] Polynomial<F> to_polynomial(const SortedPoly<F>& s, const RingPtr<F>& ring, std::size_t from = 0) const {
    std::vector<Term<F>> terms;
    terms.reserve(s.size() - from);
    for (std::size_t i = from; i < s.size(); ++i) terms.push_back({exp_of(s, i), s.coeffs[i]});
    return Polynomial<F>(ring, std::move(terms));
  }

  [[nodiscard]] Monomial exp_of(const SortedPoly<F>& s, std::size_t i) const {
    return Monomial(IntVector(s.exps.begin() + static_cast<std::ptrdiff_t>(i * n_),
                              s.exps.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_)));
  }

  [[nodiscard]] std::uint64_t mask_of(const Int* e) const noexcept {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (!e[i].is_zero()) m |= std::uint64_t{1} << (i & 63U);
    }
    return m;
  }

  [[nodiscard]] Divisor<F> make_divisor(const Polynomial<F>& poly, const Monomial& mark) const {
    Divisor<F> d;
    d.poly = sort(poly);
    for (std::size_t i = 0; i < d.poly.size(); ++i) {
      if (std::equal(mark.vector().begin(), mark.vector().end(), d.poly.exps.begin() + static_cast<std::ptrdiff_t>(i * n_))) {
        d.mark_pos = i;
        if (!F::is_one(d.poly.coeffs[i])) {
          throw MarkingError("divisor is not monic at its marking");
        }
        d.mask = mask_of(mark_exps(d));
        return d;
      }
    }
    throw MarkingError("marked exponent is not in the support");
  }
  [[nodiscard]] Divisor<F> make_divisor(const MarkedPolynomial<F>& g) const { return make_divisor(g.poly(), g.mark()); }

  [[nodiscard]] const Int* mark_exps(const Divisor<F>& d) const { return d.poly.exps.data() + d.mark_pos * n_; }
  [[nodiscard]] const Int* mark_key(const Divisor<F>& d) const { return d.poly.keys.data() + d.mark_pos * n_; }

  [[nodiscard]] bool divides(const Int* a, const Int* b) const {
    for (std::size_t i = 0; i < n_; ++i) {
      if (a[i] > b[i]) return false;
    }
    return true;
  }

  /// out = p[from..] - c * x^shift * g
  void sub_shifted(const SortedPoly<F>& p, std::size_t from, const Coeff& c, const Int* shift_exp, const Int* shift_key,
                   const SortedPoly<F>& g, SortedPoly<F>& out) const {
    out.clear();
    const std::size_t cap = p.size() - from + g.size();
    out.exps.reserve(cap * n_);
    out.keys.reserve(cap * n_);
    out.coeffs.reserve(cap);
    IntVector ge(n_);
    IntVector gk(n_);
    std::size_t i = from;
    std::size_t j = 0;
    bool loaded = false;
    auto load = [&] {
      if (!loaded && j < g.size()) {
        for (std::size_t v = 0; v < n_; ++v) {
          ge[v] = g.exps[j * n_ + v] + shift_exp[v];
          gk[v] = g.keys[j * n_ + v] + shift_key[v];
        }
        loaded = true;
      }
    };
    while (true) {
      load();
      const bool has_g = j < g.size();
      if (i == p.size() && !has_g) break;
      int cmp;
      if (i == p.size()) {
        cmp = -1;
      } else if (!has_g) {
        cmp = 1;
      } else {
        cmp = compare_keys(p.keys.data() + i * n_, gk.data());
      }
      if (cmp > 0) {
        push(out, p.exps.data() + i * n_, p.keys.data() + i * n_, p.coeffs[i]);
        ++i;
      } else if (cmp < 0) {
        push(out, ge.data(), gk.data(), k_.neg(k_.mul(c, g.coeffs[j])));
        ++j;
        loaded = false;
      } else {
        Coeff v = p.coeffs[i];
        k_.sub_mul(v, c, g.coeffs[j]);
        if (!F::is_zero(v)) push(out, p.exps.data() + i * n_, p.keys.data() + i * n_, v);
        ++i;
        ++j;
        loaded = false;
      }
    }
  }

  /// c * x^shift * g
  void shifted(const SortedPoly<F>& g, const Coeff& c, const Int* shift_exp, const Int* shift_key, SortedPoly<F>& out) const {
    out.clear();
    out.exps.reserve(g.size() * n_);
    out.keys.reserve(g.size() * n_);
    out.coeffs.reserve(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
      for (std::size_t v = 0; v < n_; ++v) {
        out.exps.push_back(g.exps[j * n_ + v] + shift_exp[v]);
        out.keys.push_back(g.keys[j * n_ + v] + shift_key[v]);
      }
      out.coeffs.push_back(k_.mul(c, g.coeffs[j]));
    }
  }

  void make_monic(SortedPoly<F>& p, std::size_t pos = 0) const {
    if (p.empty() || F::is_one(p.coeffs[pos])) return;
    const Coeff inv = k_.inv(p.coeffs[pos]);
    for (auto& c : p.coeffs) c = k_.mul(c, inv);
  }

  struct Quotient {
    std::size_t divisor;
    Monomial shift;
    Coeff coeff;
  };

  struct Options {
    bool full = true;          // reduce every term, not only the leading one
    bool cycle_guard = false;  // detect non-terminating marked division
    std::vector<Quotient>* quotients = nullptr;
  };

  /// Reduces p by the divisors, always working on the greatest reducible term.
  /// With `full`, returns the remainder (every term irreducible); otherwise
  /// returns p with an irreducible leading term.
  [[nodiscard]] SortedPoly<F> reduce(SortedPoly<F> p, std::span<const Divisor<F>* const> divisors, const Options& opt) const {
    if (opt.cycle_guard) return reduce_guarded(std::move(p), divisors, opt);
    Bucket bucket(*this);
    bucket.add(std::move(p));
    SortedPoly<F> rem;
    SortedPoly<F> step;
    IntVector se(n_);
    IntVector sk(n_);
    Coeff c;
    std::size_t at = 0;
    while (bucket.lead(at)) {
      const SortedPoly<F>& src = bucket.poly(at);
      const std::size_t pos = bucket.head(at);
      const Int* te = src.exps.data() + pos * n_;
      const std::size_t d = find_divisor(divisors, te);
      if (d == divisors.size()) {
        if (!opt.full) {
          SortedPoly<F> out;
          bucket.drain(out);
          return out;
        }
        push(rem, te, src.keys.data() + pos * n_, src.coeffs[pos]);
        bucket.pop(at);
        continue;
      }
      const Divisor<F>& div = *divisors[d];
      const Int* me = mark_exps(div);
      const Int* mk = mark_key(div);
      const Int* tk = src.keys.data() + pos * n_;
      for (std::size_t v = 0; v < n_; ++v) {
        se[v] = te[v] - me[v];
        sk[v] = tk[v] - mk[v];
      }
      c = src.coeffs[pos];
      if (opt.quotients != nullptr) opt.quotients->push_back({d, Monomial(se), c});
      bucket.pop(at);
      shifted_without(div.poly, div.mark_pos, k_.neg(c), se.data(), sk.data(), step);
      bucket.add(std::move(step));
    }
    // Under a selection ordering unrelated to the markings, a reduction may
    // create terms above ones already moved to the remainder.
    if (!sorted_strictly(rem)) rem = normalize(rem);
    return rem;
  }

  /// Fraction-free top reduction over the integers (F = Integers): instead of
  /// dividing by the leading coefficient of a divisor, p is scaled by it.
  /// Divisors need not be monic. The result is primitive with a positive
  /// leading coefficient; with `full`, every term is irreducible.
  [[nodiscard]] SortedPoly<F> pseudo_reduce(SortedPoly<F> p, std::span<const Divisor<F>* const> divisors, bool full) const {
    SortedPoly<F> rem;
    SortedPoly<F> scratch;
    IntVector se(n_);
    IntVector sk(n_);
    std::size_t head = 0;
    Coeff g;
    Coeff a;
    Coeff b;
    while (head < p.size()) {
      const Int* te = p.exps.data() + head * n_;
      const std::uint64_t tmask = mask_of(te);
      const Divisor<F>* div = nullptr;
      for (const Divisor<F>* cand : divisors) {
        if ((cand->mask & ~tmask) == 0 && divides(mark_exps(*cand), te)) {
          div = cand;
          break;
        }
      }
      if (div == nullptr) {
        if (!full) break;
        push(rem, te, p.keys.data() + head * n_, p.coeffs[head]);
        ++head;
        continue;
      }
      const Int* me = mark_exps(*div);
      const Int* mk = mark_key(*div);
      const Int* tk = p.keys.data() + head * n_;
      for (std::size_t v = 0; v < n_; ++v) {
        se[v] = te[v] - me[v];
        sk[v] = tk[v] - mk[v];
      }
      const Coeff& lead = div->poly.coeffs[div->mark_pos];
      mpz_gcd(g.get_mpz_t(), p.coeffs[head].get_mpz_t(), lead.get_mpz_t());
      mpz_divexact(a.get_mpz_t(), lead.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(b.get_mpz_t(), p.coeffs[head].get_mpz_t(), g.get_mpz_t());
      if (a != 1) {
        for (std::size_t i = head; i < p.size(); ++i) p.coeffs[i] *= a;
        for (auto& c : rem.coeffs) c *= a;
      }
      sub_shifted(p, head, b, se.data(), sk.data(), div->poly, scratch);
      std::swap(p, scratch);
      head = 0;
    }
    SortedPoly<F> out;
    if (full) {
      out = std::move(rem);
    } else {
      for (std::size_t i = head; i < p.size(); ++i) push(out, p.exps.data() + i * n_, p.keys.data() + i * n_, p.coeffs[i]);
    }
    make_primitive(out);
    return out;
  }

  /// Divides by the content and makes the first coefficient positive.
  static void make_primitive(SortedPoly<F>& p) {
    if (p.empty()) return;
    Coeff g = 0;
    for (const auto& c : p.coeffs) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) break;
    }
    if (sgn(p.coeffs.front()) < 0) g = -g;
    if (g == 1) return;
    for (auto& c : p.coeffs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }

  void push(SortedPoly<F>& out, const Int* e, const Int* k, const Coeff& c) const {
    out.exps.insert(out.exps.end(), e, e + n_);
    out.keys.insert(out.keys.end(), k, k + n_);
    out.coeffs.push_back(c);
  }

  // Plain rewriting loop with a fingerprint check, for marked division whose
  // termination is not known in advance.
  [[nodiscard]] SortedPoly<F> reduce_guarded(SortedPoly<F> p, std::span<const Divisor<F>* const> divisors,
                                             const Options& opt) const {
    SortedPoly<F> rem;
    SortedPoly<F> scratch;
    std::unordered_set<std::uint64_t> seen;
    IntVector se(n_);
    IntVector sk(n_);
    std::size_t head = 0;
    seen.insert(fingerprint(p, 0));
    while (head < p.size()) {
      const Int* te = p.exps.data() + head * n_;
      const std::size_t d = find_divisor(divisors, te);
      if (d == divisors.size()) {
        if (!opt.full) break;
        push(rem, te, p.keys.data() + head * n_, p.coeffs[head]);
        ++head;
        continue;
      }
      const Divisor<F>& div = *divisors[d];
      const Int* me = mark_exps(div);
      const Int* mk = mark_key(div);
      const Int* tk = p.keys.data() + head * n_;
      for (std::size_t v = 0; v < n_; ++v) {
        se[v] = te[v] - me[v];
        sk[v] = tk[v] - mk[v];
      }
      const Coeff c = p.coeffs[head];
      if (opt.quotients != nullptr) opt.quotients->push_back({d, Monomial(se), c});
      sub_shifted(p, head, c, se.data(), sk.data(), div.poly, scratch);
      std::swap(p, scratch);
      head = 0;
      if (!seen.insert(fingerprint(p, 0)).second) {
        throw MarkingError("marked division does not terminate; markings are not compatible with a term ordering");
      }
    }
    if (!opt.full) {
      SortedPoly<F> out;
      for (std::size_t i = head; i < p.size(); ++i) push(out, p.exps.data() + i * n_, p.keys.data() + i * n_, p.coeffs[i]);
      return out;
    }
    if (!sorted_strictly(rem)) rem = normalize(rem);
    return rem;
  }

  [[nodiscard]] std::size_t find_divisor(std::span<const Divisor<F>* const> divisors, const Int* te) const {
    const std::uint64_t tmask = mask_of(te);
    for (std::size_t d = 0; d < divisors.size(); ++d) {
      const Divisor<F>* cand = divisors[d];
      if ((cand->mask & ~tmask) == 0 && divides(mark_exps(*cand), te)) return d;
    }
    return divisors.size();
  }

  /// out = c * x^shift * (g without its term at `skip`)
  void shifted_without(const SortedPoly<F>& g, std::size_t skip, const Coeff& c, const Int* shift_exp, const Int* shift_key,
                       SortedPoly<F>& out) const {
    out.clear();
    out.exps.resize((g.size() - 1) * n_);
    out.keys.resize((g.size() - 1) * n_);
    out.coeffs.reserve(g.size() - 1);
    std::size_t o = 0;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (j == skip) continue;
      for (std::size_t v = 0; v < n_; ++v) {
        out.exps[o * n_ + v] = g.exps[j * n_ + v] + shift_exp[v];
        out.keys[o * n_ + v] = g.keys[j * n_ + v] + shift_key[v];
      }
      out.coeffs.push_back(k_.mul(c, g.coeffs[j]));
      ++o;
    }
  }

  /// out = a[from..] + b[bfrom..]
  void merge(const SortedPoly<F>& a, std::size_t from, const SortedPoly<F>& b, std::size_t bfrom, SortedPoly<F>& out) const {
    out.clear();
    const std::size_t cap = a.size() - from + b.size() - bfrom;
    out.exps.reserve(cap * n_);
    out.keys.reserve(cap * n_);
    out.coeffs.reserve(cap);
    std::size_t i = from;
    std::size_t j = bfrom;
    while (i < a.size() && j < b.size()) {
      const int cmp = compare_keys(a.keys.data() + i * n_, b.keys.data() + j * n_);
      if (cmp > 0) {
        push(out, a.exps.data() + i * n_, a.keys.data() + i * n_, a.coeffs[i]);
        ++i;
      } else if (cmp < 0) {
        push(out, b.exps.data() + j * n_, b.keys.data() + j * n_, b.coeffs[j]);
        ++j;
      } else {
        Coeff v = a.coeffs[i];
        k_.add_to(v, b.coeffs[j]);
        if (!F::is_zero(v)) push(out, a.exps.data() + i * n_, a.keys.data() + i * n_, v);
        ++i;
        ++j;
      }
    }
    for (; i < a.size(); ++i) push(out, a.exps.data() + i * n_, a.keys.data() + i * n_, a.coeffs[i]);
    for (; j < b.size(); ++j) push(out, b.exps.data() + j * n_, b.keys.data() + j * n_, b.coeffs[j]);
  }

  [[nodiscard]] bool sorted_strictly(const SortedPoly<F>& p) const {
    for (std::size_t i = 1; i < p.size(); ++i) {
      if (compare_keys(p.keys.data() + (i - 1) * n_, p.keys.data() + i * n_) <= 0) return false;
    }
    return true;
  }

  // Sorts and combines equal terms.
  [[nodiscard]] SortedPoly<F> normalize(const SortedPoly<F>& p) const {
    Bucket b(*this);
    for (std::size_t i = 0; i < p.size(); ++i) {
      SortedPoly<F> t;
      push(t, p.exps.data() + i * n_, p.keys.data() + i * n_, p.coeffs[i]);
      b.add(std::move(t));
    }
    SortedPoly<F> out;
    b.drain(out);
    return out;
  }

  // Geometric buckets: bucket i holds at most 4^(i+1) terms, so adding a
  // polynomial costs about its own length times the number of buckets.
  class Bucket {
   public:
    explicit Bucket(const Reducer& r) : r_(r) {}

    void add(SortedPoly<F> p) {
      if (p.empty()) return;
      std::size_t i = level(p.size());
      while (true) {
        if (i >= polys_.size()) {
          polys_.resize(i + 1);
          heads_.resize(i + 1, 0);
        }
        if (heads_[i] < polys_[i].size()) {
          r_.merge(polys_[i], heads_[i], p, 0, scratch_);
          std::swap(p, scratch_);
        }
        polys_[i].clear();
        heads_[i] = 0;
        if (p.size() <= capacity(i)) {
          std::swap(polys_[i], p);
          return;
        }
        i = level(p.size());
      }
    }

    /// Moves the leading term into one bucket, combining equal terms from the
    /// others. Returns false when the bucket is empty.
    bool lead(std::size_t& at) {
      const std::size_t n = r_.n_;
      while (true) {
        std::size_t best = polys_.size();
        for (std::size_t i = 0; i < polys_.size(); ++i) {
          if (heads_[i] == polys_[i].size()) continue;
          if (best == polys_.size()) {
            best = i;
            continue;
          }
          const int cmp = r_.compare_keys(polys_[i].keys.data() + heads_[i] * n, polys_[best].keys.data() + heads_[best] * n);
          if (cmp > 0) {
            best = i;
          } else if (cmp == 0) {
            r_.k_.add_to(polys_[best].coeffs[heads_[best]], polys_[i].coeffs[heads_[i]]);
            ++heads_[i];
          }
        }
        if (best == polys_.size()) return false;
        if (!F::is_zero(polys_[best].coeffs[heads_[best]])) {
          at = best;
          return true;
        }
        ++heads_[best];
      }
    }

    [[nodiscard]] const SortedPoly<F>& poly(std::size_t at) const { return polys_[at]; }
    [[nodiscard]] std::size_t head(std::size_t at) const { return heads_[at]; }
    void pop(std::size_t at) { ++heads_[at]; }

    /// Moves every remaining term into out, sorted.
    void drain(SortedPoly<F>& out) {
      out.clear();
      std::size_t at = 0;
      const std::size_t n = r_.n_;
      while (lead(at)) {
        const std::size_t h = heads_[at];
        r_.push(out, polys_[at].exps.data() + h * n, polys_[at].keys.data() + h * n, polys_[at].coeffs[h]);
        ++heads_[at];
      }
    }

   private:
    static std::size_t capacity(std::size_t i) { return std::size_t{4} << (2 * i); }
    static std::size_t level(std::size_t len) {
      std::size_t i = 0;
      while (capacity(i) < len) ++i;
      return i;
    }

    const Reducer& r_;
    std::vector<SortedPoly<F>> polys_;
    std::vector<std::size_t> heads_;
    SortedPoly<F> scratch_;
  };

  [[nodiscard]] std::uint64_t fingerprint(const SortedPoly<F>& p, std::size_t from) const {
    std::uint64_t h = 0;
    for (std::size_t i = from; i < p.size(); ++i) {
      std::uint64_t t = 0x9e3779b97f4a7c15ULL;
      for (std::size_t v = 0; v < n_; ++v) t = (t ^ p.exps[i * n_ + v].hash()) * 0x100000001b3ULL;
      t = (t ^ F::hash(p.coeffs[i])) * 0xff51afd7ed558ccdULL;
      h += t ^ (t >> 29);
    }
    return h ^ p.size();
  }

  void scale_into(const SortedPoly<F>& p, const Coeff& c, SortedPoly<F>& out) const {
    out = p;
    for (auto& x : out.coeffs) x = k_.mul(c, x);
  }

 private:
  const F& k_;
  const TermOrdering& ord_;
  std::size_t n_;
};

}  // namespace gwalk::detail
