#pragma once

// Independent checks of the walks against each other, used by the unit tests
// and the acceptance binary.

#include <gmpxx.h>

#include <optional>
#include <set>
#include <string>

#include "gwalk/generic_walk.hpp"
#include "gwalk/walk.hpp"

namespace gwalk::testkit {

/// t with p parallel to (1-t) s + t tau, or nullopt when p is off the segment.
inline std::optional<mpq_class> segment_parameter(const IntVector& p, const IntVector& s, const IntVector& tau) {
  const std::size_t n = p.size();
  std::optional<mpq_class> t;
  for (std::size_t i = 0; i < n && !t; ++i) {
    for (std::size_t j = i + 1; j < n && !t; ++j) {
      const mpz_class di = (tau[i] - s[i]).to_mpz();
      const mpz_class dj = (tau[j] - s[j]).to_mpz();
      const mpz_class a = p[i].to_mpz() * dj - p[j].to_mpz() * di;
      if (a != 0) t = mpq_class(p[j].to_mpz() * s[i].to_mpz() - p[i].to_mpz() * s[j].to_mpz(), a);
    }
  }
  if (!t) {
    // s and tau are parallel: the whole segment is a single ray.
    t = mpq_class(p == primitive(tau) ? 1 : 0);
  }
  t->canonicalize();
  // Verify the candidate exactly.
  std::vector<mpq_class> q(n);
  for (std::size_t i = 0; i < n; ++i) q[i] = (1 - *t) * mpq_class(s[i].to_mpz()) + *t * mpq_class(tau[i].to_mpz());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (mpq_class(p[i].to_mpz()) * q[j] != mpq_class(p[j].to_mpz()) * q[i]) return std::nullopt;
    }
  }
  return t;
}

/// Parameter at which the segment s -> tau meets the hyperplane of facet w.
inline std::optional<mpq_class> facet_parameter(const IntVector& w, const IntVector& s, const IntVector& tau) {
  const mpz_class at_s = dot(w, s).to_mpz();
  const mpz_class at_t = dot(w, tau).to_mpz();
  if (at_s == at_t) return std::nullopt;
  mpq_class t(at_s, at_s - at_t);
  t.canonicalize();
  return t;
}

/// Compares the facet order of a generic walk with the crossing parameters of
/// the standard walk between the same orderings. Returns a description of the
/// first discrepancy.
///
/// Standard crossings must be strictly increasing along the segment between
/// the first rows. Every facet the generic walk flips must meet the segment at
/// one of those crossings, in nondecreasing order, and every crossing must be
/// matched by at least one flip.
inline std::optional<std::string> sign_oracle(const WalkTrace& standard, const WalkTrace& generic, const TermOrdering& start,
                                       const TermOrdering& target) {
  const IntVector s = primitive(start.row_vector(0));
  const IntVector tau = primitive(target.row_vector(0));
  std::vector<mpq_class> crossings;
  for (std::size_t k = 1; k < standard.crossed.size(); ++k) {
    auto t = segment_parameter(standard.crossed[k], s, tau);
    if (!t) return "standard crossing " + format_vector(standard.crossed[k]) + " is off the segment";
    if (!crossings.empty() && *t <= crossings.back()) {
      return "standard crossings not strictly increasing at " + format_vector(standard.crossed[k]);
    }
    crossings.push_back(*t);
  }
  std::set<mpq_class> matched;
  std::optional<mpq_class> last;
  for (const auto& w : generic.crossed) {
    auto t = facet_parameter(w, s, tau);
    if (!t) return "facet " + format_vector(w) + " is parallel to the segment";
    if (last && *t < *last) return "facet " + format_vector(w) + " selected out of order (t = " + t->get_str() + ")";
    if (std::find(crossings.begin(), crossings.end(), *t) == crossings.end()) {
      return "facet " + format_vector(w) + " at t = " + t->get_str() + " matches no standard crossing";
    }
    matched.insert(*t);
    last = t;
  }
  if (matched.size() != crossings.size()) return "a standard crossing has no matching facet flip";
  return std::nullopt;
}

}  // namespace gwalk::testkit
