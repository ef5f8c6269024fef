#pragma once

// Generated benchmark systems.

#include <cstdlib>
#include <string>
#include <vector>

#include "gwalk/groebner.hpp"

namespace gwalk {

/// Cyclic n-roots over x0..x{n-1}.
template <class F>
Ideal<F> gen_cyclic(std::size_t n, F field) {
  if (n < 2) throw InvalidInput("cyclic system needs n >= 2");
  const auto ring = make_ring(n, std::move(field), "x");
  using P = Polynomial<F>;
  std::vector<P> gens;
  for (std::size_t k = 1; k < n; ++k) {
    P sum(ring);
    for (std::size_t i = 0; i < n; ++i) {
      P prod = P::constant(ring, ring->field.from_int(1L));
      for (std::size_t j = i; j < i + k; ++j) prod *= P::variable(ring, j % n);
      sum += prod;
    }
    gens.push_back(std::move(sum));
  }
  P all = P::constant(ring, ring->field.from_int(1L));
  for (std::size_t i = 0; i < n; ++i) all *= P::variable(ring, i);
  gens.push_back(all - P::constant(ring, ring->field.from_int(1L)));
  return Ideal<F>(ring, std::move(gens));
}

/// Katsura m over u0..um.
template <class F>
Ideal<F> gen_katsura(std::size_t m, F field) {
  if (m < 1) throw InvalidInput("katsura system needs m >= 1");
  const auto ring = make_ring(m + 1, std::move(field), "u");
  using P = Polynomial<F>;
  const auto u = [&](long i) { return P::variable(ring, static_cast<std::size_t>(std::labs(i))); };
  const long mm = static_cast<long>(m);
  std::vector<P> gens;
  for (long k = 0; k < mm; ++k) {
    P sum(ring);
    for (long i = -mm; i <= mm; ++i) {
      if (std::labs(k - i) > mm) continue;
      sum += u(i) * u(k - i);
    }
    gens.push_back(sum - u(k));
  }
  P lin = u(0) - P::constant(ring, ring->field.from_int(1L));
  for (long i = 1; i <= mm; ++i) lin += P::constant(ring, ring->field.from_int(2L)) * u(i);
  gens.push_back(std::move(lin));
  return Ideal<F>(ring, std::move(gens));
}

}  // namespace gwalk
