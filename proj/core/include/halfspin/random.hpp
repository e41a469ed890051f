#pragma once

#include "halfspin/tower.hpp"

#include <cstdint>
#include <random>

namespace halfspin {

// Deterministic test/trial randomness. We take raw engine output modulo the
// range instead of std::uniform_int_distribution, whose mapping is not pinned
// down by the standard; reports must be byte-identical across platforms.
using Rng = std::mt19937_64;

inline std::uint64_t rand_below(Rng& rng, std::uint64_t bound) { return rng() % bound; }

inline Rational rand_rational(Rng& rng, int max_num = 9, int max_den = 9) {
  long num = static_cast<long>(rand_below(rng, 2 * max_num + 1)) - max_num;
  long den = static_cast<long>(rand_below(rng, max_den)) + 1;
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rand_nonzero_rational(Rng& rng, int max_num = 9, int max_den = 9) {
  for (;;) {
    Rational q = rand_rational(rng, max_num, max_den);
    if (sgn(q) != 0) return q;
  }
}

/// Random element of E0.
inline FieldElement rand_base_element(Rng& rng, const TowerSpec& t) {
  return t.base_element(rand_rational(rng), t.has_m1() ? rand_rational(rng) : Rational(0));
}

inline FieldElement rand_nonzero_base_element(Rng& rng, const TowerSpec& t) {
  for (;;) {
    FieldElement x = rand_base_element(rng, t);
    if (!x.is_zero()) return x;
  }
}

/// Random element of E.
inline FieldElement rand_element(Rng& rng, const TowerSpec& t) {
  auto r = [&](bool live) { return live ? rand_rational(rng) : Rational(0); };
  const bool m1 = t.has_m1();
  return t.element({rand_rational(rng), r(m1), rand_rational(rng), r(m1)});
}

inline FieldElement rand_nonzero_element(Rng& rng, const TowerSpec& t) {
  for (;;) {
    FieldElement x = rand_element(rng, t);
    if (!x.is_zero()) return x;
  }
}

}  // namespace halfspin
