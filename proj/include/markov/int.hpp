#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>

#include "markov/error.hpp"

namespace markov {

// All arithmetic in this library is exact. Integers and rationals are
// GMP-backed; there is no fixed-width fast path.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(Int num, Int den) {
  if (den == 0) fail(errc::division_by_zero, "rational with zero denominator");
  Rat r;
  r.get_num() = std::move(num);
  r.get_den() = std::move(den);
  r.canonicalize();
  return r;
}

inline int sgn(const Int& v) { return mpz_sgn(v.get_mpz_t()); }
inline int sgn(const Rat& v) { return mpq_sgn(v.get_mpq_t()); }

inline Int isqrt(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline bool is_perfect_square(const Int& n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// floor(a / b), b > 0
inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Splits n >= 1 as s^2 * f. Small square factors are always extracted; for
// very large n the trial bound is lowered, so f is squarefree only up to that
// bound (a leftover cofactor may keep a large hidden square). Equality and
// ordering of surds never rely on f being fully squarefree.
inline std::pair<Int, Int> square_split(Int n) {
  Int s = 1, core = 1;
  const unsigned long bound = mpz_sizeinbase(n.get_mpz_t(), 2) > 80 ? 1000ul : 1000000ul;
  Int t = 2;
  while (t * t <= n && t <= bound) {
    if (n % t == 0) {
      int e = 0;
      while (n % t == 0) {
        n /= t;
        ++e;
      }
      for (int i = 0; i < e / 2; ++i) s *= t;
      if (e & 1) core *= t;
    }
    t += (t == 2) ? 1 : 2;
  }
  if (n > 1) {
    if (is_perfect_square(n)) {
      s *= isqrt(n);
    } else {
      core *= n;
    }
  }
  return {s, core};
}

}  // namespace markov
