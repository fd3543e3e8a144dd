#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cuspidal {

// All arithmetic in this library is exact. Int/Rat are GMP-backed; Rat is
// always stored reduced with positive denominator (mpq canonical form).
using Int = mpz_class;
using Rat = mpq_class;

// Input outside the supported hypotheses (e.g. even L for the modular-unit
// criterion). The CLI maps this to its own exit code, distinct from errors.
struct unsupported_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rat make_rat(Int num, Int den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat r(std::move(num), std::move(den));
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

inline Int to_integer(const Rat& x) {
  if (!is_integer(x))
    throw std::invalid_argument("not an integer: " + x.get_str());
  return x.get_num();
}

inline long to_long(const Int& x) {
  if (!x.fits_slong_p()) throw std::overflow_error("does not fit in long");
  return x.get_si();
}

inline Int floor_of(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

inline Int lcm_int(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int gcd_int(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace cuspidal
