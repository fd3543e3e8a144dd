#pragma once

#include <compare>
#include <vector>

#include "cuspidal/numtheory.hpp"

namespace cuspidal {

// A cusp (a : c) of X_0(N): c | N, gcd(a, c) = 1, with (a : c) == (a' : c)
// iff a == a' (mod z), z = gcd(c, N/c). Stored canonically: a is the
// smallest positive representative of its class mod z that is coprime to c.
struct Cusp {
  long c = 1;
  long a = 1;
  long z = 1;
  auto operator<=>(const Cusp&) const = default;  // sorted by c, then a
};

// Galois direction convention, pinned by the N=25 calibration test against
// sigma_s(div F_{m,h}) = div F_{m,sh}: sigma_s multiplies the residue a by
// s^{kGaloisExponent} mod z. Not derived from a stated formula; do not change
// without re-running the calibration.
inline constexpr int kGaloisExponent = -1;

// One canonical representative per equivalence class, sorted by (c, a).
// Count is sum over c | N of phi(gcd(c, N/c)).
std::vector<Cusp> enumerate_cusps(long N);

// Canonical representative of (a : c); rejects gcd(a, c) > 1 or c not
// dividing N.
Cusp canonicalize(long N, long c, long a);

// sigma_s on cusps; requires gcd(s, L) = 1 with L = sqrt_part(N).
Cusp galois_act(long N, long s, const Cusp& cusp);

// Orbit partition under {sigma_s : s in (Z/L)^*}; orbits keep enumeration
// order, each orbit sorted.
std::vector<std::vector<Cusp>> galois_orbits(long N);

Cusp cusp_zero(long N);      // (1 : 1)
Cusp cusp_infinity(long N);  // (1 : N)
Cusp cusp_half(long N);      // (1 : N0) for N = 2*N0, N0 odd; throws otherwise

}  // namespace cuspidal
