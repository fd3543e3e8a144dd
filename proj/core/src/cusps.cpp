#include "cuspidal/cusps.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cuspidal {

namespace {

// Smallest positive representative of the class of r mod z that is coprime
// to c; exists by CRT since gcd(r, z) = 1 and z | c.
Cusp representative(long N, long c, long r) {
  long z = std::gcd(c, N / c);
  long a = r % z;
  if (a <= 0) a += z;
  while (std::gcd(a, c) != 1) a += z;
  return Cusp{c, a, z};
}

}  // namespace

std::vector<Cusp> enumerate_cusps(long N) {
  if (N < 1) throw std::invalid_argument("enumerate_cusps: N must be positive");
  std::vector<Cusp> out;
  for (long c : divisors(N)) {
    long z = std::gcd(c, N / c);
    for (long r = 1; r <= z; ++r)
      if (std::gcd(r, z) == 1) out.push_back(representative(N, c, r));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Cusp canonicalize(long N, long c, long a) {
  if (c < 1 || N % c != 0)
    throw std::invalid_argument("canonicalize: c must divide N");
  if (std::gcd(a, c) != 1)
    throw std::invalid_argument("canonicalize: gcd(a, c) must be 1");
  return representative(N, c, a);
}

Cusp galois_act(long N, long s, const Cusp& cusp) {
  long L = sqrt_part(N);
  long sr = s % L;
  if (sr < 0) sr += L;
  if (L > 1 && std::gcd(sr, L) != 1)
    throw std::invalid_argument("galois_act: s not coprime to L");
  if (cusp.z <= 1) return cusp;
  long t = inv_mod(s, cusp.z);  // kGaloisExponent = -1
  static_assert(kGaloisExponent == -1);
  return representative(N, cusp.c, (cusp.a % cusp.z) * t);
}

std::vector<std::vector<Cusp>> galois_orbits(long N) {
  auto cs = enumerate_cusps(N);
  long L = sqrt_part(N);
  std::map<Cusp, Cusp> root;
  for (const auto& P : cs) root[P] = P;
  auto find = [&](Cusp x) {
    while (!(root[x] == x)) x = root[x];
    return x;
  };
  for (long s = 1; s <= L; ++s) {
    if (std::gcd(s, L) != 1) continue;
    for (const auto& P : cs) {
      Cusp a = find(P), b = find(galois_act(N, s, P));
      if (!(a == b)) root[a] = b;
    }
  }
  std::map<Cusp, std::vector<Cusp>> groups;
  for (const auto& P : cs) groups[find(P)].push_back(P);
  std::vector<std::vector<Cusp>> out;
  for (auto& [k, v] : groups) {
    std::sort(v.begin(), v.end());
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x[0] < y[0]; });
  return out;
}

Cusp cusp_zero(long N) { return canonicalize(N, 1, 1); }

Cusp cusp_infinity(long N) { return canonicalize(N, N, 1); }

Cusp cusp_half(long N) {
  if (N % 2 != 0 || (N / 2) % 2 == 0)
    throw unsupported_error("cusp (1:N0) requires N = 2*N0 with N0 odd");
  return canonicalize(N, N / 2, 1);
}

}  // namespace cuspidal
