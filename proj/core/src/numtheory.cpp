#include "cuspidal/numtheory.hpp"

#include <algorithm>
#include <numeric>

namespace cuspidal {

std::vector<long> divisors(long n) {
  if (n < 1) throw std::invalid_argument("divisors: n must be positive");
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::pair<long, int>> factorize(long n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  std::vector<std::pair<long, int>> f;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) n /= p, ++e;
      f.emplace_back(p, e);
    }
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

long euler_phi(long n) {
  long r = n;
  for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

int moebius(long n) {
  auto f = factorize(n);
  for (auto [p, e] : f)
    if (e > 1) return 0;
  return f.size() % 2 == 0 ? 1 : -1;
}

std::pair<long, int> phi_mu(long n) {
  if (n < 1) throw std::invalid_argument("phi_mu: n must be positive");
  return {euler_phi(n), moebius(n)};
}

long sqrt_part(long n) {
  if (n < 1) throw std::invalid_argument("sqrt_part: n must be positive");
  long l = 1;
  for (auto [p, e] : factorize(n))
    for (int i = 0; i < e / 2; ++i) l *= p;
  return l;
}

long inv_mod(long a, long n) {
  if (n < 2) throw std::invalid_argument("inv_mod: modulus must be >= 2");
  long r = a % n;
  if (r < 0) r += n;
  if (std::gcd(r, n) != 1)
    throw std::invalid_argument("inv_mod: argument not invertible");
  // extended euclid on (r, n)
  long t = 0, newt = 1, g = n, newg = r;
  while (newg != 0) {
    long quot = g / newg;
    long tmp = t - quot * newt;
    t = newt, newt = tmp;
    tmp = g - quot * newg;
    g = newg, newg = tmp;
  }
  return t < 0 ? t + n : t;
}

int valuation(long n, long p) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  if (p < 2) throw std::invalid_argument("valuation: p must be >= 2");
  int v = 0;
  while (n % p == 0) n /= p, ++v;
  return v;
}

Rat bernoulli_p2(const Rat& x) {
  Rat t = x - Rat(floor_of(x));
  return t * t - t + Rat(1, 6);
}

}  // namespace cuspidal
