#pragma once

#include <utility>
#include <vector>

#include "cuspidal/rational.hpp"

namespace cuspidal {

// Strictly increasing list of all positive divisors of n. Rejects n < 1.
std::vector<long> divisors(long n);

// Prime factorization by trial division, (prime, exponent) with primes
// increasing. Desk-scale N only.
std::vector<std::pair<long, int>> factorize(long n);

long euler_phi(long n);
int moebius(long n);

// (phi(n), mu(n)) in one call.
std::pair<long, int> phi_mu(long n);

// Largest integer whose square divides n.
long sqrt_part(long n);

// Unique delta in [1, n-1] with a*delta == 1 (mod n); requires n >= 2 and
// gcd(a, n) = 1.
long inv_mod(long a, long n);

// p-adic valuation of n != 0.
int valuation(long n, long p);

// Second Bernoulli function P2(x) = B2({x}) with B2(t) = t^2 - t + 1/6.
Rat bernoulli_p2(const Rat& x);

}  // namespace cuspidal
