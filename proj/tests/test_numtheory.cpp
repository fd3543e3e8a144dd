#include <doctest.h>

#include <numeric>

#include "cuspidal/numtheory.hpp"

using namespace cuspidal;

namespace {

// brute-force oracles, independent of the implementation's factor tables
std::vector<long> divisors_brute(long n) {
  std::vector<long> out;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

long phi_brute(long n) {
  long c = 0;
  for (long a = 1; a <= n; ++a)
    if (std::gcd(a, n) == 1) ++c;
  return c;
}

long sqrt_part_brute(long n) {
  for (long l = n; l >= 1; --l)
    if (l * l <= n && n % (l * l) == 0) return l;
  return 1;
}

}  // namespace

TEST_CASE("divisors") {
  CHECK(divisors(1) == std::vector<long>{1});
  CHECK(divisors(12) == std::vector<long>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(225) == std::vector<long>{1, 3, 5, 9, 15, 25, 45, 75, 225});
  for (long n = 1; n <= 300; ++n) CHECK(divisors(n) == divisors_brute(n));
  CHECK_THROWS_AS(divisors(0), std::invalid_argument);
}

TEST_CASE("phi and mu") {
  CHECK(phi_mu(1) == std::make_pair(1L, 1));
  CHECK(phi_mu(15) == std::make_pair(8L, 1));
  CHECK(phi_mu(9) == std::make_pair(6L, 0));
  for (long n = 1; n <= 200; ++n) CHECK(euler_phi(n) == phi_brute(n));
  // mu via mertens-like identity: sum_{d|n} mu(d) = [n == 1]
  for (long n = 1; n <= 200; ++n) {
    int s = 0;
    for (long d : divisors(n)) s += moebius(d);
    CHECK(s == (n == 1 ? 1 : 0));
  }
  CHECK_THROWS_AS(phi_mu(0), std::invalid_argument);
}

TEST_CASE("sqrt_part") {
  CHECK(sqrt_part(1) == 1);
  CHECK(sqrt_part(45) == 3);
  CHECK(sqrt_part(200) == 10);
  for (long n = 1; n <= 500; ++n) {
    long l = sqrt_part(n);
    CHECK(l == sqrt_part_brute(n));
    CHECK(n % (l * l) == 0);
    CHECK(sqrt_part(n / (l * l)) == 1);  // cofactor squarefree
  }
  CHECK_THROWS_AS(sqrt_part(0), std::invalid_argument);
}

TEST_CASE("inv_mod") {
  CHECK(inv_mod(1, 5) == 1);
  CHECK(inv_mod(2, 5) == 3);
  CHECK(inv_mod(4, 15) == 4);
  for (long n = 2; n <= 60; ++n)
    for (long a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) {
        CHECK_THROWS_AS(inv_mod(a, n), std::invalid_argument);
        continue;
      }
      long d = inv_mod(a, n);
      CHECK(d >= 1);
      CHECK(d < n);
      CHECK(a * d % n == 1);
      CHECK(inv_mod(a - n, n) == d);  // negative representatives
    }
}

TEST_CASE("P2 values and properties") {
  CHECK(bernoulli_p2(Rat(0)) == Rat(1, 6));
  CHECK(bernoulli_p2(Rat(1, 2)) == Rat(-1, 12));
  CHECK(bernoulli_p2(Rat(7, 5)) == Rat(-11, 150));
  // periodicity and the distribution property
  for (long den = 1; den <= 60; ++den)
    for (long num = 0; num < den; ++num) {
      Rat x = make_rat(num, den);
      CHECK(bernoulli_p2(x) == bernoulli_p2(x + 1));
      CHECK(bernoulli_p2(x) == bernoulli_p2(x - 3));
    }
  for (long n = 1; n <= 12; ++n)
    for (long den = 1; den <= 60; ++den)
      for (long num = 0; num < den; ++num) {
        Rat x = make_rat(num, den);
        Rat lhs(0);
        for (long j = 0; j < n; ++j) lhs += bernoulli_p2(x + make_rat(j, n));
        CHECK(lhs == bernoulli_p2(Rat(n) * x) / n);
      }
}

TEST_CASE("valuation") {
  CHECK(valuation(45, 3) == 2);
  CHECK(valuation(45, 5) == 1);
  CHECK(valuation(45, 7) == 0);
  CHECK_THROWS_AS(valuation(0, 3), std::invalid_argument);
}
