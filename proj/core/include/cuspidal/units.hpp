#pragma once

#include <map>
#include <utility>
#include <vector>

#include "cuspidal/cusps.hpp"
#include "cuspidal/numtheory.hpp"

namespace cuspidal {

// Derived quantities for a divisor m of N, m != N:
//   m' = N/m, ell = sqrt_part(m'), m'' = m'/ell, N' = N/ell, L = sqrt_part(N).
struct LevelData {
  long N, m, mprime, ell, mpp, Nprime, L;
};

LevelData level_data(long N, long m);

// Index of F_{m,h}; h stored canonically in [0, ell(m)).
struct FIndex {
  long m = 1;
  long h = 0;
  auto operator<=>(const FIndex&) const = default;
};

FIndex make_index(long N, long m, long h);

// The four index families: S, S_red, S_new use h in [1, ell(m)];
// S_star uses h in [0, ell(m)).
struct IndexSets {
  std::vector<std::pair<long, long>> S, S_red, S_new;
  std::vector<FIndex> S_star;
};

IndexSets index_sets(long N);

// Exact-rational-valued function on the index set; absent key = 0.
struct ExponentVector {
  long N = 1;
  std::map<FIndex, Rat> entries;

  void set(long m, long h, Rat v);
  void add(long m, long h, const Rat& v);
  Rat get(long m, long h) const;
  bool integer_valued() const;
  ExponentVector& operator+=(const ExponentVector& o);
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
};

// Exact-rational-valued cuspidal divisor; keys are canonical cusps.
struct Divisor {
  long N = 1;
  std::map<Cusp, Rat> coeffs;

  Rat degree() const;
  bool is_integral() const;
  Rat get(const Cusp& P) const;
  Divisor& operator+=(const Divisor& o);
  Divisor& operator-=(const Divisor& o);
  friend bool operator==(const Divisor&, const Divisor&) = default;
};

// Order of F_{m,h} at the cusp (a : c):
//   ell(m) (N',c)^2 / (4 (c^2,N)) * sum_{alpha in (Z/m'')^*}
//     P2(alpha a'/m'' + delta h c'/ell(m)),
// with a' = N' a/(N',c), c' = c/(N',c), delta = alpha^{-1} mod m''. The sum
// runs over the full unit group, so the half-system representative choice
// in the product defining F_{m,h} never enters.
Rat order_at_cusp(long N, const FIndex& idx, const Cusp& cusp);

enum class SpecialCusp { infinity, zero, half_N0 };

// Closed forms: at infinity (m/24) prod_{p | m''} (1-p); at zero
// (m''/(24 ell)) sum_{k | m''} (mu(k)/k) (ell, kh)^2; at (1:N0) for N = 2 N0
// (m/(24 (m,2))) prod_{p | m'', p != 2} (1-p).
Rat order_special(long N, const FIndex& idx, SpecialCusp which);

// Order of eta(d tau) on X_0(N) at (a : c), classical normalization
// N gcd(c,d)^2 / (24 gcd(c, N/c) c d). Calibrated against
// div(prod_{m in D(d)} F_{m,0}) = div(eta_d) - div(eta_N).
Rat eta_order_at_cusp(long N, long d, const Cusp& cusp);

// Per-level cache of the cusp list and order vectors. Not thread-safe;
// use one instance per thread.
class LevelCache {
 public:
  explicit LevelCache(long N);
  long N() const { return N_; }
  const std::vector<Cusp>& cusps() const { return cusps_; }
  const std::vector<Rat>& orders(const FIndex& idx);

 private:
  long N_;
  std::vector<Cusp> cusps_;
  std::map<FIndex, std::vector<Rat>> orders_;
};

Divisor divisor_of(long N, const ExponentVector& f, LevelCache* cache = nullptr);

// Divisor of prod_d eta(d tau)^{r_d}.
Divisor eta_quotient_divisor(long N, const std::map<long, Int>& r);

// (translate_s f)(m, h) = f(m, s h mod ell(m)); requires gcd(s, L) = 1.
ExponentVector translate_s(long N, long s, const ExponentVector& f);

// Permute a divisor by sigma_s: (result)(P) = D(galois_act(s, P)).
Divisor galois_permute(long s, const Divisor& D);

// Fixed by the absolute Galois group, i.e. constant on Galois orbits.
bool is_rational(const Divisor& D);

struct RelationCheck {
  bool ok = false;
  long eps = 0;
  Divisor lhs, rhs;
};

// prod_{j=0}^{p-1} F_{m, h + j ell(m)/p} vs F_{m p, p^eps h},
// eps = 1 + v_p(ell(mp)) - v_p(ell(m)). Divisor-level equality.
RelationCheck verify_relation(long N, long m, long h, long p,
                              LevelCache* cache = nullptr);

}  // namespace cuspidal
