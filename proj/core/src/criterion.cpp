#include "cuspidal/criterion.hpp"

#include <algorithm>
#include <numeric>

namespace cuspidal {

long psi_i(long N, long i, long m) {
  if (sqrt_part(N) % 2 == 0)
    throw unsupported_error("psi_i: requires L odd");
  if (std::gcd(((i % N) + N) % N, N) != 1)
    throw std::invalid_argument("psi_i: i must be coprime to N");
  LevelData lv = level_data(N, m);
  if (lv.ell <= 1) throw std::invalid_argument("psi_i: requires ell(m) > 1");
  long scale = lv.L / lv.ell;
  Int s = 0;
  for (long alpha = 1; alpha < lv.mpp; ++alpha) {
    if (std::gcd(alpha, lv.mpp) != 1) continue;
    long delta = inv_mod(alpha, lv.mpp);
    // floor(alpha*i/m'') with flooring semantics for any sign of i
    Int num = Int(alpha) * i;
    Int den(lv.mpp), q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    s += Int(delta) * q * scale;
  }
  Int r = s % lv.L;
  if (r < 0) r += lv.L;
  return to_long(r);
}

namespace {

bool is_odd_prime_power(long mpp, long p) {
  auto f = factorize(mpp);
  return f.size() == 1 && f[0].first == p;
}

}  // namespace

CriterionReport check_criterion(long N, const ExponentVector& a) {
  long L = sqrt_part(N);
  if (L % 2 == 0)
    throw unsupported_error("check_criterion: requires L odd");
  if (a.N != N) throw std::invalid_argument("check_criterion: level mismatch");
  if (!a.integer_valued())
    throw std::invalid_argument("check_criterion: exponents must be integers");

  CriterionReport rep;
  rep.cond3_applicable = (N % 2 == 0);

  Rat oi(0), oz(0), oh(0);
  for (const auto& [k, v] : a.entries) {
    oi += v * order_special(N, k, SpecialCusp::infinity);
    oz += v * order_special(N, k, SpecialCusp::zero);
    if (rep.cond3_applicable) oh += v * order_special(N, k, SpecialCusp::half_N0);
  }
  rep.order_infinity = oi;
  rep.order_zero = oz;
  rep.order_half = oh;
  rep.cond1 = is_integer(oi);
  rep.cond2 = is_integer(oz);
  rep.cond3 = !rep.cond3_applicable || is_integer(oh);

  // (4) mod L: for all i in [1, N] coprime to N
  rep.cond4 = true;
  if (L > 1) {
    // precompute per-m weighted h-sums
    std::map<long, Int> hsum;
    for (const auto& [k, v] : a.entries) {
      if (level_data(N, k.m).ell <= 1) continue;
      if (k.h >= 1) hsum[k.m] += Int(k.h) * to_integer(v);
    }
    for (long i = 1; i <= N; ++i) {
      if (std::gcd(i, N) != 1) continue;
      Int total = 0;
      for (long m : divisors(N)) {
        if (m == N || level_data(N, m).ell <= 1) continue;
        auto it = hsum.find(m);
        if (it == hsum.end() || it->second == 0) continue;
        total += Int(psi_i(N, i, m)) * it->second;
      }
      Int res = total % L;
      if (res < 0) res += L;
      rep.mod_L_residues.emplace_back(i, to_long(res));
      if (res != 0) {
        rep.cond4 = false;
        if (!rep.failing_i) rep.failing_i = i;
      }
    }
  }

  // (5) mod 2 per odd prime p | N
  rep.cond5 = true;
  for (auto [p, e] : factorize(N)) {
    if (p == 2) continue;
    Int s = 0;
    for (const auto& [k, v] : a.entries)
      if (is_odd_prime_power(level_data(N, k.m).mpp, p)) s += to_integer(v);
    long s2 = to_long(Int(((s % 2) + 2) % 2));
    rep.mod2_sums.emplace_back(p, s2);
    if (s2 != 0) {
      rep.cond5 = false;
      if (!rep.failing_p) rep.failing_p = p;
    }
  }

  rep.verdict = rep.cond1 && rep.cond2 && rep.cond3 && rep.cond4 && rep.cond5;
  return rep;
}

bool ligozat_eta_check(long N, const std::map<long, Int>& r) {
  for (const auto& [d, rd] : r)
    if (d < 1 || N % d != 0)
      throw std::invalid_argument("ligozat_eta_check: keys must divide N");
  Int s0 = 0, s1 = 0, s2 = 0;
  for (const auto& [d, rd] : r) {
    s0 += rd;
    s1 += Int(d) * rd;
    s2 += Int(N / d) * rd;
  }
  if (s0 != 0 || s1 % 24 != 0 || s2 % 24 != 0) return false;
  // prod d^{r_d} must be a rational square: even valuation at every prime
  std::map<long, Int> val;
  for (const auto& [d, rd] : r)
    for (auto [p, e] : factorize(d)) val[p] += rd * e;
  return std::all_of(val.begin(), val.end(),
                     [](const auto& kv) { return kv.second % 2 == 0; });
}

CriterionConstraints criterion_constraints(long N) {
  long L = sqrt_part(N);
  if (L % 2 == 0)
    throw unsupported_error("criterion_constraints: requires L odd");
  CriterionConstraints cc;
  cc.index = index_sets(N).S_star;
  std::size_t n = cc.index.size();

  auto add_order_row = [&](SpecialCusp which) {
    QVec q(n);
    Int den = 1;
    for (std::size_t j = 0; j < n; ++j) {
      q[j] = order_special(N, cc.index[j], which);
      den = lcm_int(den, q[j].get_den());
    }
    if (den == 1) return;
    IVec row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = to_integer(q[j] * Rat(den));
    cc.rows.push_back(std::move(row));
    cc.moduli.push_back(den);
  };
  add_order_row(SpecialCusp::infinity);
  add_order_row(SpecialCusp::zero);
  if (N % 2 == 0) add_order_row(SpecialCusp::half_N0);

  if (L > 1) {
    for (long i = 1; i <= N; ++i) {
      if (std::gcd(i, N) != 1) continue;
      IVec row(n);
      for (std::size_t j = 0; j < n; ++j) {
        const FIndex& k = cc.index[j];
        row[j] = level_data(N, k.m).ell > 1 ? Int(psi_i(N, i, k.m)) * k.h % L
                                            : Int(0);
      }
      cc.rows.push_back(std::move(row));
      cc.moduli.push_back(L);
    }
  }
  for (auto [p, e] : factorize(N)) {
    if (p == 2) continue;
    IVec row(n);
    for (std::size_t j = 0; j < n; ++j)
      row[j] = is_odd_prime_power(level_data(N, cc.index[j].m).mpp, p) ? 1 : 0;
    cc.rows.push_back(std::move(row));
    cc.moduli.push_back(2);
  }
  return cc;
}

std::vector<ExponentVector> unit_lattice_basis(long N) {
  auto cc = criterion_constraints(N);
  auto cols = solve_congruences(cc.rows, cc.moduli, cc.index.size());
  std::vector<ExponentVector> out;
  for (const auto& col : cols) {
    ExponentVector v;
    v.N = N;
    for (std::size_t i = 0; i < cc.index.size(); ++i)
      if (col[i] != 0) v.entries[cc.index[i]] = Rat(col[i]);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace cuspidal
