#include "cuspidal/units.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace cuspidal {

LevelData level_data(long N, long m) {
  if (N < 1 || m < 1 || N % m != 0)
    throw std::invalid_argument("level_data: m must divide N");
  if (m == N) throw std::invalid_argument("level_data: m = N is excluded");
  LevelData d;
  d.N = N;
  d.m = m;
  d.mprime = N / m;
  d.ell = sqrt_part(d.mprime);
  d.mpp = d.mprime / d.ell;
  d.Nprime = N / d.ell;
  d.L = sqrt_part(N);
  return d;
}

FIndex make_index(long N, long m, long h) {
  long l = level_data(N, m).ell;
  long hr = h % l;
  if (hr < 0) hr += l;
  return FIndex{m, hr};
}

IndexSets index_sets(long N) {
  if (N < 2) throw std::invalid_argument("index_sets: N must be >= 2");
  IndexSets out;
  for (long m : divisors(N)) {
    if (m == N) continue;
    long l = level_data(N, m).ell;
    long red = l - euler_phi(l);
    for (long h = 1; h <= l; ++h) {
      out.S.emplace_back(m, h);
      (h <= red ? out.S_red : out.S_new).emplace_back(m, h);
    }
    for (long h = 0; h < l; ++h) out.S_star.push_back(FIndex{m, h});
  }
  return out;
}

void ExponentVector::set(long m, long h, Rat v) {
  FIndex k = make_index(N, m, h);
  if (v == 0)
    entries.erase(k);
  else
    entries[k] = std::move(v);
}

void ExponentVector::add(long m, long h, const Rat& v) {
  FIndex k = make_index(N, m, h);
  auto it = entries.find(k);
  Rat nv = (it == entries.end() ? Rat(0) : it->second) + v;
  if (nv == 0) {
    if (it != entries.end()) entries.erase(it);
  } else {
    entries[k] = std::move(nv);
  }
}

Rat ExponentVector::get(long m, long h) const {
  auto it = entries.find(make_index(N, m, h));
  return it == entries.end() ? Rat(0) : it->second;
}

bool ExponentVector::integer_valued() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const auto& kv) { return is_integer(kv.second); });
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& o) {
  if (N != o.N) throw std::invalid_argument("level mismatch");
  for (const auto& [k, v] : o.entries) add(k.m, k.h, v);
  return *this;
}

Rat Divisor::degree() const {
  Rat s(0);
  for (const auto& [P, v] : coeffs) s += v;
  return s;
}

bool Divisor::is_integral() const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](const auto& kv) { return is_integer(kv.second); });
}

Rat Divisor::get(const Cusp& P) const {
  auto it = coeffs.find(P);
  return it == coeffs.end() ? Rat(0) : it->second;
}

Divisor& Divisor::operator+=(const Divisor& o) {
  if (N != o.N) throw std::invalid_argument("level mismatch");
  for (const auto& [P, v] : o.coeffs) coeffs[P] += v;
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
  if (N != o.N) throw std::invalid_argument("level mismatch");
  for (const auto& [P, v] : o.coeffs) coeffs[P] -= v;
  return *this;
}

Rat order_at_cusp(long N, const FIndex& idx, const Cusp& cusp) {
  LevelData lv = level_data(N, idx.m);
  if (N % cusp.c != 0)
    throw std::invalid_argument("order_at_cusp: cusp does not belong to N");
  long g = std::gcd(lv.Nprime, cusp.c);
  long ap = lv.Nprime / g * cusp.a;
  long cp = cusp.c / g;
  Rat pref = make_rat(Int(lv.ell) * g * g, Int(4) * std::gcd(cusp.c * cusp.c, N));
  Rat sum(0);
  for (long alpha = 1; alpha <= lv.mpp; ++alpha) {
    if (std::gcd(alpha, lv.mpp) != 1) continue;
    long delta = lv.mpp >= 2 ? inv_mod(alpha, lv.mpp) : 1;
    Rat arg = make_rat(Int(alpha) * ap, lv.mpp) +
              make_rat(Int(delta) * idx.h * cp, lv.ell);
    sum += bernoulli_p2(arg);
  }
  return pref * sum;
}

Rat order_special(long N, const FIndex& idx, SpecialCusp which) {
  LevelData lv = level_data(N, idx.m);
  switch (which) {
    case SpecialCusp::infinity: {
      Rat r = make_rat(lv.m, 24);
      for (auto [p, e] : factorize(lv.mpp)) r *= Rat(1 - p);
      return r;
    }
    case SpecialCusp::zero: {
      Rat s(0);
      for (long k : divisors(lv.mpp)) {
        long g = idx.h == 0 ? lv.ell : std::gcd(lv.ell, k * idx.h);
        s += make_rat(Int(moebius(k)) * g * g, k);
      }
      return make_rat(lv.mpp, Int(24) * lv.ell) * s;
    }
    case SpecialCusp::half_N0: {
      if (N % 2 != 0 || (N / 2) % 2 == 0)
        throw unsupported_error("order_special: requires N = 2*N0, N0 odd");
      Rat r = make_rat(lv.m, Int(24) * std::gcd<long>(lv.m, 2));
      for (auto [p, e] : factorize(lv.mpp))
        if (p != 2) r *= Rat(1 - p);
      return r;
    }
  }
  throw std::logic_error("unreachable");
}

Rat eta_order_at_cusp(long N, long d, const Cusp& cusp) {
  if (d < 1 || N % d != 0)
    throw std::invalid_argument("eta_order_at_cusp: d must divide N");
  long g = std::gcd(cusp.c, d);
  return make_rat(Int(N) * g * g,
                  Int(24) * std::gcd(cusp.c, N / cusp.c) * cusp.c * d);
}

LevelCache::LevelCache(long N) : N_(N), cusps_(enumerate_cusps(N)) {}

const std::vector<Rat>& LevelCache::orders(const FIndex& idx) {
  auto it = orders_.find(idx);
  if (it != orders_.end()) return it->second;
  std::vector<Rat> v;
  v.reserve(cusps_.size());
  for (const auto& P : cusps_) v.push_back(order_at_cusp(N_, idx, P));
  return orders_.emplace(idx, std::move(v)).first->second;
}

Divisor divisor_of(long N, const ExponentVector& f, LevelCache* cache) {
  if (f.N != N) throw std::invalid_argument("divisor_of: level mismatch");
  std::optional<LevelCache> local;
  if (!cache || cache->N() != N) {
    local.emplace(N);
    cache = &*local;
  }
  LevelCache& lc = *cache;
  Divisor D;
  D.N = N;
  for (const auto& P : lc.cusps()) D.coeffs[P] = Rat(0);
  for (const auto& [k, coef] : f.entries) {
    if (coef == 0) continue;
    const auto& ords = lc.orders(k);
    std::size_t i = 0;
    for (const auto& P : lc.cusps()) D.coeffs[P] += coef * ords[i++];
  }
  return D;
}

Divisor eta_quotient_divisor(long N, const std::map<long, Int>& r) {
  Divisor D;
  D.N = N;
  for (const auto& P : enumerate_cusps(N)) {
    Rat v(0);
    for (const auto& [d, rd] : r)
      if (rd != 0) v += Rat(rd) * eta_order_at_cusp(N, d, P);
    D.coeffs[P] = v;
  }
  return D;
}

ExponentVector translate_s(long N, long s, const ExponentVector& f) {
  long L = sqrt_part(N);
  if (L > 1) {
    long sr = s % L;
    if (sr < 0) sr += L;
    if (std::gcd(sr, L) != 1)
      throw std::invalid_argument("translate_s: s not coprime to L");
  }
  ExponentVector out;
  out.N = N;
  for (const auto& [k, v] : f.entries) {
    long l = level_data(N, k.m).ell;
    // (out)(m, h) = f(m, s h): nonzero where s h = k.h, i.e. h = s^{-1} k.h
    long h = l == 1 ? 0 : (inv_mod(s, l) * k.h) % l;
    out.add(k.m, h, v);
  }
  return out;
}

Divisor galois_permute(long s, const Divisor& D) {
  Divisor out;
  out.N = D.N;
  for (const auto& [P, v] : D.coeffs) out.coeffs[P] = D.get(galois_act(D.N, s, P));
  return out;
}

bool is_rational(const Divisor& D) {
  for (const auto& orbit : galois_orbits(D.N)) {
    Rat v = D.get(orbit[0]);
    for (const auto& P : orbit)
      if (D.get(P) != v) return false;
  }
  return true;
}

RelationCheck verify_relation(long N, long m, long h, long p,
                              LevelCache* cache) {
  LevelData lv = level_data(N, m);
  if (lv.ell % p != 0 || p < 2)
    throw std::invalid_argument("verify_relation: p must divide ell(m)");
  long x = lv.ell / p;
  RelationCheck rc;
  rc.eps = 1 + valuation(level_data(N, m * p).ell, p) - valuation(lv.ell, p);
  ExponentVector lhs, rhs;
  lhs.N = rhs.N = N;
  for (long j = 0; j < p; ++j) lhs.add(m, h + x * j, Rat(1));
  long pe = 1;
  for (long i = 0; i < rc.eps; ++i) pe *= p;
  rhs.add(m * p, pe * h, Rat(1));
  rc.lhs = divisor_of(N, lhs, cache);
  rc.rhs = divisor_of(N, rhs, cache);
  rc.ok = rc.lhs == rc.rhs;
  return rc;
}

}  // namespace cuspidal
