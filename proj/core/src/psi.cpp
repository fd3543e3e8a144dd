#include "cuspidal/psi.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cuspidal {

namespace {

long pow_long(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

std::vector<long> PartitionData::divisor_set(long d) const {
  if (d < 1 || M % d != 0)
    throw std::invalid_argument("divisor_set: d must divide M");
  std::vector<long> out;
  for (int k1 = 0; k1 <= r1; ++k1)
    for (int k2 = 0; k2 <= (p2 ? r2 : 0); ++k2) {
      if (k1 == r1 && k2 == r2) continue;
      out.push_back(d * pow_long(p1, k1) * (p2 ? pow_long(p2, k2) : 1));
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long> PartitionData::stratum(long d, int i) const {
  std::vector<long> out;
  for (long m : divisor_set(d))
    if (stratum_of(m) == i) out.push_back(m);
  return out;
}

int PartitionData::stratum_of(long m) const {
  if (valuation(m, p1) == r1) return 1;
  if (p2 == 0 || valuation(m, p2) == r2) return 2;
  return 0;
}

PartitionData partition(long N) {
  long L = sqrt_part(N);
  if (L <= 1)
    throw std::invalid_argument("partition: N must be nonsquarefree (r1 >= 2)");
  auto lf = factorize(L);
  if (lf.size() > 2)
    throw unsupported_error("partition: sqrt_part(N) has three or more prime divisors");
  PartitionData pd;
  pd.N = N;
  pd.p1 = lf[0].first;
  pd.r1 = valuation(N, pd.p1);
  if (lf.size() == 2) {
    pd.p2 = lf[1].first;
    pd.r2 = valuation(N, pd.p2);
  } else {
    pd.p2 = 0;
    pd.r2 = 0;
  }
  pd.M = N / pow_long(pd.p1, pd.r1) / (pd.p2 ? pow_long(pd.p2, pd.r2) : 1);
  pd.t1 = pd.r1 / 2;
  pd.t2 = pd.r2 / 2;
  return pd;
}

long IntervalData::rho(int iota, long h) const {
  long li = iota == 1 ? l1 : l2;
  long lo = iota == 1 ? i1_lo : i2_lo;
  if (li == 0) throw std::invalid_argument("rho: p_iota does not divide ell");
  long off = (h - lo) % li;
  if (off < 0) off += li;
  return lo + off;
}

int IntervalData::chi(int iota, long h) const {
  return rho(iota, h) <= red_max ? 1 : 0;
}

std::pair<long, long> IntervalData::block(long nu) const {
  if (dfrak == 0) throw std::invalid_argument("block: ell not divisible by p1 p2");
  return {dfrak * (nu - 1) + 1, dfrak * nu};
}

IntervalData interval_data(long N, long m) {
  PartitionData pd = partition(N);
  IntervalData iv;
  iv.N = N;
  iv.m = m;
  iv.ell = level_data(N, m).ell;
  if (iv.ell <= 1)
    throw std::invalid_argument("interval_data: requires ell(m) > 1");
  iv.red_max = iv.ell - euler_phi(iv.ell);
  bool div1 = iv.ell % pd.p1 == 0;
  bool div2 = pd.p2 != 0 && iv.ell % pd.p2 == 0;
  if (div1) iv.l1 = iv.ell / pd.p1;
  if (div2) iv.l2 = iv.ell / pd.p2;
  if (div1 && div2) {
    iv.dfrak = iv.ell / (pd.p1 * pd.p2);
    iv.i1_lo = 1;
    iv.i1_hi = iv.l1;
    iv.i2_lo = iv.l1 + 1;
    iv.i2_hi = iv.l1 + iv.l2;
  } else if (div1) {
    iv.i1_lo = 1;
    iv.i1_hi = iv.l1;
  } else if (div2) {
    iv.i2_lo = 1;
    iv.i2_hi = iv.l2;
  }
  if (div1) iv.eps1 = epsilon_iota(N, m, pd.p1);
  if (div2) iv.eps2 = epsilon_iota(N, m, pd.p2);
  return iv;
}

int epsilon_iota(long N, long m, long p) {
  return 1 + valuation(level_data(N, m * p).ell, p) -
         valuation(level_data(N, m).ell, p);
}

std::size_t LinearOperator::pos(long m, long h) const {
  auto it = std::lower_bound(index.begin(), index.end(), std::make_pair(m, h));
  if (it == index.end() || *it != std::make_pair(m, h))
    throw std::invalid_argument("index (m,h) not in stratum");
  return static_cast<std::size_t>(it - index.begin());
}

QVec LinearOperator::apply(const QVec& v) const {
  if (v.size() != dim()) throw std::invalid_argument("dimension mismatch");
  QVec out(dim(), Rat(0));
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      if (mat[i][j] != 0 && v[j] != 0) out[i] += mat[i][j] * v[j];
  return out;
}

ExponentVector LinearOperator::apply(const ExponentVector& f) const {
  QVec v(dim());
  for (std::size_t j = 0; j < dim(); ++j)
    v[j] = f.get(index[j].first, index[j].second);
  QVec w = apply(v);
  ExponentVector out = f;
  for (std::size_t i = 0; i < dim(); ++i)
    out.set(index[i].first, index[i].second, w[i]);
  return out;
}

LinearOperator LinearOperator::compose(const LinearOperator& inner) const {
  if (index != inner.index)
    throw std::invalid_argument("compose: operators live on different strata");
  LinearOperator out;
  out.N = N;
  out.index = index;
  out.mat = matmul(mat, inner.mat);
  return out;
}

std::vector<std::tuple<std::size_t, std::size_t, Rat>> LinearOperator::triplets()
    const {
  std::vector<std::tuple<std::size_t, std::size_t, Rat>> t;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      if (mat[i][j] != 0) t.emplace_back(i, j, mat[i][j]);
  return t;
}

LinearOperator identity_operator(long N, const std::vector<long>& ms) {
  LinearOperator op;
  op.N = N;
  std::vector<long> sorted = ms;
  std::sort(sorted.begin(), sorted.end());
  for (long m : sorted) {
    long l = level_data(N, m).ell;
    for (long h = 1; h <= l; ++h) op.index.emplace_back(m, h);
  }
  op.mat.assign(op.dim(), QVec(op.dim(), Rat(0)));
  for (std::size_t i = 0; i < op.dim(); ++i) op.mat[i][i] = 1;
  return op;
}

namespace {

LinearOperator phi_like_op(long N, long mfrak, int iota, bool force_chi) {
  PartitionData pd = partition(N);
  long d = std::gcd(mfrak, pd.M);
  LinearOperator op =
      identity_operator(N, pd.stratum(d, pd.stratum_of(mfrak)));
  long piota = iota == 1 ? pd.p1 : pd.p2;
  long l = level_data(N, mfrak).ell;
  if (piota == 0 || l % piota != 0) {
    if (force_chi)
      throw std::invalid_argument("phi_star_op: p2 must divide ell(m)");
    return op;
  }
  IntervalData iv = interval_data(N, mfrak);
  int eps = iota == 1 ? iv.eps1 : iv.eps2;
  long pe = pow_long(piota, eps);
  for (std::size_t i = 0; i < op.dim(); ++i) {
    auto [m, h] = op.index[i];
    if (m == mfrak) {
      long r = iv.rho(iota, h);
      if (force_chi || iv.chi(iota, h))
        op.mat[i][op.pos(mfrak, r)] -= 1;
    } else if (m == mfrak * piota && h % pe == 0) {
      long h0 = h / pe;
      long r = iv.rho(iota, h0);
      if (force_chi || iv.chi(iota, h0))
        op.mat[i][op.pos(mfrak, r)] += 1;
    }
  }
  return op;
}

}  // namespace

LinearOperator phi_op(long N, long m, int iota) {
  if (iota != 1 && iota != 2)
    throw std::invalid_argument("phi_op: iota must be 1 or 2");
  return phi_like_op(N, m, iota, false);
}

LinearOperator phi_star_op(long N, long m) { return phi_like_op(N, m, 2, true); }

LinearOperator psi_m_op(long N, long m) {
  PartitionData pd = partition(N);
  long d = std::gcd(m, pd.M);
  auto ms = pd.stratum(d, pd.stratum_of(m));
  if (level_data(N, m).ell == 1) return identity_operator(N, ms);
  LinearOperator f1 = phi_op(N, m, 1);
  LinearOperator f2 = phi_op(N, m, 2);
  LinearOperator r = f1;
  for (long k = 1; k < pd.p1; ++k) r = f1.compose(f2.compose(r));
  return r;
}

std::vector<long> stratum_order(long N, long d, int i, Ordering ord) {
  PartitionData pd = partition(N);
  auto ms = pd.stratum(d, i);
  if (i == 0) {
    auto key = [&](long m) {
      long a = valuation(m, pd.p1), b = pd.p2 ? valuation(m, pd.p2) : 0;
      return ord == Ordering::lex ? std::make_pair(a, b) : std::make_pair(b, a);
    };
    std::sort(ms.begin(), ms.end(),
              [&](long x, long y) { return key(x) < key(y); });
  } else {
    long ptau = i == 1 ? pd.p2 : pd.p1;
    std::sort(ms.begin(), ms.end(), [&](long x, long y) {
      return (ptau ? valuation(x, ptau) : 0) < (ptau ? valuation(y, ptau) : 0);
    });
  }
  return ms;
}

namespace {

LinearOperator compose_chain(long N, long d, int i,
                             const std::vector<long>& order_list) {
  PartitionData pd = partition(N);
  auto ms = pd.stratum(d, i);
  LinearOperator op = identity_operator(N, ms);
  for (long m : order_list) op = psi_m_op(N, m).compose(op);
  return op;
}

void validate_custom(long N, long d, int i, const std::vector<long>& custom) {
  PartitionData pd = partition(N);
  auto ms = pd.stratum(d, i);
  auto sorted = custom;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != ms)
    throw std::invalid_argument("custom order is not a permutation of the stratum");
  for (std::size_t a = 0; a < custom.size(); ++a)
    for (std::size_t b = a + 1; b < custom.size(); ++b)
      if (custom[b] != custom[a] && custom[a] % custom[b] == 0)
        throw std::invalid_argument("custom order does not preserve divisibility");
}

}  // namespace

LinearOperator psi_full_op(long N, long d, int i, Ordering ord) {
  return compose_chain(N, d, i, stratum_order(N, d, i, ord));
}

LinearOperator psi_full_op(long N, long d, int i,
                           const std::vector<long>& custom_order) {
  validate_custom(N, d, i, custom_order);
  return compose_chain(N, d, i, custom_order);
}

LinearOperator upsilon_op(long N, long d, int i, long m, Ordering ord) {
  auto order_list = stratum_order(N, d, i, ord);
  std::vector<long> prefix;
  for (long x : order_list) {
    if (x == m) break;
    prefix.push_back(x);
  }
  return compose_chain(N, d, i, prefix);
}

LinearOperator psi_partial_op(long N, long d, int i, long m, Ordering ord) {
  return psi_m_op(N, m).compose(upsilon_op(N, d, i, m, ord));
}

ExponentVector apply_psi(long N, const ExponentVector& f, Ordering ord) {
  PartitionData pd = partition(N);
  ExponentVector out = f;
  for (long d : divisors(pd.M))
    for (int i : {0, 1, 2}) {
      if (pd.stratum(d, i).empty()) continue;
      out = psi_full_op(N, d, i, ord).apply(out);
    }
  return out;
}

}  // namespace cuspidal
