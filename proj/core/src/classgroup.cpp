#include "cuspidal/classgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cuspidal/linalg.hpp"

namespace cuspidal {

Int AbelianGroupStructure::order() const {
  Int o = 1;
  for (const auto& d : invariant_factors) o *= d;
  return o;
}

std::vector<Divisor> rational_divisor_lattice(long N) {
  auto orbits = galois_orbits(N);
  std::size_t g = orbits.size();
  IMat sizes(1, IVec(g));
  for (std::size_t i = 0; i < g; ++i) sizes[0][i] = (long)orbits[i].size();
  auto ker = integer_kernel(sizes, g);
  std::vector<Divisor> out;
  for (const auto& col : ker) {
    Divisor D;
    D.N = N;
    for (const auto& P : enumerate_cusps(N)) D.coeffs[P] = Rat(0);
    for (std::size_t i = 0; i < g; ++i)
      for (const auto& P : orbits[i]) D.coeffs[P] += Rat(col[i]);
    out.push_back(std::move(D));
  }
  return out;
}

namespace {

struct Workspace {
  long N;
  std::vector<Cusp> cusps;
  std::size_t n;                       // #cusps; ambient rank n-1
  std::vector<IVec> unit_div_cols;     // principal cuspidal divisors
  std::vector<IVec> rational_cols;     // rational degree-0 divisors
  std::vector<IVec> hnf_units, hnf_rat_plus_units, hnf_galois_stable;
};

// Coordinates of a degree-0 integer divisor in the basis P_i - P_0.
IVec coords(const Workspace& w, const Divisor& D) {
  IVec v(w.n - 1);
  for (std::size_t i = 1; i < w.n; ++i) v[i - 1] = to_integer(D.get(w.cusps[i]));
  return v;
}

Divisor divisor_from_coords(const Workspace& w, const IVec& x) {
  Divisor D;
  D.N = w.N;
  Int deg = 0;
  for (std::size_t i = 1; i < w.n; ++i) {
    D.coeffs[w.cusps[i]] = Rat(x[i - 1]);
    deg += x[i - 1];
  }
  D.coeffs[w.cusps[0]] = Rat(-deg);
  return D;
}

Workspace build_workspace(long N) {
  Workspace w;
  w.N = N;
  w.cusps = enumerate_cusps(N);
  w.n = w.cusps.size();
  LevelCache cache(N);
  for (const auto& basis_vec : unit_lattice_basis(N)) {
    Divisor D = divisor_of(N, basis_vec, &cache);
    if (!D.is_integral() || D.degree() != 0)
      throw std::logic_error("unit divisor not integral of degree 0");
    w.unit_div_cols.push_back(coords(w, D));
  }
  for (const auto& D : rational_divisor_lattice(N))
    w.rational_cols.push_back(coords(w, D));
  w.hnf_units = hnf_basis(w.unit_div_cols);
  if (w.hnf_units.size() != w.n - 1)
    throw std::logic_error("unit divisor lattice is not of full rank");
  auto both = w.rational_cols;
  both.insert(both.end(), w.unit_div_cols.begin(), w.unit_div_cols.end());
  w.hnf_rat_plus_units = hnf_basis(both);

  // {x : (sigma_s - 1)x in unit lattice, all s} via SNF of the unit matrix
  long L = sqrt_part(N);
  std::size_t r = w.n - 1;
  IMat A(r, IVec(w.unit_div_cols.size()));
  for (std::size_t c = 0; c < w.unit_div_cols.size(); ++c)
    for (std::size_t i = 0; i < r; ++i) A[i][c] = w.unit_div_cols[c][i];
  auto sf = smith_normal_form(A);
  std::vector<Int> dd(r);
  for (std::size_t i = 0; i < r; ++i) dd[i] = sf.S[i][i];
  IMat rows;
  std::vector<Int> mods;
  std::map<Cusp, std::size_t> pos;
  for (std::size_t i = 0; i < w.n; ++i) pos[w.cusps[i]] = i;
  for (long s = 2; s <= L; ++s) {
    if (std::gcd(s, L) != 1) continue;
    // matrix of (sigma_s - id) on the P_i - P_0 basis
    IMat diff(r, IVec(r, 0));
    for (std::size_t i = 1; i < w.n; ++i) {
      std::size_t qi = pos[galois_act(N, s, w.cusps[i])];
      std::size_t q0 = pos[galois_act(N, s, w.cusps[0])];
      if (qi != 0) diff[qi - 1][i - 1] += 1;
      if (q0 != 0) diff[q0 - 1][i - 1] -= 1;
      diff[i - 1][i - 1] -= 1;
    }
    // rows of U * diff with moduli dd
    for (std::size_t i = 0; i < r; ++i) {
      if (dd[i] <= 1) continue;
      IVec row(r, 0);
      for (std::size_t k = 0; k < r; ++k) {
        if (sf.U[i][k] == 0) continue;
        for (std::size_t j = 0; j < r; ++j) row[j] += sf.U[i][k] * diff[k][j];
      }
      rows.push_back(std::move(row));
      mods.push_back(dd[i]);
    }
  }
  w.hnf_galois_stable = hnf_basis(solve_congruences(rows, mods, r));
  return w;
}

// Structure of L1/L2 together with one lattice vector per nontrivial cyclic
// factor. With X = B1^{-1} B2 and U X V = S, the factor Z/S_ii is generated
// by the class of B1 U^{-1} e_i.
AbelianGroupStructure structure_of_quotient(const std::vector<IVec>& big,
                                            const std::vector<IVec>& small,
                                            std::size_t n,
                                            std::vector<IVec>* generators = nullptr) {
  AbelianGroupStructure g;
  if (n == 0) return g;
  QMat B1(n, QVec(n));
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) B1[r][c] = Rat(big[c][r]);
  IMat X(n, IVec(n));
  for (std::size_t c = 0; c < n; ++c) {
    QVec b(n);
    for (std::size_t r = 0; r < n; ++r) b[r] = Rat(small[c][r]);
    QVec xs = solve_square(B1, std::move(b));
    for (std::size_t r = 0; r < n; ++r) X[r][c] = to_integer(xs[r]);
  }
  auto sf = smith_normal_form(X);
  for (std::size_t i = 0; i < n; ++i) {
    if (sf.S[i][i] <= 1) continue;
    g.invariant_factors.push_back(sf.S[i][i]);
    if (!generators) continue;
    // column i of U^{-1}: solve U y = e_i, then map through B1
    QMat Uq(n, QVec(n));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) Uq[r][c] = Rat(sf.U[r][c]);
    QVec e(n, Rat(0));
    e[i] = 1;
    QVec y = solve_square(std::move(Uq), std::move(e));
    IVec gen(n, 0);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) gen[r] += big[c][r] * to_integer(y[c]);
    generators->push_back(std::move(gen));
  }
  return g;
}

std::vector<IVec> full_lattice(std::size_t n) {
  std::vector<IVec> id;
  for (std::size_t j = 0; j < n; ++j) {
    IVec e(n, 0);
    e[j] = 1;
    id.push_back(std::move(e));
  }
  return id;
}

}  // namespace

ClassGroupData compute_groups(long N) {
  if (sqrt_part(N) % 2 == 0)
    throw unsupported_error("compute_groups: requires L odd");
  if (N == 1) {  // single cusp, no units to quotient by
    ClassGroupData out;
    out.N = 1;
    out.yoo_verdict = true;
    return out;
  }
  Workspace w = build_workspace(N);
  std::size_t r = w.n - 1;
  ClassGroupData out;
  out.N = N;
  std::vector<IVec> g1, g2, g3;
  out.cuspidal = structure_of_quotient(full_lattice(r), w.hnf_units, r, &g1);
  out.rational_classes =
      structure_of_quotient(w.hnf_rat_plus_units, w.hnf_units, r, &g2);
  out.rational_points =
      structure_of_quotient(w.hnf_galois_stable, w.hnf_units, r, &g3);
  for (const auto& v : g1) out.cuspidal_generators.push_back(divisor_from_coords(w, v));
  for (const auto& v : g2) {
    // v lies in R + A; replace it by a rational representative of its class
    std::vector<IVec> gens = w.rational_cols;
    gens.insert(gens.end(), w.unit_div_cols.begin(), w.unit_div_cols.end());
    auto y = integer_solve(gens, v);
    if (!y) throw std::logic_error("generator not in R + A");
    IVec rational(v.size(), 0);
    for (std::size_t c = 0; c < w.rational_cols.size(); ++c)
      for (std::size_t r = 0; r < v.size(); ++r)
        rational[r] += (*y)[c] * w.rational_cols[c][r];
    out.rational_class_generators.push_back(divisor_from_coords(w, rational));
  }
  for (const auto& v : g3)
    out.rational_point_generators.push_back(divisor_from_coords(w, v));
  out.yoo_verdict = lattice_equal(w.hnf_rat_plus_units, w.hnf_galois_stable);
  return out;
}

YooResult verify_conjecture_yoo(long N) {
  if (sqrt_part(N) % 2 == 0)
    throw unsupported_error("verify_conjecture_yoo: requires L odd");
  if (N == 1) return YooResult{true, std::nullopt};
  Workspace w = build_workspace(N);
  YooResult res;
  // C(N) <= C_N(Q) always; check it anyway, then the reverse inclusion.
  for (const auto& c : w.hnf_rat_plus_units)
    if (!in_lattice(w.hnf_galois_stable, c))
      throw std::logic_error("rational classes not Galois-stable");
  res.verdict = true;
  for (const auto& c : w.hnf_galois_stable) {
    if (!in_lattice(w.hnf_rat_plus_units, c)) {
      res.verdict = false;
      res.witness = divisor_from_coords(w, c);
      break;
    }
  }
  return res;
}

AbelianGroupStructure rational_class_group_via_eta(long N) {
  // lattice of Ligozat-admissible eta exponents: sum r_d = 0 plus congruences
  auto ds = divisors(N);
  std::size_t k = ds.size();
  IMat eq(1, IVec(k, 1));
  auto ker = integer_kernel(eq, k);  // columns: weight-0 exponent vectors
  IMat rows;
  std::vector<Int> mods;
  {
    IVec r1(ker.size()), r2(ker.size());
    for (std::size_t j = 0; j < ker.size(); ++j) {
      Int a = 0, b = 0;
      for (std::size_t i = 0; i < k; ++i) {
        a += Int(ds[i]) * ker[j][i];
        b += Int(N / ds[i]) * ker[j][i];
      }
      r1[j] = a;
      r2[j] = b;
    }
    rows.push_back(r1);
    mods.push_back(24);
    rows.push_back(r2);
    mods.push_back(24);
  }
  for (auto [p, e] : factorize(N)) {
    IVec row(ker.size());
    for (std::size_t j = 0; j < ker.size(); ++j) {
      Int v = 0;
      for (std::size_t i = 0; i < k; ++i)
        if (ds[i] % p == 0) v += ker[j][i] * valuation(ds[i], p);
      row[j] = v;
    }
    rows.push_back(std::move(row));
    mods.push_back(2);
  }
  auto sol = solve_congruences(rows, mods, ker.size());

  // divisors of the admissible eta quotients, in reduced coordinates of the
  // rational lattice
  auto rats = rational_divisor_lattice(N);
  auto cusps = enumerate_cusps(N);
  std::size_t n = cusps.size();
  std::size_t rr = rats.size();
  QMat R(n, QVec(rr));
  for (std::size_t c = 0; c < rr; ++c)
    for (std::size_t i = 0; i < n; ++i) R[i][c] = rats[c].get(cusps[i]);

  IMat X;  // columns of eta divisors expressed in the rational basis
  for (const auto& scol : sol) {
    std::map<long, Int> r;
    for (std::size_t j = 0; j < ker.size(); ++j)
      for (std::size_t i = 0; i < k; ++i) r[ds[i]] += scol[j] * ker[j][i];
    if (!ligozat_eta_check(N, r))
      throw std::logic_error("eta lattice basis fails its own conditions");
    Divisor D = eta_quotient_divisor(N, r);
    if (!D.is_integral() || D.degree() != 0)
      throw std::logic_error("eta quotient divisor not integral");
    // solve R y = D (consistent, exact)
    QMat aug = R;
    for (std::size_t i = 0; i < n; ++i) aug[i].push_back(D.get(cusps[i]));
    // gaussian elimination, then read solution
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t col = 0; col < rr && rank < n; ++col) {
      std::size_t piv = rank;
      while (piv < n && aug[piv][col] == 0) ++piv;
      if (piv == n) continue;
      std::swap(aug[rank], aug[piv]);
      Rat pv = aug[rank][col];
      for (auto& x : aug[rank]) x /= pv;
      for (std::size_t rw = 0; rw < n; ++rw) {
        if (rw == rank || aug[rw][col] == 0) continue;
        Rat f = aug[rw][col];
        for (std::size_t cc = 0; cc <= rr; ++cc) aug[rw][cc] -= f * aug[rank][cc];
      }
      pivots.push_back(col);
      ++rank;
    }
    for (std::size_t rw = rank; rw < n; ++rw)
      if (aug[rw][rr] != 0) throw std::logic_error("eta divisor not rational");
    IVec y(rr, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      y[pivots[i]] = to_integer(aug[i][rr]);
    X.push_back(std::move(y));
  }
  // C(N) = Z^{rr} / X^T (coefficients of eta divisors in the rational basis)
  IMat Xt(rr, IVec(X.size()));
  for (std::size_t c = 0; c < X.size(); ++c)
    for (std::size_t i = 0; i < rr; ++i) Xt[i][c] = X[c][i];
  AbelianGroupStructure g;
  for (auto& f : invariant_factors(Xt))
    if (f > 1) g.invariant_factors.push_back(f);
  // finiteness: rank must be full
  if (invariant_factors(Xt).size() != rr)
    throw std::logic_error("eta divisor lattice not of full rank in Rat0");
  return g;
}

}  // namespace cuspidal
