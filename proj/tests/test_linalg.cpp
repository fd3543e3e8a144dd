#include <doctest.h>

#include <random>

#include "cuspidal/linalg.hpp"

using namespace cuspidal;

namespace {

// gcd of all k x k minors: independent oracle for the invariant-factor
// products d1*...*dk of small matrices
Int minors_gcd(const IMat& A, std::size_t k) {
  std::size_t m = A.size(), n = A[0].size();
  std::vector<std::size_t> rs(k), cs(k);
  Int g = 0;
  auto det = [&](const std::vector<std::size_t>& r,
                 const std::vector<std::size_t>& c) {
    IMat sub(k, IVec(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub[i][j] = A[r[i]][c[j]];
    return determinant(sub);
  };
  std::vector<std::size_t> ridx, cidx;
  // enumerate index subsets
  std::vector<std::vector<std::size_t>> rsets, csets;
  std::vector<std::size_t> cur;
  auto gen = [&](auto&& self, std::size_t lo, std::size_t max,
                 std::vector<std::vector<std::size_t>>& out) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = lo; i < max; ++i) {
      cur.push_back(i);
      self(self, i + 1, max, out);
      cur.pop_back();
    }
  };
  gen(gen, 0, m, rsets);
  gen(gen, 0, n, csets);
  for (const auto& r : rsets)
    for (const auto& c : csets) g = gcd_int(g, det(r, c));
  return g < 0 ? Int(-g) : g;
}

IMat random_mat(std::mt19937_64& rng, std::size_t m, std::size_t n, long lo,
                long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  IMat A(m, IVec(n));
  for (auto& row : A)
    for (auto& x : row) x = d(rng);
  return A;
}

}  // namespace

TEST_CASE("smith normal form: transform identity, unimodularity, divisibility") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t m = 1 + trial % 4, n = 1 + (trial / 4) % 4;
    IMat A = random_mat(rng, m, n, -8, 8);
    auto sf = smith_normal_form(A);
    // U A V = S
    IMat UA(m, IVec(n, 0));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t j = 0; j < n; ++j) UA[i][j] += sf.U[i][k] * A[k][j];
    IMat UAV(m, IVec(n, 0));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) UAV[i][j] += UA[i][k] * sf.V[k][j];
    CHECK(UAV == sf.S);
    Int du = determinant(sf.U), dv = determinant(sf.V);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    // diagonal, nonnegative, divisibility chain
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) CHECK(sf.S[i][j] == 0);
    auto d = sf.diagonal();
    for (std::size_t i = 0; i + 1 < d.size(); ++i) CHECK(d[i + 1] % d[i] == 0);
  }
}

TEST_CASE("invariant factors vs minor-gcd oracle (3x3)") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    IMat A = random_mat(rng, 3, 3, -6, 6);
    auto f = invariant_factors(A);
    Int prod = 1;
    for (std::size_t k = 1; k <= f.size(); ++k) {
      prod *= f[k - 1];
      CHECK(prod == minors_gcd(A, k));
    }
    if (f.size() < 3) CHECK(minors_gcd(A, f.size() + 1) == 0);
  }
}

TEST_CASE("hnf basis and membership") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 3 + trial % 3;
    std::vector<IVec> cols;
    for (std::size_t c = 0; c < n + 2; ++c) {
      IVec v(n);
      std::uniform_int_distribution<long> d(-5, 5);
      for (auto& x : v) x = d(rng);
      cols.push_back(v);
    }
    auto H = hnf_basis(cols);
    // every generator is in the lattice; random combinations are too
    for (const auto& c : cols) CHECK(in_lattice(H, c));
    std::uniform_int_distribution<long> coef(-3, 3);
    IVec comb(n, 0);
    for (const auto& c : cols) {
      long t = coef(rng);
      for (std::size_t i = 0; i < n; ++i) comb[i] += t * c[i];
    }
    CHECK(in_lattice(H, comb));
  }
  // a strict sublattice misses points
  std::vector<IVec> two = {{Int(2), Int(0)}, {Int(0), Int(2)}};
  auto H = hnf_basis(two);
  CHECK(!in_lattice(H, {Int(1), Int(0)}));
  CHECK(in_lattice(H, {Int(4), Int(-2)}));
}

TEST_CASE("congruence solver") {
  // {x in Z^2 : x1 + x2 == 0 mod 4, x1 == 0 mod 2}
  IMat rows = {{Int(1), Int(1)}, {Int(1), Int(0)}};
  std::vector<Int> mods = {Int(4), Int(2)};
  auto cols = solve_congruences(rows, mods, 2);
  auto H = hnf_basis(cols);
  std::size_t count = 0;
  for (long x = -8; x <= 8; ++x)
    for (long y = -8; y <= 8; ++y) {
      bool sat = ((x + y) % 4 == 0) && (x % 2 == 0);
      bool inl = in_lattice(H, {Int(x), Int(y)});
      CHECK(sat == inl);
      count += sat;
    }
  CHECK(count > 0);
}

TEST_CASE("integer kernel") {
  IMat rows = {{Int(2), Int(3), Int(5)}};
  auto ker = integer_kernel(rows, 3);
  CHECK(ker.size() == 2);
  for (const auto& v : ker)
    CHECK(Int(2) * v[0] + Int(3) * v[1] + Int(5) * v[2] == 0);
  // primitive solutions reachable: (1, 1, -1)
  auto H = hnf_basis(ker);
  CHECK(in_lattice(H, {Int(1), Int(1), Int(-1)}));
}

TEST_CASE("rational rank and nullspace") {
  QMat rows = {{Rat(1), Rat(2), Rat(3)}, {Rat(2), Rat(4), Rat(6)}};
  CHECK(rational_rank(rows) == 1);
  auto ns = rational_nullspace(rows, 3);
  CHECK(ns.size() == 2);
  for (const auto& v : ns) CHECK(v[0] + 2 * v[1] + 3 * v[2] == 0);
}

TEST_CASE("quotient invariants") {
  // Z^2 / <(2,0),(0,3)> = Z/2 x Z/3 = Z/6
  std::vector<IVec> big = {{Int(1), Int(0)}, {Int(0), Int(1)}};
  std::vector<IVec> small = {{Int(2), Int(0)}, {Int(0), Int(3)}};
  auto f = quotient_invariants(big, small, 2);
  CHECK(f == std::vector<Int>{Int(6)});
}
