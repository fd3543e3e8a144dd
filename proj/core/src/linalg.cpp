#include "cuspidal/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <stdexcept>
#include <utility>

namespace cuspidal {

std::vector<Int> SmithForm::diagonal() const {
  std::vector<Int> d;
  std::size_t k = std::min(S.size(), S.empty() ? 0 : S[0].size());
  for (std::size_t i = 0; i < k; ++i)
    if (S[i][i] != 0) d.push_back(S[i][i]);
  return d;
}

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

struct Pivot {
  std::size_t i, j;
};

std::optional<Pivot> smallest_nonzero(const IMat& A, std::size_t t) {
  std::optional<Pivot> best;
  for (std::size_t i = t; i < A.size(); ++i)
    for (std::size_t j = t; j < A[i].size(); ++j)
      if (A[i][j] != 0 &&
          (!best || abs_int(A[i][j]) < abs_int(A[best->i][best->j])))
        best = Pivot{i, j};
  return best;
}

}  // namespace

SmithForm smith_normal_form(const IMat& Ain) {
  SmithForm sf;
  IMat& A = sf.S;
  A = Ain;
  std::size_t m = A.size(), n = m ? A[0].size() : 0;
  sf.U.assign(m, IVec(m, 0));
  sf.V.assign(n, IVec(n, 0));
  for (std::size_t i = 0; i < m; ++i) sf.U[i][i] = 1;
  for (std::size_t j = 0; j < n; ++j) sf.V[j][j] = 1;
  IMat& U = sf.U;
  IMat& V = sf.V;

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(A[i], A[j]);
    std::swap(U[i], U[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& r : A) std::swap(r[i], r[j]);
    for (auto& r : V) std::swap(r[i], r[j]);
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t k = 0; k < n; ++k) A[dst][k] += c * A[src][k];
    for (std::size_t k = 0; k < m; ++k) U[dst][k] += c * U[src][k];
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const Int& c) {
    for (auto& r : A) r[dst] += c * r[src];
    for (auto& r : V) r[dst] += c * r[src];
  };

  std::size_t t = 0;
  while (t < std::min(m, n)) {
    auto piv = smallest_nonzero(A, t);
    if (!piv) break;
    swap_rows(t, piv->i);
    swap_cols(t, piv->j);
    for (;;) {
      for (std::size_t i = t + 1; i < m; ++i)
        if (A[i][t] != 0) add_row(i, t, -(A[i][t] / A[t][t]));
      for (std::size_t j = t + 1; j < n; ++j)
        if (A[t][j] != 0) add_col(j, t, -(A[t][j] / A[t][t]));
      bool clean = true;
      for (std::size_t i = t + 1; i < m && clean; ++i)
        if (A[i][t] != 0) clean = false;
      for (std::size_t j = t + 1; j < n && clean; ++j)
        if (A[t][j] != 0) clean = false;
      if (clean) break;
      piv = smallest_nonzero(A, t);
      swap_rows(t, piv->i);
      swap_cols(t, piv->j);
    }
    // divisibility fix-up: A[t][t] must divide the remaining block
    std::optional<Pivot> bad;
    for (std::size_t i = t + 1; i < m && !bad; ++i)
      for (std::size_t j = t + 1; j < n && !bad; ++j)
        if (A[i][j] % A[t][t] != 0) bad = Pivot{i, j};
    if (bad) {
      add_row(t, bad->i, 1);
      continue;
    }
    if (A[t][t] < 0) {
      for (std::size_t k = 0; k < n; ++k) A[t][k] = -A[t][k];
      for (std::size_t k = 0; k < m; ++k) U[t][k] = -U[t][k];
    }
    ++t;
  }
  return sf;
}

std::vector<Int> invariant_factors(const IMat& A) {
  if (A.empty() || A[0].empty()) return {};
  return smith_normal_form(A).diagonal();
}

std::vector<IVec> hnf_basis(std::vector<IVec> cols) {
  std::vector<IVec> work;
  for (auto& c : cols)
    if (std::any_of(c.begin(), c.end(), [](const Int& x) { return x != 0; }))
      work.push_back(std::move(c));
  if (work.empty()) return {};
  std::size_t n = work[0].size();
  std::vector<IVec> basis;
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<IVec> nz, rest;
    for (auto& c : work)
      (c[r] != 0 ? nz : rest).push_back(std::move(c));
    if (nz.empty()) {
      work = std::move(rest);
      continue;
    }
    while (nz.size() > 1) {
      std::sort(nz.begin(), nz.end(), [&](const IVec& a, const IVec& b) {
        return abs_int(a[r]) < abs_int(b[r]);
      });
      std::vector<IVec> out;
      out.push_back(nz[0]);
      for (std::size_t k = 1; k < nz.size(); ++k) {
        Int q = nz[k][r] / nz[0][r];
        IVec c2(n);
        for (std::size_t i = 0; i < n; ++i) c2[i] = nz[k][i] - q * nz[0][i];
        if (c2[r] != 0)
          out.push_back(std::move(c2));
        else if (std::any_of(c2.begin(), c2.end(),
                             [](const Int& x) { return x != 0; }))
          rest.push_back(std::move(c2));
      }
      nz = std::move(out);
    }
    IVec p = std::move(nz[0]);
    if (p[r] < 0)
      for (auto& x : p) x = -x;
    basis.push_back(std::move(p));
    work = std::move(rest);
  }
  return basis;
}

bool in_lattice(const std::vector<IVec>& hnf, IVec x) {
  for (const auto& b : hnf) {
    std::size_t r = 0;
    while (b[r] == 0) ++r;
    if (x[r] % b[r] != 0) return false;
    Int q = x[r] / b[r];
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= q * b[i];
  }
  return std::all_of(x.begin(), x.end(), [](const Int& v) { return v == 0; });
}

bool lattice_equal(const std::vector<IVec>& h1, const std::vector<IVec>& h2) {
  for (const auto& c : h2)
    if (!in_lattice(h1, c)) return false;
  for (const auto& c : h1)
    if (!in_lattice(h2, c)) return false;
  return true;
}

std::vector<IVec> solve_congruences(const IMat& rows,
                                    const std::vector<Int>& moduli,
                                    std::size_t n) {
  Int D = 1;
  for (const auto& mo : moduli) {
    if (mo < 1) throw std::invalid_argument("modulus must be >= 1");
    D = lcm_int(D, mo);
  }
  std::vector<IVec> id;
  if (D == 1 || rows.empty()) {
    for (std::size_t j = 0; j < n; ++j) {
      IVec e(n, 0);
      e[j] = 1;
      id.push_back(std::move(e));
    }
    return id;
  }
  IMat B;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (moduli[r] == 1) continue;
    Int scale = D / moduli[r];
    IVec row(n);
    for (std::size_t j = 0; j < n; ++j) {
      Int v = (rows[r][j] * scale) % D;
      if (v < 0) v += D;
      row[j] = v;
    }
    B.push_back(std::move(row));
  }
  auto sf = smith_normal_form(B);
  std::size_t kmax = std::min(B.size(), n);
  std::vector<IVec> basis;
  for (std::size_t i = 0; i < n; ++i) {
    Int s = i < kmax ? sf.S[i][i] : Int(0);
    Int mult = s == 0 ? Int(1) : D / gcd_int(s, D);
    IVec col(n);
    for (std::size_t r = 0; r < n; ++r) col[r] = sf.V[r][i] * mult;
    basis.push_back(std::move(col));
  }
  return basis;
}

std::vector<IVec> integer_kernel(const IMat& rows, std::size_t n) {
  if (rows.empty()) {
    std::vector<IVec> id;
    for (std::size_t j = 0; j < n; ++j) {
      IVec e(n, 0);
      e[j] = 1;
      id.push_back(std::move(e));
    }
    return id;
  }
  auto sf = smith_normal_form(rows);
  std::size_t kmax = std::min(rows.size(), n);
  std::size_t rank = 0;
  for (std::size_t i = 0; i < kmax; ++i)
    if (sf.S[i][i] != 0) ++rank;
  std::vector<IVec> basis;
  for (std::size_t i = rank; i < n; ++i) {
    IVec col(n);
    for (std::size_t r = 0; r < n; ++r) col[r] = sf.V[r][i];
    basis.push_back(std::move(col));
  }
  return basis;
}

namespace {

// In-place reduced row echelon; returns pivot columns.
std::vector<std::size_t> rref(QMat& A, std::size_t n) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < A.size(); ++col) {
    std::size_t piv = rank;
    while (piv < A.size() && A[piv][col] == 0) ++piv;
    if (piv == A.size()) continue;
    std::swap(A[rank], A[piv]);
    Rat pv = A[rank][col];
    for (auto& x : A[rank]) x /= pv;
    for (std::size_t r = 0; r < A.size(); ++r) {
      if (r == rank || A[r][col] == 0) continue;
      Rat f = A[r][col];
      for (std::size_t k = 0; k < A[r].size(); ++k) A[r][k] -= f * A[rank][k];
    }
    pivots.push_back(col);
    ++rank;
  }
  return pivots;
}

}  // namespace

std::size_t rational_rank(QMat rows) {
  if (rows.empty()) return 0;
  return rref(rows, rows[0].size()).size();
}

std::vector<QVec> rational_nullspace(QMat rows, std::size_t n) {
  if (rows.empty()) rows.push_back(QVec(n, Rat(0)));
  auto pivots = rref(rows, n);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<QVec> basis;
  for (std::size_t fc = 0; fc < n; ++fc) {
    if (is_pivot[fc]) continue;
    QVec v(n, Rat(0));
    v[fc] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][fc];
    basis.push_back(std::move(v));
  }
  return basis;
}

QVec solve_square(QMat B, QVec b) {
  std::size_t n = B.size();
  for (std::size_t i = 0; i < n; ++i) B[i].push_back(b[i]);
  auto pivots = rref(B, n);
  if (pivots.size() != n) throw std::invalid_argument("singular system");
  QVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = B[i][n];
  return x;
}

std::optional<IVec> integer_solve(const std::vector<IVec>& cols, const IVec& x) {
  std::size_t n = x.size(), k = cols.size();
  IMat B(n, IVec(k));
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t r = 0; r < n; ++r) B[r][c] = cols[c][r];
  auto sf = smith_normal_form(B);
  // z = U x; y' solves S y' = z; y = V y'
  IVec z(n, 0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) z[r] += sf.U[r][c] * x[c];
  IVec yp(k, 0);
  std::size_t kmax = std::min(n, k);
  for (std::size_t i = 0; i < n; ++i) {
    Int s = i < kmax ? sf.S[i][i] : Int(0);
    if (s == 0) {
      if (z[i] != 0) return std::nullopt;
    } else {
      if (z[i] % s != 0) return std::nullopt;
      yp[i] = z[i] / s;
    }
  }
  IVec y(k, 0);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) y[r] += sf.V[r][c] * yp[c];
  return y;
}

Int determinant(IMat A) {
  std::size_t n = A.size();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (A[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && A[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(A[k], A[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) / prev;
    prev = A[k][k];
  }
  return sign > 0 ? A[n - 1][n - 1] : Int(-A[n - 1][n - 1]);
}

QMat matmul(const QMat& A, const QMat& B) {
  std::size_t m = A.size(), k = B.size(), n = k ? B[0].size() : 0;
  QMat C(m, QVec(n, Rat(0)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (A[i][t] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (B[t][j] != 0) C[i][j] += A[i][t] * B[t][j];
    }
  return C;
}

std::vector<Int> quotient_invariants(const std::vector<IVec>& basis1,
                                     const std::vector<IVec>& basis2,
                                     std::size_t n) {
  if (basis1.size() != n || basis2.size() != n)
    throw std::invalid_argument("quotient_invariants: lattices must be full rank");
  QMat B1(n, QVec(n));
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) B1[r][c] = Rat(basis1[c][r]);
  IMat X(n, IVec(n));
  for (std::size_t c = 0; c < n; ++c) {
    QVec b(n);
    for (std::size_t r = 0; r < n; ++r) b[r] = Rat(basis2[c][r]);
    QVec xs = solve_square(B1, std::move(b));
    for (std::size_t r = 0; r < n; ++r) X[r][c] = to_integer(xs[r]);
  }
  std::vector<Int> out;
  for (auto& f : invariant_factors(X))
    if (f > 1) out.push_back(f);
  return out;
}

}  // namespace cuspidal
