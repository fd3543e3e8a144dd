#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cuspidal/rational.hpp"

namespace cuspidal {

using IVec = std::vector<Int>;
using IMat = std::vector<IVec>;  // row-major
using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

// Smith normal form U*A*V = S with U, V unimodular and S diagonal,
// S[0][0] | S[1][1] | ... All exact.
struct SmithForm {
  IMat U, S, V;
  std::vector<Int> diagonal() const;  // nonzero diagonal entries
};

SmithForm smith_normal_form(const IMat& A);

// Nonzero invariant factors d1 | d2 | ... of the integer matrix A.
std::vector<Int> invariant_factors(const IMat& A);

// Column-style Hermite basis of the lattice spanned by `cols`; returned
// columns have strictly increasing pivot rows with positive pivots.
std::vector<IVec> hnf_basis(std::vector<IVec> cols);

// Membership of x in the lattice given by an hnf_basis result.
bool in_lattice(const std::vector<IVec>& hnf, IVec x);

bool lattice_equal(const std::vector<IVec>& hnf1, const std::vector<IVec>& hnf2);

// Basis (columns) of the full-rank lattice {x in Z^n : rows[r].x == 0 (mod
// moduli[r]) for all r}. Moduli must be >= 1; rows with modulus 1 are ignored.
std::vector<IVec> solve_congruences(const IMat& rows,
                                    const std::vector<Int>& moduli,
                                    std::size_t n);

// Basis (columns) of {x in Z^n : rows . x == 0}.
std::vector<IVec> integer_kernel(const IMat& rows, std::size_t n);

std::size_t rational_rank(QMat rows);

// Basis of {x in Q^n : rows . x = 0}.
std::vector<QVec> rational_nullspace(QMat rows, std::size_t n);

// Solve square B x = b exactly; throws if B is singular.
QVec solve_square(QMat B, QVec b);

// Integer solution of (cols as matrix) y = x, if one exists.
std::optional<IVec> integer_solve(const std::vector<IVec>& cols, const IVec& x);

Int determinant(IMat A);  // Bareiss fraction-free

QMat matmul(const QMat& A, const QMat& B);

// Invariant factors (> 1) of L1/L2 for full-rank lattices L2 <= L1 in Z^n,
// given by their hnf_basis column lists.
std::vector<Int> quotient_invariants(const std::vector<IVec>& basis1,
                                     const std::vector<IVec>& basis2,
                                     std::size_t n);

}  // namespace cuspidal
