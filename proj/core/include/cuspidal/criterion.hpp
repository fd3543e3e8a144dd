#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cuspidal/linalg.hpp"
#include "cuspidal/units.hpp"

namespace cuspidal {

// psi_i(m) = sum over alpha in (Z/m'')^* of delta * floor(alpha i / m'') *
// L/ell(m), as a residue mod L. Requires gcd(i, N) = 1 and ell(m) > 1.
long psi_i(long N, long i, long m);

struct CriterionReport {
  bool cond1 = false, cond2 = false, cond3 = false;
  bool cond4 = false, cond5 = false;
  bool verdict = false;
  bool cond3_applicable = false;            // N even
  Rat order_infinity, order_zero, order_half;
  std::optional<long> failing_i;            // first witness breaking (4)
  std::optional<long> failing_p;            // first witness breaking (5)
  std::vector<std::pair<long, long>> mod_L_residues;  // (i, residue mod L)
  std::vector<std::pair<long, long>> mod2_sums;       // (p, sum mod 2)
};

// The five modular-unit conditions for g = prod F_{m,h}^{a(m,h)}, a on S*.
// Requires L odd (throws unsupported_error otherwise) and integer entries.
CriterionReport check_criterion(long N, const ExponentVector& a);

// Classical Ligozat conditions for prod eta(d tau)^{r_d} to be a modular
// function on Gamma_0(N): sum r_d = 0, sum d r_d == 0 (mod 24),
// sum (N/d) r_d == 0 (mod 24), prod d^{r_d} a rational square.
bool ligozat_eta_check(long N, const std::map<long, Int>& r);

// The congruence system over Z^{S*} cutting out the criterion lattice.
struct CriterionConstraints {
  std::vector<FIndex> index;  // column order (= index_sets(N).S_star)
  IMat rows;
  std::vector<Int> moduli;
};

CriterionConstraints criterion_constraints(long N);

// Basis of {a in Z^{S*} : check_criterion(a).verdict}; full rank |S*|.
std::vector<ExponentVector> unit_lattice_basis(long N);

}  // namespace cuspidal
