#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "cuspidal/linalg.hpp"
#include "cuspidal/units.hpp"

namespace cuspidal {

// N = M p1^{r1} p2^{r2}, M squarefree coprime to p1 p2, p1 < p2, r1 >= 2,
// r2 = 0 (L a prime power; p2 = 0 then) or r2 >= 2.
struct PartitionData {
  long N, M, p1, r1, p2, r2;
  long t1, t2;  // floor(r_iota / 2)

  // D(d) = {d p1^{k1} p2^{k2} : 0 <= k_i <= r_i, (k1,k2) != (r1,r2)}, d | M.
  std::vector<long> divisor_set(long d) const;
  // D(d)_i: i = iota in {1,2} means v_{p_iota}(m) = r_iota; i = 0 the rest.
  // For r2 = 0 everything lies in D(d)_2.
  std::vector<long> stratum(long d, int i) const;
  int stratum_of(long m) const;  // which D(d)_i contains m
};

// Requires sqrt_part(N) to have at most two prime divisors and N nonsquarefree.
PartitionData partition(long N);

// Intervals and index maps attached to m with ell(m) > 1.
struct IntervalData {
  long N, m, ell;
  long l1 = 0, l2 = 0;    // ell / p_iota when p_iota | ell, else 0
  long dfrak = 0;         // ell/(p1 p2) when p1 p2 | ell, else 0
  int eps1 = -1, eps2 = -1;
  long red_max;           // I^red = [1, red_max]
  long i1_lo = 0, i1_hi = 0, i2_lo = 0, i2_hi = 0;  // I^iota inclusive ranges

  bool has(int iota) const { return iota == 1 ? l1 > 0 : l2 > 0; }
  long rho(int iota, long h) const;   // element of I^iota congruent mod l_iota
  int chi(int iota, long h) const;    // 1 iff rho(iota, h) in I^red
  std::pair<long, long> block(long nu) const;  // I_m(nu), requires dfrak > 0
};

IntervalData interval_data(long N, long m);

// Relation exponent 1 + v_p(ell(m p)) - v_p(ell(m)), in {0, 1}.
int epsilon_iota(long N, long m, long p);

enum class Ordering { lex, colex };

// Linear operator on Q^{S(d)_i}; rows/columns indexed by (m, h) with
// h in [1, ell(m)], deterministic order (m ascending, then h).
struct LinearOperator {
  long N = 1;
  std::vector<std::pair<long, long>> index;
  QMat mat;

  std::size_t dim() const { return index.size(); }
  std::size_t pos(long m, long h) const;
  QVec apply(const QVec& v) const;
  // Gather f on the stratum, apply, scatter into a copy of f.
  ExponentVector apply(const ExponentVector& f) const;
  LinearOperator compose(const LinearOperator& inner) const;  // this ∘ inner
  // Sparse export: (row, col, value) over nonzero entries.
  std::vector<std::tuple<std::size_t, std::size_t, Rat>> triplets() const;
  friend bool operator==(const LinearOperator&, const LinearOperator&) = default;
};

LinearOperator identity_operator(long N, const std::vector<long>& ms);

// Phi_m^iota on the stratum containing m; identity when p_iota does not
// divide ell(m).
LinearOperator phi_op(long N, long m, int iota);

// Phi_m^* (Phi^2 with the chi factor dropped); requires p2 | ell(m).
LinearOperator phi_star_op(long N, long m);

// Psi_m = (Phi^1 Phi^2)^{p1 - 1} Phi^1.
LinearOperator psi_m_op(long N, long m);

// Ordering of D(d)_0 used for the full composition; lex varies the
// p2-exponent fastest, colex the p1-exponent.
std::vector<long> stratum_order(long N, long d, int i, Ordering ord);

// Full Psi on S(d)_i. For i in {1,2} the chain order is forced; for i = 0
// the ordering must preserve divisibility (validated for custom orders).
LinearOperator psi_full_op(long N, long d, int i, Ordering ord = Ordering::colex);
LinearOperator psi_full_op(long N, long d, int i, const std::vector<long>& custom_order);

// Partial compositions Upsilon(m) (everything strictly before m) and
// Psi(m) = Psi_m ∘ Upsilon(m).
LinearOperator upsilon_op(long N, long d, int i, long m, Ordering ord);
LinearOperator psi_partial_op(long N, long d, int i, long m, Ordering ord);

// Psi applied to an exponent vector across every stratum of every d | M;
// indices outside S' are untouched.
ExponentVector apply_psi(long N, const ExponentVector& f,
                         Ordering ord = Ordering::colex);

}  // namespace cuspidal
