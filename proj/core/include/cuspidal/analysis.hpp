#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cuspidal/psi.hpp"

namespace cuspidal {

// Support sets over the strata. A-sets live on S(d)_iota and filter by the
// valuation of h at p_tau (tau = 3 - iota); scrA / B sets live on S(d)_0.
std::vector<std::pair<long, long>> support_A(long N, long d, int iota, long a,
                                             bool plus = false);
std::vector<std::pair<long, long>> support_scrA(long N, long d, int iota,
                                                long a, bool plus = false);
std::vector<std::pair<long, long>> support_B(long N, long d, int iota, long x,
                                             bool minus = false);

// z(m) = ell - l1 - l2 and the windows J^iota = (z, z + l_iota].
long z_of(long N, long m);
std::pair<long, long> J_interval(long N, long m, int iota);
// <h>_iota: the element of J^iota congruent to h mod l_iota.
long bracket(long N, long m, int iota, long h);
// K^iota(h) = {h' in I_m : h' == h (mod l_iota)}.
std::vector<long> K_set(long N, long m, int iota, long h);

// Dispatcher over the named support-set kinds: "A", "A+", "scrA", "scrA+",
// "B", "B-" (params: iota and a/x), "J" and "K" (params: m, iota [, h]).
// Rejects unknown kinds.
std::vector<std::pair<long, long>> support_set(long N, long d,
                                               const std::string& kind,
                                               const std::vector<long>& params);

// {f supported on A_iota(a) : Psi f = 0} = {0}, decided by exact rank.
bool check_vanishing_kernel(long N, long d, int iota, long a);

enum class PartialVanishing { phi1, phi_star };

// The solution space of the stated assumptions is contained in the kernel of
// the concluded functionals, for every m in D_iota(x).
bool check_partial_vanishing(long N, long d, PartialVanishing which, long x_or_y,
                            long a_or_b);

// Exact check of the closed-form block identities for Psi_m against direct
// operator application, on `trials` random rational f (plus f = 0 and a
// basis vector).
bool verify_block_formulas(long N, long d, int trials,
                              std::uint64_t seed = 0x5eed5u);

// Exhaustive enumeration of both elementary lemmas over all admissible data.
bool check_elementary_lemmas(long N);

struct ConjectureACertificate {
  bool verdict = false;
  std::size_t rows = 0, cols = 0, rank = 0;
  std::vector<Int> factors;
  std::vector<std::pair<long, std::uint64_t>> block_hashes;  // (s, fnv1a)
};

// Stacks Psi o T_s over all s in (Z/L)^*, restricted to the support columns
// {(m,h) : 1 <= h mod ell(m) < phi(ell(m))}; true iff the (Q/Z)-kernel is
// trivial: full column rank and every invariant factor 1. Optionally also
// imposes the scaled cusp-order rows (divisor-integrality hypothesis).
ConjectureACertificate verify_conjecture_A(long N,
                                           bool with_divisor_rows = false);

}  // namespace cuspidal
