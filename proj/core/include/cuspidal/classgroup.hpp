#pragma once

#include <optional>
#include <vector>

#include "cuspidal/criterion.hpp"
#include "cuspidal/units.hpp"

namespace cuspidal {

// Finite abelian group as invariant factors d1 | d2 | ..., all >= 2;
// the empty list is the trivial group.
struct AbelianGroupStructure {
  std::vector<Int> invariant_factors;
  Int order() const;
  friend bool operator==(const AbelianGroupStructure&,
                         const AbelianGroupStructure&) = default;
};

// Basis of {D : deg D = 0, D constant on Galois orbits}, as integer divisors
// built from orbit sums.
std::vector<Divisor> rational_divisor_lattice(long N);

struct ClassGroupData {
  long N = 1;
  AbelianGroupStructure cuspidal;          // C_N
  AbelianGroupStructure rational_classes;  // C(N)
  AbelianGroupStructure rational_points;   // C_N(Q)
  // degree-0 divisors whose classes generate the cyclic factors, matched
  // one-to-one with the invariant factors above
  std::vector<Divisor> cuspidal_generators;
  std::vector<Divisor> rational_class_generators;
  std::vector<Divisor> rational_point_generators;
  bool yoo_verdict = false;  // C(N) == C_N(Q) inside C_N
};

// All three groups from the unit-divisor lattice; requires L odd.
ClassGroupData compute_groups(long N);

struct YooResult {
  bool verdict = false;
  // a degree-0 divisor whose class is Galois-stable but not rational+principal
  std::optional<Divisor> witness;
};

YooResult verify_conjecture_yoo(long N);

// Dual-path oracle: C(N) computed purely from the classical eta-quotient
// lattice (Ligozat conditions), bypassing F_{m,h} orders entirely.
AbelianGroupStructure rational_class_group_via_eta(long N);

}  // namespace cuspidal
