#pragma once

#include "peirce/subset.hpp"

namespace peirce {

struct StructureInvariants {
  Subset units;
  Subset jacobson;
  Subset prime_radical;
  std::uint32_t nilpotence_index = 0;  // max over nilpotent v of min{k : v^k = 0}
  bool is_prime = false;
  bool is_semiprime = false;
};

/// Units of any ring, no size tier. In a finite ring a one-sided inverse is
/// two-sided; both sides are still verified.
Subset unit_set(const Ring& r);

bool is_nilpotent_elem(const Ring& r, Elem x);

/// Full invariant battery; requires size <= cfg.structure_tier. The Jacobson
/// radical comes from the unit criterion and the prime radical from the
/// intersection of prime ideals; for finite rings the two agree, and the
/// implementation asserts that agreement as a cross-check of the independent
/// computations.
StructureInvariants structure_invariants(const Ring& r, const Config& cfg = default_config());

/// All two-sided ideals, produced by saturating sums of principal ideals.
/// prime_only keeps the ideals I with aRb <= I implying a in I or b in I;
/// for finite rings these are exactly the maximal proper ideals, and each
/// reported prime is double-checked against the definitional quantifier and
/// against simplicity of R/I in the computed lattice.
std::vector<Subset> enumerate_ideals(const Ring& r, bool prime_only = false,
                                     const Config& cfg = default_config());

/// Definitional primeness/semiprimeness through the quantifier, early-exit.
bool is_prime_ring(const Ring& r, const Config& cfg = default_config());
bool is_semiprime_ring(const Ring& r, const Config& cfg = default_config());

}  // namespace peirce
