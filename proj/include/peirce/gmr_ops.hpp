#pragma once

#include <functional>
#include <optional>

#include "peirce/gmr.hpp"

namespace peirce {

struct TnWitness {
  int i = 0, j = 0;  // theta_iji is nonzero, 1-based in rendered form
  Elem m = 0, m2 = 0;
  std::string rendered;
};

/// True iff every pairing theta_iji (i != j) is the zero pairing. Decided on
/// additive generator pairs (exact); the verdict is cross-checked against the
/// diagonal-product criterion (the diagonal of a product depending only on
/// the diagonals of the factors) on seeded sample pairs.
bool is_tn(const GmrRing& g, TnWitness* witness = nullptr,
           const Config& cfg = default_config());

/// Same components with every theta_iji replaced by zero. Associativity is
/// re-validated: for two blocks zeroing is always sound, for three or more it
/// can break mixed quadruples, in which case this throws with the witness.
GmrPtr bar_of(GmrPtr g, const Config& cfg = default_config());

/// Smallest k <= cap with S^k = 0 (subgroup powers through generator
/// products), or 0 when S^cap != 0.
std::uint32_t subgroup_power_nilpotency(const Ring& r, const Subset& s, std::uint32_t cap);

struct DiagonalParts {
  Subset d;        // diagonal elements, a unital subring of G
  Subset dminus;   // elements with zero diagonal
  std::shared_ptr<const Ring> d_ring;        // product of the diagonal rings
  std::function<Elem(Elem)> embed;           // d_ring -> G
  std::function<Elem(Elem)> project_diag;    // G -> d_ring (kills off-diagonal)
  bool dminus_left_ideal = false, dminus_right_ideal = false;
  std::uint32_t dminus_nilpotency = 0;       // smallest k with (D-)^k = 0, 0 if none <= blocks
  bool quotient_iso_verified = false;        // G/(D-) isomorphic to the diagonal product
};

/// Diagonal subring and off-diagonal complement. When G lies in the class
/// with zero theta_iji, the complement is verified to be an ideal whose n-th
/// power vanishes and whose quotient is the diagonal product.
DiagonalParts diagonal_parts(GmrPtr g, const Config& cfg = default_config());

/// A standalone generalized matrix ring living inside a host: per-entry
/// carriers are restrictions of the host's, embed maps view elements to host
/// elements.
struct GmrSubringView {
  GmrPtr ring;
  GmrPtr host;
  std::function<Elem(Elem)> embed;

  Subset as_subset() const;
};

struct AnnihilatingSubrings {
  GmrSubringView la;  // below-diagonal entries cut to two-sided annihilator intersections
  GmrSubringView ua;  // above-diagonal entries cut likewise
};

/// The lower and upper annihilating subrings: maximal subrings with zero
/// theta_iji. Both are validated rings, subrings of the host and of bar(host).
AnnihilatingSubrings annihilating_subrings(GmrPtr g, const Config& cfg = default_config());

struct TriangularParts {
  GmrPtr ut, lt;
  std::function<std::pair<Elem, Elem>(Elem)> psi;  // x -> (upper+diag, lower+diag)
  std::function<Elem(Elem)> embed_ut, embed_lt;    // sections of the projections
  // psi is always additive, injective, and surjective onto each coordinate.
  // Multiplicativity holds for two blocks, but for three or more it can fail
  // even with all theta_iji zero: a term x_ij y_jk with j outside [i, k]
  // feeds an upper target from a dropped entry. The flag records the verdict
  // (generator pairs plus samples); the witness renders a failing pair.
  bool multiplicative = false;
  std::optional<std::string> multiplicativity_witness;
};

/// The coordinatewise projection onto the upper and lower triangular parts;
/// requires zero theta_iji. Injectivity and the surjectivity of both
/// coordinate projections are verified; multiplicativity is tested and
/// reported, not assumed.
TriangularParts triangular_parts(GmrPtr g, const Config& cfg = default_config());

/// Center through the diagonal characterization: diagonal entries, each
/// central in its ring, commuting with every bimodule element through the
/// actions. Asserted equal to the generic center scan on moderate sizes.
Subset gmr_center(const GmrRing& g, const Config& cfg = default_config());

/// Units of a ring with zero theta_iji: diagonal unit plus any off-diagonal
/// part. Asserted equal to brute-force enumeration at the structure tier.
Subset unit_group_via_diagonal(GmrPtr g, const Config& cfg = default_config());

struct PeirceDecomposition {
  RingPtr source;
  std::vector<Elem> idempotents;
  GmrPtr gmr;
  std::function<Elem(Elem)> to_gmr;    // x -> [e_i x e_j], a verified ring isomorphism
  std::function<Elem(Elem)> from_gmr;
  bool in_tn = false;
  std::vector<bool> inner_pt;          // per idempotent; agrees with in_tn by Theorem-2.2 logic
};

/// Arranges a ring along a complete orthogonal set of idempotents into a
/// generalized matrix ring of corner rings and corner bimodules, with the
/// isomorphism x -> [e_i x e_j] verified in both directions.
PeirceDecomposition peirce_decompose(RingPtr r, std::vector<Elem> es,
                                     const Config& cfg = default_config());

/// Regroups a complete orthogonal set by the given partition (f_k being the
/// group sums) and decomposes along the grouped idempotents.
PeirceDecomposition block_partition(RingPtr r, std::span<const Elem> es,
                                    const std::vector<std::vector<int>>& groups,
                                    const Config& cfg = default_config());

}  // namespace peirce
