#pragma once

#include <array>
#include <optional>

#include "peirce/subset.hpp"

namespace peirce {

/// Witness pair (x, y) exhibiting a nonzero product in a quantified identity.
struct PairWitness {
  Elem x, y;
};

/// Classification flags for one idempotent. In a unital ring
///   inner triviality  means  e R (1-e) R e  = 0,
///   outer triviality  means  (1-e) R e R (1-e) = 0,
/// and e is Peirce trivial when both hold. All quantified expressions here
/// are multilinear in the quantified variables, so evaluating them on
/// additive generators decides them exactly; witnesses are generator pairs.
struct IdempotentClass {
  Elem e = 0;
  bool central = false;
  bool left_semicentral = false;   // Re = eRe
  bool right_semicentral = false;  // eR = eRe
  bool inner_pt = false;
  bool outer_pt = false;
  bool peirce_trivial = false;
  std::optional<PairWitness> inner_witness;  // e x (1-e) y e != 0
  std::optional<PairWitness> outer_witness;  // (1-e) x e y (1-e) != 0
};

bool inner_peirce_trivial(const Ring& r, Elem e, PairWitness* witness = nullptr);
bool outer_peirce_trivial(const Ring& r, Elem e, PairWitness* witness = nullptr);
bool is_peirce_trivial(const Ring& r, Elem e);

/// Identity-based tests for rings without unity, used for ideals viewed as
/// rings: quantification runs over the given carrier only.
bool inner_peirce_trivial_nonunital(const Ring& ambient, const Subset& carrier, Elem e,
                                    PairWitness* witness = nullptr);
bool outer_peirce_trivial_nonunital(const Ring& ambient, const Subset& carrier, Elem e,
                                    PairWitness* witness = nullptr);

/// All six flags; rejects non-idempotent input. With unital_context = false
/// the inner/outer flags use the identity-based tests over the whole ring.
IdempotentClass classify_idempotent(const Ring& r, Elem e, bool unital_context = true);

struct ClassificationReport {
  const Ring* ring = nullptr;
  std::vector<IdempotentClass> classes;  // one per idempotent, enumeration order
  std::vector<Elem> central, left_semicentral, right_semicentral, inner_pt, outer_pt,
      peirce_trivial;

  const IdempotentClass* find(Elem e) const;
};

ClassificationReport classification_report(const Ring& r);

/// The seven equivalent descriptions of inner triviality, evaluated
/// independently: (1) the defining identity, (2) eR(1-e) is a right ideal,
/// (3) (1-e)Re is a left ideal, (4) the identity quantified over idempotent
/// pairs, (5) x -> exe is multiplicative, (6) eRtRe = 0 whenever ete = 0,
/// (7) ReR annihilates (1-e)Re on the left.
std::array<bool, 7> inner_trivial_conditions(const Ring& r, Elem e,
                                             const std::vector<Elem>& idempotents);

/// Four equivalent descriptions of outer triviality: the defining identity,
/// eR(1-e) a left ideal, (1-e)Re a right ideal, the idempotent-quantified
/// identity.
std::array<bool, 4> outer_trivial_conditions(const Ring& r, Elem e,
                                             const std::vector<Elem>& idempotents);

/// Four equivalent descriptions of Peirce triviality: inner and outer
/// together, eR(1-e) an ideal, (1-e)Re an ideal, e and 1-e both inner.
std::array<bool, 4> peirce_trivial_conditions(const Ring& r, Elem e);

/// Per-index diagnostics for a complete orthogonal set {e_i}: inner
/// triviality of e_i is equivalent to e_i R e_j R e_i = 0 for all j != i;
/// outer triviality of e_j to e_i R e_j R e_k = 0 for all i != j, k != j;
/// and the whole set is outer trivial iff it is Peirce trivial.
struct OrthogonalSetDiagnostics {
  std::vector<bool> inner_by_products;   // per index
  std::vector<bool> outer_by_products;   // per index
  std::vector<bool> inner_direct, outer_direct;
  bool all_outer = false, all_peirce_trivial = false;
  bool consistent = false;  // product criteria match the direct tests
};

OrthogonalSetDiagnostics orthogonal_set_diagnostics(const Ring& r, std::span<const Elem> es);

}  // namespace peirce
