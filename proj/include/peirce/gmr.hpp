#pragma once

#include <map>

#include "peirce/subquotient.hpp"
#include "peirce/theta.hpp"

namespace peirce {

/// An n-by-n generalized (formal) matrix ring: diagonal rings R_i, bimodules
/// M_ij, and pairings theta_ijk satisfying the associativity relation
/// (m_ij m_jk) m_kl = m_ij (m_jk m_kl). Addition is entrywise and
/// multiplication is row-by-column through the pairings. Elements are
/// mixed-radix grids of entry encodings, row-major, position (0,0) least
/// significant. The diagonal matrix units E_ii form a complete orthogonal
/// set of idempotents.
///
/// Pairings with a repeated index are forced: theta_iii is ring
/// multiplication and theta_iij / theta_ijj are the module actions. Only
/// theta_iji (i != j) and theta_ijk with i, j, k distinct are free data.
class GmrRing : public Ring {
 public:
  GmrRing(std::vector<RingPtr> diagonal,
          std::map<std::pair<int, int>, BimodulePtr> bimodules,
          std::map<std::tuple<int, int, int>, ThetaPtr> thetas, std::string label);

  int blocks() const { return n_; }
  const Ring& diagonal_ring(int i) const { return *diag_[i]; }
  RingPtr diagonal_ring_ptr(int i) const { return diag_[i]; }
  const Bimodule& bimodule(int i, int j) const { return *offdiag_[i * n_ + j]; }
  BimodulePtr bimodule_ptr(int i, int j) const { return offdiag_[i * n_ + j]; }
  /// The free pairing for (i,j,k); null for action/multiplication slots.
  ThetaPtr user_theta(int i, int j, int k) const { return theta_[(i * n_ + j) * n_ + k]; }

  std::uint64_t entry_size(int i, int j) const;
  Elem entry_zero(int i, int j) const;
  Elem entry_add(int i, int j, Elem a, Elem b) const;
  Elem entry_neg(int i, int j, Elem a) const;
  const std::vector<Elem>& entry_gens(int i, int j) const;
  std::string entry_describe(int i, int j, Elem a) const;

  /// theta_ijk dispatch: a sits in entry (i,j), b in (j,k); the product sits
  /// in entry (i,k).
  Elem pair_entries(int i, int j, int k, Elem a, Elem b) const;

  Elem entry_of(Elem x, int i, int j) const;
  Elem from_entries(const std::vector<Elem>& grid) const;
  Elem single_entry(int i, int j, Elem m) const;
  Elem matrix_unit(int i) const { return single_entry(i, i, diag_[i]->one()); }
  std::vector<Elem> matrix_units() const;

  Elem add(Elem a, Elem b) const override;
  Elem neg(Elem a) const override;
  Elem mul(Elem a, Elem b) const override;
  std::string describe(Elem a) const override;
  std::string name() const override { return label_; }

 protected:
  std::vector<Elem> compute_additive_generators() const override;

 private:
  int n_;
  std::vector<RingPtr> diag_;
  std::vector<BimodulePtr> offdiag_;
  std::vector<ThetaPtr> theta_;
  std::vector<std::uint64_t> stride_;
  std::string label_;
};

using GmrPtr = std::shared_ptr<const GmrRing>;

struct GmrComponents {
  std::vector<RingPtr> diagonal;
  std::map<std::pair<int, int>, BimodulePtr> bimodules;
  std::map<std::tuple<int, int, int>, ThetaPtr> thetas;
};

struct GmrBuildOptions {
  bool validate = true;             // associativity relation, balance, orthogonal units
  bool validate_components = true;  // ring axioms and bimodule laws per entry
  std::string label;
};

/// Assembles and validates a generalized matrix ring. Validation failures
/// name the offending law, the index quadruple, and the witness elements.
GmrPtr build_gmr(GmrComponents parts, const Config& cfg = default_config(),
                 GmrBuildOptions options = {});

/// Validation entry point used by build_gmr and by bar(); checks the
/// associativity relation on all index quadruples plus pairing biadditivity.
void validate_gmr(const GmrRing& g, const Config& cfg);

/// One grid entry of an ambient construction: a subquotient sub/mod of the
/// ambient ring. Diagonal entries must be unital subrings (mod = 0).
struct AmbientEntry {
  Subset sub;
  Subset mod;

  static AmbientEntry full(const Ring& a);
  static AmbientEntry zero(const Ring& a);
  static AmbientEntry ideal(const Ring& a, std::span<const Elem> gens);
  static AmbientEntry subring(const Ring& a, std::span<const Elem> gens);
  static AmbientEntry quotient(const Ring& a, std::span<const Elem> gens);
  static AmbientEntry sub_mod(Subset sub, Subset mod);
};

/// Builds the generalized matrix ring whose entries are subquotients of one
/// ambient ring with all pairings induced by ambient multiplication.
/// Containment failures (entry products leaving the target entry) are
/// reported with a witness.
GmrPtr make_ambient_gmr(RingPtr ambient, std::vector<std::vector<AmbientEntry>> grid,
                        const Config& cfg = default_config(), std::string label = "");

/// n-by-n upper or lower triangular matrix ring over a base ring.
GmrPtr make_triangular(RingPtr base, int n, bool upper,
                       const Config& cfg = default_config());

/// Full n-by-n matrix ring over a base ring.
GmrPtr make_full_matrix(RingPtr base, int n, const Config& cfg = default_config());

}  // namespace peirce
