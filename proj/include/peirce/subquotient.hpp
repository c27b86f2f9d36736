#pragma once

#include <unordered_map>

#include "peirce/subset.hpp"

namespace peirce {

/// A ring presented as S/I where S is a multiplicatively closed subgroup of a
/// parent ring and I an ideal of S. One class covers the three constructions
/// this library needs:
///   - subrings          (I = 0, unity = parent unity or another idempotent)
///   - corner rings eRe  (I = 0, unity = e)
///   - quotient rings    (S = parent, I the modulus)
/// Elements are indexed by coset representatives, each the minimal encoding
/// of its coset, listed in increasing order.
class SubquotientRing : public Ring {
 public:
  SubquotientRing(RingPtr parent, Subset sub, Subset mod, Elem unity, std::string label);

  Elem add(Elem a, Elem b) const override;
  Elem neg(Elem a) const override;
  Elem mul(Elem a, Elem b) const override;
  std::string describe(Elem a) const override;
  std::string name() const override { return label_; }

  const Ring& base() const { return *parent_; }
  RingPtr base_ptr() const { return parent_; }
  const Subset& sub() const { return sub_; }
  const Subset& mod() const { return mod_; }
  const std::vector<Elem>& representatives() const { return reps_; }

  /// Surjective ring homomorphism from member encodings of the parent.
  Elem project(Elem parent_elem) const;
  /// Representative of a coset, an element of the parent.
  Elem lift(Elem a) const { return reps_[a]; }

 protected:
  std::vector<Elem> compute_additive_generators() const override;

 private:
  RingPtr parent_;
  Subset sub_, mod_;
  std::vector<Elem> reps_;
  std::vector<Elem> table_;                  // dense projection, small parents
  std::unordered_map<Elem, Elem> sparse_;    // fallback
  bool dense_;
  std::string label_;
};

using SubquotientPtr = std::shared_ptr<const SubquotientRing>;

SubquotientPtr make_subring(RingPtr parent, Subset sub, std::string label = "");
/// Quotient by a verified two-sided ideal; rejects non-ideals.
SubquotientPtr make_quotient(RingPtr parent, Subset ideal, std::string label = "");
/// Corner ring eRe with unity e.
SubquotientPtr make_corner(RingPtr parent, Elem e, std::string label = "");

}  // namespace peirce
