#pragma once

#include <optional>
#include <span>
#include <vector>

#include "peirce/ring.hpp"

namespace peirce {

enum class Side { left, right };

/// An immutable subset of one ring, held as a sorted member list plus a
/// membership mask. Structural flags (subgroup, ideal, ...) are verified
/// properties, computed on first use and cached.
class Subset {
 public:
  static Subset empty(const Ring& parent);
  static Subset full(const Ring& parent);
  static Subset of(const Ring& parent, std::vector<Elem> members);
  static Subset single(const Ring& parent, Elem x);

  const Ring& parent() const { return *parent_; }
  const std::vector<Elem>& members() const { return members_; }
  std::uint64_t count() const { return members_.size(); }
  bool contains(Elem x) const { return mask_[x]; }
  bool is_zero() const;

  Subset intersect(const Subset& other) const;
  bool is_subset_of(const Subset& other) const;
  bool operator==(const Subset& other) const { return members_ == other.members_; }

  bool closed_under_addition() const;  // additive subgroup containing 0
  bool closed_under_multiplication() const;
  bool is_left_ideal() const;
  bool is_right_ideal() const;
  bool is_ideal() const { return is_left_ideal() && is_right_ideal(); }
  bool contains_one() const { return mask_[parent_->one()]; }

  /// Additive generators of the subgroup spanned by the members (greedy).
  /// Only meaningful when closed_under_addition() holds.
  const std::vector<Elem>& additive_generators() const;

 private:
  explicit Subset(const Ring& parent) : parent_(&parent), mask_(parent.size(), false) {}

  const Ring* parent_;
  std::vector<Elem> members_;
  std::vector<bool> mask_;
  mutable std::optional<bool> subgroup_, mul_closed_, left_ideal_, right_ideal_;
  mutable std::vector<Elem> addgens_;
  mutable bool addgens_ready_ = false;
};

/// Incrementally grown additive subgroup. absorb(x) extends the subgroup by
/// one generator in time proportional to the number of new elements, which
/// keeps principal-ideal and closure computations near-linear.
struct SubgroupBuilder {
  explicit SubgroupBuilder(const Ring& ring);
  bool absorb(Elem x);
  bool contains(Elem x) const { return mask[x]; }
  Subset to_subset() const;

  const Ring* r;
  std::vector<bool> mask;
  std::vector<Elem> members;
  std::vector<Elem> basis;
};

/// Subgroup of (R, +) generated by the given elements.
Subset additive_closure(const Ring& r, std::span<const Elem> gens);

/// Smallest subset containing gens and 1, closed under +, - and *.
Subset subring_generated(const Ring& r, std::span<const Elem> gens);

/// Smallest two-sided (resp. one-sided) ideal containing gens.
Subset ideal_generated(const Ring& r, std::span<const Elem> gens);
Subset one_sided_ideal_generated(const Ring& r, std::span<const Elem> gens, Side side);

/// {a in A : B a = 0} (right) or {a in A : a B = 0} (left), inside A's ring.
Subset annihilator(const Subset& a, std::span<const Elem> b, Side side);
Subset annihilator_in_ring(const Ring& r, std::span<const Elem> b, Side side);

/// {c : cx = xc for all x}. Contains 1; closed under ring operations.
Subset center_subset(const Ring& r);

/// All e with e*e = e, in enumeration order. Always contains 0 and 1.
std::vector<Elem> enumerate_idempotents(const Ring& r);

/// Orthogonality/completeness verification for idempotent lists.
bool is_complete_orthogonal(const Ring& r, std::span<const Elem> es, std::string* why = nullptr);

}  // namespace peirce
