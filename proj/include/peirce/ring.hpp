#pragma once

#include <memory>
#include <string>
#include <vector>

#include "peirce/common.hpp"

namespace peirce {

/// A finite unital associative ring with exact arithmetic on canonical
/// encodings. Elements are the integers 0..size()-1 in a fixed enumeration
/// order; all arithmetic is computed structurally from the constructor tree,
/// never from a global Cayley table, so rings with a few hundred thousand
/// elements stay usable.
///
/// Rings are immutable after construction and safe to share across threads.
class Ring {
 public:
  virtual ~Ring() = default;

  std::uint64_t size() const { return size_; }
  Elem zero() const { return zero_; }
  Elem one() const { return one_; }
  bool is_zero_ring() const { return size_ == 1; }

  virtual Elem add(Elem a, Elem b) const = 0;
  virtual Elem neg(Elem a) const = 0;
  virtual Elem mul(Elem a, Elem b) const = 0;

  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  /// a^k with a^0 = 1.
  Elem pow(Elem a, std::uint64_t k) const;

  /// A small set of elements generating (R, +). Many quantified laws in this
  /// library are multilinear and are therefore decided exactly by their
  /// values on generator tuples.
  const std::vector<Elem>& additive_generators() const;

  virtual std::string describe(Elem a) const { return std::to_string(a); }
  virtual std::string name() const = 0;

 protected:
  Ring(std::uint64_t size, Elem zero, Elem one)
      : size_(size), zero_(zero), one_(one) {}

  /// Default: greedy extraction against the running additive closure.
  virtual std::vector<Elem> compute_additive_generators() const;

  std::uint64_t size_;
  Elem zero_;
  Elem one_;

 private:
  mutable std::vector<Elem> addgens_;
  mutable bool addgens_ready_ = false;
};

using RingPtr = std::shared_ptr<const Ring>;

/// Axiom validation following the two-tier policy: exhaustive quantifiers
/// while the iteration count is small, additive-generator tuples plus seeded
/// random samples above. Throws validation_error naming a witness.
void validate_ring(const Ring& r, const Config& cfg = default_config());

std::string elem_list(const Ring& r, const std::vector<Elem>& xs);

}  // namespace peirce
