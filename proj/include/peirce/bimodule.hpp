#pragma once

#include <functional>
#include <unordered_map>

#include "peirce/subset.hpp"

namespace peirce {

/// A finite abelian group with a left action of one ring and a right action
/// of another. Carriers use canonical index encodings like rings do.
class Bimodule {
 public:
  virtual ~Bimodule() = default;

  const Ring& left_ring() const { return *left_; }
  const Ring& right_ring() const { return *right_; }
  RingPtr left_ring_ptr() const { return left_; }
  RingPtr right_ring_ptr() const { return right_; }
  std::uint64_t size() const { return size_; }
  Elem zero() const { return zero_; }

  virtual Elem add(Elem a, Elem b) const = 0;
  virtual Elem neg(Elem a) const = 0;
  virtual Elem left_act(Elem r, Elem m) const = 0;
  virtual Elem right_act(Elem m, Elem s) const = 0;

  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  const std::vector<Elem>& additive_generators() const;
  virtual std::string describe(Elem a) const { return std::to_string(a); }
  virtual std::string name() const = 0;

 protected:
  Bimodule(RingPtr left, RingPtr right, std::uint64_t size, Elem zero)
      : left_(std::move(left)), right_(std::move(right)), size_(size), zero_(zero) {}

  virtual std::vector<Elem> compute_additive_generators() const;

  RingPtr left_, right_;
  std::uint64_t size_;
  Elem zero_;

 private:
  mutable std::vector<Elem> addgens_;
  mutable bool addgens_ready_ = false;
};

using BimodulePtr = std::shared_ptr<const Bimodule>;
using LiftFn = std::function<Elem(Elem)>;

/// A ring as the regular bimodule over itself.
class RegularBimodule : public Bimodule {
 public:
  explicit RegularBimodule(RingPtr r);
  Elem add(Elem a, Elem b) const override { return ring_->add(a, b); }
  Elem neg(Elem a) const override { return ring_->neg(a); }
  Elem left_act(Elem r, Elem m) const override { return ring_->mul(r, m); }
  Elem right_act(Elem m, Elem s) const override { return ring_->mul(m, s); }
  std::string describe(Elem a) const override { return ring_->describe(a); }
  std::string name() const override { return ring_->name(); }

 protected:
  std::vector<Elem> compute_additive_generators() const override {
    return ring_->additive_generators();
  }

 private:
  RingPtr ring_;
};

/// Subquotient sub/mod of an ambient ring, acted on through ambient
/// multiplication. The side rings reach the ambient through additive lift
/// maps (inclusions of subrings, corner embeddings, or the ambient identity).
class SubquotientBimodule : public Bimodule {
 public:
  SubquotientBimodule(RingPtr ambient, Subset sub, Subset mod, RingPtr left,
                      LiftFn lift_left, RingPtr right, LiftFn lift_right,
                      std::string label);

  Elem add(Elem a, Elem b) const override;
  Elem neg(Elem a) const override;
  Elem left_act(Elem r, Elem m) const override;
  Elem right_act(Elem m, Elem s) const override;
  std::string describe(Elem a) const override;
  std::string name() const override { return label_; }

  const Ring& ambient() const { return *ambient_; }
  const Subset& carrier() const { return sub_; }
  const Subset& modulus() const { return mod_; }
  Elem lift(Elem a) const { return reps_[a]; }
  Elem project(Elem ambient_elem) const;
  Elem lift_left(Elem r) const { return lift_left_(r); }
  Elem lift_right(Elem s) const { return lift_right_(s); }

 protected:
  std::vector<Elem> compute_additive_generators() const override;

 private:
  RingPtr ambient_;
  Subset sub_, mod_;
  LiftFn lift_left_, lift_right_;
  std::vector<Elem> reps_;
  std::vector<Elem> table_;
  std::unordered_map<Elem, Elem> sparse_;
  bool dense_;
  std::string label_;
};

/// Z_d as a bimodule over cyclic rings Z_a and Z_b with d | a and d | b;
/// actions reduce the scalar mod d.
class CyclicBimodule : public Bimodule {
 public:
  CyclicBimodule(RingPtr left, RingPtr right, std::uint64_t d);
  Elem add(Elem a, Elem b) const override { return (a + b) % d_; }
  Elem neg(Elem a) const override { return (d_ - a) % d_; }
  Elem left_act(Elem r, Elem m) const override { return r % d_ * m % d_; }
  Elem right_act(Elem m, Elem s) const override { return m * (s % d_) % d_; }
  std::string name() const override { return "Z" + std::to_string(d_); }

 protected:
  std::vector<Elem> compute_additive_generators() const override;

 private:
  std::uint64_t d_;
};

/// The one-element bimodule.
class ZeroBimodule : public Bimodule {
 public:
  ZeroBimodule(RingPtr left, RingPtr right) : Bimodule(std::move(left), std::move(right), 1, 0) {}
  Elem add(Elem, Elem) const override { return 0; }
  Elem neg(Elem) const override { return 0; }
  Elem left_act(Elem, Elem) const override { return 0; }
  Elem right_act(Elem, Elem) const override { return 0; }
  std::string name() const override { return "0"; }

 protected:
  std::vector<Elem> compute_additive_generators() const override { return {}; }
};

/// Explicit small bimodule given by pointwise tables.
class TableBimodule : public Bimodule {
 public:
  TableBimodule(RingPtr left, RingPtr right, std::vector<std::vector<Elem>> add_table,
                std::vector<std::vector<Elem>> left_table,
                std::vector<std::vector<Elem>> right_table, Elem zero, std::string label);
  Elem add(Elem a, Elem b) const override { return add_[a][b]; }
  Elem neg(Elem a) const override { return neg_[a]; }
  Elem left_act(Elem r, Elem m) const override { return lact_[r][m]; }
  Elem right_act(Elem m, Elem s) const override { return ract_[m][s]; }
  std::string name() const override { return label_; }

 private:
  std::vector<std::vector<Elem>> add_, lact_, ract_;
  std::vector<Elem> neg_;
  std::string label_;
};

/// Restriction of a bimodule to an action-closed subgroup of its carrier,
/// over the same side rings.
class SubBimodule : public Bimodule {
 public:
  SubBimodule(BimodulePtr parent, std::vector<Elem> members, std::string label = "");
  Elem add(Elem a, Elem b) const override;
  Elem neg(Elem a) const override;
  Elem left_act(Elem r, Elem m) const override;
  Elem right_act(Elem m, Elem s) const override;
  std::string describe(Elem a) const override { return parent_->describe(reps_[a]); }
  std::string name() const override { return label_; }

  const Bimodule& parent() const { return *parent_; }
  Elem lift(Elem a) const { return reps_[a]; }
  Elem project(Elem parent_elem) const;

 private:
  BimodulePtr parent_;
  std::vector<Elem> reps_;
  std::unordered_map<Elem, Elem> index_;
  std::string label_;
};

/// Checks the bimodule laws (biadditive actions, associativity with ring
/// multiplication, unital actions) with the usual tier policy.
void validate_bimodule(const Bimodule& m, const Config& cfg = default_config());

}  // namespace peirce
