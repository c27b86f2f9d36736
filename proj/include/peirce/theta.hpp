#pragma once

#include "peirce/bimodule.hpp"

namespace peirce {

/// Balanced bilinear pairing M_ij x M_jk -> M_ik (or R_i when i = k). Tensor
/// products are never materialized; the pairing data is equivalent through
/// the universal property and is what gets validated.
class Theta {
 public:
  virtual ~Theta() = default;
  virtual Elem pair(Elem a, Elem b) const = 0;
  virtual std::string name() const = 0;
};

using ThetaPtr = std::shared_ptr<const Theta>;

class ZeroTheta : public Theta {
 public:
  explicit ZeroTheta(Elem target_zero) : zero_(target_zero) {}
  Elem pair(Elem, Elem) const override { return zero_; }
  std::string name() const override { return "0"; }

 private:
  Elem zero_;
};

/// Pairing induced by multiplication in a common ambient ring, with lift maps
/// for the two sources and a projection into the target carrier.
class LiftedMulTheta : public Theta {
 public:
  LiftedMulTheta(RingPtr ambient, LiftFn lift_a, LiftFn lift_b, LiftFn project,
                 std::string label)
      : ambient_(std::move(ambient)),
        lift_a_(std::move(lift_a)),
        lift_b_(std::move(lift_b)),
        project_(std::move(project)),
        label_(std::move(label)) {}
  Elem pair(Elem a, Elem b) const override {
    return project_(ambient_->mul(lift_a_(a), lift_b_(b)));
  }
  std::string name() const override { return label_; }

 private:
  RingPtr ambient_;
  LiftFn lift_a_, lift_b_, project_;
  std::string label_;
};

/// Cyclic carriers: (a, b) -> scale * a * b mod the target modulus.
class CyclicScaledTheta : public Theta {
 public:
  CyclicScaledTheta(std::uint64_t scale, std::uint64_t target_modulus)
      : scale_(scale), mod_(target_modulus) {}
  Elem pair(Elem a, Elem b) const override { return scale_ * a % mod_ * b % mod_; }
  std::string name() const override {
    return std::to_string(scale_) + "*a*b mod " + std::to_string(mod_);
  }

 private:
  std::uint64_t scale_, mod_;
};

class TableTheta : public Theta {
 public:
  TableTheta(std::vector<std::vector<Elem>> values, std::string label = "table")
      : values_(std::move(values)), label_(std::move(label)) {}
  Elem pair(Elem a, Elem b) const override { return values_[a][b]; }
  std::string name() const override { return label_; }

 private:
  std::vector<std::vector<Elem>> values_;
  std::string label_;
};

/// A parent pairing conjugated by source lifts and a target projection; used
/// when carriers are restricted (annihilating subrings, triangular parts).
class WrappedTheta : public Theta {
 public:
  WrappedTheta(ThetaPtr parent, LiftFn lift_a, LiftFn lift_b, LiftFn project)
      : parent_(std::move(parent)),
        lift_a_(std::move(lift_a)),
        lift_b_(std::move(lift_b)),
        project_(std::move(project)) {}
  Elem pair(Elem a, Elem b) const override {
    return project_(parent_->pair(lift_a_(a), lift_b_(b)));
  }
  std::string name() const override { return parent_->name() + " (restricted)"; }

 private:
  ThetaPtr parent_;
  LiftFn lift_a_, lift_b_, project_;
};

}  // namespace peirce
