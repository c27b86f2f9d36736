#pragma once

#include <vector>

#include "peirce/ring.hpp"

namespace peirce {

/// Residues modulo n. Enumeration order 0..n-1; n = 1 gives the zero ring.
class CyclicRing : public Ring {
 public:
  explicit CyclicRing(std::uint64_t n);

  Elem add(Elem a, Elem b) const override { return (a + b) % n_; }
  Elem neg(Elem a) const override { return (n_ - a) % n_; }
  Elem mul(Elem a, Elem b) const override { return (a * b) % n_; }
  std::string name() const override;

  std::uint64_t modulus() const { return n_; }

 protected:
  std::vector<Elem> compute_additive_generators() const override;

 private:
  std::uint64_t n_;
};

/// Componentwise product of finitely many rings; encodings are mixed-radix
/// tuples of the factor encodings, first factor least significant.
class ProductRing : public Ring {
 public:
  explicit ProductRing(std::vector<RingPtr> factors);

  Elem add(Elem a, Elem b) const override;
  Elem neg(Elem a) const override;
  Elem mul(Elem a, Elem b) const override;
  std::string describe(Elem a) const override;
  std::string name() const override;

  std::size_t arity() const { return factors_.size(); }
  const Ring& factor(std::size_t i) const { return *factors_[i]; }
  RingPtr factor_ptr(std::size_t i) const { return factors_[i]; }
  Elem component(Elem a, std::size_t i) const { return a / stride_[i] % factors_[i]->size(); }
  Elem from_components(const std::vector<Elem>& xs) const;

 protected:
  std::vector<Elem> compute_additive_generators() const override;

 private:
  std::vector<RingPtr> factors_;
  std::vector<std::uint64_t> stride_;
};

/// Ad-hoc small ring given by explicit addition and multiplication tables.
/// All axioms are checked exhaustively at construction; distinct violations
/// raise distinct messages naming a witness.
class TableRing : public Ring {
 public:
  TableRing(std::vector<std::vector<Elem>> add_table,
            std::vector<std::vector<Elem>> mul_table, Elem zero, Elem one,
            std::string label = "table");

  Elem add(Elem a, Elem b) const override { return add_[a][b]; }
  Elem neg(Elem a) const override { return neg_[a]; }
  Elem mul(Elem a, Elem b) const override { return mul_[a][b]; }
  std::string describe(Elem a) const override { return "#" + std::to_string(a); }
  std::string name() const override { return label_; }

 private:
  std::vector<std::vector<Elem>> add_, mul_;
  std::vector<Elem> neg_;
  std::string label_;
};

RingPtr make_cyclic(std::uint64_t n);
RingPtr make_product(std::vector<RingPtr> factors);
RingPtr make_table_ring(std::vector<std::vector<Elem>> add_table,
                        std::vector<std::vector<Elem>> mul_table, Elem zero,
                        Elem one, std::string label = "table");

}  // namespace peirce
