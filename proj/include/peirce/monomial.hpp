#pragma once

#include <map>
#include <string>
#include <vector>

#include "peirce/ring.hpp"

namespace peirce {

/// Z_m[x1..xk] modulo a monomial ideal. The relations must contain a pure
/// power of every variable, which forces the quotient to be finite; its basis
/// is the set of standard monomials (those not divisible by any relation
/// monomial). Elements are coefficient vectors over the basis, encoded in
/// mixed radix base m, the constant coefficient least significant.
class MonomialQuotientRing : public Ring {
 public:
  using Exponents = std::vector<std::uint32_t>;

  MonomialQuotientRing(std::uint64_t modulus, std::vector<std::string> vars,
                       const std::vector<std::string>& relations);

  Elem add(Elem a, Elem b) const override;
  Elem neg(Elem a) const override;
  Elem mul(Elem a, Elem b) const override;
  std::string describe(Elem a) const override;
  std::string name() const override;

  std::uint64_t modulus() const { return modulus_; }
  const std::vector<Exponents>& basis() const { return basis_; }

  /// Parses a polynomial such as "1 + x^2", "2*x*y" or "0" to an encoding.
  Elem parse_poly(const std::string& text) const;
  Elem monomial_elem(const Exponents& e, std::uint64_t coeff = 1) const;

 protected:
  std::vector<Elem> compute_additive_generators() const override;

 private:
  std::uint64_t coeff_of(Elem a, std::size_t pos) const;
  Exponents parse_monomial(const std::string& text) const;

  std::uint64_t modulus_;
  std::vector<std::string> vars_;
  std::vector<Exponents> relations_;
  std::vector<Exponents> basis_;
  std::map<Exponents, std::size_t> basis_index_;
  // product_[i][j]: basis index of basis[i]*basis[j], or npos when the
  // product falls into the relation ideal.
  std::vector<std::vector<std::size_t>> product_;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

RingPtr make_monomial_quotient(std::uint64_t modulus, std::vector<std::string> vars,
                               const std::vector<std::string>& relations);

}  // namespace peirce
