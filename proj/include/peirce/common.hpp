#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace peirce {

/// Canonical element encoding: the index of the element in its ring's fixed
/// enumeration order. Two elements of the same ring are equal iff their
/// encodings are equal. Every operation returns a normalized encoding.
using Elem = std::uint64_t;

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structural defect detected while validating a ring, bimodule, pairing or
/// homomorphism. The message always names a concrete witness.
class validation_error : public error {
 public:
  using error::error;
};

/// Operation refused because the input exceeds a configured size tier or cap.
class tier_error : public error {
 public:
  using error::error;
};

/// Malformed or unresolvable ring-spec document.
class spec_error : public error {
 public:
  using error::error;
};

/// Tunable limits. Every report echoes the values in effect so that a run can
/// be reproduced exactly.
struct Config {
  // Pair-quantified axiom checks run exhaustively at or below this size.
  std::uint64_t exhaustive_pair_tier = 4096;
  // Triple-quantified checks (associativity, distributivity, the generalized
  // matrix associativity relation) run exhaustively while the number of
  // triples stays at or below this bound; above it, checks run on all
  // additive-generator triples (exact for multilinear laws) plus random
  // samples.
  std::uint64_t exhaustive_triple_cap = 1u << 24;
  // Ideal, radical and lattice computations are refused above this ring size.
  std::uint64_t structure_tier = 4096;
  // enumerate_ideals aborts with an error once this many ideals are found.
  std::uint64_t ideal_cap = 20000;
  // Homomorphism checks (Peirce isomorphisms, subdirect embeddings) run over
  // all pairs at or below this ring size, generators plus samples above.
  std::uint64_t hom_pair_tier = 512;
  // Random samples used above the exhaustive tiers.
  std::uint64_t sample_pairs = 10000;
  std::uint64_t sample_triples = 100000;
  std::uint64_t seed = 1729;
  int jobs = 1;
};

inline const Config& default_config() {
  static const Config cfg{};
  return cfg;
}

using Rng = std::mt19937_64;

inline Elem random_below(Rng& rng, std::uint64_t n) {
  return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng);
}

}  // namespace peirce
