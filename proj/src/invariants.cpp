#include "peirce/invariants.hpp"

#include <algorithm>
#include <map>

namespace peirce {

Subset unit_set(const Ring& r) {
  std::vector<Elem> units;
  for (Elem x = 0; x < r.size(); ++x) {
    Elem inv = 0;
    bool has_right = false;
    for (Elem y = 0; y < r.size(); ++y)
      if (r.mul(x, y) == r.one()) {
        inv = y;
        has_right = true;
        break;
      }
    if (has_right && r.mul(inv, x) == r.one()) units.push_back(x);
  }
  return Subset::of(r, std::move(units));
}

bool is_nilpotent_elem(const Ring& r, Elem x) {
  // x is nilpotent iff x^(2^t) = 0 once 2^t reaches the ring size.
  Elem z = x;
  std::uint64_t reach = 1;
  while (reach < r.size()) {
    z = r.mul(z, z);
    reach *= 2;
  }
  return z == r.zero();
}

namespace {

std::uint32_t nilpotence_index_of(const Ring& r, Elem x) {
  std::uint32_t k = 1;
  Elem y = x;
  while (y != r.zero()) {
    y = r.mul(y, x);
    ++k;
  }
  return k;
}

void require_structure_tier(const Ring& r, const Config& cfg, const char* what) {
  if (r.size() > cfg.structure_tier)
    throw tier_error(std::string(what) + ": ring " + r.name() + " has " +
                     std::to_string(r.size()) + " elements, above the structure tier of " +
                     std::to_string(cfg.structure_tier));
}

}  // namespace

bool is_prime_ring(const Ring& r, const Config& cfg) {
  require_structure_tier(r, cfg, "is_prime");
  if (r.is_zero_ring()) return false;
  for (Elem a = 0; a < r.size(); ++a) {
    if (a == r.zero()) continue;
    for (Elem b = 0; b < r.size(); ++b) {
      if (b == r.zero()) continue;
      if (r.mul(a, b) != r.zero()) continue;  // r = 1 witness
      bool annihilates = true;
      for (Elem t = 0; t < r.size(); ++t)
        if (r.mul(r.mul(a, t), b) != r.zero()) {
          annihilates = false;
          break;
        }
      if (annihilates) return false;
    }
  }
  return true;
}

bool is_semiprime_ring(const Ring& r, const Config& cfg) {
  require_structure_tier(r, cfg, "is_semiprime");
  for (Elem a = 0; a < r.size(); ++a) {
    if (a == r.zero()) continue;
    if (r.mul(a, a) != r.zero()) continue;
    bool annihilates = true;
    for (Elem t = 0; t < r.size(); ++t)
      if (r.mul(r.mul(a, t), a) != r.zero()) {
        annihilates = false;
        break;
      }
    if (annihilates) return false;
  }
  return true;
}

std::vector<Subset> enumerate_ideals(const Ring& r, bool prime_only, const Config& cfg) {
  require_structure_tier(r, cfg, "enumerate_ideals");

  std::map<std::vector<Elem>, std::size_t> seen;
  std::vector<Subset> ideals;
  auto remember = [&](Subset s) -> bool {
    auto [it, fresh] = seen.emplace(s.members(), ideals.size());
    if (fresh) {
      ideals.push_back(std::move(s));
      if (ideals.size() > cfg.ideal_cap)
        throw tier_error("enumerate_ideals: more than " + std::to_string(cfg.ideal_cap) +
                         " ideals in " + r.name());
    }
    return fresh;
  };

  remember(Subset::single(r, r.zero()));
  for (Elem a = 0; a < r.size(); ++a) remember(ideal_generated(r, std::array<Elem, 1>{a}));

  // Saturate under pairwise sums; a sum of ideals is the subgroup generated
  // by the two member sets and is again an ideal.
  std::size_t done = 0;
  while (done < ideals.size()) {
    std::size_t n = ideals.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = std::max(i + 1, done); j < n; ++j) {
        if (ideals[i].is_subset_of(ideals[j]) || ideals[j].is_subset_of(ideals[i])) continue;
        SubgroupBuilder sum(r);
        for (Elem g : ideals[i].additive_generators()) sum.absorb(g);
        for (Elem g : ideals[j].additive_generators()) sum.absorb(g);
        remember(sum.to_subset());
      }
    done = n;
  }

  std::sort(ideals.begin(), ideals.end(), [](const Subset& a, const Subset& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.members() < b.members();
  });
  if (!prime_only) return ideals;

  // In a finite ring the prime ideals are the maximal proper ideals (R/P is a
  // finite prime, hence simple, ring). Keep the maximal ones and double-check
  // each against the definitional quantifier.
  std::vector<Subset> primes;
  for (const auto& cand : ideals) {
    if (cand.count() == r.size()) continue;
    bool maximal = true;
    for (const auto& other : ideals)
      if (other.count() != r.size() && other.count() > cand.count() &&
          cand.is_subset_of(other)) {
        maximal = false;
        break;
      }
    if (!maximal) continue;
    for (Elem a = 0; a < r.size() && maximal; ++a) {
      if (cand.contains(a)) continue;
      for (Elem b = 0; b < r.size() && maximal; ++b) {
        if (cand.contains(b)) continue;
        bool inside = cand.contains(r.mul(a, b));
        if (!inside) continue;
        bool all_in = true;
        for (Elem t = 0; t < r.size(); ++t)
          if (!cand.contains(r.mul(r.mul(a, t), b))) {
            all_in = false;
            break;
          }
        if (all_in) maximal = false;  // witness pair: not prime after all
      }
    }
    if (!maximal)
      throw validation_error("enumerate_ideals: maximal ideal of " + r.name() +
                             " failed the prime quantifier; lattice computation is broken");
    primes.push_back(cand);
  }
  return primes;
}

StructureInvariants structure_invariants(const Ring& r, const Config& cfg) {
  require_structure_tier(r, cfg, "structure_invariants");
  StructureInvariants out{Subset::empty(r), Subset::empty(r), Subset::empty(r)};
  out.units = unit_set(r);

  std::vector<Elem> rad;
  for (Elem x = 0; x < r.size(); ++x) {
    bool quasi_regular = true;
    for (Elem t = 0; t < r.size(); ++t)
      if (!out.units.contains(r.sub(r.one(), r.mul(t, x)))) {
        quasi_regular = false;
        break;
      }
    if (quasi_regular) rad.push_back(x);
  }
  out.jacobson = Subset::of(r, std::move(rad));

  auto primes = enumerate_ideals(r, true, cfg);
  Subset prad = Subset::full(r);
  for (const auto& p : primes) prad = prad.intersect(p);
  out.prime_radical = std::move(prad);

  if (!(out.prime_radical == out.jacobson))
    throw validation_error("structure_invariants: prime radical and Jacobson radical disagree on " +
                           r.name() + "; one of the computations is broken");

  out.nilpotence_index = 1;
  for (Elem x = 0; x < r.size(); ++x)
    if (x != r.zero() && is_nilpotent_elem(r, x))
      out.nilpotence_index = std::max(out.nilpotence_index, nilpotence_index_of(r, x));

  out.is_prime = is_prime_ring(r, cfg);
  out.is_semiprime = is_semiprime_ring(r, cfg);
  return out;
}

}  // namespace peirce
