#include "peirce/ring.hpp"

#include <sstream>

namespace peirce {

Elem Ring::pow(Elem a, std::uint64_t k) const {
  Elem acc = one_;
  for (std::uint64_t i = 0; i < k; ++i) acc = mul(acc, a);
  return acc;
}

const std::vector<Elem>& Ring::additive_generators() const {
  if (!addgens_ready_) {
    addgens_ = compute_additive_generators();
    addgens_ready_ = true;
  }
  return addgens_;
}

std::vector<Elem> Ring::compute_additive_generators() const {
  std::vector<Elem> gens;
  std::vector<bool> closed(size_, false);
  std::vector<Elem> members{zero_};
  closed[zero_] = true;
  for (Elem x = 0; x < size_; ++x) {
    if (closed[x]) continue;
    gens.push_back(x);
    // Extend the subgroup by x: new elements are h + k*x for h already closed.
    std::vector<Elem> base = members;
    Elem y = x;
    while (!closed[y]) {
      for (Elem h : base) {
        Elem z = add(h, y);
        if (!closed[z]) {
          closed[z] = true;
          members.push_back(z);
        }
      }
      y = add(y, x);
    }
  }
  return gens;
}

std::string elem_list(const Ring& r, const std::vector<Elem>& xs) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ", ";
    os << r.describe(xs[i]);
  }
  os << "}";
  return os.str();
}

namespace {

[[noreturn]] void fail(const Ring& r, const std::string& law, std::initializer_list<Elem> witness) {
  std::ostringstream os;
  os << "ring '" << r.name() << "' violates " << law << " at ";
  bool first = true;
  for (Elem w : witness) {
    if (!first) os << ", ";
    os << r.describe(w);
    first = false;
  }
  throw validation_error(os.str());
}

void check_triple(const Ring& r, Elem a, Elem b, Elem c) {
  if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c)))
    fail(r, "additive associativity", {a, b, c});
  if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)))
    fail(r, "multiplicative associativity", {a, b, c});
  if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)))
    fail(r, "left distributivity", {a, b, c});
  if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c)))
    fail(r, "right distributivity", {a, b, c});
}

}  // namespace

void validate_ring(const Ring& r, const Config& cfg) {
  const std::uint64_t n = r.size();
  if (n == 0) throw validation_error("ring must have at least one element");

  for (Elem x = 0; x < n; ++x) {
    if (r.add(r.zero(), x) != x) fail(r, "0 + x = x", {x});
    if (r.add(x, r.neg(x)) != r.zero()) fail(r, "x + (-x) = 0", {x});
    if (r.mul(r.one(), x) != x) fail(r, "1 * x = x", {x});
    if (r.mul(x, r.one()) != x) fail(r, "x * 1 = x", {x});
  }

  if (n <= cfg.exhaustive_pair_tier) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = a; b < n; ++b)
        if (r.add(a, b) != r.add(b, a)) fail(r, "additive commutativity", {a, b});
  } else {
    const auto& gens = r.additive_generators();
    for (Elem g : gens)
      for (Elem h : gens)
        if (r.add(g, h) != r.add(h, g)) fail(r, "additive commutativity", {g, h});
  }

  if (n * n * n <= cfg.exhaustive_triple_cap) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c) check_triple(r, a, b, c);
  } else {
    const auto& gens = r.additive_generators();
    for (Elem a : gens)
      for (Elem b : gens)
        for (Elem c : gens) check_triple(r, a, b, c);
    Rng rng(cfg.seed);
    for (std::uint64_t i = 0; i < cfg.sample_triples; ++i)
      check_triple(r, random_below(rng, n), random_below(rng, n), random_below(rng, n));
  }
}

}  // namespace peirce
