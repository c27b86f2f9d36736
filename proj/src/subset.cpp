#include "peirce/subset.hpp"

#include <algorithm>

namespace peirce {

Subset Subset::empty(const Ring& parent) { return Subset(parent); }

Subset Subset::full(const Ring& parent) {
  Subset s(parent);
  s.members_.resize(parent.size());
  for (Elem x = 0; x < parent.size(); ++x) s.members_[x] = x;
  s.mask_.assign(parent.size(), true);
  return s;
}

Subset Subset::of(const Ring& parent, std::vector<Elem> members) {
  Subset s(parent);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (Elem x : members) {
    if (x >= parent.size()) throw error("subset member out of range");
    s.mask_[x] = true;
  }
  s.members_ = std::move(members);
  return s;
}

Subset Subset::single(const Ring& parent, Elem x) { return of(parent, {x}); }

bool Subset::is_zero() const {
  return members_.size() == 1 && members_[0] == parent_->zero();
}

Subset Subset::intersect(const Subset& other) const {
  std::vector<Elem> out;
  for (Elem x : members_)
    if (other.mask_[x]) out.push_back(x);
  return of(*parent_, std::move(out));
}

bool Subset::is_subset_of(const Subset& other) const {
  for (Elem x : members_)
    if (!other.mask_[x]) return false;
  return true;
}

const std::vector<Elem>& Subset::additive_generators() const {
  if (!addgens_ready_) {
    // Greedy sweep; as a side effect decides whether the set is a subgroup.
    std::vector<bool> closed(parent_->size(), false);
    std::vector<Elem> closure{parent_->zero()};
    closed[parent_->zero()] = true;
    std::vector<Elem> gens;
    bool subgroup = mask_[parent_->zero()];
    for (Elem x : members_) {
      if (closed[x]) continue;
      gens.push_back(x);
      std::vector<Elem> base = closure;
      Elem y = x;
      while (!closed[y]) {
        for (Elem h : base) {
          Elem z = parent_->add(h, y);
          if (!closed[z]) {
            closed[z] = true;
            closure.push_back(z);
            if (!mask_[z]) subgroup = false;
          }
        }
        y = parent_->add(y, x);
      }
    }
    if (closure.size() != members_.size()) subgroup = false;
    subgroup_ = subgroup;
    addgens_ = std::move(gens);
    addgens_ready_ = true;
  }
  return addgens_;
}

bool Subset::closed_under_addition() const {
  if (!subgroup_) additive_generators();
  return *subgroup_;
}

bool Subset::closed_under_multiplication() const {
  if (!mul_closed_) {
    bool ok = closed_under_addition();
    if (ok) {
      // With additive closure in hand, products of generators decide it.
      const auto& g = additive_generators();
      for (Elem a : g)
        for (Elem b : g)
          if (!mask_[parent_->mul(a, b)]) {
            ok = false;
            break;
          }
    } else {
      for (Elem a : members_) {
        for (Elem b : members_)
          if (!mask_[parent_->mul(a, b)]) {
            ok = false;
            break;
          }
        if (!ok) break;
      }
    }
    mul_closed_ = ok;
  }
  return *mul_closed_;
}

bool Subset::is_left_ideal() const {
  if (!left_ideal_) {
    bool ok = closed_under_addition();
    if (ok)
      for (Elem r : parent_->additive_generators())
        for (Elem s : additive_generators())
          if (!mask_[parent_->mul(r, s)]) {
            ok = false;
            break;
          }
    left_ideal_ = ok;
  }
  return *left_ideal_;
}

bool Subset::is_right_ideal() const {
  if (!right_ideal_) {
    bool ok = closed_under_addition();
    if (ok)
      for (Elem r : parent_->additive_generators())
        for (Elem s : additive_generators())
          if (!mask_[parent_->mul(s, r)]) {
            ok = false;
            break;
          }
    right_ideal_ = ok;
  }
  return *right_ideal_;
}

SubgroupBuilder::SubgroupBuilder(const Ring& ring)
    : r(&ring), mask(ring.size(), false) {
  mask[ring.zero()] = true;
  members.push_back(ring.zero());
}

bool SubgroupBuilder::absorb(Elem x) {
  if (mask[x]) return false;
  basis.push_back(x);
  // New subgroup is the union of the cosets H + kx of the old subgroup H.
  std::vector<Elem> base = members;
  Elem y = x;
  while (!mask[y]) {
    for (Elem h : base) {
      Elem z = r->add(h, y);
      if (!mask[z]) {
        mask[z] = true;
        members.push_back(z);
      }
    }
    y = r->add(y, x);
  }
  return true;
}

Subset SubgroupBuilder::to_subset() const { return Subset::of(*r, members); }

Subset additive_closure(const Ring& r, std::span<const Elem> gens) {
  SubgroupBuilder st(r);
  for (Elem g : gens) st.absorb(g);
  return st.to_subset();
}

Subset subring_generated(const Ring& r, std::span<const Elem> gens) {
  SubgroupBuilder st(r);
  st.absorb(r.one());
  for (Elem g : gens) st.absorb(g);
  // Products of sums are sums of products, so closing the basis products
  // closes the whole subgroup. New basis elements re-enter the pairing.
  std::size_t done = 0;
  while (done < st.basis.size()) {
    std::size_t n = st.basis.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i < done && j < done) continue;
        st.absorb(r.mul(st.basis[i], st.basis[j]));
      }
    done = n;
  }
  return st.to_subset();
}

namespace {

Subset ideal_closure(const Ring& r, std::span<const Elem> gens, bool left, bool right) {
  SubgroupBuilder st(r);
  for (Elem g : gens) st.absorb(g);
  const auto& rg = r.additive_generators();
  std::size_t done = 0;
  while (done < st.basis.size()) {
    std::size_t n = st.basis.size();
    for (std::size_t i = done; i < n; ++i)
      for (Elem g : rg) {
        if (left) st.absorb(r.mul(g, st.basis[i]));
        if (right) st.absorb(r.mul(st.basis[i], g));
      }
    done = n;
  }
  return st.to_subset();
}

}  // namespace

Subset ideal_generated(const Ring& r, std::span<const Elem> gens) {
  return ideal_closure(r, gens, true, true);
}

Subset one_sided_ideal_generated(const Ring& r, std::span<const Elem> gens, Side side) {
  return ideal_closure(r, gens, side == Side::left, side == Side::right);
}

Subset annihilator(const Subset& a, std::span<const Elem> b, Side side) {
  const Ring& r = a.parent();
  std::vector<Elem> out;
  for (Elem x : a.members()) {
    bool ok = true;
    for (Elem y : b) {
      Elem p = side == Side::right ? r.mul(y, x) : r.mul(x, y);
      if (p != r.zero()) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return Subset::of(r, std::move(out));
}

Subset annihilator_in_ring(const Ring& r, std::span<const Elem> b, Side side) {
  return annihilator(Subset::full(r), b, side);
}

Subset center_subset(const Ring& r) {
  const auto& gens = r.additive_generators();
  std::vector<Elem> out;
  for (Elem c = 0; c < r.size(); ++c) {
    bool central = true;
    for (Elem g : gens)
      if (r.mul(c, g) != r.mul(g, c)) {
        central = false;
        break;
      }
    if (central) out.push_back(c);
  }
  return Subset::of(r, std::move(out));
}

std::vector<Elem> enumerate_idempotents(const Ring& r) {
  std::vector<Elem> out;
  for (Elem x = 0; x < r.size(); ++x)
    if (r.mul(x, x) == x) out.push_back(x);
  return out;
}

bool is_complete_orthogonal(const Ring& r, std::span<const Elem> es, std::string* why) {
  auto explain = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (es.empty()) return explain("empty idempotent list");
  Elem sum = r.zero();
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (r.mul(es[i], es[i]) != es[i])
      return explain("element " + r.describe(es[i]) + " is not idempotent");
    for (std::size_t j = 0; j < es.size(); ++j)
      if (i != j && r.mul(es[i], es[j]) != r.zero())
        return explain("products of " + r.describe(es[i]) + " and " + r.describe(es[j]) +
                       " are not orthogonal");
    sum = r.add(sum, es[i]);
  }
  if (sum != r.one()) return explain("idempotents do not sum to 1");
  return true;
}

}  // namespace peirce
