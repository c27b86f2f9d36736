#include "peirce/subquotient.hpp"

#include <algorithm>

namespace peirce {

SubquotientRing::SubquotientRing(RingPtr parent, Subset sub, Subset mod, Elem unity,
                                 std::string label)
    : Ring(0, 0, 0),
      parent_(std::move(parent)),
      sub_(std::move(sub)),
      mod_(std::move(mod)),
      label_(std::move(label)) {
  const Ring& p = *parent_;
  if (!sub_.closed_under_addition())
    throw validation_error(label_ + ": carrier is not an additive subgroup");
  if (!sub_.closed_under_multiplication())
    throw validation_error(label_ + ": carrier is not multiplicatively closed");
  if (!mod_.is_subset_of(sub_) || !mod_.closed_under_addition())
    throw validation_error(label_ + ": modulus is not a subgroup of the carrier");
  for (Elem g : sub_.additive_generators())
    for (Elem m : mod_.additive_generators())
      if (!mod_.contains(p.mul(g, m)) || !mod_.contains(p.mul(m, g)))
        throw validation_error(label_ + ": modulus is not an ideal of the carrier");
  if (!sub_.contains(unity)) throw validation_error(label_ + ": unity is not in the carrier");

  dense_ = p.size() <= (std::uint64_t(1) << 24);
  constexpr Elem kUnassigned = static_cast<Elem>(-1);
  if (dense_) table_.assign(p.size(), kUnassigned);
  auto assigned = [&](Elem x) {
    return dense_ ? table_[x] != kUnassigned : sparse_.count(x) > 0;
  };
  auto assign = [&](Elem x, Elem idx) {
    if (dense_)
      table_[x] = idx;
    else
      sparse_[x] = idx;
  };
  // Members ascend, so the first unassigned element of a coset is its minimal
  // encoding.
  for (Elem x : sub_.members()) {
    if (assigned(x)) continue;
    Elem idx = reps_.size();
    reps_.push_back(x);
    for (Elem m : mod_.members()) assign(p.add(x, m), idx);
  }
  size_ = reps_.size();
  zero_ = project(p.zero());
  one_ = project(unity);

  // unity must act as an identity modulo the modulus; u*x - x is additive in
  // x, so generators decide it.
  for (Elem g : sub_.additive_generators()) {
    if (project(p.mul(unity, g)) != project(g) || project(p.mul(g, unity)) != project(g))
      throw validation_error(label_ + ": designated unity " + p.describe(unity) +
                             " is not an identity on the carrier");
  }
  if (label_.empty()) label_ = "subquotient of " + p.name();
}

Elem SubquotientRing::project(Elem parent_elem) const {
  if (dense_) {
    Elem v = table_[parent_elem];
    if (v == static_cast<Elem>(-1))
      throw error(label_ + ": element " + parent_->describe(parent_elem) + " is not a member");
    return v;
  }
  auto it = sparse_.find(parent_elem);
  if (it == sparse_.end())
    throw error(label_ + ": element " + parent_->describe(parent_elem) + " is not a member");
  return it->second;
}

Elem SubquotientRing::add(Elem a, Elem b) const {
  return project(parent_->add(reps_[a], reps_[b]));
}

Elem SubquotientRing::neg(Elem a) const { return project(parent_->neg(reps_[a])); }

Elem SubquotientRing::mul(Elem a, Elem b) const {
  return project(parent_->mul(reps_[a], reps_[b]));
}

std::string SubquotientRing::describe(Elem a) const { return parent_->describe(reps_[a]); }

std::vector<Elem> SubquotientRing::compute_additive_generators() const {
  // Projection is additive and onto, so images of carrier generators work.
  std::vector<Elem> out;
  std::vector<bool> seen(size_, false);
  for (Elem g : sub_.additive_generators()) {
    Elem x = project(g);
    if (x != zero_ && !seen[x]) {
      seen[x] = true;
      out.push_back(x);
    }
  }
  return out;
}

SubquotientPtr make_subring(RingPtr parent, Subset sub, std::string label) {
  const Ring& p = *parent;
  if (label.empty()) label = "subring of " + p.name();
  return std::make_shared<SubquotientRing>(parent, std::move(sub),
                                           Subset::single(p, p.zero()), p.one(),
                                           std::move(label));
}

SubquotientPtr make_quotient(RingPtr parent, Subset ideal, std::string label) {
  const Ring& p = *parent;
  if (!ideal.is_ideal())
    throw validation_error("quotient modulus is not a two-sided ideal of " + p.name());
  if (label.empty()) label = p.name() + "/I";
  return std::make_shared<SubquotientRing>(parent, Subset::full(p),
                                           std::move(ideal), p.one(), std::move(label));
}

SubquotientPtr make_corner(RingPtr parent, Elem e, std::string label) {
  const Ring& p = *parent;
  if (p.mul(e, e) != e)
    throw validation_error("corner ring needs an idempotent, got " + p.describe(e));
  std::vector<Elem> members;
  members.reserve(64);
  for (Elem x = 0; x < p.size(); ++x) {
    Elem y = p.mul(p.mul(e, x), e);
    members.push_back(y);
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (label.empty()) label = "corner " + p.describe(e);
  return std::make_shared<SubquotientRing>(parent, Subset::of(p, std::move(members)),
                                           Subset::single(p, p.zero()), e, std::move(label));
}

}  // namespace peirce
