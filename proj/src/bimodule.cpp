#include "peirce/bimodule.hpp"

#include <sstream>

namespace peirce {

const std::vector<Elem>& Bimodule::additive_generators() const {
  if (!addgens_ready_) {
    addgens_ = compute_additive_generators();
    addgens_ready_ = true;
  }
  return addgens_;
}

std::vector<Elem> Bimodule::compute_additive_generators() const {
  std::vector<Elem> gens;
  std::vector<bool> closed(size_, false);
  std::vector<Elem> members{zero_};
  closed[zero_] = true;
  for (Elem x = 0; x < size_; ++x) {
    if (closed[x]) continue;
    gens.push_back(x);
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

RegularBimodule::RegularBimodule(RingPtr r)
    : Bimodule(r, r, r->size(), r->zero()), ring_(std::move(r)) {}

SubquotientBimodule::SubquotientBimodule(RingPtr ambient, Subset sub, Subset mod,
                                         RingPtr left, LiftFn lift_left, RingPtr right,
                                         LiftFn lift_right, std::string label)
    : Bimodule(std::move(left), std::move(right), 0, 0),
      ambient_(std::move(ambient)),
      sub_(std::move(sub)),
      mod_(std::move(mod)),
      lift_left_(std::move(lift_left)),
      lift_right_(std::move(lift_right)),
      label_(std::move(label)) {
  const Ring& a = *ambient_;
  if (!sub_.closed_under_addition())
    throw validation_error(label_ + ": carrier is not an additive subgroup");
  if (!mod_.is_subset_of(sub_) || !mod_.closed_under_addition())
    throw validation_error(label_ + ": modulus is not a subgroup of the carrier");

  // Carrier and modulus must absorb both side actions; additive generators
  // decide this because actions and lifts are additive.
  for (Elem g : left_->additive_generators()) {
    Elem lg = lift_left_(g);
    for (Elem s : sub_.additive_generators())
      if (!sub_.contains(a.mul(lg, s)))
        throw validation_error(label_ + ": left action of " + left_->describe(g) +
                               " leaves the carrier at " + a.describe(s));
    for (Elem m : mod_.additive_generators())
      if (!mod_.contains(a.mul(lg, m)))
        throw validation_error(label_ + ": left action does not respect the modulus");
  }
  for (Elem g : right_->additive_generators()) {
    Elem rg = lift_right_(g);
    for (Elem s : sub_.additive_generators())
      if (!sub_.contains(a.mul(s, rg)))
        throw validation_error(label_ + ": right action of " + right_->describe(g) +
                               " leaves the carrier at " + a.describe(s));
    for (Elem m : mod_.additive_generators())
      if (!mod_.contains(a.mul(m, rg)))
        throw validation_error(label_ + ": right action does not respect the modulus");
  }

  dense_ = a.size() <= (std::uint64_t(1) << 24);
  constexpr Elem kUnassigned = static_cast<Elem>(-1);
  if (dense_) table_.assign(a.size(), kUnassigned);
  auto assigned = [&](Elem x) { return dense_ ? table_[x] != kUnassigned : sparse_.count(x) > 0; };
  auto assign = [&](Elem x, Elem idx) {
    if (dense_)
      table_[x] = idx;
    else
      sparse_[x] = idx;
  };
  for (Elem x : sub_.members()) {
    if (assigned(x)) continue;
    Elem idx = reps_.size();
    reps_.push_back(x);
    for (Elem m : mod_.members()) assign(a.add(x, m), idx);
  }
  size_ = reps_.size();
  zero_ = project(a.zero());
}

Elem SubquotientBimodule::project(Elem x) const {
  if (dense_) {
    Elem v = table_[x];
    if (v == static_cast<Elem>(-1))
      throw error(label_ + ": ambient element " + ambient_->describe(x) + " is not a member");
    return v;
  }
  auto it = sparse_.find(x);
  if (it == sparse_.end())
    throw error(label_ + ": ambient element " + ambient_->describe(x) + " is not a member");
  return it->second;
}

Elem SubquotientBimodule::add(Elem a, Elem b) const {
  return project(ambient_->add(reps_[a], reps_[b]));
}

Elem SubquotientBimodule::neg(Elem a) const { return project(ambient_->neg(reps_[a])); }

Elem SubquotientBimodule::left_act(Elem r, Elem m) const {
  return project(ambient_->mul(lift_left_(r), reps_[m]));
}

Elem SubquotientBimodule::right_act(Elem m, Elem s) const {
  return project(ambient_->mul(reps_[m], lift_right_(s)));
}

std::string SubquotientBimodule::describe(Elem a) const {
  return ambient_->describe(reps_[a]);
}

std::vector<Elem> SubquotientBimodule::compute_additive_generators() const {
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

CyclicBimodule::CyclicBimodule(RingPtr left, RingPtr right, std::uint64_t d)
    : Bimodule(std::move(left), std::move(right), d, 0), d_(d) {
  if (d == 0) throw validation_error("cyclic bimodule needs d >= 1");
  if (left_->size() % d != 0 || right_->size() % d != 0)
    throw validation_error("cyclic bimodule Z" + std::to_string(d) +
                           " needs side ring sizes divisible by d");
}

std::vector<Elem> CyclicBimodule::compute_additive_generators() const {
  if (d_ == 1) return {};
  return {1};
}

TableBimodule::TableBimodule(RingPtr left, RingPtr right,
                             std::vector<std::vector<Elem>> add_table,
                             std::vector<std::vector<Elem>> left_table,
                             std::vector<std::vector<Elem>> right_table, Elem zero,
                             std::string label)
    : Bimodule(std::move(left), std::move(right), add_table.size(), zero),
      add_(std::move(add_table)),
      lact_(std::move(left_table)),
      ract_(std::move(right_table)),
      label_(std::move(label)) {
  const std::uint64_t n = size_;
  if (n == 0 || zero >= n) throw validation_error(label_ + ": bad carrier");
  if (lact_.size() != left_->size() || ract_.size() != n)
    throw validation_error(label_ + ": action table has wrong shape");
  neg_.assign(n, static_cast<Elem>(-1));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (add_[a][b] == zero) neg_[a] = b;
  for (Elem a = 0; a < n; ++a)
    if (neg_[a] == static_cast<Elem>(-1))
      throw validation_error(label_ + ": addition is not a group");
}

SubBimodule::SubBimodule(BimodulePtr parent, std::vector<Elem> members, std::string label)
    : Bimodule(parent->left_ring_ptr(), parent->right_ring_ptr(), 0, 0),
      parent_(std::move(parent)),
      label_(std::move(label)) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  reps_ = std::move(members);
  for (std::size_t i = 0; i < reps_.size(); ++i) index_[reps_[i]] = i;
  if (!index_.count(parent_->zero()))
    throw validation_error(label_ + ": restriction must contain zero");
  size_ = reps_.size();
  zero_ = index_.at(parent_->zero());
  if (label_.empty()) label_ = "sub of " + parent_->name();

  // Closure under addition and both actions, decided on generators.
  for (Elem a : reps_)
    for (Elem b : reps_)
      if (!index_.count(parent_->add(a, b)))
        throw validation_error(label_ + ": restriction is not closed under addition");
  for (Elem g : left_->additive_generators())
    for (Elem m : reps_)
      if (!index_.count(parent_->left_act(g, m)))
        throw validation_error(label_ + ": restriction is not closed under the left action");
  for (Elem g : right_->additive_generators())
    for (Elem m : reps_)
      if (!index_.count(parent_->right_act(m, g)))
        throw validation_error(label_ + ": restriction is not closed under the right action");
}

Elem SubBimodule::project(Elem parent_elem) const {
  auto it = index_.find(parent_elem);
  if (it == index_.end())
    throw error(label_ + ": element " + parent_->describe(parent_elem) + " is not a member");
  return it->second;
}

Elem SubBimodule::add(Elem a, Elem b) const { return project(parent_->add(reps_[a], reps_[b])); }
Elem SubBimodule::neg(Elem a) const { return project(parent_->neg(reps_[a])); }
Elem SubBimodule::left_act(Elem r, Elem m) const {
  return project(parent_->left_act(r, reps_[m]));
}
Elem SubBimodule::right_act(Elem m, Elem s) const {
  return project(parent_->right_act(reps_[m], s));
}

namespace {

// Quantifier driver: exhaustive when the domain product is small, additive
// generators plus seeded samples otherwise.
template <typename Fn>
void over_pairs(std::uint64_t na, std::uint64_t nb, const std::vector<Elem>& ga,
                const std::vector<Elem>& gb, const Config& cfg, Fn&& fn) {
  if (na * nb <= cfg.exhaustive_triple_cap) {
    for (Elem a = 0; a < na; ++a)
      for (Elem b = 0; b < nb; ++b) fn(a, b);
    return;
  }
  for (Elem a : ga)
    for (Elem b : gb) fn(a, b);
  Rng rng(cfg.seed);
  for (std::uint64_t i = 0; i < cfg.sample_pairs; ++i)
    fn(random_below(rng, na), random_below(rng, nb));
}

template <typename Fn>
void over_triples(std::uint64_t na, std::uint64_t nb, std::uint64_t nc,
                  const std::vector<Elem>& ga, const std::vector<Elem>& gb,
                  const std::vector<Elem>& gc, const Config& cfg, Fn&& fn) {
  if (na * nb * nc <= cfg.exhaustive_triple_cap) {
    for (Elem a = 0; a < na; ++a)
      for (Elem b = 0; b < nb; ++b)
        for (Elem c = 0; c < nc; ++c) fn(a, b, c);
    return;
  }
  for (Elem a : ga)
    for (Elem b : gb)
      for (Elem c : gc) fn(a, b, c);
  Rng rng(cfg.seed + 1);
  for (std::uint64_t i = 0; i < cfg.sample_triples; ++i)
    fn(random_below(rng, na), random_below(rng, nb), random_below(rng, nc));
}

}  // namespace

void validate_bimodule(const Bimodule& m, const Config& cfg) {
  const Ring& l = m.left_ring();
  const Ring& r = m.right_ring();
  auto wit = [&](const char* law, const std::string& detail) {
    throw validation_error("bimodule " + m.name() + " violates " + law + " at " + detail);
  };

  for (Elem x = 0; x < m.size(); ++x) {
    if (m.add(m.zero(), x) != x) wit("0 + m = m", m.describe(x));
    if (m.add(x, m.neg(x)) != m.zero()) wit("m + (-m) = 0", m.describe(x));
    if (m.left_act(l.one(), x) != x) wit("1 m = m", m.describe(x));
    if (m.right_act(x, r.one()) != x) wit("m 1 = m", m.describe(x));
  }

  over_pairs(m.size(), m.size(), m.additive_generators(), m.additive_generators(), cfg,
             [&](Elem a, Elem b) {
               if (m.add(a, b) != m.add(b, a))
                 wit("commutativity", m.describe(a) + ", " + m.describe(b));
             });

  over_triples(l.size(), m.size(), m.size(), l.additive_generators(),
               m.additive_generators(), m.additive_generators(), cfg,
               [&](Elem g, Elem a, Elem b) {
                 if (m.left_act(g, m.add(a, b)) != m.add(m.left_act(g, a), m.left_act(g, b)))
                   wit("left action additivity", l.describe(g));
               });
  over_triples(m.size(), m.size(), r.size(), m.additive_generators(),
               m.additive_generators(), r.additive_generators(), cfg,
               [&](Elem a, Elem b, Elem g) {
                 if (m.right_act(m.add(a, b), g) != m.add(m.right_act(a, g), m.right_act(b, g)))
                   wit("right action additivity", r.describe(g));
               });
  over_triples(l.size(), l.size(), m.size(), l.additive_generators(),
               l.additive_generators(), m.additive_generators(), cfg,
               [&](Elem g, Elem h, Elem a) {
                 if (m.left_act(l.add(g, h), a) !=
                     m.add(m.left_act(g, a), m.left_act(h, a)))
                   wit("(r+s)m = rm + sm", l.describe(g) + ", " + l.describe(h));
               });
  over_triples(m.size(), r.size(), r.size(), m.additive_generators(),
               r.additive_generators(), r.additive_generators(), cfg,
               [&](Elem a, Elem g, Elem h) {
                 if (m.right_act(a, r.add(g, h)) !=
                     m.add(m.right_act(a, g), m.right_act(a, h)))
                   wit("m(r+s) = mr + ms", r.describe(g) + ", " + r.describe(h));
               });

  over_triples(l.size(), l.size(), m.size(), l.additive_generators(),
               l.additive_generators(), m.additive_generators(), cfg,
               [&](Elem g, Elem h, Elem a) {
                 if (m.left_act(l.mul(g, h), a) != m.left_act(g, m.left_act(h, a)))
                   wit("(rs)m = r(sm)", l.describe(g) + ", " + l.describe(h) + ", " + m.describe(a));
               });
  over_triples(m.size(), r.size(), r.size(), m.additive_generators(),
               r.additive_generators(), r.additive_generators(), cfg,
               [&](Elem a, Elem g, Elem h) {
                 if (m.right_act(a, r.mul(g, h)) != m.right_act(m.right_act(a, g), h))
                   wit("m(rs) = (mr)s", m.describe(a) + ", " + r.describe(g) + ", " + r.describe(h));
               });
  over_triples(l.size(), m.size(), r.size(), l.additive_generators(),
               m.additive_generators(), r.additive_generators(), cfg,
               [&](Elem g, Elem a, Elem h) {
                 if (m.right_act(m.left_act(g, a), h) != m.left_act(g, m.right_act(a, h)))
                   wit("(rm)s = r(ms)", l.describe(g) + ", " + m.describe(a) + ", " + r.describe(h));
               });
}

}  // namespace peirce
