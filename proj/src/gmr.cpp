#include "peirce/gmr.hpp"

#include <array>
#include <sstream>

namespace peirce {

namespace {
constexpr int kMaxBlocks = 6;
}

GmrRing::GmrRing(std::vector<RingPtr> diagonal,
                 std::map<std::pair<int, int>, BimodulePtr> bimodules,
                 std::map<std::tuple<int, int, int>, ThetaPtr> thetas, std::string label)
    : Ring(0, 0, 0), n_(static_cast<int>(diagonal.size())), diag_(std::move(diagonal)),
      label_(std::move(label)) {
  if (n_ < 1 || n_ > kMaxBlocks)
    throw validation_error("generalized matrix ring needs between 1 and " +
                           std::to_string(kMaxBlocks) + " blocks");
  offdiag_.assign(n_ * n_, nullptr);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      if (i == j) continue;
      auto it = bimodules.find({i, j});
      if (it == bimodules.end())
        throw validation_error(label_ + ": missing bimodule (" + std::to_string(i + 1) + "," +
                               std::to_string(j + 1) + ")");
      offdiag_[i * n_ + j] = it->second;
      if (it->second->left_ring_ptr().get() != diag_[i].get() ||
          it->second->right_ring_ptr().get() != diag_[j].get())
        throw validation_error(label_ + ": bimodule (" + std::to_string(i + 1) + "," +
                               std::to_string(j + 1) + ") is not wired to the diagonal rings");
    }
  theta_.assign(n_ * n_ * n_, nullptr);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k) {
        bool free_slot = (j != i && j != k);
        if (!free_slot) continue;
        auto it = thetas.find({i, j, k});
        if (it == thetas.end())
          throw validation_error(label_ + ": missing theta (" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
        theta_[(i * n_ + j) * n_ + k] = it->second;
      }

  stride_.assign(n_ * n_, 1);
  std::uint64_t s = 1;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      stride_[i * n_ + j] = s;
      std::uint64_t es = entry_size(i, j);
      if (s > (std::uint64_t(1) << 40) / es)
        throw tier_error(label_ + ": ring is too large to enumerate");
      s *= es;
    }
  size_ = s;

  std::vector<Elem> zeros(n_ * n_), ones(n_ * n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      zeros[i * n_ + j] = entry_zero(i, j);
      ones[i * n_ + j] = i == j ? diag_[i]->one() : entry_zero(i, j);
    }
  zero_ = from_entries(zeros);
  one_ = from_entries(ones);
  if (label_.empty()) {
    std::ostringstream os;
    os << n_ << "x" << n_ << " gmr over " << diag_[0]->name();
    label_ = os.str();
  }
}

std::uint64_t GmrRing::entry_size(int i, int j) const {
  return i == j ? diag_[i]->size() : offdiag_[i * n_ + j]->size();
}

Elem GmrRing::entry_zero(int i, int j) const {
  return i == j ? diag_[i]->zero() : offdiag_[i * n_ + j]->zero();
}

Elem GmrRing::entry_add(int i, int j, Elem a, Elem b) const {
  return i == j ? diag_[i]->add(a, b) : offdiag_[i * n_ + j]->add(a, b);
}

Elem GmrRing::entry_neg(int i, int j, Elem a) const {
  return i == j ? diag_[i]->neg(a) : offdiag_[i * n_ + j]->neg(a);
}

const std::vector<Elem>& GmrRing::entry_gens(int i, int j) const {
  return i == j ? diag_[i]->additive_generators()
                : offdiag_[i * n_ + j]->additive_generators();
}

std::string GmrRing::entry_describe(int i, int j, Elem a) const {
  return i == j ? diag_[i]->describe(a) : offdiag_[i * n_ + j]->describe(a);
}

Elem GmrRing::pair_entries(int i, int j, int k, Elem a, Elem b) const {
  if (i == j) {
    if (j == k) return diag_[i]->mul(a, b);
    return offdiag_[i * n_ + k]->left_act(a, b);
  }
  if (j == k) return offdiag_[i * n_ + j]->right_act(a, b);
  return theta_[(i * n_ + j) * n_ + k]->pair(a, b);
}

Elem GmrRing::entry_of(Elem x, int i, int j) const {
  return x / stride_[i * n_ + j] % entry_size(i, j);
}

Elem GmrRing::from_entries(const std::vector<Elem>& grid) const {
  Elem x = 0;
  for (int p = 0; p < n_ * n_; ++p) x += grid[p] * stride_[p];
  return x;
}

Elem GmrRing::single_entry(int i, int j, Elem m) const {
  return zero_ - entry_zero(i, j) * stride_[i * n_ + j] + m * stride_[i * n_ + j];
}

std::vector<Elem> GmrRing::matrix_units() const {
  std::vector<Elem> es;
  for (int i = 0; i < n_; ++i) es.push_back(matrix_unit(i));
  return es;
}

Elem GmrRing::add(Elem a, Elem b) const {
  Elem out = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      int p = i * n_ + j;
      out += entry_add(i, j, entry_of(a, i, j), entry_of(b, i, j)) * stride_[p];
    }
  return out;
}

Elem GmrRing::neg(Elem a) const {
  Elem out = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      int p = i * n_ + j;
      out += entry_neg(i, j, entry_of(a, i, j)) * stride_[p];
    }
  return out;
}

Elem GmrRing::mul(Elem a, Elem b) const {
  std::array<Elem, kMaxBlocks * kMaxBlocks> xa, xb;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      xa[i * n_ + j] = entry_of(a, i, j);
      xb[i * n_ + j] = entry_of(b, i, j);
    }
  Elem out = 0;
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      Elem acc = entry_zero(i, k);
      for (int j = 0; j < n_; ++j)
        acc = entry_add(i, k, acc, pair_entries(i, j, k, xa[i * n_ + j], xb[j * n_ + k]));
      out += acc * stride_[i * n_ + k];
    }
  return out;
}

std::string GmrRing::describe(Elem a) const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n_; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < n_; ++j) {
      if (j) os << ",";
      os << entry_describe(i, j, entry_of(a, i, j));
    }
  }
  os << "]";
  return os.str();
}

std::vector<Elem> GmrRing::compute_additive_generators() const {
  std::vector<Elem> gens;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (Elem g : entry_gens(i, j)) gens.push_back(single_entry(i, j, g));
  return gens;
}

namespace {

template <typename Fn>
void theta_domains(const GmrRing& g, int i, int j, int k, int l, const Config& cfg, Fn&& fn) {
  std::uint64_t s1 = g.entry_size(i, j), s2 = g.entry_size(j, k), s3 = g.entry_size(k, l);
  if (s1 * s2 * s3 <= cfg.exhaustive_triple_cap) {
    for (Elem a = 0; a < s1; ++a)
      for (Elem b = 0; b < s2; ++b)
        for (Elem c = 0; c < s3; ++c) fn(a, b, c);
    return;
  }
  for (Elem a : g.entry_gens(i, j))
    for (Elem b : g.entry_gens(j, k))
      for (Elem c : g.entry_gens(k, l)) fn(a, b, c);
  Rng rng(cfg.seed + i * 1000 + j * 100 + k * 10 + l);
  for (std::uint64_t t = 0; t < cfg.sample_triples; ++t)
    fn(random_below(rng, s1), random_below(rng, s2), random_below(rng, s3));
}

}  // namespace

void validate_gmr(const GmrRing& g, const Config& cfg) {
  const int n = g.blocks();

  // Pairing biadditivity for the free slots.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (j == i || j == k) continue;
        std::uint64_t s1 = g.entry_size(i, j), s2 = g.entry_size(j, k);
        auto check = [&](Elem a, Elem a2, Elem b) {
          Elem lhs = g.pair_entries(i, j, k, g.entry_add(i, j, a, a2), b);
          Elem rhs = g.entry_add(i, k, g.pair_entries(i, j, k, a, b),
                                 g.pair_entries(i, j, k, a2, b));
          if (lhs != rhs)
            throw validation_error(g.name() + ": theta(" + std::to_string(i + 1) + "," +
                                   std::to_string(j + 1) + "," + std::to_string(k + 1) +
                                   ") is not additive in its first argument at " +
                                   g.entry_describe(i, j, a) + ", " + g.entry_describe(i, j, a2) +
                                   ", " + g.entry_describe(j, k, b));
        };
        if (s1 * s1 * s2 <= cfg.exhaustive_triple_cap) {
          for (Elem a = 0; a < s1; ++a)
            for (Elem a2 = 0; a2 < s1; ++a2)
              for (Elem b = 0; b < s2; ++b) check(a, a2, b);
        } else {
          for (Elem a : g.entry_gens(i, j))
            for (Elem a2 : g.entry_gens(i, j))
              for (Elem b : g.entry_gens(j, k)) check(a, a2, b);
        }
        auto check2 = [&](Elem a, Elem b, Elem b2) {
          Elem lhs = g.pair_entries(i, j, k, a, g.entry_add(j, k, b, b2));
          Elem rhs = g.entry_add(i, k, g.pair_entries(i, j, k, a, b),
                                 g.pair_entries(i, j, k, a, b2));
          if (lhs != rhs)
            throw validation_error(g.name() + ": theta(" + std::to_string(i + 1) + "," +
                                   std::to_string(j + 1) + "," + std::to_string(k + 1) +
                                   ") is not additive in its second argument");
        };
        if (s1 * s2 * s2 <= cfg.exhaustive_triple_cap) {
          for (Elem a = 0; a < s1; ++a)
            for (Elem b = 0; b < s2; ++b)
              for (Elem b2 = 0; b2 < s2; ++b2) check2(a, b, b2);
        } else {
          for (Elem a : g.entry_gens(i, j))
            for (Elem b : g.entry_gens(j, k))
              for (Elem b2 : g.entry_gens(j, k)) check2(a, b, b2);
        }
      }

  // The associativity relation across all index quadruples. With pairing
  // additivity established, generator triples decide each quadruple exactly;
  // random samples are kept above the exhaustive cap as a wiring guard.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          theta_domains(g, i, j, k, l, cfg, [&](Elem a, Elem b, Elem c) {
            Elem lhs = g.pair_entries(i, k, l, g.pair_entries(i, j, k, a, b), c);
            Elem rhs = g.pair_entries(i, j, l, a, g.pair_entries(j, k, l, b, c));
            if (lhs != rhs) {
              std::ostringstream os;
              os << g.name() << ": associativity relation fails at quadruple (" << i + 1 << ","
                 << j + 1 << "," << k + 1 << "," << l + 1 << ") with m1 = "
                 << g.entry_describe(i, j, a) << ", m2 = " << g.entry_describe(j, k, b)
                 << ", m3 = " << g.entry_describe(k, l, c) << ": got "
                 << g.entry_describe(i, l, lhs) << " vs " << g.entry_describe(i, l, rhs);
              throw validation_error(os.str());
            }
          });
        }

  // Diagonal matrix units form a complete orthogonal set.
  auto units = g.matrix_units();
  Elem sum = g.zero();
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (g.mul(units[i], units[i]) != units[i])
      throw validation_error(g.name() + ": matrix unit is not idempotent");
    for (std::size_t j = 0; j < units.size(); ++j)
      if (i != j && g.mul(units[i], units[j]) != g.zero())
        throw validation_error(g.name() + ": matrix units are not orthogonal");
    sum = g.add(sum, units[i]);
  }
  if (sum != g.one())
    throw validation_error(g.name() + ": matrix units do not sum to the identity");
}

GmrPtr build_gmr(GmrComponents parts, const Config& cfg, GmrBuildOptions options) {
  if (options.validate_components) {
    for (const auto& r : parts.diagonal) validate_ring(*r, cfg);
    for (const auto& [pos, m] : parts.bimodules) validate_bimodule(*m, cfg);
  }
  auto g = std::make_shared<GmrRing>(std::move(parts.diagonal), std::move(parts.bimodules),
                                     std::move(parts.thetas), std::move(options.label));
  if (options.validate) validate_gmr(*g, cfg);
  return g;
}

AmbientEntry AmbientEntry::full(const Ring& a) {
  return {Subset::full(a), Subset::single(a, a.zero())};
}

AmbientEntry AmbientEntry::zero(const Ring& a) {
  return {Subset::single(a, a.zero()), Subset::single(a, a.zero())};
}

AmbientEntry AmbientEntry::ideal(const Ring& a, std::span<const Elem> gens) {
  return {ideal_generated(a, gens), Subset::single(a, a.zero())};
}

AmbientEntry AmbientEntry::subring(const Ring& a, std::span<const Elem> gens) {
  return {subring_generated(a, gens), Subset::single(a, a.zero())};
}

AmbientEntry AmbientEntry::quotient(const Ring& a, std::span<const Elem> gens) {
  return {Subset::full(a), ideal_generated(a, gens)};
}

AmbientEntry AmbientEntry::sub_mod(Subset sub, Subset mod) {
  return {std::move(sub), std::move(mod)};
}

GmrPtr make_ambient_gmr(RingPtr ambient, std::vector<std::vector<AmbientEntry>> grid,
                        const Config& cfg, std::string label) {
  const Ring& amb = *ambient;
  const int n = static_cast<int>(grid.size());
  for (const auto& row : grid)
    if (static_cast<int>(row.size()) != n)
      throw validation_error("ambient grid must be square");
  if (label.empty()) label = std::to_string(n) + "x" + std::to_string(n) + " over " + amb.name();

  auto pos_name = [](int i, int j) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
  };

  // Diagonal entries become unital subrings of the ambient ring.
  GmrComponents parts;
  std::vector<SubquotientPtr> diag_sq;
  for (int i = 0; i < n; ++i) {
    const auto& e = grid[i][i];
    if (!e.mod.is_zero())
      throw validation_error(label + ": diagonal entry " + pos_name(i, i) +
                             " must be a subring, not a quotient");
    if (!e.sub.contains(amb.one()))
      throw validation_error(label + ": diagonal entry " + pos_name(i, i) +
                             " does not contain the ambient unity");
    auto sr = make_subring(ambient, e.sub, label + " diag " + std::to_string(i + 1));
    diag_sq.push_back(sr);
    parts.diagonal.push_back(sr);
  }

  auto lift_of = [&](int i) {
    auto sq = diag_sq[i];
    return LiftFn([sq](Elem x) { return sq->lift(x); });
  };

  std::vector<std::vector<std::shared_ptr<const SubquotientBimodule>>> mods(
      n, std::vector<std::shared_ptr<const SubquotientBimodule>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      auto bm = std::make_shared<SubquotientBimodule>(
          ambient, grid[i][j].sub, grid[i][j].mod, parts.diagonal[i], lift_of(i),
          parts.diagonal[j], lift_of(j), label + " entry " + pos_name(i, j));
      mods[i][j] = bm;
      parts.bimodules[{i, j}] = bm;
    }

  // Entry products must land in the target entry and respect the moduli;
  // generators decide both. Then every free pairing is ambient
  // multiplication followed by projection.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (j == i || j == k) continue;
        const auto& src1 = grid[i][j];
        const auto& src2 = grid[j][k];
        const auto& dst = grid[i][k];
        for (Elem a : src1.sub.additive_generators())
          for (Elem b : src2.sub.additive_generators())
            if (!dst.sub.contains(amb.mul(a, b)))
              throw validation_error(label + ": containment failure, entry " + pos_name(i, j) +
                                     " * entry " + pos_name(j, k) + " leaves entry " +
                                     pos_name(i, k) + " at witness " + amb.describe(a) + " * " +
                                     amb.describe(b) + " = " + amb.describe(amb.mul(a, b)));
        for (Elem a : src1.mod.additive_generators())
          for (Elem b : src2.sub.additive_generators())
            if (!dst.mod.contains(amb.mul(a, b)))
              throw validation_error(label + ": modulus of entry " + pos_name(i, j) +
                                     " is not respected by multiplication into " + pos_name(i, k));
        for (Elem a : src1.sub.additive_generators())
          for (Elem b : src2.mod.additive_generators())
            if (!dst.mod.contains(amb.mul(a, b)))
              throw validation_error(label + ": modulus of entry " + pos_name(j, k) +
                                     " is not respected by multiplication into " + pos_name(i, k));

        LiftFn la = i == j ? lift_of(i) : LiftFn([bm = mods[i][j]](Elem x) { return bm->lift(x); });
        LiftFn lb = j == k ? lift_of(j) : LiftFn([bm = mods[j][k]](Elem x) { return bm->lift(x); });
        LiftFn proj;
        if (i == k) {
          auto sq = diag_sq[i];
          proj = [sq](Elem x) { return sq->project(x); };
        } else {
          auto bm = mods[i][k];
          proj = [bm](Elem x) { return bm->project(x); };
        }
        parts.thetas[{i, j, k}] = std::make_shared<LiftedMulTheta>(
            ambient, std::move(la), std::move(lb), std::move(proj),
            "ambient mult " + pos_name(i, j) + "*" + pos_name(j, k));
      }

  GmrBuildOptions opts;
  opts.label = std::move(label);
  return build_gmr(std::move(parts), cfg, std::move(opts));
}

GmrPtr make_triangular(RingPtr base, int n, bool upper, const Config& cfg) {
  std::vector<std::vector<AmbientEntry>> grid;
  for (int i = 0; i < n; ++i) {
    std::vector<AmbientEntry> row;
    for (int j = 0; j < n; ++j) {
      bool keep = upper ? j >= i : j <= i;
      row.push_back(keep ? AmbientEntry::full(*base) : AmbientEntry::zero(*base));
    }
    grid.push_back(std::move(row));
  }
  std::string label = (upper ? std::string("UT") : std::string("LT")) + std::to_string(n) + "(" +
                      base->name() + ")";
  return make_ambient_gmr(std::move(base), std::move(grid), cfg, std::move(label));
}

GmrPtr make_full_matrix(RingPtr base, int n, const Config& cfg) {
  std::vector<std::vector<AmbientEntry>> grid(
      n, std::vector<AmbientEntry>(n, AmbientEntry::full(*base)));
  std::string label = "M" + std::to_string(n) + "(" + base->name() + ")";
  return make_ambient_gmr(std::move(base), std::move(grid), cfg, std::move(label));
}

}  // namespace peirce
