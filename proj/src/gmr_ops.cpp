#include "peirce/gmr_ops.hpp"

#include <sstream>

#include "peirce/classify.hpp"
#include "peirce/invariants.hpp"
#include "peirce/rings.hpp"

namespace peirce {

bool is_tn(const GmrRing& g, TnWitness* witness, const Config& cfg) {
  const int n = g.blocks();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (Elem a : g.entry_gens(i, j))
        for (Elem b : g.entry_gens(j, i)) {
          Elem p = g.pair_entries(i, j, i, a, b);
          if (p != g.diagonal_ring(i).zero()) {
            if (witness) {
              witness->i = i;
              witness->j = j;
              witness->m = a;
              witness->m2 = b;
              std::ostringstream os;
              os << "theta(" << i + 1 << "," << j + 1 << "," << i + 1 << ")("
                 << g.entry_describe(i, j, a) << ", " << g.entry_describe(j, i, b)
                 << ") = " << g.entry_describe(i, i, p) << " != 0";
              witness->rendered = os.str();
            }
            return false;
          }
        }
    }
  // Cross-check against the diagonal-product criterion on sample pairs: with
  // all theta_iji zero, the diagonal of a product is the product of the
  // diagonals.
  Rng rng(cfg.seed + 17);
  std::uint64_t samples = std::min<std::uint64_t>(cfg.sample_pairs, 200);
  for (std::uint64_t t = 0; t < samples; ++t) {
    Elem x = random_below(rng, g.size());
    Elem y = random_below(rng, g.size());
    Elem xy = g.mul(x, y);
    for (int i = 0; i < n; ++i)
      if (g.entry_of(xy, i, i) !=
          g.diagonal_ring(i).mul(g.entry_of(x, i, i), g.entry_of(y, i, i)))
        throw validation_error(g.name() +
                               ": zero-pairing verdict contradicts the diagonal-product "
                               "criterion; pairing dispatch is broken");
  }
  return true;
}

GmrPtr bar_of(GmrPtr g, const Config& cfg) {
  const int n = g->blocks();
  GmrComponents parts;
  for (int i = 0; i < n; ++i) parts.diagonal.push_back(g->diagonal_ring_ptr(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) parts.bimodules[{i, j}] = g->bimodule_ptr(i, j);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (j == i || j == k) continue;
        if (i == k)
          parts.thetas[{i, j, k}] = std::make_shared<ZeroTheta>(g->diagonal_ring(i).zero());
        else
          parts.thetas[{i, j, k}] = g->user_theta(i, j, k);
      }
  GmrBuildOptions opts;
  opts.validate_components = false;
  opts.label = "bar(" + g->name() + ")";
  // Zeroing theta_iji preserves associativity automatically only for two
  // blocks; re-validation surfaces any broken mixed quadruple.
  return build_gmr(std::move(parts), cfg, std::move(opts));
}

std::uint32_t subgroup_power_nilpotency(const Ring& r, const Subset& s, std::uint32_t cap) {
  std::vector<Elem> basis = s.additive_generators();
  if (basis.empty()) return 1;
  const auto& sgens = s.additive_generators();
  for (std::uint32_t k = 2; k <= cap; ++k) {
    SubgroupBuilder next(r);
    for (Elem x : basis)
      for (Elem y : sgens) next.absorb(r.mul(x, y));
    basis = next.basis;
    if (basis.empty()) return k;
  }
  return 0;
}

DiagonalParts diagonal_parts(GmrPtr g, const Config& cfg) {
  const GmrRing& G = *g;
  const int n = G.blocks();

  std::vector<RingPtr> diags;
  for (int i = 0; i < n; ++i) diags.push_back(G.diagonal_ring_ptr(i));
  auto dring = std::make_shared<ProductRing>(diags);

  // Diagonal member enumeration by odometer over the diagonal entries.
  std::vector<Elem> dmem;
  {
    std::vector<Elem> tuple(n, 0);
    while (true) {
      std::vector<Elem> grid(n * n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) grid[i * n + j] = i == j ? tuple[i] : G.entry_zero(i, j);
      dmem.push_back(G.from_entries(grid));
      int v = 0;
      while (v < n && ++tuple[v] >= G.diagonal_ring(v).size()) tuple[v++] = 0;
      if (v == n) break;
    }
  }

  // Off-diagonal member enumeration.
  std::vector<Elem> xmem;
  {
    std::vector<std::pair<int, int>> pos;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) pos.emplace_back(i, j);
    std::vector<Elem> tuple(pos.size(), 0);
    while (true) {
      std::vector<Elem> grid(n * n);
      for (int i = 0; i < n; ++i) grid[i * n + i] = G.diagonal_ring(i).zero();
      for (std::size_t p = 0; p < pos.size(); ++p)
        grid[pos[p].first * n + pos[p].second] = tuple[p];
      xmem.push_back(G.from_entries(grid));
      std::size_t v = 0;
      while (v < pos.size() &&
             ++tuple[v] >= G.entry_size(pos[v].first, pos[v].second))
        tuple[v++] = 0;
      if (v == pos.size()) break;
    }
  }

  DiagonalParts out{Subset::of(G, dmem), Subset::of(G, xmem), dring, {}, {}};
  const GmrRing* gp = g.get();
  auto dr = dring;
  out.embed = [gp, dr, n](Elem d) {
    std::vector<Elem> grid(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        grid[i * n + j] = i == j ? dr->component(d, i) : gp->entry_zero(i, j);
    return gp->from_entries(grid);
  };
  out.project_diag = [gp, dr, n](Elem x) {
    std::vector<Elem> comps(n);
    for (int i = 0; i < n; ++i) comps[i] = gp->entry_of(x, i, i);
    return dr->from_components(comps);
  };

  out.dminus_left_ideal = out.dminus.is_left_ideal();
  out.dminus_right_ideal = out.dminus.is_right_ideal();
  out.dminus_nilpotency = subgroup_power_nilpotency(G, out.dminus, n);

  if (is_tn(G, nullptr, cfg)) {
    if (!out.dminus_left_ideal || !out.dminus_right_ideal)
      throw validation_error(G.name() +
                             ": off-diagonal complement must be an ideal when all "
                             "theta_iji vanish");
    if (out.dminus_nilpotency == 0)
      throw validation_error(G.name() + ": off-diagonal complement power did not vanish");

    // Quotient by the complement is the diagonal product; the composite of
    // embed and projection is a homomorphism (embedding is multiplicative
    // because pairings kill zero entries), so sizes plus trivial kernel give
    // the isomorphism.
    auto q = make_quotient(g, out.dminus);
    if (q->size() != dring->size())
      throw validation_error(G.name() + ": quotient by the off-diagonal complement has size " +
                             std::to_string(q->size()) + ", expected " +
                             std::to_string(dring->size()));
    if (!out.d.intersect(out.dminus).is_zero())
      throw validation_error(G.name() + ": diagonal and complement overlap");
    for (Elem a : dring->additive_generators())
      for (Elem b : dring->additive_generators()) {
        Elem lhs = q->project(out.embed(dring->mul(a, b)));
        Elem rhs = q->mul(q->project(out.embed(a)), q->project(out.embed(b)));
        if (lhs != rhs)
          throw validation_error(G.name() + ": diagonal embedding is not multiplicative");
      }
    out.quotient_iso_verified = true;
  }
  return out;
}

Subset GmrSubringView::as_subset() const {
  std::vector<Elem> members;
  members.reserve(ring->size());
  for (Elem x = 0; x < ring->size(); ++x) members.push_back(embed(x));
  return Subset::of(*host, std::move(members));
}

namespace {

GmrSubringView restricted_view(GmrPtr g, bool cut_lower, const Config& cfg,
                               const std::string& label) {
  const GmrRing& G = *g;
  const int n = G.blocks();
  auto cut = [&](int i, int j) { return cut_lower ? i > j : i < j; };

  GmrComponents parts;
  for (int i = 0; i < n; ++i) parts.diagonal.push_back(G.diagonal_ring_ptr(i));

  std::vector<std::shared_ptr<const SubBimodule>> subs(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (!cut(i, j)) {
        parts.bimodules[{i, j}] = G.bimodule_ptr(i, j);
        continue;
      }
      // Two-sided annihilator of M_ji inside M_ij, decided on generators.
      std::vector<Elem> members;
      const auto& hgens = G.entry_gens(j, i);
      for (Elem m = 0; m < G.entry_size(i, j); ++m) {
        bool keep = true;
        for (Elem h : hgens) {
          if (G.pair_entries(j, i, j, h, m) != G.diagonal_ring(j).zero() ||
              G.pair_entries(i, j, i, m, h) != G.diagonal_ring(i).zero()) {
            keep = false;
            break;
          }
        }
        if (keep) members.push_back(m);
      }
      auto sb = std::make_shared<SubBimodule>(
          G.bimodule_ptr(i, j), std::move(members),
          label + " entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      subs[i * n + j] = sb;
      parts.bimodules[{i, j}] = sb;
    }

  auto lift_fn = [&](int i, int j) -> LiftFn {
    if (i != j && subs[i * n + j])
      return [sb = subs[i * n + j]](Elem x) { return sb->lift(x); };
    return [](Elem x) { return x; };
  };
  auto project_fn = [&](int i, int j) -> LiftFn {
    if (i != j && subs[i * n + j])
      return [sb = subs[i * n + j]](Elem x) { return sb->project(x); };
    return [](Elem x) { return x; };
  };

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (j == i || j == k) continue;
        if (i == k) {
          // One of the sources is an annihilator restriction, so the pairing
          // vanishes on the view.
          parts.thetas[{i, j, k}] = std::make_shared<ZeroTheta>(G.diagonal_ring(i).zero());
        } else {
          parts.thetas[{i, j, k}] = std::make_shared<WrappedTheta>(
              G.user_theta(i, j, k), lift_fn(i, j), lift_fn(j, k), project_fn(i, k));
        }
      }

  GmrBuildOptions opts;
  opts.validate_components = false;
  opts.label = label;
  GmrSubringView view;
  view.ring = build_gmr(std::move(parts), cfg, std::move(opts));
  view.host = g;

  std::vector<LiftFn> lifters(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) lifters[i * n + j] = lift_fn(i, j);
  auto vr = view.ring;
  view.embed = [vr, g, lifters, n](Elem x) {
    std::vector<Elem> grid(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        grid[i * n + j] = lifters[i * n + j](vr->entry_of(x, i, j));
    return g->from_entries(grid);
  };

  // The view must land in the zero-pairing class and embed as a subring; the
  // embedding is additive by construction, multiplicativity is decided on
  // generators. Products in bar(host) differ from host products only through
  // theta_iji, which the restricted entries annihilate, so a subring of the
  // host here is a subring of bar(host) too.
  if (!is_tn(*view.ring, nullptr, cfg))
    throw validation_error(label + ": annihilating subring is not in the zero-pairing class");
  for (Elem a : view.ring->additive_generators())
    for (Elem b : view.ring->additive_generators())
      if (view.embed(view.ring->mul(a, b)) != g->mul(view.embed(a), view.embed(b)))
        throw validation_error(label + ": embedding into the host is not multiplicative");
  return view;
}

}  // namespace

AnnihilatingSubrings annihilating_subrings(GmrPtr g, const Config& cfg) {
  AnnihilatingSubrings out;
  out.la = restricted_view(g, true, cfg, g->name() + " lower-annihilating");
  out.ua = restricted_view(g, false, cfg, g->name() + " upper-annihilating");
  return out;
}

TriangularParts triangular_parts(GmrPtr g, const Config& cfg) {
  const GmrRing& G = *g;
  const int n = G.blocks();
  if (!is_tn(G, nullptr, cfg))
    throw validation_error(G.name() +
                           ": triangular subdirect decomposition needs zero theta_iji");

  auto make_part = [&](bool upper) {
    GmrComponents parts;
    for (int i = 0; i < n; ++i) parts.diagonal.push_back(G.diagonal_ring_ptr(i));
    auto kept = [&](int i, int j) { return upper ? j >= i : j <= i; };
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        if (kept(i, j))
          parts.bimodules[{i, j}] = G.bimodule_ptr(i, j);
        else
          parts.bimodules[{i, j}] = std::make_shared<ZeroBimodule>(G.diagonal_ring_ptr(i),
                                                                   G.diagonal_ring_ptr(j));
      }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          if (j == i || j == k) continue;
          if (i != k && kept(i, j) && kept(j, k)) {
            parts.thetas[{i, j, k}] = G.user_theta(i, j, k);
          } else {
            Elem target_zero = i == k              ? G.diagonal_ring(i).zero()
                               : kept(i, k)        ? G.bimodule(i, k).zero()
                                                   : Elem{0};
            parts.thetas[{i, j, k}] = std::make_shared<ZeroTheta>(target_zero);
          }
        }
    GmrBuildOptions opts;
    opts.validate_components = false;
    opts.label = (upper ? "UT(" : "LT(") + G.name() + ")";
    return build_gmr(std::move(parts), cfg, std::move(opts));
  };

  TriangularParts out;
  out.ut = make_part(true);
  out.lt = make_part(false);

  const GmrRing* gp = g.get();
  auto part_code = [gp, n](const GmrPtr& part, Elem x, bool upper) {
    std::vector<Elem> grid(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        bool kept = upper ? j >= i : j <= i;
        grid[i * n + j] = kept ? gp->entry_of(x, i, j) : part->entry_zero(i, j);
      }
    return part->from_entries(grid);
  };
  auto ut = out.ut;
  auto lt = out.lt;
  out.psi = [ut, lt, part_code](Elem x) {
    return std::make_pair(part_code(ut, x, true), part_code(lt, x, false));
  };
  out.embed_ut = [gp, ut, n](Elem u) {
    std::vector<Elem> grid(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        grid[i * n + j] = j >= i ? ut->entry_of(u, i, j) : gp->entry_zero(i, j);
    return gp->from_entries(grid);
  };
  out.embed_lt = [gp, lt, n](Elem u) {
    std::vector<Elem> grid(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        grid[i * n + j] = j <= i ? lt->entry_of(u, i, j) : gp->entry_zero(i, j);
    return gp->from_entries(grid);
  };

  // Injectivity is positional: every entry survives in one of the parts.
  // The sections witness surjectivity of the coordinate projections.
  // Multiplicativity is decided on generator pairs (exact) plus seeded
  // samples and reported rather than asserted: for three or more blocks a
  // term x_ij y_jk with j outside [i, k] can feed a kept target from a
  // dropped entry even though every theta_iji vanishes.
  out.multiplicative = true;
  auto check_pair = [&](Elem x, Elem y) {
    if (!out.multiplicative) return;
    auto [ux, lx] = out.psi(x);
    auto [uy, ly] = out.psi(y);
    auto [uxy, lxy] = out.psi(G.mul(x, y));
    if (out.ut->mul(ux, uy) != uxy || out.lt->mul(lx, ly) != lxy) {
      out.multiplicative = false;
      out.multiplicativity_witness = G.describe(x) + " * " + G.describe(y) + " = " +
                                     G.describe(G.mul(x, y)) +
                                     " is not tracked by the triangular parts";
    }
  };
  for (Elem a : G.additive_generators())
    for (Elem b : G.additive_generators()) check_pair(a, b);
  Rng rng(cfg.seed + 23);
  for (std::uint64_t t = 0; t < cfg.sample_pairs && out.multiplicative; ++t)
    check_pair(random_below(rng, G.size()), random_below(rng, G.size()));
  if (n == 2 && !out.multiplicative)
    throw validation_error(G.name() + ": two-block triangular projection must be a " +
                           "homomorphism; " + *out.multiplicativity_witness);
  for (Elem u : out.ut->additive_generators())
    if (out.psi(out.embed_ut(u)).first != u)
      throw validation_error(G.name() + ": upper projection section failed");
  for (Elem u : out.lt->additive_generators())
    if (out.psi(out.embed_lt(u)).second != u)
      throw validation_error(G.name() + ": lower projection section failed");
  return out;
}

Subset gmr_center(const GmrRing& g, const Config& cfg) {
  const int n = g.blocks();
  std::vector<std::vector<Elem>> cen(n);
  for (int i = 0; i < n; ++i) cen[i] = center_subset(g.diagonal_ring(i)).members();

  std::vector<Elem> members;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        if (i == j) continue;
        const Bimodule& m = g.bimodule(i, j);
        for (Elem mg : m.additive_generators())
          if (m.left_act(cen[i][idx[i]], mg) != m.right_act(mg, cen[j][idx[j]])) {
            ok = false;
            break;
          }
      }
    if (ok) {
      std::vector<Elem> grid(n * n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          grid[i * n + j] = i == j ? cen[i][idx[i]] : g.entry_zero(i, j);
      members.push_back(g.from_entries(grid));
    }
    int v = 0;
    while (v < n && ++idx[v] >= cen[v].size()) idx[v++] = 0;
    if (v == n) break;
  }
  Subset out = Subset::of(g, std::move(members));
  if (g.size() <= (std::uint64_t(1) << 19)) {
    if (!(out == center_subset(g)))
      throw validation_error(g.name() +
                             ": diagonal center characterization disagrees with the "
                             "generic center scan");
  }
  (void)cfg;
  return out;
}

Subset unit_group_via_diagonal(GmrPtr g, const Config& cfg) {
  const GmrRing& G = *g;
  if (!is_tn(G, nullptr, cfg))
    throw validation_error(G.name() + ": unit decomposition needs zero theta_iji");
  const int n = G.blocks();
  std::vector<std::vector<Elem>> units(n);
  for (int i = 0; i < n; ++i) units[i] = unit_set(G.diagonal_ring(i)).members();

  auto parts = diagonal_parts(g, cfg);
  std::vector<Elem> members;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::vector<Elem> grid(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        grid[i * n + j] = i == j ? units[i][idx[i]] : G.entry_zero(i, j);
    Elem u = G.from_entries(grid);
    for (Elem x : parts.dminus.members()) members.push_back(G.add(u, x));
    int v = 0;
    while (v < n && ++idx[v] >= units[v].size()) idx[v++] = 0;
    if (v == n) break;
  }
  Subset out = Subset::of(G, std::move(members));
  if (G.size() <= cfg.structure_tier) {
    if (!(out == unit_set(G)))
      throw validation_error(G.name() +
                             ": diagonal unit decomposition disagrees with brute-force "
                             "unit enumeration");
  }
  return out;
}

PeirceDecomposition peirce_decompose(RingPtr r, std::vector<Elem> es, const Config& cfg) {
  const Ring& R = *r;
  std::string why;
  if (!is_complete_orthogonal(R, es, &why))
    throw validation_error("peirce_decompose on " + R.name() + ": " + why);
  const int n = static_cast<int>(es.size());

  GmrComponents parts;
  std::vector<SubquotientPtr> corners;
  for (int i = 0; i < n; ++i) {
    corners.push_back(make_corner(r, es[i], R.name() + " corner " + R.describe(es[i])));
    parts.diagonal.push_back(corners.back());
  }
  auto corner_lift = [&](int i) -> LiftFn {
    return [c = corners[i]](Elem x) { return c->lift(x); };
  };

  std::vector<std::shared_ptr<const SubquotientBimodule>> mods(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      std::vector<Elem> members;
      members.reserve(256);
      for (Elem x = 0; x < R.size(); ++x)
        members.push_back(R.mul(R.mul(es[i], x), es[j]));
      std::sort(members.begin(), members.end());
      members.erase(std::unique(members.begin(), members.end()), members.end());
      auto bm = std::make_shared<SubquotientBimodule>(
          r, Subset::of(R, std::move(members)), Subset::single(R, R.zero()), corners[i],
          corner_lift(i), corners[j], corner_lift(j),
          R.name() + " corner (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      mods[i * n + j] = bm;
      parts.bimodules[{i, j}] = bm;
    }

  auto lift_at = [&](int i, int j) -> LiftFn {
    if (i == j) return corner_lift(i);
    return [bm = mods[i * n + j]](Elem x) { return bm->lift(x); };
  };
  auto project_at = [&](int i, int j) -> LiftFn {
    if (i == j) return [c = corners[i]](Elem x) { return c->project(x); };
    return [bm = mods[i * n + j]](Elem x) { return bm->project(x); };
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (j == i || j == k) continue;
        parts.thetas[{i, j, k}] = std::make_shared<LiftedMulTheta>(
            r, lift_at(i, j), lift_at(j, k), project_at(i, k), "corner product");
      }

  GmrBuildOptions opts;
  opts.label = R.name() + " arranged along " + std::to_string(n) + " idempotents";
  PeirceDecomposition out;
  out.source = r;
  out.idempotents = es;
  out.gmr = build_gmr(std::move(parts), cfg, std::move(opts));

  if (out.gmr->size() != R.size())
    throw validation_error(opts.label + ": grid size " + std::to_string(out.gmr->size()) +
                           " does not match the ring size " + std::to_string(R.size()));

  auto gm = out.gmr;
  auto rr = r;
  auto es_copy = es;
  {
    std::vector<LiftFn> projections(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j)
          projections[i * n + j] = [c = corners[i]](Elem x) { return c->project(x); };
        else
          projections[i * n + j] = [bm = mods[i * n + j]](Elem x) { return bm->project(x); };
      }
    out.to_gmr = [gm, rr, es_copy, n, projections](Elem x) {
      std::vector<Elem> grid(n * n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          grid[i * n + j] =
              projections[i * n + j](rr->mul(rr->mul(es_copy[i], x), es_copy[j]));
      return gm->from_entries(grid);
    };
    std::vector<LiftFn> lifts(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) lifts[i * n + j] = lift_at(i, j);
    out.from_gmr = [gm, rr, lifts, n](Elem v) {
      Elem acc = rr->zero();
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          acc = rr->add(acc, lifts[i * n + j](gm->entry_of(v, i, j)));
      return acc;
    };
  }

  // The Peirce components reassemble every element, so the arrangement map
  // is bijective; multiplicativity is checked exhaustively at small sizes
  // and on generators plus samples above.
  auto check_roundtrip = [&](Elem x) {
    if (out.from_gmr(out.to_gmr(x)) != x)
      throw validation_error(out.gmr->name() + ": Peirce components do not reassemble " +
                             R.describe(x));
  };
  if (R.size() <= (std::uint64_t(1) << 20))
    for (Elem x = 0; x < R.size(); ++x) check_roundtrip(x);
  else
    for (Elem gx : R.additive_generators()) check_roundtrip(gx);
  if (out.to_gmr(R.one()) != out.gmr->one())
    throw validation_error(out.gmr->name() + ": arrangement does not fix the identity");

  auto check_pair = [&](Elem x, Elem y) {
    if (out.to_gmr(R.mul(x, y)) != out.gmr->mul(out.to_gmr(x), out.to_gmr(y)))
      throw validation_error(out.gmr->name() + ": arrangement is not multiplicative at " +
                             R.describe(x) + ", " + R.describe(y));
  };
  if (R.size() <= cfg.hom_pair_tier) {
    for (Elem x = 0; x < R.size(); ++x)
      for (Elem y = 0; y < R.size(); ++y) check_pair(x, y);
  } else {
    for (Elem a : R.additive_generators())
      for (Elem b : R.additive_generators()) check_pair(a, b);
    Rng rng(cfg.seed + 31);
    for (std::uint64_t t = 0; t < cfg.sample_pairs; ++t)
      check_pair(random_below(rng, R.size()), random_below(rng, R.size()));
  }

  out.in_tn = is_tn(*out.gmr, nullptr, cfg);
  bool all_inner = true;
  for (Elem e : es) {
    bool inner = inner_peirce_trivial(R, e);
    out.inner_pt.push_back(inner);
    all_inner = all_inner && inner;
  }
  if (out.in_tn != all_inner)
    throw validation_error(out.gmr->name() +
                           ": zero-pairing verdict disagrees with inner triviality of the "
                           "idempotents");
  return out;
}

PeirceDecomposition block_partition(RingPtr r, std::span<const Elem> es,
                                    const std::vector<std::vector<int>>& groups,
                                    const Config& cfg) {
  const Ring& R = *r;
  std::string why;
  if (!is_complete_orthogonal(R, es, &why))
    throw validation_error("block_partition on " + R.name() + ": " + why);
  std::vector<bool> used(es.size(), false);
  std::vector<Elem> sums;
  for (const auto& grp : groups) {
    if (grp.empty()) throw validation_error("block_partition: empty group");
    Elem f = R.zero();
    for (int i : grp) {
      if (i < 0 || i >= static_cast<int>(es.size()) || used[i])
        throw validation_error("block_partition: groups must partition the idempotent list");
      used[i] = true;
      f = R.add(f, es[i]);
    }
    sums.push_back(f);
  }
  for (bool u : used)
    if (!u) throw validation_error("block_partition: groups must cover the idempotent list");
  return peirce_decompose(std::move(r), std::move(sums), cfg);
}

}  // namespace peirce
