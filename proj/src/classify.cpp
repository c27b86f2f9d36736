#include "peirce/classify.hpp"

namespace peirce {

namespace {

// e x (1-e) y e over additive generator pairs; exact by biadditivity.
bool corner_products_vanish(const Ring& r, Elem left, Elem mid, Elem right,
                            PairWitness* witness) {
  const auto& gens = r.additive_generators();
  std::vector<Elem> lefts, rights;
  lefts.reserve(gens.size());
  rights.reserve(gens.size());
  for (Elem g : gens) {
    lefts.push_back(r.mul(r.mul(left, g), mid));
    rights.push_back(r.mul(g, right));
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (lefts[i] == r.zero()) continue;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (r.mul(lefts[i], rights[j]) != r.zero()) {
        if (witness) *witness = {gens[i], gens[j]};
        return false;
      }
    }
  }
  return true;
}

}  // namespace

bool inner_peirce_trivial(const Ring& r, Elem e, PairWitness* witness) {
  Elem f = r.sub(r.one(), e);
  return corner_products_vanish(r, e, f, e, witness);
}

bool outer_peirce_trivial(const Ring& r, Elem e, PairWitness* witness) {
  Elem f = r.sub(r.one(), e);
  return corner_products_vanish(r, f, e, f, witness);
}

bool is_peirce_trivial(const Ring& r, Elem e) {
  return inner_peirce_trivial(r, e) && outer_peirce_trivial(r, e);
}

bool inner_peirce_trivial_nonunital(const Ring& ambient, const Subset& carrier, Elem e,
                                    PairWitness* witness) {
  // e x y e = e x e y e for all x, y in the carrier.
  const auto& gens = carrier.additive_generators();
  for (Elem x : gens)
    for (Elem y : gens) {
      Elem lhs = ambient.mul(ambient.mul(ambient.mul(e, x), y), e);
      Elem rhs = ambient.mul(ambient.mul(ambient.mul(ambient.mul(e, x), e), y), e);
      if (lhs != rhs) {
        if (witness) *witness = {x, y};
        return false;
      }
    }
  return true;
}

bool outer_peirce_trivial_nonunital(const Ring& ambient, const Subset& carrier, Elem e,
                                    PairWitness* witness) {
  // x e y + e x e y e = x e y e + e x e y for all x, y in the carrier.
  const auto& gens = carrier.additive_generators();
  for (Elem x : gens)
    for (Elem y : gens) {
      Elem xe = ambient.mul(x, e);
      Elem ex = ambient.mul(e, x);
      Elem lhs = ambient.add(ambient.mul(xe, y), ambient.mul(ambient.mul(ex, e), ambient.mul(y, e)));
      Elem rhs = ambient.add(ambient.mul(ambient.mul(xe, y), e), ambient.mul(ex, ambient.mul(e, y)));
      if (lhs != rhs) {
        if (witness) *witness = {x, y};
        return false;
      }
    }
  return true;
}

IdempotentClass classify_idempotent(const Ring& r, Elem e, bool unital_context) {
  if (r.mul(e, e) != e)
    throw error("classify_idempotent: " + r.describe(e) + " is not idempotent in " + r.name());
  IdempotentClass c;
  c.e = e;
  const auto& gens = r.additive_generators();
  Elem f = r.sub(r.one(), e);

  c.central = true;
  for (Elem g : gens)
    if (r.mul(e, g) != r.mul(g, e)) {
      c.central = false;
      break;
    }
  c.left_semicentral = true;  // Re = eRe, i.e. (1-e)Re = 0
  for (Elem g : gens)
    if (r.mul(r.mul(f, g), e) != r.zero()) {
      c.left_semicentral = false;
      break;
    }
  c.right_semicentral = true;  // eR = eRe, i.e. eR(1-e) = 0
  for (Elem g : gens)
    if (r.mul(r.mul(e, g), f) != r.zero()) {
      c.right_semicentral = false;
      break;
    }

  PairWitness w;
  if (unital_context) {
    c.inner_pt = inner_peirce_trivial(r, e, &w);
    if (!c.inner_pt) c.inner_witness = w;
    c.outer_pt = outer_peirce_trivial(r, e, &w);
    if (!c.outer_pt) c.outer_witness = w;
  } else {
    Subset whole = Subset::full(r);
    c.inner_pt = inner_peirce_trivial_nonunital(r, whole, e, &w);
    if (!c.inner_pt) c.inner_witness = w;
    c.outer_pt = outer_peirce_trivial_nonunital(r, whole, e, &w);
    if (!c.outer_pt) c.outer_witness = w;
  }
  c.peirce_trivial = c.inner_pt && c.outer_pt;
  return c;
}

const IdempotentClass* ClassificationReport::find(Elem e) const {
  for (const auto& c : classes)
    if (c.e == e) return &c;
  return nullptr;
}

ClassificationReport classification_report(const Ring& r) {
  ClassificationReport rep;
  rep.ring = &r;
  for (Elem e : enumerate_idempotents(r)) {
    IdempotentClass c = classify_idempotent(r, e);
    if (c.central) rep.central.push_back(e);
    if (c.left_semicentral) rep.left_semicentral.push_back(e);
    if (c.right_semicentral) rep.right_semicentral.push_back(e);
    if (c.inner_pt) rep.inner_pt.push_back(e);
    if (c.outer_pt) rep.outer_pt.push_back(e);
    if (c.peirce_trivial) rep.peirce_trivial.push_back(e);
    rep.classes.push_back(std::move(c));
  }
  return rep;
}

std::array<bool, 7> inner_trivial_conditions(const Ring& r, Elem e,
                                             const std::vector<Elem>& idempotents) {
  std::array<bool, 7> out{};
  const auto& gens = r.additive_generators();
  Elem f = r.sub(r.one(), e);

  std::vector<Elem> s_gens, q_gens;
  for (Elem g : gens) {
    s_gens.push_back(r.mul(r.mul(e, g), f));
    q_gens.push_back(r.mul(r.mul(f, g), e));
  }
  Subset S = additive_closure(r, s_gens);  // eR(1-e)
  Subset Q = additive_closure(r, q_gens);  // (1-e)Re

  // (1) e x y e = e x e y e for all x, y.
  out[0] = [&] {
    for (Elem x : gens)
      for (Elem y : gens)
        if (r.mul(r.mul(r.mul(e, x), y), e) !=
            r.mul(r.mul(r.mul(r.mul(e, x), e), y), e))
          return false;
    return true;
  }();

  // (2) eR(1-e) is a right ideal.
  out[1] = [&] {
    for (Elem s : S.additive_generators())
      for (Elem g : gens)
        if (!S.contains(r.mul(s, g))) return false;
    return true;
  }();

  // (3) (1-e)Re is a left ideal.
  out[2] = [&] {
    for (Elem q : Q.additive_generators())
      for (Elem g : gens)
        if (!Q.contains(r.mul(g, q))) return false;
    return true;
  }();

  // (4) e f g e = e f e g e for idempotent pairs f, g.
  out[3] = [&] {
    for (Elem p : idempotents)
      for (Elem q : idempotents)
        if (r.mul(r.mul(r.mul(e, p), q), e) !=
            r.mul(r.mul(r.mul(r.mul(e, p), e), q), e))
          return false;
    return true;
  }();

  // (5) x -> exe is multiplicative onto eRe.
  out[4] = [&] {
    for (Elem x : gens)
      for (Elem y : gens)
        if (r.mul(r.mul(e, r.mul(x, y)), e) !=
            r.mul(r.mul(r.mul(e, x), e), r.mul(r.mul(e, y), e)))
          return false;
    return true;
  }();

  // (6) eRtRe = 0 whenever ete = 0; {t : ete = 0} is a subgroup.
  out[5] = [&] {
    std::vector<Elem> kernel;
    for (Elem t = 0; t < r.size(); ++t)
      if (r.mul(r.mul(e, t), e) == r.zero()) kernel.push_back(t);
    Subset K = Subset::of(r, std::move(kernel));
    for (Elem t : K.additive_generators())
      for (Elem x : gens) {
        Elem ext = r.mul(r.mul(e, x), t);
        if (ext == r.zero()) continue;
        for (Elem y : gens)
          if (r.mul(r.mul(ext, y), e) != r.zero()) return false;
      }
    return true;
  }();

  // (7) ReR annihilates (1-e)Re on the left.
  out[6] = [&] {
    Subset rer = ideal_generated(r, std::array<Elem, 1>{e});
    for (Elem a : rer.additive_generators())
      for (Elem q : Q.additive_generators())
        if (r.mul(a, q) != r.zero()) return false;
    return true;
  }();

  return out;
}

std::array<bool, 4> outer_trivial_conditions(const Ring& r, Elem e,
                                             const std::vector<Elem>& idempotents) {
  std::array<bool, 4> out{};
  const auto& gens = r.additive_generators();
  Elem f = r.sub(r.one(), e);

  std::vector<Elem> s_gens, q_gens;
  for (Elem g : gens) {
    s_gens.push_back(r.mul(r.mul(e, g), f));
    q_gens.push_back(r.mul(r.mul(f, g), e));
  }
  Subset S = additive_closure(r, s_gens);  // eR(1-e)
  Subset Q = additive_closure(r, q_gens);  // (1-e)Re

  out[0] = outer_peirce_trivial(r, e);

  // (2) eR(1-e) is a left ideal.
  out[1] = [&] {
    for (Elem s : S.additive_generators())
      for (Elem g : gens)
        if (!S.contains(r.mul(g, s))) return false;
    return true;
  }();

  // (3) (1-e)Re is a right ideal.
  out[2] = [&] {
    for (Elem q : Q.additive_generators())
      for (Elem g : gens)
        if (!Q.contains(r.mul(q, g))) return false;
    return true;
  }();

  // (4) f e g + e f e g e = f e g e + e f e g for idempotent pairs f, g.
  out[3] = [&] {
    for (Elem p : idempotents)
      for (Elem q : idempotents) {
        Elem pe = r.mul(p, e);
        Elem ep = r.mul(e, p);
        Elem lhs = r.add(r.mul(pe, q), r.mul(r.mul(ep, e), r.mul(q, e)));
        Elem rhs = r.add(r.mul(r.mul(pe, q), e), r.mul(ep, r.mul(e, q)));
        if (lhs != rhs) return false;
      }
    return true;
  }();
  return out;
}

std::array<bool, 4> peirce_trivial_conditions(const Ring& r, Elem e) {
  std::array<bool, 4> out{};
  const auto& gens = r.additive_generators();
  Elem f = r.sub(r.one(), e);
  out[0] = inner_peirce_trivial(r, e) && outer_peirce_trivial(r, e);

  std::vector<Elem> s_gens, q_gens;
  for (Elem g : gens) {
    s_gens.push_back(r.mul(r.mul(e, g), f));
    q_gens.push_back(r.mul(r.mul(f, g), e));
  }
  Subset S = additive_closure(r, s_gens);
  Subset Q = additive_closure(r, q_gens);
  out[1] = S.is_ideal();
  out[2] = Q.is_ideal();
  out[3] = inner_peirce_trivial(r, e) && inner_peirce_trivial(r, f);
  return out;
}

OrthogonalSetDiagnostics orthogonal_set_diagnostics(const Ring& r, std::span<const Elem> es) {
  std::string why;
  if (!is_complete_orthogonal(r, es, &why))
    throw error("orthogonal_set_diagnostics: " + why);
  OrthogonalSetDiagnostics d;
  const std::size_t n = es.size();
  const auto& gens = r.additive_generators();

  auto products_vanish = [&](Elem a, Elem b, Elem c) {
    // a R b R c = 0, decided on generator pairs.
    for (Elem x : gens) {
      Elem axb = r.mul(r.mul(a, x), b);
      if (axb == r.zero()) continue;
      for (Elem y : gens)
        if (r.mul(r.mul(axb, y), c) != r.zero()) return false;
    }
    return true;
  };

  d.inner_by_products.resize(n);
  d.outer_by_products.resize(n);
  d.inner_direct.resize(n);
  d.outer_direct.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    bool inner = true;
    for (std::size_t j = 0; j < n && inner; ++j)
      if (j != i) inner = products_vanish(es[i], es[j], es[i]);
    d.inner_by_products[i] = inner;

    bool outer = true;
    for (std::size_t a = 0; a < n && outer; ++a) {
      if (a == i) continue;
      for (std::size_t b = 0; b < n && outer; ++b) {
        if (b == i) continue;
        outer = products_vanish(es[a], es[i], es[b]);
      }
    }
    d.outer_by_products[i] = outer;
    d.inner_direct[i] = inner_peirce_trivial(r, es[i]);
    d.outer_direct[i] = outer_peirce_trivial(r, es[i]);
  }
  d.consistent = d.inner_by_products == d.inner_direct && d.outer_by_products == d.outer_direct;
  d.all_outer = true;
  d.all_peirce_trivial = true;
  for (std::size_t i = 0; i < n; ++i) {
    d.all_outer = d.all_outer && d.outer_direct[i];
    d.all_peirce_trivial = d.all_peirce_trivial && d.inner_direct[i] && d.outer_direct[i];
  }
  return d;
}

}  // namespace peirce
