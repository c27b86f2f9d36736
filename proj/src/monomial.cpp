#include "peirce/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace peirce {

namespace {

bool divides(const MonomialQuotientRing::Exponents& d,
             const MonomialQuotientRing::Exponents& m) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

std::uint32_t total_degree(const MonomialQuotientRing::Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

}  // namespace

MonomialQuotientRing::MonomialQuotientRing(std::uint64_t modulus,
                                           std::vector<std::string> vars,
                                           const std::vector<std::string>& relations)
    : Ring(1, 0, 0), modulus_(modulus), vars_(std::move(vars)) {
  if (modulus_ < 2) throw validation_error("monomial quotient needs coefficient modulus >= 2");
  if (vars_.empty()) throw validation_error("monomial quotient needs at least one variable");
  for (const auto& rel : relations) relations_.push_back(parse_monomial(rel));

  // A pure power of every variable must lie in the relation ideal, otherwise
  // the quotient is infinite.
  std::vector<std::uint32_t> bound(vars_.size(), 0);
  for (std::size_t v = 0; v < vars_.size(); ++v) {
    for (const auto& rel : relations_) {
      bool pure = rel[v] > 0;
      for (std::size_t w = 0; w < vars_.size() && pure; ++w)
        if (w != v && rel[w] > 0) pure = false;
      if (pure && (bound[v] == 0 || rel[v] < bound[v])) bound[v] = rel[v];
    }
    if (bound[v] == 0)
      throw validation_error("variable '" + vars_[v] +
                             "' has no nilpotency relation; the quotient would be infinite");
  }

  // Standard monomials, graded then lexicographic.
  Exponents cur(vars_.size(), 0);
  std::vector<Exponents> all;
  while (true) {
    bool standard = true;
    for (const auto& rel : relations_)
      if (divides(rel, cur)) {
        standard = false;
        break;
      }
    if (standard) all.push_back(cur);
    std::size_t v = 0;
    while (v < vars_.size()) {
      if (++cur[v] < bound[v]) break;
      cur[v] = 0;
      ++v;
    }
    if (v == vars_.size()) break;
  }
  std::sort(all.begin(), all.end(), [](const Exponents& a, const Exponents& b) {
    auto da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  });
  basis_ = std::move(all);
  for (std::size_t i = 0; i < basis_.size(); ++i) basis_index_[basis_[i]] = i;

  std::uint64_t sz = 1;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (sz > (std::uint64_t(1) << 40) / modulus_)
      throw tier_error("monomial quotient ring is too large to enumerate");
    sz *= modulus_;
  }
  size_ = sz;
  zero_ = 0;
  one_ = 1;  // coefficient 1 on the constant monomial

  product_.assign(basis_.size(), std::vector<std::size_t>(basis_.size(), npos));
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      Exponents p(vars_.size());
      for (std::size_t v = 0; v < vars_.size(); ++v) p[v] = basis_[i][v] + basis_[j][v];
      bool killed = false;
      for (const auto& rel : relations_)
        if (divides(rel, p)) {
          killed = true;
          break;
        }
      if (!killed) {
        auto it = basis_index_.find(p);
        if (it == basis_index_.end())
          throw validation_error("standard monomial product escaped the basis");
        product_[i][j] = it->second;
      }
    }
}

std::uint64_t MonomialQuotientRing::coeff_of(Elem a, std::size_t pos) const {
  for (std::size_t i = 0; i < pos; ++i) a /= modulus_;
  return a % modulus_;
}

Elem MonomialQuotientRing::add(Elem a, Elem b) const {
  Elem out = 0, place = 1;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    out += (a % modulus_ + b % modulus_) % modulus_ * place;
    a /= modulus_;
    b /= modulus_;
    place *= modulus_;
  }
  return out;
}

Elem MonomialQuotientRing::neg(Elem a) const {
  Elem out = 0, place = 1;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    out += (modulus_ - a % modulus_) % modulus_ * place;
    a /= modulus_;
    place *= modulus_;
  }
  return out;
}

Elem MonomialQuotientRing::mul(Elem a, Elem b) const {
  std::vector<std::uint64_t> acc(basis_.size(), 0);
  Elem aa = a;
  for (std::size_t i = 0; i < basis_.size(); ++i, aa /= modulus_) {
    std::uint64_t ca = aa % modulus_;
    if (ca == 0) continue;
    Elem bb = b;
    for (std::size_t j = 0; j < basis_.size(); ++j, bb /= modulus_) {
      std::uint64_t cb = bb % modulus_;
      if (cb == 0 || product_[i][j] == npos) continue;
      acc[product_[i][j]] = (acc[product_[i][j]] + ca * cb) % modulus_;
    }
  }
  Elem out = 0, place = 1;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    out += acc[i] * place;
    place *= modulus_;
  }
  return out;
}

std::string MonomialQuotientRing::describe(Elem a) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < basis_.size(); ++i, a /= modulus_) {
    std::uint64_t c = a % modulus_;
    if (c == 0) continue;
    if (!first) os << "+";
    first = false;
    bool constant = total_degree(basis_[i]) == 0;
    if (c != 1 || constant) os << c;
    bool star = c != 1;
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      if (basis_[i][v] == 0) continue;
      if (star) os << "*";
      star = true;
      os << vars_[v];
      if (basis_[i][v] > 1) os << "^" << basis_[i][v];
    }
  }
  if (first) return "0";
  return os.str();
}

std::string MonomialQuotientRing::name() const {
  std::ostringstream os;
  os << "Z" << modulus_ << "[";
  for (std::size_t v = 0; v < vars_.size(); ++v) {
    if (v) os << ",";
    os << vars_[v];
  }
  os << "]/rel";
  return os.str();
}

Elem MonomialQuotientRing::monomial_elem(const Exponents& e, std::uint64_t coeff) const {
  auto it = basis_index_.find(e);
  if (it == basis_index_.end()) return 0;  // the monomial lies in the relation ideal
  Elem place = 1;
  for (std::size_t i = 0; i < it->second; ++i) place *= modulus_;
  return coeff % modulus_ * place;
}

std::vector<Elem> MonomialQuotientRing::compute_additive_generators() const {
  std::vector<Elem> gens;
  Elem place = 1;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    gens.push_back(place);
    place *= modulus_;
  }
  return gens;
}

MonomialQuotientRing::Exponents MonomialQuotientRing::parse_monomial(
    const std::string& text) const {
  Exponents e(vars_.size(), 0);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    std::size_t start = i;
    while (i < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
      ++i;
    std::string var = text.substr(start, i - start);
    auto vit = std::find(vars_.begin(), vars_.end(), var);
    if (var.empty() || vit == vars_.end())
      throw spec_error("unknown variable '" + var + "' in monomial '" + text + "'");
    std::uint32_t exp = 1;
    skip_ws();
    if (i < text.size() && text[i] == '^') {
      ++i;
      skip_ws();
      std::size_t ns = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (ns == i) throw spec_error("missing exponent in monomial '" + text + "'");
      exp = static_cast<std::uint32_t>(std::stoul(text.substr(ns, i - ns)));
    }
    e[vit - vars_.begin()] += exp;
    skip_ws();
    if (i < text.size()) {
      if (text[i] != '*') throw spec_error("expected '*' in monomial '" + text + "'");
      ++i;
      skip_ws();
    }
  }
  return e;
}

Elem MonomialQuotientRing::parse_poly(const std::string& text) const {
  Elem out = 0;
  std::size_t i = 0;
  bool any = false;
  while (i < text.size()) {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '+'))
      ++i;
    if (i >= text.size()) break;
    std::int64_t sign = 1;
    while (i < text.size() && (text[i] == '-' || std::isspace(static_cast<unsigned char>(text[i])))) {
      if (text[i] == '-') sign = -sign;
      ++i;
    }
    std::size_t start = i;
    while (i < text.size() && text[i] != '+' && text[i] != '-') ++i;
    std::string term = text.substr(start, i - start);
    // split off a leading integer coefficient
    std::size_t j = 0;
    while (j < term.size() && std::isspace(static_cast<unsigned char>(term[j]))) ++j;
    std::uint64_t coeff = 1;
    std::size_t ns = j;
    while (j < term.size() && std::isdigit(static_cast<unsigned char>(term[j]))) ++j;
    if (j > ns) coeff = std::stoull(term.substr(ns, j - ns));
    while (j < term.size() && (std::isspace(static_cast<unsigned char>(term[j])) || term[j] == '*'))
      ++j;
    std::string mono = term.substr(j);
    Elem t;
    if (mono.empty()) {
      t = monomial_elem(Exponents(vars_.size(), 0), coeff);
    } else {
      t = monomial_elem(parse_monomial(mono), coeff);
    }
    if (sign < 0) t = neg(t);
    out = add(out, t);
    any = true;
  }
  if (!any) throw spec_error("empty polynomial literal");
  return out;
}

RingPtr make_monomial_quotient(std::uint64_t modulus, std::vector<std::string> vars,
                               const std::vector<std::string>& relations) {
  return std::make_shared<MonomialQuotientRing>(modulus, std::move(vars), relations);
}

}  // namespace peirce
