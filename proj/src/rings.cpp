#include "peirce/rings.hpp"

#include <sstream>

namespace peirce {

CyclicRing::CyclicRing(std::uint64_t n) : Ring(n, 0, n == 1 ? 0 : 1), n_(n) {
  if (n == 0) throw validation_error("cyclic ring needs n >= 1");
}

std::string CyclicRing::name() const { return "Z" + std::to_string(n_); }

std::vector<Elem> CyclicRing::compute_additive_generators() const {
  if (n_ == 1) return {};
  return {1};
}

ProductRing::ProductRing(std::vector<RingPtr> factors) : Ring(1, 0, 0), factors_(std::move(factors)) {
  if (factors_.empty()) throw validation_error("product ring needs at least one factor");
  stride_.resize(factors_.size());
  std::uint64_t s = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    stride_[i] = s;
    s *= factors_[i]->size();
  }
  size_ = s;
  std::vector<Elem> zeros, ones;
  for (const auto& f : factors_) {
    zeros.push_back(f->zero());
    ones.push_back(f->one());
  }
  zero_ = from_components(zeros);
  one_ = from_components(ones);
}

Elem ProductRing::from_components(const std::vector<Elem>& xs) const {
  Elem a = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) a += xs[i] * stride_[i];
  return a;
}

Elem ProductRing::add(Elem a, Elem b) const {
  Elem out = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    out += factors_[i]->add(component(a, i), component(b, i)) * stride_[i];
  return out;
}

Elem ProductRing::neg(Elem a) const {
  Elem out = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    out += factors_[i]->neg(component(a, i)) * stride_[i];
  return out;
}

Elem ProductRing::mul(Elem a, Elem b) const {
  Elem out = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    out += factors_[i]->mul(component(a, i), component(b, i)) * stride_[i];
  return out;
}

std::string ProductRing::describe(Elem a) const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << ",";
    os << factors_[i]->describe(component(a, i));
  }
  os << ")";
  return os.str();
}

std::string ProductRing::name() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << "x";
    os << factors_[i]->name();
  }
  return os.str();
}

std::vector<Elem> ProductRing::compute_additive_generators() const {
  std::vector<Elem> gens;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    for (Elem g : factors_[i]->additive_generators()) gens.push_back(g * stride_[i]);
  return gens;
}

namespace {

void require_square(const std::vector<std::vector<Elem>>& t, std::size_t n, const char* what) {
  if (t.size() != n) throw validation_error(std::string(what) + " table has wrong row count");
  for (const auto& row : t) {
    if (row.size() != n) throw validation_error(std::string(what) + " table has a ragged row");
    for (Elem v : row)
      if (v >= n) throw validation_error(std::string(what) + " table entry out of range");
  }
}

}  // namespace

TableRing::TableRing(std::vector<std::vector<Elem>> add_table,
                     std::vector<std::vector<Elem>> mul_table, Elem zero, Elem one,
                     std::string label)
    : Ring(add_table.size(), zero, one),
      add_(std::move(add_table)),
      mul_(std::move(mul_table)),
      label_(std::move(label)) {
  const std::size_t n = size_;
  if (n == 0) throw validation_error("table ring needs at least one element");
  require_square(add_, n, "addition");
  require_square(mul_, n, "multiplication");
  if (zero >= n || one >= n) throw validation_error("zero/one index out of range");

  for (Elem a = 0; a < n; ++a) {
    if (add_[zero][a] != a || add_[a][zero] != a) {
      std::ostringstream os;
      os << "bad additive identity: 0 + #" << a << " != #" << a;
      throw validation_error(os.str());
    }
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (add_[a][b] != add_[b][a]) {
        std::ostringstream os;
        os << "addition is not abelian at (#" << a << ", #" << b << ")";
        throw validation_error(os.str());
      }
  neg_.assign(n, 0);
  for (Elem a = 0; a < n; ++a) {
    bool found = false;
    for (Elem b = 0; b < n; ++b)
      if (add_[a][b] == zero) {
        neg_[a] = b;
        found = true;
        break;
      }
    if (!found) {
      std::ostringstream os;
      os << "addition is not a group: #" << a << " has no inverse";
      throw validation_error(os.str());
    }
  }
  // Full passes per axiom so the reported failure kind is deterministic.
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (add_[add_[a][b]][c] != add_[a][add_[b][c]]) {
          std::ostringstream os;
          os << "addition is not associative at (#" << a << ", #" << b << ", #" << c << ")";
          throw validation_error(os.str());
        }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]]) {
          std::ostringstream os;
          os << "multiplication is not associative at (#" << a << ", #" << b << ", #" << c << ")";
          throw validation_error(os.str());
        }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (mul_[a][add_[b][c]] != add_[mul_[a][b]][mul_[a][c]] ||
            mul_[add_[a][b]][c] != add_[mul_[a][c]][mul_[b][c]]) {
          std::ostringstream os;
          os << "distributivity fails at (#" << a << ", #" << b << ", #" << c << ")";
          throw validation_error(os.str());
        }
  for (Elem a = 0; a < n; ++a)
    if (mul_[one][a] != a || mul_[a][one] != a) {
      std::ostringstream os;
      os << "bad multiplicative identity at #" << a;
      throw validation_error(os.str());
    }
}

RingPtr make_cyclic(std::uint64_t n) { return std::make_shared<CyclicRing>(n); }

RingPtr make_product(std::vector<RingPtr> factors) {
  return std::make_shared<ProductRing>(std::move(factors));
}

RingPtr make_table_ring(std::vector<std::vector<Elem>> add_table,
                        std::vector<std::vector<Elem>> mul_table, Elem zero, Elem one,
                        std::string label) {
  return std::make_shared<TableRing>(std::move(add_table), std::move(mul_table), zero, one,
                                     std::move(label));
}

}  // namespace peirce
