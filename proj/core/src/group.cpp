#include "hstrata/group.hpp"

#include <algorithm>

namespace hstrata {

GroupRep GroupRep::close(const FieldSpec& field, int dim, std::vector<Matrix> generators,
                         size_t order_bound) {
  GroupRep g(field, dim);
  for (const auto& m : generators) {
    if (m.field() != field) throw Error(Error::Code::FieldMismatch, "generator field differs");
    if (m.rows() != dim || m.cols() != dim)
      throw Error(Error::Code::DimensionMismatch, "generator size differs from dim");
    if (!m.inverse())
      throw Error(Error::Code::NotInvertible, "generator matrix is singular");
  }
  g.generators_ = std::move(generators);

  const Matrix id = Matrix::identity(field, dim);
  g.elements_.push_back(id);
  g.index_[id.key()] = 0;
  for (size_t i = 0; i < g.elements_.size(); ++i) {
    for (const auto& gen : g.generators_) {
      const Matrix cand = g.elements_[i] * gen;
      const std::string key = cand.key();
      if (g.index_.count(key)) continue;
      g.index_[key] = static_cast<int>(g.elements_.size());
      g.elements_.push_back(cand);
      if (g.elements_.size() > order_bound)
        throw Error(Error::Code::OrderBoundExceeded,
                    "group closure exceeded order bound " + std::to_string(order_bound));
    }
  }
  for (const auto& gen : g.generators_) g.generator_indices_.push_back(g.index_.at(gen.key()));
  g.build_table();
  return g;
}

GroupRep GroupRep::trivial(const FieldSpec& field, int dim) {
  return close(field, dim, {});
}

void GroupRep::build_table() {
  const size_t n = elements_.size();
  if (n > 1024) return;  // fall back to per-call lookups
  table_.assign(n * n, -1);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const Matrix prod = elements_[i] * elements_[j];
      auto it = index_.find(prod.key());
      internal_check(it != index_.end(), "group not closed under product");
      table_[i * n + j] = it->second;
    }
}

int GroupRep::product(int i, int j) const {
  const size_t n = elements_.size();
  if (!table_.empty()) return table_[static_cast<size_t>(i) * n + static_cast<size_t>(j)];
  const Matrix prod = elements_[static_cast<size_t>(i)] * elements_[static_cast<size_t>(j)];
  auto it = index_.find(prod.key());
  internal_check(it != index_.end(), "group not closed under product");
  return it->second;
}

int GroupRep::inverse(int i) const {
  for (int j = 0; j < size(); ++j)
    if (product(i, j) == identity_index()) return j;
  throw Error(Error::Code::Internal, "element without inverse");
}

int GroupRep::index_of(const Matrix& m) const {
  auto it = index_.find(m.key());
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> GroupRep::subgroup_closure(const std::vector<int>& members) const {
  std::vector<bool> in(static_cast<size_t>(size()), false);
  std::vector<int> list;
  auto push = [&](int idx) {
    if (!in[static_cast<size_t>(idx)]) {
      in[static_cast<size_t>(idx)] = true;
      list.push_back(idx);
    }
  };
  // In a finite group, closure under right-multiplication by the members
  // starting from the identity is the generated subgroup.
  push(identity_index());
  for (size_t i = 0; i < list.size(); ++i)
    for (int m : members) push(product(list[i], m));
  std::sort(list.begin(), list.end());
  return list;
}

}  // namespace hstrata
