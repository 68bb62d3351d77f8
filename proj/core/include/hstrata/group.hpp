#ifndef HSTRATA_GROUP_HPP
#define HSTRATA_GROUP_HPP

#include <map>
#include <vector>

#include "hstrata/matrix.hpp"

namespace hstrata {

// A finite matrix group, built by breadth-first closure of its generators.
// Element 0 is the identity; element order is the deterministic insertion
// order of the closure, so indices are stable across runs.
class GroupRep {
public:
  static GroupRep close(const FieldSpec& field, int dim, std::vector<Matrix> generators,
                        size_t order_bound = 10000);
  static GroupRep trivial(const FieldSpec& field, int dim);

  const FieldSpec& field() const { return field_; }
  int dim() const { return dim_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const Matrix& element(int i) const { return elements_[static_cast<size_t>(i)]; }
  int identity_index() const { return 0; }
  const std::vector<int>& generator_indices() const { return generator_indices_; }
  const std::vector<Matrix>& generators() const { return generators_; }

  // Cayley table lookups.
  int product(int i, int j) const;
  int inverse(int i) const;
  int index_of(const Matrix& m) const;  // -1 when absent

  // Breadth-first closure of a subset, as sorted element indices.
  std::vector<int> subgroup_closure(const std::vector<int>& members) const;

private:
  GroupRep(const FieldSpec& field, int dim) : field_(field), dim_(dim) {}
  void build_table();

  FieldSpec field_;
  int dim_;
  std::vector<Matrix> elements_;
  std::vector<Matrix> generators_;
  std::vector<int> generator_indices_;
  std::map<std::string, int> index_;
  std::vector<int> table_;  // |G|^2 when built, else empty
};

}  // namespace hstrata

#endif
