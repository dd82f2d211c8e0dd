#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "digrack/permutation.hpp"

namespace digrack {

/// A finite group stored as a validated Cayley table over dense 0-based
/// element indices. Labels are cosmetic; equality of groups is table
/// equality.
class FiniteGroup {
public:
  // Validates: Latin square, two-sided identity, two-sided inverses, and
  // associativity on all triples when order <= associativity_check_bound.
  // Larger tables must come through from_permutation_generators, which is
  // associative by construction.
  static FiniteGroup from_cayley(std::vector<std::vector<int>> table,
                                 std::vector<std::string> labels = {},
                                 int associativity_check_bound = 64);

  // Breadth-first closure from the identity, generators applied on the
  // right in input order. Element 0 is the identity; enumeration order is
  // deterministic. Elements are labeled by cycle notation.
  static FiniteGroup from_permutation_generators(
      int degree, std::vector<Permutation> generators,
      std::size_t closure_cap = 20160);

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int g, int h) const;
  int inv(int g) const;
  const std::vector<std::vector<int>>& cayley() const { return cayley_; }
  const std::string& label(int g) const;
  const std::vector<std::string>& labels() const { return labels_; }
  FiniteGroup relabeled(std::vector<std::string> labels) const;

  bool is_abelian() const;
  // g-indexed conjugation permutation h -> g h g^{-1}.
  Permutation conjugation(int g) const;
  std::vector<int> center() const;
  std::vector<int> centralizer(int g) const;
  // Smallest subgroup containing the seed; {identity} for an empty seed.
  std::vector<int> subgroup_generated(const std::vector<int>& seed) const;

  // Order of the cyclic subgroup generated by g.
  int element_order(int g) const;

  bool operator==(const FiniteGroup& other) const {
    return cayley_ == other.cayley_;
  }

  // Present when the group was built from permutation generators; records
  // the breadth-first derivation of every element so that assignments on
  // generators extend deterministically along the same words.
  struct GeneratorData {
    int degree = 0;
    std::vector<Permutation> generators;
    std::vector<Permutation> elements;  // enumeration order
    // derivation[k] = {parent index, generator index}, element k = parent * gen;
    // entry 0 (the identity) is {-1, -1}.
    std::vector<std::pair<int, int>> derivation;
  };
  const std::optional<GeneratorData>& generator_data() const {
    return generator_data_;
  }

private:
  FiniteGroup() = default;
  void check_index(int g) const;

  int order_ = 0;
  std::vector<std::vector<int>> cayley_;
  int identity_ = 0;
  std::vector<int> inverse_;
  std::vector<std::string> labels_;
  std::optional<GeneratorData> generator_data_;
};

}  // namespace digrack
