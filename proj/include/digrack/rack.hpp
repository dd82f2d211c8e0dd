#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "digrack/group.hpp"
#include "digrack/permutation.hpp"

namespace digrack {

/// A finite rack given by its operation table (row x, column y -> x▷y),
/// validated on construction: bijective left translations and left
/// self-distributivity on all triples.
class FiniteRack {
public:
  static FiniteRack from_table(std::vector<std::vector<int>> table,
                               std::vector<std::string> labels = {});

  int size() const { return size_; }
  int op(int x, int y) const;
  const std::vector<std::vector<int>>& table() const { return table_; }
  Permutation left_translation(int x) const;
  bool is_quandle() const;  // x▷x = x for all x
  const std::string& label(int x) const;
  const std::vector<std::string>& labels() const { return labels_; }

  bool operator==(const FiniteRack& other) const {
    return table_ == other.table_;
  }

private:
  FiniteRack() = default;

  int size_ = 0;
  std::vector<std::vector<int>> table_;
  std::vector<std::string> labels_;
};

// f is given pointwise as a vector over X's indices.
bool is_rack_homomorphism(const std::vector<int>& f, const FiniteRack& domain,
                          const FiniteRack& codomain);

// Closure under the rack operation; in the finite case this already implies
// closure under inverse left translations. Empty subsets are rejected.
bool is_subrack(const FiniteRack& rack, const std::vector<int>& subset);

// All nonempty closed subsets as sorted index lists in lexicographic order.
// Walks the closure system itself (closures of grown generating sets with
// memoized bitmasks) rather than filtering the power set.
std::vector<std::vector<int>> enumerate_subracks(const FiniteRack& rack,
                                                 int cap = 14);
// Power-set filter; the independent oracle for the closure walk.
std::vector<std::vector<int>> enumerate_subracks_naive(const FiniteRack& rack,
                                                       int cap = 10);

// Permutation group generated by the distinct left translations.
FiniteGroup inner_group(const FiniteRack& rack,
                        std::size_t closure_cap = 20160);

}  // namespace digrack
