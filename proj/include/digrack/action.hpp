#pragma once

#include <string>
#include <vector>

#include "digrack/group.hpp"
#include "digrack/permutation.hpp"

namespace digrack {

/// A left action of a finite group on a finite set E, stored densely as a
/// |G| x |E| table (row g, column beta -> g•beta) and validated against the
/// action axioms on construction.
class GAction {
public:
  static GAction from_table(FiniteGroup group,
                            std::vector<std::vector<int>> table,
                            std::vector<std::string> halo_labels = {});

  // Extends one permutation of E per generator along the breadth-first
  // words used to enumerate the group; rejects assignments that are not
  // well-defined. The dense table is materialized and re-validated.
  static GAction from_generator_images(const FiniteGroup& group,
                                       const std::vector<Permutation>& images,
                                       int halo_size,
                                       std::vector<std::string> halo_labels = {});

  static GAction trivial(FiniteGroup group, int halo_size,
                         std::vector<std::string> halo_labels = {});

  const FiniteGroup& group() const { return group_; }
  int halo_size() const { return halo_size_; }
  int apply(int g, int beta) const;  // g•beta
  Permutation rho(int g) const;      // row g as a permutation of E
  const std::string& halo_label(int beta) const;
  const std::vector<std::string>& halo_labels() const { return halo_labels_; }

  std::vector<int> fixed_points(int g) const;
  std::vector<int> kernel() const;  // {g : rho(g) = id}
  bool is_trivial() const;
  // Orbits as sorted index lists, ordered by smallest member.
  std::vector<std::vector<int>> orbits() const;

  // True iff h•F ⊆ F for every h in the subgroup generated by the seed.
  bool is_stable_subset(const std::vector<int>& subset,
                        const std::vector<int>& subgroup_seed) const;
  // All nonempty G-stable subsets (unions of orbits), sorted index lists in
  // lexicographic order.
  std::vector<std::vector<int>> g_stable_subsets(int halo_cap = 16) const;

  bool operator==(const GAction& other) const {
    return group_ == other.group_ && table_ == other.table_;
  }

private:
  GAction(FiniteGroup group, std::vector<std::vector<int>> table,
          std::vector<std::string> halo_labels)
      : group_(std::move(group)),
        halo_size_(static_cast<int>(table[0].size())),
        table_(std::move(table)),
        halo_labels_(std::move(halo_labels)) {}

  FiniteGroup group_;
  int halo_size_ = 0;
  std::vector<std::vector<int>> table_;
  std::vector<std::string> halo_labels_;
};

}  // namespace digrack
