#include "digrack/action.hpp"

#include <algorithm>

#include "digrack/dsu.hpp"
#include "digrack/errors.hpp"

namespace digrack {

GAction GAction::from_table(FiniteGroup group,
                            std::vector<std::vector<int>> table,
                            std::vector<std::string> halo_labels) {
  const int n = group.order();
  if (static_cast<int>(table.size()) != n)
    throw ValidationError("TableShape",
                          "expected " + std::to_string(n) + " rows, got " +
                              std::to_string(table.size()));
  if (table[0].empty())
    throw ValidationError("TableShape", "halo must be nonempty");
  const int k = static_cast<int>(table[0].size());
  for (int g = 0; g < n; ++g) {
    if (static_cast<int>(table[g].size()) != k)
      throw ValidationError("TableShape",
                            "row " + std::to_string(g) + " has length " +
                                std::to_string(table[g].size()));
    std::vector<bool> seen(k, false);
    for (int b = 0; b < k; ++b) {
      const int v = table[g][b];
      if (v < 0 || v >= k || seen[v])
        throw RowNotBijective("row " + std::to_string(g) +
                              " is not a permutation of the halo");
      seen[v] = true;
    }
  }

  const int e = group.identity();
  for (int b = 0; b < k; ++b)
    if (table[e][b] != b)
      throw NotAnAction("identity axiom fails: e•" + std::to_string(b) +
                        " = " + std::to_string(table[e][b]));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      const int gh = group.mul(g, h);
      for (int b = 0; b < k; ++b)
        if (table[g][table[h][b]] != table[gh][b])
          throw NotAnAction("compatibility fails at (g,h,beta) = (" +
                            std::to_string(g) + "," + std::to_string(h) + "," +
                            std::to_string(b) + ")");
    }

  if (halo_labels.empty()) {
    halo_labels.reserve(k);
    for (int b = 0; b < k; ++b) halo_labels.push_back(std::to_string(b));
  } else if (static_cast<int>(halo_labels.size()) != k) {
    throw ValidationError("InvalidLabels",
                          "expected " + std::to_string(k) + " halo labels");
  }

  return GAction(std::move(group), std::move(table), std::move(halo_labels));
}

GAction GAction::from_generator_images(const FiniteGroup& group,
                                       const std::vector<Permutation>& images,
                                       int halo_size,
                                       std::vector<std::string> halo_labels) {
  const auto& data = group.generator_data();
  if (!data)
    throw ValidationError("NoGeneratorData",
                          "group was not built from permutation generators");
  if (images.size() != data->generators.size())
    throw ValidationError("InvalidImages",
                          "expected " + std::to_string(data->generators.size()) +
                              " generator images, got " +
                              std::to_string(images.size()));
  if (halo_size <= 0)
    throw ValidationError("TableShape", "halo must be nonempty");
  for (const auto& p : images)
    if (p.degree() != halo_size)
      throw ValidationError("DegreeMismatch",
                            "generator image degree " +
                                std::to_string(p.degree()) +
                                " does not match halo size " +
                                std::to_string(halo_size));

  const int n = group.order();
  std::vector<Permutation> rho;
  rho.reserve(n);
  rho.push_back(Permutation::identity(halo_size));
  for (int g = 1; g < n; ++g) {
    const auto [parent, j] = data->derivation[g];
    rho.push_back(compose(rho[parent], images[j]));
  }
  // Well-definedness: the assignment extends to a homomorphism iff it is
  // multiplicative on every pair of enumerated elements.
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (rho[group.mul(g, h)] != compose(rho[g], rho[h]))
        throw IllDefined("images are inconsistent on the pair (" +
                         group.label(g) + ", " + group.label(h) + ")");

  std::vector<std::vector<int>> table;
  table.reserve(n);
  for (int g = 0; g < n; ++g) table.push_back(rho[g].image());
  return from_table(group, std::move(table), std::move(halo_labels));
}

GAction GAction::trivial(FiniteGroup group, int halo_size,
                         std::vector<std::string> halo_labels) {
  if (halo_size <= 0)
    throw ValidationError("TableShape", "halo must be nonempty");
  std::vector<int> row(halo_size);
  for (int b = 0; b < halo_size; ++b) row[b] = b;
  std::vector<std::vector<int>> table(group.order(), row);
  return from_table(std::move(group), std::move(table), std::move(halo_labels));
}

int GAction::apply(int g, int beta) const {
  if (g < 0 || g >= group_.order())
    throw IndexOutOfRange("group element " + std::to_string(g));
  if (beta < 0 || beta >= halo_size_)
    throw IndexOutOfRange("halo point " + std::to_string(beta));
  return table_[g][beta];
}

Permutation GAction::rho(int g) const {
  if (g < 0 || g >= group_.order())
    throw IndexOutOfRange("group element " + std::to_string(g));
  return Permutation(table_[g]);
}

const std::string& GAction::halo_label(int beta) const {
  if (beta < 0 || beta >= halo_size_)
    throw IndexOutOfRange("halo point " + std::to_string(beta));
  return halo_labels_[beta];
}

std::vector<int> GAction::fixed_points(int g) const {
  if (g < 0 || g >= group_.order())
    throw IndexOutOfRange("group element " + std::to_string(g));
  std::vector<int> fixed;
  for (int b = 0; b < halo_size_; ++b)
    if (table_[g][b] == b) fixed.push_back(b);
  return fixed;
}

std::vector<int> GAction::kernel() const {
  std::vector<int> result;
  for (int g = 0; g < group_.order(); ++g) {
    bool id = true;
    for (int b = 0; b < halo_size_ && id; ++b) id = table_[g][b] == b;
    if (id) result.push_back(g);
  }
  return result;
}

bool GAction::is_trivial() const {
  return static_cast<int>(kernel().size()) == group_.order();
}

std::vector<std::vector<int>> GAction::orbits() const {
  DisjointSets dsu(halo_size_);
  for (int g = 0; g < group_.order(); ++g)
    for (int b = 0; b < halo_size_; ++b) dsu.unite(b, table_[g][b]);
  std::vector<std::vector<int>> by_root(halo_size_);
  for (int b = 0; b < halo_size_; ++b) by_root[dsu.find(b)].push_back(b);
  std::vector<std::vector<int>> result;
  for (auto& orbit : by_root)
    if (!orbit.empty()) result.push_back(std::move(orbit));
  return result;
}

bool GAction::is_stable_subset(const std::vector<int>& subset,
                               const std::vector<int>& subgroup_seed) const {
  std::vector<bool> in(halo_size_, false);
  for (int b : subset) {
    if (b < 0 || b >= halo_size_)
      throw IndexOutOfRange("halo point " + std::to_string(b));
    in[b] = true;
  }
  for (int h : group_.subgroup_generated(subgroup_seed))
    for (int b : subset)
      if (!in[table_[h][b]]) return false;
  return true;
}

std::vector<std::vector<int>> GAction::g_stable_subsets(int halo_cap) const {
  if (halo_size_ > halo_cap)
    throw CapExceeded("halo size " + std::to_string(halo_size_) +
                      " exceeds enumeration cap " + std::to_string(halo_cap));
  const auto orbit_list = orbits();
  const int k = static_cast<int>(orbit_list.size());
  std::vector<std::vector<int>> result;
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i))
        subset.insert(subset.end(), orbit_list[i].begin(), orbit_list[i].end());
    std::sort(subset.begin(), subset.end());
    result.push_back(std::move(subset));
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace digrack
