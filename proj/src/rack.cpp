#include "digrack/rack.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "digrack/errors.hpp"

namespace digrack {

FiniteRack FiniteRack::from_table(std::vector<std::vector<int>> table,
                                  std::vector<std::string> labels) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw ValidationError("TableShape", "empty table");
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(table[x].size()) != n)
      throw ValidationError("TableShape",
                            "row " + std::to_string(x) + " has length " +
                                std::to_string(table[x].size()));
    std::vector<bool> seen(n, false);
    for (int y = 0; y < n; ++y) {
      const int v = table[x][y];
      if (v < 0 || v >= n || seen[v])
        throw RowNotBijective("left translation of element " +
                              std::to_string(x) + " is not bijective");
      seen[v] = true;
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (table[x][table[y][z]] != table[table[x][y]][table[x][z]])
          throw NotSelfDistributive("triple (" + std::to_string(x) + "," +
                                    std::to_string(y) + "," +
                                    std::to_string(z) + ")");

  if (labels.empty()) {
    labels.reserve(n);
    for (int x = 0; x < n; ++x) labels.push_back("x" + std::to_string(x));
  } else if (static_cast<int>(labels.size()) != n) {
    throw ValidationError("InvalidLabels",
                          "expected " + std::to_string(n) + " labels");
  }

  FiniteRack X;
  X.size_ = n;
  X.table_ = std::move(table);
  X.labels_ = std::move(labels);
  return X;
}

int FiniteRack::op(int x, int y) const {
  if (x < 0 || x >= size_ || y < 0 || y >= size_)
    throw IndexOutOfRange("(" + std::to_string(x) + "," + std::to_string(y) +
                          ") not in rack of size " + std::to_string(size_));
  return table_[x][y];
}

Permutation FiniteRack::left_translation(int x) const {
  if (x < 0 || x >= size_)
    throw IndexOutOfRange("element " + std::to_string(x));
  return Permutation(table_[x]);
}

bool FiniteRack::is_quandle() const {
  for (int x = 0; x < size_; ++x)
    if (table_[x][x] != x) return false;
  return true;
}

const std::string& FiniteRack::label(int x) const {
  if (x < 0 || x >= size_)
    throw IndexOutOfRange("element " + std::to_string(x));
  return labels_[x];
}

bool is_rack_homomorphism(const std::vector<int>& f, const FiniteRack& domain,
                          const FiniteRack& codomain) {
  if (static_cast<int>(f.size()) != domain.size())
    throw ValidationError("InvalidMap", "map size does not match domain");
  for (int v : f)
    if (v < 0 || v >= codomain.size())
      throw IndexOutOfRange("map value " + std::to_string(v));
  for (int x = 0; x < domain.size(); ++x)
    for (int y = 0; y < domain.size(); ++y)
      if (f[domain.op(x, y)] != codomain.op(f[x], f[y])) return false;
  return true;
}

bool is_subrack(const FiniteRack& rack, const std::vector<int>& subset) {
  if (subset.empty()) throw EmptySubset("subracks are nonempty");
  std::vector<bool> in(rack.size(), false);
  for (int x : subset) {
    if (x < 0 || x >= rack.size())
      throw IndexOutOfRange("element " + std::to_string(x));
    in[x] = true;
  }
  for (int x : subset)
    for (int y : subset)
      if (!in[rack.op(x, y)]) return false;
  return true;
}

namespace {

std::uint32_t close_mask(const FiniteRack& rack, std::uint32_t mask,
                         std::unordered_map<std::uint32_t, std::uint32_t>& memo) {
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  const std::uint32_t start = mask;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < rack.size(); ++x) {
      if (!(mask & (1u << x))) continue;
      for (int y = 0; y < rack.size(); ++y) {
        if (!(mask & (1u << y))) continue;
        const std::uint32_t bit = 1u << rack.op(x, y);
        if (!(mask & bit)) {
          mask |= bit;
          changed = true;
        }
      }
    }
  }
  memo.emplace(start, mask);
  return mask;
}

std::vector<std::vector<int>> masks_to_subsets(
    const std::set<std::uint32_t>& masks, int n) {
  std::vector<std::vector<int>> result;
  result.reserve(masks.size());
  for (std::uint32_t mask : masks) {
    std::vector<int> subset;
    for (int x = 0; x < n; ++x)
      if (mask & (1u << x)) subset.push_back(x);
    result.push_back(std::move(subset));
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace

std::vector<std::vector<int>> enumerate_subracks(const FiniteRack& rack,
                                                 int cap) {
  const int n = rack.size();
  if (n > cap)
    throw CapExceeded("rack size " + std::to_string(n) +
                      " exceeds enumeration cap " + std::to_string(cap));
  if (n > 31)
    throw CapExceeded("bitmask enumeration supports size <= 31");

  std::unordered_map<std::uint32_t, std::uint32_t> memo;
  std::set<std::uint32_t> closed;
  std::vector<std::uint32_t> queue;
  for (int x = 0; x < n; ++x) {
    const std::uint32_t c = close_mask(rack, 1u << x, memo);
    if (closed.insert(c).second) queue.push_back(c);
  }
  // Every closed set is the closure of a chain of one-element extensions of
  // a smaller closed set, so this worklist reaches all of them.
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t base = queue[head];
    for (int x = 0; x < n; ++x) {
      if (base & (1u << x)) continue;
      const std::uint32_t c = close_mask(rack, base | (1u << x), memo);
      if (closed.insert(c).second) queue.push_back(c);
    }
  }
  return masks_to_subsets(closed, n);
}

std::vector<std::vector<int>> enumerate_subracks_naive(const FiniteRack& rack,
                                                       int cap) {
  const int n = rack.size();
  if (n > cap)
    throw CapExceeded("rack size " + std::to_string(n) +
                      " exceeds enumeration cap " + std::to_string(cap));
  std::set<std::uint32_t> closed;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      if (!(mask & (1u << x))) continue;
      for (int y = 0; y < n && ok; ++y) {
        if (!(mask & (1u << y))) continue;
        ok = (mask & (1u << rack.op(x, y))) != 0;
      }
    }
    if (ok) closed.insert(mask);
  }
  return masks_to_subsets(closed, n);
}

FiniteGroup inner_group(const FiniteRack& rack, std::size_t closure_cap) {
  std::vector<Permutation> generators;
  std::set<std::vector<int>> seen;
  for (int x = 0; x < rack.size(); ++x) {
    Permutation lt = rack.left_translation(x);
    if (seen.insert(lt.image()).second) generators.push_back(std::move(lt));
  }
  return FiniteGroup::from_permutation_generators(rack.size(),
                                                  std::move(generators),
                                                  closure_cap);
}

}  // namespace digrack
