#include "digrack/group.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "digrack/errors.hpp"

namespace digrack {

FiniteGroup FiniteGroup::from_cayley(std::vector<std::vector<int>> table,
                                     std::vector<std::string> labels,
                                     int associativity_check_bound) {
  const int n = static_cast<int>(table.size());
  if (n == 0)
    throw NotLatinSquare("empty table");
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(table[r].size()) != n)
      throw NotLatinSquare("row " + std::to_string(r) + " has length " +
                           std::to_string(table[r].size()) + ", expected " +
                           std::to_string(n));
    for (int c = 0; c < n; ++c)
      if (table[r][c] < 0 || table[r][c] >= n)
        throw NotLatinSquare("entry (" + std::to_string(r) + "," +
                             std::to_string(c) + ") = " +
                             std::to_string(table[r][c]) + " is out of range");
  }
  for (int r = 0; r < n; ++r) {
    std::vector<bool> seen(n, false);
    for (int c = 0; c < n; ++c) {
      if (seen[table[r][c]])
        throw NotLatinSquare("row " + std::to_string(r) + " repeats entry " +
                             std::to_string(table[r][c]));
      seen[table[r][c]] = true;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::vector<bool> seen(n, false);
    for (int r = 0; r < n; ++r) {
      if (seen[table[r][c]])
        throw NotLatinSquare("column " + std::to_string(c) +
                             " repeats entry " + std::to_string(table[r][c]));
      seen[table[r][c]] = true;
    }
  }

  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int g = 0; g < n && ok; ++g)
      ok = table[e][g] == g && table[g][e] == g;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw NoIdentity("no two-sided identity element");

  std::vector<int> inverse(n, -1);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      if (table[g][h] == identity && table[h][g] == identity) {
        inverse[g] = h;
        break;
      }
    }
    if (inverse[g] < 0)
      throw NoInverse("element " + std::to_string(g) +
                      " has no two-sided inverse");
  }

  if (n > associativity_check_bound)
    throw CapExceeded(
        "associativity check bound " + std::to_string(associativity_check_bound) +
        " exceeded by table of order " + std::to_string(n) +
        "; build the group from permutation generators instead");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw NotAssociative("triple (" + std::to_string(a) + "," +
                               std::to_string(b) + "," + std::to_string(c) +
                               ")");

  if (labels.empty()) {
    labels.reserve(n);
    for (int g = 0; g < n; ++g) labels.push_back("g" + std::to_string(g));
  } else if (static_cast<int>(labels.size()) != n) {
    throw ValidationError("InvalidLabels",
                          "expected " + std::to_string(n) + " labels, got " +
                              std::to_string(labels.size()));
  }

  FiniteGroup G;
  G.order_ = n;
  G.cayley_ = std::move(table);
  G.identity_ = identity;
  G.inverse_ = std::move(inverse);
  G.labels_ = std::move(labels);
  return G;
}

FiniteGroup FiniteGroup::from_permutation_generators(
    int degree, std::vector<Permutation> generators, std::size_t closure_cap) {
  if (degree <= 0)
    throw ValidationError("InvalidDegree", "degree must be positive");
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw ValidationError("DegreeMismatch",
                            "generator degree " + std::to_string(g.degree()) +
                                " does not match " + std::to_string(degree));

  GeneratorData data;
  data.degree = degree;
  data.generators = generators;
  data.elements.push_back(Permutation::identity(degree));
  data.derivation.emplace_back(-1, -1);

  std::map<std::vector<int>, int> index;
  index[data.elements[0].image()] = 0;

  for (std::size_t head = 0; head < data.elements.size(); ++head) {
    for (std::size_t j = 0; j < generators.size(); ++j) {
      Permutation next = compose(data.elements[head], generators[j]);
      auto [it, inserted] = index.try_emplace(next.image(),
                                              static_cast<int>(data.elements.size()));
      if (!inserted) continue;
      data.elements.push_back(std::move(next));
      data.derivation.emplace_back(static_cast<int>(head), static_cast<int>(j));
      if (data.elements.size() > closure_cap)
        throw CapExceeded("closure cap " + std::to_string(closure_cap) +
                          " exceeded");
    }
  }

  const int n = static_cast<int>(data.elements.size());
  FiniteGroup G;
  G.order_ = n;
  G.identity_ = 0;
  G.cayley_.assign(n, std::vector<int>(n));
  G.inverse_.assign(n, -1);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h)
      G.cayley_[g][h] = index.at(compose(data.elements[g], data.elements[h]).image());
    G.inverse_[g] = index.at(data.elements[g].inverse().image());
  }
  G.labels_.reserve(n);
  for (int g = 0; g < n; ++g) G.labels_.push_back(cycles_string(data.elements[g]));
  G.generator_data_ = std::move(data);
  return G;
}

void FiniteGroup::check_index(int g) const {
  if (g < 0 || g >= order_)
    throw IndexOutOfRange("element " + std::to_string(g) +
                          " not in group of order " + std::to_string(order_));
}

int FiniteGroup::mul(int g, int h) const {
  check_index(g);
  check_index(h);
  return cayley_[g][h];
}

int FiniteGroup::inv(int g) const {
  check_index(g);
  return inverse_[g];
}

const std::string& FiniteGroup::label(int g) const {
  check_index(g);
  return labels_[g];
}

FiniteGroup FiniteGroup::relabeled(std::vector<std::string> labels) const {
  if (static_cast<int>(labels.size()) != order_)
    throw ValidationError("InvalidLabels",
                          "expected " + std::to_string(order_) + " labels");
  FiniteGroup G = *this;
  G.labels_ = std::move(labels);
  return G;
}

bool FiniteGroup::is_abelian() const {
  for (int g = 0; g < order_; ++g)
    for (int h = g + 1; h < order_; ++h)
      if (cayley_[g][h] != cayley_[h][g]) return false;
  return true;
}

Permutation FiniteGroup::conjugation(int g) const {
  check_index(g);
  std::vector<int> image(order_);
  const int gi = inverse_[g];
  for (int h = 0; h < order_; ++h) image[h] = cayley_[cayley_[g][h]][gi];
  return Permutation(std::move(image));
}

std::vector<int> FiniteGroup::center() const {
  std::vector<int> result;
  for (int g = 0; g < order_; ++g) {
    bool central = true;
    for (int h = 0; h < order_ && central; ++h)
      central = cayley_[g][h] == cayley_[h][g];
    if (central) result.push_back(g);
  }
  return result;
}

std::vector<int> FiniteGroup::centralizer(int g) const {
  check_index(g);
  std::vector<int> result;
  for (int h = 0; h < order_; ++h)
    if (cayley_[g][h] == cayley_[h][g]) result.push_back(h);
  return result;
}

std::vector<int> FiniteGroup::subgroup_generated(const std::vector<int>& seed) const {
  std::set<int> members{identity_};
  std::vector<int> queue{identity_};
  for (int g : seed) {
    check_index(g);
    if (members.insert(g).second) queue.push_back(g);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int g = queue[head];
    if (members.insert(inverse_[g]).second) queue.push_back(inverse_[g]);
    for (std::size_t k = 0; k < queue.size(); ++k) {
      for (int prod : {cayley_[g][queue[k]], cayley_[queue[k]][g]})
        if (members.insert(prod).second) queue.push_back(prod);
    }
  }
  return {members.begin(), members.end()};
}

int FiniteGroup::element_order(int g) const {
  check_index(g);
  int power = g, order = 1;
  while (power != identity_) {
    power = cayley_[power][g];
    ++order;
  }
  return order;
}

}  // namespace digrack
