#include "digrack/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "digrack/dsu.hpp"
#include "digrack/errors.hpp"

namespace digrack {

Rational CycleIndexPolynomial::coefficient_sum() const {
  Rational sum = 0;
  for (const auto& [monomial, coeff] : terms) sum += coeff;
  return sum;
}

long long FixedPointPolynomial::coefficient_sum() const {
  long long sum = 0;
  for (const auto& [expo, coeff] : terms) sum += coeff;
  return sum;
}

FiniteRack conjugation_rack(const GDigroup& D) {
  const int n = D.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    const auto [g, a] = D.unflat(x);
    (void)a;
    const int gi = D.group().inv(g);
    for (int y = 0; y < n; ++y) {
      const auto [h, b] = D.unflat(y);
      table[x][y] = D.flat(D.group().mul(D.group().mul(g, h), gi),
                           D.action().apply(g, b));
    }
  }
  return FiniteRack::from_table(std::move(table), D.labels());
}

FiniteRack conjugation_rack_oracle(const GDigroup& D, InverseSide side) {
  const int n = D.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    const int inv = side == InverseSide::right ? D.right_inverse(x)
                                               : D.left_inverse(x);
    for (int y = 0; y < n; ++y)
      table[x][y] = D.dprod_right(D.dprod_left(x, y), inv);
  }
  return FiniteRack::from_table(std::move(table), D.labels());
}

FiniteRack group_conjugation_rack(const FiniteGroup& G) {
  const int n = G.order();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) table[g][h] = G.mul(G.mul(g, h), G.inv(g));
  return FiniteRack::from_table(std::move(table), G.labels());
}

bool projection_morphism_check(const GDigroup& D) {
  const FiniteRack conj = conjugation_rack(D);
  const FiniteRack base = group_conjugation_rack(D.group());
  std::vector<int> projection(D.size());
  std::vector<bool> hit(D.group().order(), false);
  for (int x = 0; x < D.size(); ++x) {
    projection[x] = D.unflat(x).first;
    hit[projection[x]] = true;
  }
  const bool surjective = std::all_of(hit.begin(), hit.end(),
                                      [](bool b) { return b; });
  return surjective && is_rack_homomorphism(projection, conj, base);
}

bool left_translation_product_check(const GDigroup& D) {
  const FiniteRack conj = conjugation_rack(D);
  for (int g = 0; g < D.group().order(); ++g) {
    const Permutation cg = D.group().conjugation(g);
    const Permutation rg = D.action().rho(g);
    const Permutation row0 = conj.left_translation(D.flat(g, 0));
    for (int a = 0; a < D.halo_size(); ++a)
      if (conj.left_translation(D.flat(g, a)) != row0) return false;
    for (int h = 0; h < D.group().order(); ++h)
      for (int b = 0; b < D.halo_size(); ++b)
        if (row0(D.flat(h, b)) != D.flat(cg(h), rg(b))) return false;
  }
  return true;
}

namespace {

long long center_kernel_intersection_size(const GDigroup& D) {
  const auto center = D.group().center();
  const auto kernel = D.action().kernel();
  std::vector<int> both;
  std::set_intersection(center.begin(), center.end(), kernel.begin(),
                        kernel.end(), std::back_inserter(both));
  return static_cast<long long>(both.size());
}

}  // namespace

long long inner_group_order_formula(const GDigroup& D) {
  return D.group().order() / center_kernel_intersection_size(D);
}

CycleType lt_cycle_counts(const GDigroup& D, int g) {
  const CycleType a = cycle_type(D.group().conjugation(g));
  const CycleType b = cycle_type(D.action().rho(g));
  CycleType result;
  for (const auto& [i, ai] : a.counts)
    for (const auto& [j, bj] : b.counts)
      result.counts[std::lcm(i, j)] += ai * bj * std::gcd(i, j);
  return result;
}

CycleType lt_cycle_counts_oracle(const GDigroup& D, int g) {
  // Trace the actual left-translation row; rows depend only on g.
  return cycle_type(conjugation_rack(D).left_translation(D.flat(g, 0)));
}

CycleIndexPolynomial lt_cycle_index(const GDigroup& D) {
  CycleIndexPolynomial Z;
  const Rational weight(1, D.group().order());
  for (int g = 0; g < D.group().order(); ++g)
    Z.terms[lt_cycle_counts(D, g).counts] += weight;
  return Z;
}

CycleIndexPolynomial lt_cycle_index_oracle(const GDigroup& D) {
  CycleIndexPolynomial Z;
  const FiniteRack conj = conjugation_rack(D);
  const Rational weight(1, D.size());
  for (int x = 0; x < D.size(); ++x)
    Z.terms[cycle_type(conj.left_translation(x)).counts] += weight;
  return Z;
}

FixedPointPolynomial fixed_point_polynomial(const GDigroup& D) {
  FixedPointPolynomial phi;
  const long long halo = D.halo_size();
  for (int g = 0; g < D.group().order(); ++g) {
    const long long fixed =
        static_cast<long long>(D.group().centralizer(g).size()) *
        static_cast<long long>(D.action().fixed_points(g).size());
    phi.terms[fixed] += halo;
  }
  return phi;
}

FixedPointPolynomial fixed_point_polynomial_oracle(const GDigroup& D) {
  FixedPointPolynomial phi;
  const FiniteRack conj = conjugation_rack(D);
  for (int x = 0; x < D.size(); ++x) {
    long long fixed = 0;
    for (int y = 0; y < D.size(); ++y)
      if (conj.op(x, y) == y) ++fixed;
    phi.terms[fixed] += 1;
  }
  return phi;
}

long long orbit_count(const GDigroup& D) {
  long long total = 0;
  for (int g = 0; g < D.group().order(); ++g)
    total += static_cast<long long>(D.group().centralizer(g).size()) *
             static_cast<long long>(D.action().fixed_points(g).size());
  return total / D.group().order();
}

long long orbit_count_oracle(const GDigroup& D) {
  const FiniteRack conj = conjugation_rack(D);
  DisjointSets dsu(D.size());
  for (int x = 0; x < D.size(); ++x)
    for (int y = 0; y < D.size(); ++y) dsu.unite(y, conj.op(x, y));
  return dsu.component_count();
}

bool quandle_criterion(const GDigroup& D) { return D.action().is_trivial(); }

SubrackWitness subrack_criterion(const GDigroup& D,
                                 const std::vector<int>& subset) {
  if (subset.empty()) throw EmptySubset("subracks are nonempty");
  SubrackWitness w;
  std::set<int> base;
  for (int x : subset) {
    const auto [g, a] = D.unflat(x);
    base.insert(g);
    w.fibers[g].push_back(a);
  }
  w.base.assign(base.begin(), base.end());
  for (auto& [g, fiber] : w.fibers) {
    std::sort(fiber.begin(), fiber.end());
    fiber.erase(std::unique(fiber.begin(), fiber.end()), fiber.end());
  }

  const auto& G = D.group();
  for (int g : w.base)
    for (int h : w.base) {
      const int conj = G.mul(G.mul(g, h), G.inv(g));
      if (!base.count(conj)) {
        w.verdict = false;
        w.first_violation = {{g, h, -1}};
        return w;
      }
    }
  for (int g : w.base)
    for (int h : w.base) {
      const int conj = G.mul(G.mul(g, h), G.inv(g));
      const auto& target = w.fibers.at(conj);
      for (int beta : w.fibers.at(h)) {
        const int moved = D.action().apply(g, beta);
        if (!std::binary_search(target.begin(), target.end(), moved)) {
          w.verdict = false;
          w.first_violation = {{g, h, beta}};
          return w;
        }
      }
    }
  w.verdict = true;
  return w;
}

std::vector<int> product_subrack(const GDigroup& D,
                                 const std::vector<int>& base,
                                 const std::vector<int>& fiber) {
  if (fiber.empty()) throw EmptySubset("fiber must be nonempty");
  if (!is_subrack(group_conjugation_rack(D.group()), base))
    throw NotASubrackBase("base is not closed under group conjugation");
  if (!D.action().is_stable_subset(fiber, base))
    throw FiberNotStable(
        "fiber is not stable under the subgroup generated by the base");
  std::vector<int> product;
  product.reserve(base.size() * fiber.size());
  for (int g : base)
    for (int a : fiber) product.push_back(D.flat(g, a));
  std::sort(product.begin(), product.end());
  return product;
}

ProductSubposet product_subposet(const GDigroup& D, int subrack_cap,
                                 int halo_cap) {
  ProductSubposet poset;
  const auto bases = enumerate_subracks(group_conjugation_rack(D.group()),
                                        subrack_cap);
  const auto fibers = D.action().g_stable_subsets(halo_cap);
  for (const auto& Y : bases)
    for (const auto& F : fibers)
      poset.entries.push_back({Y, F, product_subrack(D, Y, F)});

  std::set<std::vector<int>> distinct;
  for (const auto& entry : poset.entries) distinct.insert(entry.product);
  poset.injective = distinct.size() == poset.entries.size();

  auto contains = [](const std::vector<int>& small,
                     const std::vector<int>& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };
  poset.order_preserving = true;
  for (const auto& a : poset.entries)
    for (const auto& b : poset.entries)
      if (contains(a.base, b.base) && contains(a.fiber, b.fiber) &&
          !contains(a.product, b.product)) {
        poset.order_preserving = false;
        return poset;
      }
  return poset;
}

bool InvariantReport::all_agree() const {
  for (const auto& [name, ok] : oracle_agreement)
    if (!ok) return false;
  return true;
}

InvariantReport invariant_report(const GDigroup& D) {
  InvariantReport r;
  r.inner_group_order = inner_group_order_formula(D);
  r.cycle_index = lt_cycle_index(D);
  r.fixed_point_poly = fixed_point_polynomial(D);
  r.orbit_count = digrack::orbit_count(D);
  r.is_quandle = quandle_criterion(D);

  const FiniteRack conj = conjugation_rack(D);
  r.oracle_agreement["conjugation_left_inverse"] =
      conjugation_rack_oracle(D, InverseSide::left) == conj;
  r.oracle_agreement["conjugation_right_inverse"] =
      conjugation_rack_oracle(D, InverseSide::right) == conj;
  bool counts_ok = true;
  for (int g = 0; g < D.group().order() && counts_ok; ++g)
    counts_ok = lt_cycle_counts(D, g) == lt_cycle_counts_oracle(D, g);
  r.oracle_agreement["cycle_counts"] = counts_ok;
  r.oracle_agreement["cycle_index"] = r.cycle_index == lt_cycle_index_oracle(D);
  r.oracle_agreement["fixed_point_polynomial"] =
      r.fixed_point_poly == fixed_point_polynomial_oracle(D);
  r.oracle_agreement["orbit_count"] = r.orbit_count == orbit_count_oracle(D);
  r.oracle_agreement["inner_group_order"] =
      r.inner_group_order == inner_group(conj).order();
  r.oracle_agreement["quandle"] = r.is_quandle == conj.is_quandle();
  r.oracle_agreement["projection_morphism"] = projection_morphism_check(D);
  r.oracle_agreement["left_translation_product"] =
      left_translation_product_check(D);
  return r;
}

}  // namespace digrack
