#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "digrack/digroup.hpp"
#include "digrack/rack.hpp"
#include "digrack/rational.hpp"

namespace digrack {

// Every closed-form invariant here ships together with an independent
// brute-force oracle; agreement of the two routes is the product.

enum class InverseSide { left, right };

// Average over all rack elements of the cycle-structure monomial of the
// left translation. Monomials map cycle length -> exponent; coefficients
// are exact and sum to 1.
struct CycleIndexPolynomial {
  std::map<std::map<int, int>, Rational> terms;

  Rational coefficient_sum() const;
  bool operator==(const CycleIndexPolynomial&) const = default;
};

// Sum over elements x of t^(number of fixed points of L_x); coefficients
// count elements and sum to the rack size.
struct FixedPointPolynomial {
  std::map<long long, long long> terms;  // exponent -> coefficient

  long long coefficient_sum() const;
  bool operator==(const FixedPointPolynomial&) const = default;
};

// Evaluation of the structural subrack conditions for a subset X of G x E:
// the projected base Y must be closed under conjugation and every fiber must
// satisfy g•X_h ⊆ X_{g h g^-1}. first_violation holds (g, h, beta) in
// (group, group, halo) indices; beta = -1 marks a base-closure violation.
struct SubrackWitness {
  std::vector<int> base;
  std::map<int, std::vector<int>> fibers;
  bool verdict = false;
  std::optional<std::array<int, 3>> first_violation;
};

struct ProductSubposetEntry {
  std::vector<int> base;     // subrack of the group conjugation rack
  std::vector<int> fiber;    // nonempty G-stable subset of the halo
  std::vector<int> product;  // flat indices of base x fiber
};

struct ProductSubposet {
  std::vector<ProductSubposetEntry> entries;
  bool injective = false;
  bool order_preserving = false;
};

// The conjugation rack on G x E: (g,a) ▷ (h,b) = (g h g^-1, g•b). The table
// is re-validated through the rack machinery.
FiniteRack conjugation_rack(const GDigroup& digroup);
// Same table computed from the raw products and a one-sided inverse:
// x ▷ y = (x |- y) -| x^-1.
FiniteRack conjugation_rack_oracle(const GDigroup& digroup, InverseSide side);
// Ordinary conjugation rack of a group: x ▷ y = x y x^-1.
FiniteRack group_conjugation_rack(const FiniteGroup& group);

// (g,a) -> g is a surjective rack morphism onto the group conjugation rack.
bool projection_morphism_check(const GDigroup& digroup);
// Every left translation equals the product permutation c_g x rho(g) and
// depends only on the group coordinate.
bool left_translation_product_check(const GDigroup& digroup);

// |G| / |Z(G) ∩ Ker(rho)|.
long long inner_group_order_formula(const GDigroup& digroup);

// Number of l-cycles of L_(g,·) from the cycle types of c_g and rho(g):
// each (i-cycle, j-cycle) pair contributes gcd(i,j) cycles of length
// lcm(i,j).
CycleType lt_cycle_counts(const GDigroup& digroup, int g);
CycleType lt_cycle_counts_oracle(const GDigroup& digroup, int g);

CycleIndexPolynomial lt_cycle_index(const GDigroup& digroup);
// Definitional average over all |G||E| rows of the rack table.
CycleIndexPolynomial lt_cycle_index_oracle(const GDigroup& digroup);

// Closed form |E| * sum_g t^(|C_G(g)| |Fix_E(g)|).
FixedPointPolynomial fixed_point_polynomial(const GDigroup& digroup);
FixedPointPolynomial fixed_point_polynomial_oracle(const GDigroup& digroup);

// Burnside count (1/|G|) sum_g |C_G(g)| |Fix_E(g)|.
long long orbit_count(const GDigroup& digroup);
// Union-find over the left-translation images.
long long orbit_count_oracle(const GDigroup& digroup);

// The conjugation rack is a quandle iff the action is trivial.
bool quandle_criterion(const GDigroup& digroup);

SubrackWitness subrack_criterion(const GDigroup& digroup,
                                 const std::vector<int>& subset);

// base x fiber as flat indices; requires base to be a subrack of the group
// conjugation rack and fiber to be stable under the subgroup it generates.
std::vector<int> product_subrack(const GDigroup& digroup,
                                 const std::vector<int>& base,
                                 const std::vector<int>& fiber);

ProductSubposet product_subposet(const GDigroup& digroup, int subrack_cap = 14,
                                 int halo_cap = 16);

// Formula values plus the per-invariant formula-vs-oracle agreement map.
struct InvariantReport {
  long long inner_group_order = 0;
  CycleIndexPolynomial cycle_index;
  FixedPointPolynomial fixed_point_poly;
  long long orbit_count = 0;
  bool is_quandle = false;
  std::map<std::string, bool> oracle_agreement;

  bool all_agree() const;
};

InvariantReport invariant_report(const GDigroup& digroup);

}  // namespace digrack
