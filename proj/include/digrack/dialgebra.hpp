#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "digrack/digroup.hpp"
#include "digrack/rational.hpp"
#include "digrack/report.hpp"

namespace digrack {

/// Sparse exact-rational linear combination over the digroup basis;
/// zero coefficients are never stored.
class DialgebraElement {
public:
  DialgebraElement() = default;
  static DialgebraElement basis(int d);

  const std::map<int, Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int d) const;
  void add(int d, const Rational& c);
  bool is_zero() const { return coeffs_.empty(); }

  DialgebraElement& operator+=(const DialgebraElement& other);
  DialgebraElement& operator-=(const DialgebraElement& other);
  DialgebraElement& operator*=(const Rational& scalar);
  friend DialgebraElement operator+(DialgebraElement a, const DialgebraElement& b) {
    return a += b;
  }
  friend DialgebraElement operator-(DialgebraElement a, const DialgebraElement& b) {
    return a -= b;
  }
  friend DialgebraElement operator*(const Rational& scalar, DialgebraElement a) {
    return a *= scalar;
  }
  bool operator==(const DialgebraElement&) const = default;

private:
  std::map<int, Rational> coeffs_;
};

/// Sparse element of the tensor square, indexed by basis pairs.
class TensorElement {
public:
  TensorElement() = default;
  static TensorElement basis(int d, int e);

  const std::map<std::pair<int, int>, Rational>& coeffs() const {
    return coeffs_;
  }
  void add(int d, int e, const Rational& c);
  bool is_zero() const { return coeffs_.empty(); }
  TensorElement swapped() const;  // u (x) v -> v (x) u

  TensorElement& operator+=(const TensorElement& other);
  TensorElement& operator-=(const TensorElement& other);
  TensorElement& operator*=(const Rational& scalar);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) {
    return a += b;
  }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) {
    return a -= b;
  }
  bool operator==(const TensorElement&) const = default;

private:
  std::map<std::pair<int, int>, Rational> coeffs_;
};

enum class ProductSide { left, right };  // left = |-, right = -|

/// The digroup algebra K[D]: free rational vector space on a digroup with
/// bilinearly extended products, diagonal coproduct, constant counit and the
/// inverse map as antipode. All structure maps are table-driven so the axiom
/// verifier can be exercised against corrupted tables.
class DigroupAlgebra {
public:
  // Requires the two one-sided inverses of the digroup to coincide; rejects
  // genuinely one-sided inverse data, which would need two antipode maps
  // rather than the single common antipode modeled here.
  static DigroupAlgebra from_digroup(GDigroup digroup);

  int dim() const { return n_; }
  int xi() const { return xi_; }
  const GDigroup& digroup() const { return digroup_; }
  const std::string& basis_label(int d) const;
  int basis_index(const std::string& label) const;

  int product_entry(ProductSide side, int d, int e) const;
  int antipode_entry(int d) const;
  const TensorElement& coproduct_entry(int d) const;
  const Rational& counit_entry(int d) const;

  DialgebraElement dprod(ProductSide side, const DialgebraElement& x,
                         const DialgebraElement& y) const;
  TensorElement coproduct(const DialgebraElement& x) const;
  Rational counit(const DialgebraElement& x) const;
  DialgebraElement antipode(const DialgebraElement& x) const;

  // [x, y] = x |- y - y -| x.
  DialgebraElement leibniz_bracket(const DialgebraElement& x,
                                   const DialgebraElement& y) const;

  // a ▷ b = sum (a_(1) |- b) -| S(a_(2)), expanded through the coproduct
  // table; on group-like basis elements this collapses to (d |- b) -| S(d).
  DialgebraElement adjoint_rack_product(const DialgebraElement& a,
                                        const DialgebraElement& b) const;
  int adjoint_table_entry(int d, int e) const;

  // Scan of single-basis candidates. Valid as a full solution of
  // Delta(x) = x (x) x, eps(x) = 1 whenever the support certificate holds.
  std::vector<DialgebraElement> group_like_elements() const;
  // Executable form of the support argument: if every coproduct-table entry
  // is supported on the diagonal, comparing off-diagonal coefficients of
  // Delta(x) and x (x) x forces lambda_d lambda_e = 0 for d != e, so any
  // group-like element has support size <= 1.
  bool group_like_support_certificate() const;

  // Group-likes closed under both products, xi among them, and the antipode
  // providing a two-sided inverse for each.
  bool glike_digroup_check() const;

  // Basis of the xi-primitive space {x : Delta(x) = x(x)xi + xi(x)x},
  // computed by an exact rational nullspace solve.
  std::vector<DialgebraElement> primitive_elements() const;

  AxiomReport verify_hopf_axioms(std::size_t triple_cap = 1000000,
                                 unsigned seed = 0,
                                 int random_checks = 100) const;
  AxiomReport verify_adjoint_rack_axioms(std::size_t triple_cap = 1000000,
                                         unsigned seed = 0,
                                         int random_checks = 100) const;
  AxiomReport verify_leibniz_identity(std::size_t triple_cap = 1000000,
                                      unsigned seed = 0,
                                      int random_checks = 100) const;

  struct Factorization {
    bool group_likes_are_basis = false;
    bool support_certificate = false;
    bool adjoint_matches_conjugation_rack = false;
    std::optional<std::pair<int, int>> first_mismatch;

    bool pass() const {
      return group_likes_are_basis && support_certificate &&
             adjoint_matches_conjugation_rack;
    }
  };
  Factorization factorization_check() const;

  // Fault-injection hooks: corrupt one table entry and watch the verifier
  // catch it. Values are bounds-checked, nothing else is.
  void corrupt_product_entry(ProductSide side, int d, int e, int value);
  void corrupt_antipode_entry(int d, int value);
  void corrupt_counit_entry(int d, Rational value);
  void corrupt_coproduct_entry(int d, TensorElement value);
  void corrupt_bar_unit(int d);

private:
  explicit DigroupAlgebra(GDigroup digroup) : digroup_(std::move(digroup)) {}
  void check_basis(int d) const;

  GDigroup digroup_;
  int n_ = 0;
  int xi_ = 0;
  std::vector<std::vector<int>> vdash_;
  std::vector<std::vector<int>> dashv_;
  std::vector<int> antipode_;
  std::vector<TensorElement> coproduct_;
  std::vector<Rational> counit_;
  std::vector<std::string> labels_;
  std::map<std::string, int> label_index_;
};

// Deterministic generator of small random elements (support <= 4,
// numerators in [-9, 9], denominators in {1, 2, 3}) for spot checks.
class RandomElementGenerator {
public:
  RandomElementGenerator(unsigned seed, int dim) : rng_(seed), dim_(dim) {}
  DialgebraElement next();

private:
  std::mt19937 rng_;
  int dim_;
};

}  // namespace digrack
