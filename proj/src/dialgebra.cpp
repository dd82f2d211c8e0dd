#include "digrack/dialgebra.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "digrack/errors.hpp"
#include "digrack/invariants.hpp"

namespace digrack {

DialgebraElement DialgebraElement::basis(int d) {
  DialgebraElement x;
  x.coeffs_[d] = 1;
  return x;
}

Rational DialgebraElement::coeff(int d) const {
  auto it = coeffs_.find(d);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void DialgebraElement::add(int d, const Rational& c) {
  auto it = coeffs_.try_emplace(d, 0).first;
  it->second += c;
  if (it->second == 0) coeffs_.erase(it);
}

DialgebraElement& DialgebraElement::operator+=(const DialgebraElement& other) {
  for (const auto& [d, c] : other.coeffs_) add(d, c);
  return *this;
}

DialgebraElement& DialgebraElement::operator-=(const DialgebraElement& other) {
  for (const auto& [d, c] : other.coeffs_) add(d, -c);
  return *this;
}

DialgebraElement& DialgebraElement::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [d, c] : coeffs_) c *= scalar;
  return *this;
}

TensorElement TensorElement::basis(int d, int e) {
  TensorElement t;
  t.coeffs_[{d, e}] = 1;
  return t;
}

void TensorElement::add(int d, int e, const Rational& c) {
  auto it = coeffs_.try_emplace({d, e}, 0).first;
  it->second += c;
  if (it->second == 0) coeffs_.erase(it);
}

TensorElement TensorElement::swapped() const {
  TensorElement t;
  for (const auto& [key, c] : coeffs_) t.add(key.second, key.first, c);
  return t;
}

TensorElement& TensorElement::operator+=(const TensorElement& other) {
  for (const auto& [key, c] : other.coeffs_) add(key.first, key.second, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& other) {
  for (const auto& [key, c] : other.coeffs_) add(key.first, key.second, -c);
  return *this;
}

TensorElement& TensorElement::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [key, c] : coeffs_) c *= scalar;
  return *this;
}

DigroupAlgebra DigroupAlgebra::from_digroup(GDigroup digroup) {
  if (!digroup.is_digroup())
    throw NotADigroup(
        "left and right inverses differ relative to the chosen bar-unit; a "
        "single common antipode needs a two-sided inverse, one-sided inverse "
        "data is not modeled");
  DigroupAlgebra A(std::move(digroup));
  const GDigroup& D = A.digroup_;
  A.n_ = D.size();
  A.xi_ = D.bar_unit();
  A.vdash_.assign(A.n_, std::vector<int>(A.n_));
  A.dashv_.assign(A.n_, std::vector<int>(A.n_));
  A.antipode_.resize(A.n_);
  for (int d = 0; d < A.n_; ++d) {
    for (int e = 0; e < A.n_; ++e) {
      A.vdash_[d][e] = D.dprod_left(d, e);
      A.dashv_[d][e] = D.dprod_right(d, e);
    }
    const int inv = D.right_inverse(d);
    if (inv != D.left_inverse(d))
      throw std::logic_error("inverse maps disagree on a digroup");
    A.antipode_[d] = inv;
  }
  A.coproduct_.reserve(A.n_);
  A.counit_.assign(A.n_, Rational(1));
  for (int d = 0; d < A.n_; ++d)
    A.coproduct_.push_back(TensorElement::basis(d, d));
  A.labels_ = D.labels();
  for (int d = 0; d < A.n_; ++d) {
    if (!A.label_index_.emplace(A.labels_[d], d).second)
      throw ValidationError("DuplicateLabels",
                            "basis label '" + A.labels_[d] + "' repeats");
  }
  return A;
}

void DigroupAlgebra::check_basis(int d) const {
  if (d < 0 || d >= n_)
    throw IndexOutOfRange("basis index " + std::to_string(d));
}

const std::string& DigroupAlgebra::basis_label(int d) const {
  check_basis(d);
  return labels_[d];
}

int DigroupAlgebra::basis_index(const std::string& label) const {
  auto it = label_index_.find(label);
  if (it == label_index_.end())
    throw IndexOutOfRange("unknown basis label '" + label + "'");
  return it->second;
}

int DigroupAlgebra::product_entry(ProductSide side, int d, int e) const {
  check_basis(d);
  check_basis(e);
  return side == ProductSide::left ? vdash_[d][e] : dashv_[d][e];
}

int DigroupAlgebra::antipode_entry(int d) const {
  check_basis(d);
  return antipode_[d];
}

const TensorElement& DigroupAlgebra::coproduct_entry(int d) const {
  check_basis(d);
  return coproduct_[d];
}

const Rational& DigroupAlgebra::counit_entry(int d) const {
  check_basis(d);
  return counit_[d];
}

DialgebraElement DigroupAlgebra::dprod(ProductSide side,
                                       const DialgebraElement& x,
                                       const DialgebraElement& y) const {
  const auto& table = side == ProductSide::left ? vdash_ : dashv_;
  DialgebraElement result;
  for (const auto& [d, cx] : x.coeffs())
    for (const auto& [e, cy] : y.coeffs()) result.add(table[d][e], cx * cy);
  return result;
}

TensorElement DigroupAlgebra::coproduct(const DialgebraElement& x) const {
  TensorElement result;
  for (const auto& [d, c] : x.coeffs()) {
    TensorElement term = coproduct_[d];
    term *= c;
    result += term;
  }
  return result;
}

Rational DigroupAlgebra::counit(const DialgebraElement& x) const {
  Rational result = 0;
  for (const auto& [d, c] : x.coeffs()) result += c * counit_[d];
  return result;
}

DialgebraElement DigroupAlgebra::antipode(const DialgebraElement& x) const {
  DialgebraElement result;
  for (const auto& [d, c] : x.coeffs()) result.add(antipode_[d], c);
  return result;
}

DialgebraElement DigroupAlgebra::leibniz_bracket(
    const DialgebraElement& x, const DialgebraElement& y) const {
  return dprod(ProductSide::left, x, y) - dprod(ProductSide::right, y, x);
}

DialgebraElement DigroupAlgebra::adjoint_rack_product(
    const DialgebraElement& a, const DialgebraElement& b) const {
  DialgebraElement result;
  const TensorElement delta_a = coproduct(a);
  for (const auto& [key, c] : delta_a.coeffs()) {
    const auto [u, v] = key;
    for (const auto& [e, cb] : b.coeffs())
      result.add(dashv_[vdash_[u][e]][antipode_[v]], c * cb);
  }
  return result;
}

int DigroupAlgebra::adjoint_table_entry(int d, int e) const {
  check_basis(d);
  check_basis(e);
  const DialgebraElement r =
      adjoint_rack_product(DialgebraElement::basis(d), DialgebraElement::basis(e));
  if (r.coeffs().size() != 1 || r.coeffs().begin()->second != 1)
    throw std::logic_error("adjoint product of basis elements is not basis");
  return r.coeffs().begin()->first;
}

std::vector<DialgebraElement> DigroupAlgebra::group_like_elements() const {
  // Single-support solutions of Delta(x) = x (x) x, eps(x) = 1: writing
  // x = lambda d, the coproduct table must put Delta(d) on (d,d) alone, say
  // with coefficient c; then lambda = c and c * eps(d) = 1.
  std::vector<DialgebraElement> result;
  for (int d = 0; d < n_; ++d) {
    const auto& entries = coproduct_[d].coeffs();
    if (entries.size() != 1) continue;
    const auto& [key, c] = *entries.begin();
    if (key != std::pair<int, int>(d, d)) continue;
    if (c * counit_[d] != 1) continue;
    DialgebraElement x;
    x.add(d, c);
    result.push_back(std::move(x));
  }
  return result;
}

bool DigroupAlgebra::group_like_support_certificate() const {
  for (int d = 0; d < n_; ++d)
    for (const auto& [key, c] : coproduct_[d].coeffs())
      if (key.first != key.second) return false;
  return true;
}

bool DigroupAlgebra::glike_digroup_check() const {
  if (!group_like_support_certificate()) return false;
  const auto glikes = group_like_elements();
  auto member = [&](const DialgebraElement& x) {
    return std::find(glikes.begin(), glikes.end(), x) != glikes.end();
  };
  const DialgebraElement xi_elem = DialgebraElement::basis(xi_);
  if (!member(xi_elem)) return false;
  for (const auto& g : glikes)
    for (const auto& h : glikes) {
      if (!member(dprod(ProductSide::left, g, h))) return false;
      if (!member(dprod(ProductSide::right, g, h))) return false;
    }
  for (const auto& g : glikes) {
    const DialgebraElement s = antipode(g);
    if (!member(s)) return false;
    if (dprod(ProductSide::left, g, s) != xi_elem) return false;
    if (dprod(ProductSide::right, s, g) != xi_elem) return false;
  }
  return true;
}

namespace {

// Right-nullspace basis of a dense exact-rational matrix.
std::vector<std::vector<Rational>> rational_nullspace(
    std::vector<std::vector<Rational>> m, int cols) {
  const int rows = static_cast<int>(m.size());
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    const Rational lead = m[rank][col];
    for (int c = col; c < cols; ++c) m[rank][c] /= lead;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const Rational factor = m[r][col];
      for (int c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
    }
    pivot_col.push_back(col);
    ++rank;
  }

  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<DialgebraElement> DigroupAlgebra::primitive_elements() const {
  // Delta(x) - x (x) xi - xi (x) x = 0 as a linear system in the basis
  // coefficients of x; only tensor coordinates that can actually appear
  // contribute equations.
  std::map<std::pair<int, int>, std::map<int, Rational>> sparse_rows;
  for (int d = 0; d < n_; ++d) {
    for (const auto& [key, c] : coproduct_[d].coeffs()) sparse_rows[key][d] += c;
    sparse_rows[{d, xi_}][d] -= 1;
    sparse_rows[{xi_, d}][d] -= 1;
  }
  std::vector<std::vector<Rational>> m;
  m.reserve(sparse_rows.size());
  for (const auto& [key, row] : sparse_rows) {
    std::vector<Rational> dense(n_, Rational(0));
    bool nonzero = false;
    for (const auto& [d, c] : row) {
      dense[d] = c;
      nonzero = nonzero || c != 0;
    }
    if (nonzero) m.push_back(std::move(dense));
  }

  std::vector<DialgebraElement> basis;
  for (const auto& v : rational_nullspace(std::move(m), n_)) {
    DialgebraElement x;
    for (int d = 0; d < n_; ++d)
      if (v[d] != 0) x.add(d, v[d]);
    basis.push_back(std::move(x));
  }
  return basis;
}

namespace {

using Tensor3 = std::map<std::array<int, 3>, Rational>;

void add3(Tensor3& t, int a, int b, int c, const Rational& value) {
  auto it = t.try_emplace({a, b, c}, 0).first;
  it->second += value;
  if (it->second == 0) t.erase(it);
}

}  // namespace

AxiomReport DigroupAlgebra::verify_hopf_axioms(std::size_t triple_cap,
                                               unsigned seed,
                                               int random_checks) const {
  const std::size_t triples = static_cast<std::size_t>(n_) *
                              static_cast<std::size_t>(n_) *
                              static_cast<std::size_t>(n_);
  if (triples > triple_cap)
    throw CapExceeded("triple count " + std::to_string(triples) +
                      " exceeds cap " + std::to_string(triple_cap));

  AxiomReport report;
  report.note =
      "products, coproduct, counit and antipode are (multi)linear table "
      "extensions, so basis tuples decide the identities exhaustively; " +
      std::to_string(random_checks) +
      " seeded random rational combinations re-check the extensions";

  auto triple_check = [&](const std::string& name, auto&& identity) {
    AxiomCheck check{name, true, {}};
    for (int x = 0; x < n_ && check.pass; ++x)
      for (int y = 0; y < n_ && check.pass; ++y)
        for (int z = 0; z < n_; ++z)
          if (!identity(x, y, z)) {
            check.pass = false;
            check.witness = {x, y, z};
            break;
          }
    report.checks.push_back(std::move(check));
  };
  auto pair_check = [&](const std::string& name, auto&& identity) {
    AxiomCheck check{name, true, {}};
    for (int x = 0; x < n_ && check.pass; ++x)
      for (int y = 0; y < n_; ++y)
        if (!identity(x, y)) {
          check.pass = false;
          check.witness = {x, y};
          break;
        }
    report.checks.push_back(std::move(check));
  };
  auto basis_check = [&](const std::string& name, auto&& identity) {
    AxiomCheck check{name, true, {}};
    for (int x = 0; x < n_; ++x)
      if (!identity(x)) {
        check.pass = false;
        check.witness = {x};
        break;
      }
    report.checks.push_back(std::move(check));
  };

  const auto& L = vdash_;
  const auto& R = dashv_;
  triple_check("assoc_vdash", [&](int x, int y, int z) {
    return L[L[x][y]][z] == L[x][L[y][z]];
  });
  triple_check("assoc_dashv", [&](int x, int y, int z) {
    return R[R[x][y]][z] == R[x][R[y][z]];
  });
  triple_check("mixed_inner", [&](int x, int y, int z) {
    return L[x][R[y][z]] == R[L[x][y]][z];
  });
  triple_check("mixed_right_absorb", [&](int x, int y, int z) {
    return R[x][R[y][z]] == R[x][L[y][z]];
  });
  triple_check("mixed_left_absorb", [&](int x, int y, int z) {
    return L[L[x][y]][z] == L[R[x][y]][z];
  });

  basis_check("bar_unit",
              [&](int d) { return L[xi_][d] == d && R[d][xi_] == d; });
  basis_check("bar_unit_balanced",
              [&](int d) { return L[d][xi_] == R[xi_][d]; });
  {
    AxiomCheck check{"bar_unit_group_like", true, {}};
    if (coproduct_[xi_] != TensorElement::basis(xi_, xi_) ||
        counit_[xi_] != 1) {
      check.pass = false;
      check.witness = {xi_};
    }
    report.checks.push_back(std::move(check));
  }

  auto coassoc_holds = [&](const TensorElement& delta) {
    Tensor3 lhs, rhs;
    for (const auto& [key, c] : delta.coeffs()) {
      for (const auto& [inner, c2] : coproduct_[key.first].coeffs())
        add3(lhs, inner.first, inner.second, key.second, c * c2);
      for (const auto& [inner, c2] : coproduct_[key.second].coeffs())
        add3(rhs, key.first, inner.first, inner.second, c * c2);
    }
    return lhs == rhs;
  };
  basis_check("coassociativity",
              [&](int d) { return coassoc_holds(coproduct_[d]); });

  auto counit_law_holds = [&](const DialgebraElement& x) {
    DialgebraElement left, right;
    const TensorElement delta = coproduct(x);
    for (const auto& [key, c] : delta.coeffs()) {
      left.add(key.second, c * counit_[key.first]);
      right.add(key.first, c * counit_[key.second]);
    }
    return left == x && right == x;
  };
  basis_check("counit_law", [&](int d) {
    return counit_law_holds(DialgebraElement::basis(d));
  });
  basis_check("cocommutativity", [&](int d) {
    return coproduct_[d].swapped() == coproduct_[d];
  });

  // Delta(a * b) against the tensor-square coproduct of (a, b).
  auto morphism_rhs = [&](const std::vector<std::vector<int>>& table, int d,
                          int e) {
    TensorElement rhs;
    for (const auto& [uv, c] : coproduct_[d].coeffs())
      for (const auto& [pq, c2] : coproduct_[e].coeffs())
        rhs.add(table[uv.first][pq.first], table[uv.second][pq.second], c * c2);
    return rhs;
  };
  pair_check("coproduct_morphism_vdash", [&](int d, int e) {
    return coproduct_[L[d][e]] == morphism_rhs(L, d, e);
  });
  pair_check("coproduct_morphism_dashv", [&](int d, int e) {
    return coproduct_[R[d][e]] == morphism_rhs(R, d, e);
  });
  pair_check("counit_morphism_vdash", [&](int d, int e) {
    return counit_[L[d][e]] == counit_[d] * counit_[e];
  });
  pair_check("counit_morphism_dashv", [&](int d, int e) {
    return counit_[R[d][e]] == counit_[d] * counit_[e];
  });

  basis_check("antipode_coalgebra_morphism", [&](int d) {
    TensorElement mapped;
    for (const auto& [key, c] : coproduct_[d].coeffs())
      mapped.add(antipode_[key.first], antipode_[key.second], c);
    return coproduct_[antipode_[d]] == mapped && counit_[antipode_[d]] == counit_[d];
  });

  auto antipode_identity_holds = [&](const DialgebraElement& x) {
    DialgebraElement conv_left, conv_right;
    const TensorElement delta = coproduct(x);
    for (const auto& [key, c] : delta.coeffs()) {
      conv_left.add(L[key.first][antipode_[key.second]], c);
      conv_right.add(R[antipode_[key.first]][key.second], c);
    }
    DialgebraElement expected;
    expected.add(xi_, counit(x));
    return conv_left == expected && conv_right == expected;
  };
  basis_check("antipode_identities", [&](int d) {
    return antipode_identity_holds(DialgebraElement::basis(d));
  });

  // Random rational combinations guard the linear and bilinear extensions.
  {
    RandomElementGenerator gen(seed, n_);
    AxiomCheck check{"random_spot_checks", true, {}};
    const DialgebraElement xi_elem = DialgebraElement::basis(xi_);
    for (int k = 0; k < random_checks && check.pass; ++k) {
      const DialgebraElement x = gen.next();
      const DialgebraElement y = gen.next();
      bool ok = dprod(ProductSide::left, xi_elem, x) == x &&
                dprod(ProductSide::right, x, xi_elem) == x &&
                dprod(ProductSide::left, x, xi_elem) ==
                    dprod(ProductSide::right, xi_elem, x) &&
                counit_law_holds(x) && coassoc_holds(coproduct(x)) &&
                coproduct(x).swapped() == coproduct(x) &&
                antipode_identity_holds(x);
      if (ok) {
        TensorElement rhs_l, rhs_r;
        const TensorElement dx = coproduct(x);
        const TensorElement dy = coproduct(y);
        for (const auto& [uv, c] : dx.coeffs())
          for (const auto& [pq, c2] : dy.coeffs()) {
            rhs_l.add(L[uv.first][pq.first], L[uv.second][pq.second], c * c2);
            rhs_r.add(R[uv.first][pq.first], R[uv.second][pq.second], c * c2);
          }
        ok = coproduct(dprod(ProductSide::left, x, y)) == rhs_l &&
             coproduct(dprod(ProductSide::right, x, y)) == rhs_r &&
             counit(dprod(ProductSide::left, x, y)) == counit(x) * counit(y) &&
             counit(dprod(ProductSide::right, x, y)) == counit(x) * counit(y);
      }
      if (!ok) {
        check.pass = false;
        check.witness = {k};
      }
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

AxiomReport DigroupAlgebra::verify_adjoint_rack_axioms(std::size_t triple_cap,
                                                       unsigned seed,
                                                       int random_checks) const {
  const std::size_t triples = static_cast<std::size_t>(n_) *
                              static_cast<std::size_t>(n_) *
                              static_cast<std::size_t>(n_);
  if (triples > triple_cap)
    throw CapExceeded("triple count " + std::to_string(triples) +
                      " exceeds cap " + std::to_string(triple_cap));

  AxiomReport report;
  report.note =
      "rack-bialgebra identities checked on all basis tuples (the product is "
      "a bilinear table extension) plus seeded random combinations";

  std::vector<DialgebraElement> basis_elems;
  basis_elems.reserve(n_);
  for (int d = 0; d < n_; ++d) basis_elems.push_back(DialgebraElement::basis(d));

  // Basis products; single basis vectors on a lawful digroup algebra.
  std::vector<std::vector<DialgebraElement>> adj(n_);
  bool closed = true;
  std::vector<int> closure_witness;
  std::vector<std::vector<int>> table(n_, std::vector<int>(n_, -1));
  for (int d = 0; d < n_; ++d) {
    adj[d].reserve(n_);
    for (int e = 0; e < n_; ++e) {
      adj[d].push_back(adjoint_rack_product(basis_elems[d], basis_elems[e]));
      const auto& r = adj[d][e].coeffs();
      if (r.size() == 1 && r.begin()->second == 1) {
        table[d][e] = r.begin()->first;
      } else if (closed) {
        closed = false;
        closure_witness = {d, e};
      }
    }
  }
  report.checks.push_back({"adjoint_basis_closed", closed, closure_witness});

  {
    AxiomCheck check{"adjoint_xi_left_unit", true, {}};
    for (int e = 0; e < n_; ++e)
      if (adj[xi_][e] != basis_elems[e]) {
        check.pass = false;
        check.witness = {e};
        break;
      }
    report.checks.push_back(std::move(check));
  }
  {
    AxiomCheck check{"adjoint_counit_absorption", true, {}};
    for (int d = 0; d < n_; ++d) {
      DialgebraElement expected;
      expected.add(xi_, counit_[d]);
      if (adj[d][xi_] != expected) {
        check.pass = false;
        check.witness = {d};
        break;
      }
    }
    report.checks.push_back(std::move(check));
  }
  {
    AxiomCheck check{"adjoint_coproduct_morphism", true, {}};
    for (int d = 0; d < n_ && check.pass; ++d)
      for (int e = 0; e < n_; ++e) {
        TensorElement rhs;
        for (const auto& [uv, c] : coproduct_[d].coeffs())
          for (const auto& [pq, c2] : coproduct_[e].coeffs())
            for (const auto& [i, ci] : adj[uv.first][pq.first].coeffs())
              for (const auto& [j, cj] : adj[uv.second][pq.second].coeffs())
                rhs.add(i, j, c * c2 * ci * cj);
        if (coproduct(adj[d][e]) != rhs ||
            counit(adj[d][e]) != counit_[d] * counit_[e]) {
          check.pass = false;
          check.witness = {d, e};
          break;
        }
      }
    report.checks.push_back(std::move(check));
  }
  {
    AxiomCheck check{"adjoint_self_distributivity", true, {}};
    if (closed) {
      for (int a = 0; a < n_ && check.pass; ++a)
        for (int b = 0; b < n_ && check.pass; ++b)
          for (int c = 0; c < n_; ++c)
            if (table[a][table[b][c]] != table[table[a][b]][table[a][c]]) {
              check.pass = false;
              check.witness = {a, b, c};
              break;
            }
    } else {
      for (int a = 0; a < n_ && check.pass; ++a)
        for (int b = 0; b < n_ && check.pass; ++b)
          for (int c = 0; c < n_; ++c) {
            const DialgebraElement lhs =
                adjoint_rack_product(basis_elems[a], adj[b][c]);
            DialgebraElement rhs;
            for (const auto& [uv, cc] : coproduct_[a].coeffs()) {
              DialgebraElement term = adjoint_rack_product(
                  adj[uv.first][b], adj[uv.second][c]);
              term *= cc;
              rhs += term;
            }
            if (lhs != rhs) {
              check.pass = false;
              check.witness = {a, b, c};
              break;
            }
          }
    }
    report.checks.push_back(std::move(check));
  }
  {
    // On group-likes the antipode inverts left translations, so each basis
    // row must be a permutation.
    AxiomCheck check{"adjoint_left_translations_bijective", true, {}};
    for (int d = 0; d < n_ && closed; ++d) {
      std::vector<bool> seen(n_, false);
      for (int e = 0; e < n_; ++e) {
        if (seen[table[d][e]]) {
          check.pass = false;
          check.witness = {d};
          break;
        }
        seen[table[d][e]] = true;
      }
      if (!check.pass) break;
    }
    if (!closed) {
      check.pass = false;
      check.witness = closure_witness;
    }
    report.checks.push_back(std::move(check));
  }
  {
    RandomElementGenerator gen(seed, n_);
    AxiomCheck check{"adjoint_random_spot_checks", true, {}};
    const DialgebraElement xi_elem = DialgebraElement::basis(xi_);
    for (int k = 0; k < random_checks && check.pass; ++k) {
      const DialgebraElement a = gen.next();
      const DialgebraElement b = gen.next();
      const DialgebraElement c = gen.next();
      DialgebraElement eps_xi;
      eps_xi.add(xi_, counit(a));
      bool ok = adjoint_rack_product(xi_elem, a) == a &&
                adjoint_rack_product(a, xi_elem) == eps_xi;
      if (ok) {
        const DialgebraElement lhs =
            adjoint_rack_product(a, adjoint_rack_product(b, c));
        DialgebraElement rhs;
        const TensorElement da = coproduct(a);
        for (const auto& [uv, cc] : da.coeffs()) {
          DialgebraElement term = adjoint_rack_product(
              adjoint_rack_product(basis_elems[uv.first], b),
              adjoint_rack_product(basis_elems[uv.second], c));
          term *= cc;
          rhs += term;
        }
        ok = lhs == rhs;
      }
      if (!ok) {
        check.pass = false;
        check.witness = {k};
      }
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

AxiomReport DigroupAlgebra::verify_leibniz_identity(std::size_t triple_cap,
                                                    unsigned seed,
                                                    int random_checks) const {
  const std::size_t triples = static_cast<std::size_t>(n_) *
                              static_cast<std::size_t>(n_) *
                              static_cast<std::size_t>(n_);
  if (triples > triple_cap)
    throw CapExceeded("triple count " + std::to_string(triples) +
                      " exceeds cap " + std::to_string(triple_cap));

  AxiomReport report;
  auto leibniz_holds = [&](const DialgebraElement& x, const DialgebraElement& y,
                           const DialgebraElement& z) {
    return leibniz_bracket(x, leibniz_bracket(y, z)) ==
           leibniz_bracket(leibniz_bracket(x, y), z) +
               leibniz_bracket(y, leibniz_bracket(x, z));
  };
  {
    AxiomCheck check{"left_leibniz_basis", true, {}};
    for (int x = 0; x < n_ && check.pass; ++x)
      for (int y = 0; y < n_ && check.pass; ++y)
        for (int z = 0; z < n_; ++z)
          if (!leibniz_holds(DialgebraElement::basis(x),
                             DialgebraElement::basis(y),
                             DialgebraElement::basis(z))) {
            check.pass = false;
            check.witness = {x, y, z};
            break;
          }
    report.checks.push_back(std::move(check));
  }
  {
    RandomElementGenerator gen(seed, n_);
    AxiomCheck check{"left_leibniz_random", true, {}};
    for (int k = 0; k < random_checks; ++k)
      if (!leibniz_holds(gen.next(), gen.next(), gen.next())) {
        check.pass = false;
        check.witness = {k};
        break;
      }
    report.checks.push_back(std::move(check));
  }
  return report;
}

DigroupAlgebra::Factorization DigroupAlgebra::factorization_check() const {
  Factorization f;
  f.support_certificate = group_like_support_certificate();

  const auto glikes = group_like_elements();
  f.group_likes_are_basis = static_cast<int>(glikes.size()) == n_;
  if (f.group_likes_are_basis)
    for (int d = 0; d < n_; ++d)
      if (glikes[d] != DialgebraElement::basis(d)) {
        f.group_likes_are_basis = false;
        break;
      }

  const FiniteRack conj = conjugation_rack(digroup_);
  f.adjoint_matches_conjugation_rack = true;
  for (int d = 0; d < n_ && f.adjoint_matches_conjugation_rack; ++d)
    for (int e = 0; e < n_; ++e) {
      const DialgebraElement lhs = adjoint_rack_product(
          DialgebraElement::basis(d), DialgebraElement::basis(e));
      if (lhs != DialgebraElement::basis(conj.op(d, e))) {
        f.adjoint_matches_conjugation_rack = false;
        f.first_mismatch = {d, e};
        break;
      }
    }
  return f;
}

void DigroupAlgebra::corrupt_product_entry(ProductSide side, int d, int e,
                                           int value) {
  check_basis(d);
  check_basis(e);
  check_basis(value);
  (side == ProductSide::left ? vdash_ : dashv_)[d][e] = value;
}

void DigroupAlgebra::corrupt_antipode_entry(int d, int value) {
  check_basis(d);
  check_basis(value);
  antipode_[d] = value;
}

void DigroupAlgebra::corrupt_counit_entry(int d, Rational value) {
  check_basis(d);
  counit_[d] = std::move(value);
}

void DigroupAlgebra::corrupt_coproduct_entry(int d, TensorElement value) {
  check_basis(d);
  for (const auto& [key, c] : value.coeffs()) {
    check_basis(key.first);
    check_basis(key.second);
  }
  coproduct_[d] = std::move(value);
}

void DigroupAlgebra::corrupt_bar_unit(int d) {
  check_basis(d);
  xi_ = d;
}

DialgebraElement RandomElementGenerator::next() {
  DialgebraElement x;
  const int support = 1 + static_cast<int>(rng_() % 4);
  for (int k = 0; k < support; ++k) {
    const int idx = static_cast<int>(rng_() % static_cast<unsigned>(dim_));
    int num = 0;
    while (num == 0) num = static_cast<int>(rng_() % 19) - 9;
    const int den = 1 + static_cast<int>(rng_() % 3);
    x.add(idx, Rational(num, den));
  }
  return x;
}

}  // namespace digrack
