#include "digrack/digroup.hpp"

#include <stdexcept>

#include "digrack/errors.hpp"

namespace digrack {

GDigroup GDigroup::from_action(GAction action, int bar_unit_halo_point,
                               std::size_t verify_triple_cap) {
  if (bar_unit_halo_point < 0 || bar_unit_halo_point >= action.halo_size())
    throw IndexOutOfRange("bar-unit halo point " +
                          std::to_string(bar_unit_halo_point));
  GDigroup D(std::move(action), bar_unit_halo_point);
  // The product formulas are lawful for every valid action; a failure here
  // is an internal inconsistency, not an input error.
  AxiomReport report = verify_gdigroup_axioms(D, verify_triple_cap);
  if (!report.all_pass())
    throw std::logic_error("generalized-digroup axioms failed on a validated action");
  return D;
}

int GDigroup::flat(int g, int alpha) const {
  if (g < 0 || g >= group().order())
    throw IndexOutOfRange("group element " + std::to_string(g));
  if (alpha < 0 || alpha >= halo_size())
    throw IndexOutOfRange("halo point " + std::to_string(alpha));
  return g * halo_size() + alpha;
}

std::pair<int, int> GDigroup::unflat(int x) const {
  if (x < 0 || x >= size())
    throw IndexOutOfRange("element " + std::to_string(x) +
                          " not in digroup of size " + std::to_string(size()));
  return {x / halo_size(), x % halo_size()};
}

int GDigroup::bar_unit() const { return flat(group().identity(), bar_halo_); }

int GDigroup::dprod_left(int x, int y) const {
  const auto [g, a] = unflat(x);
  const auto [h, b] = unflat(y);
  (void)a;
  return flat(group().mul(g, h), action_.apply(g, b));
}

int GDigroup::dprod_right(int x, int y) const {
  const auto [g, a] = unflat(x);
  const auto [h, b] = unflat(y);
  (void)b;
  return flat(group().mul(g, h), a);
}

std::vector<int> GDigroup::halo() const {
  std::vector<int> result;
  result.reserve(halo_size());
  const int e = group().identity();
  for (int a = 0; a < halo_size(); ++a) result.push_back(flat(e, a));
  return result;
}

int GDigroup::right_inverse(int x) const {
  const auto [g, a] = unflat(x);
  (void)a;
  const int gi = group().inv(g);
  const int inv = flat(gi, action_.apply(gi, bar_halo_));
  if (dprod_left(x, inv) != bar_unit())
    throw std::logic_error("right inverse identity failed");
  return inv;
}

int GDigroup::left_inverse(int x) const {
  const auto [g, a] = unflat(x);
  (void)a;
  const int inv = flat(group().inv(g), bar_halo_);
  if (dprod_right(inv, x) != bar_unit())
    throw std::logic_error("left inverse identity failed");
  return inv;
}

bool GDigroup::is_digroup() const {
  for (int g = 0; g < group().order(); ++g)
    if (action_.apply(g, bar_halo_) != bar_halo_) return false;
  return true;
}

GDigroup GDigroup::with_bar_halo_point(int eta) const {
  return from_action(action_, eta);
}

std::string GDigroup::label(int x) const {
  const auto [g, a] = unflat(x);
  return "(" + group().label(g) + "," + action_.halo_label(a) + ")";
}

std::vector<std::string> GDigroup::labels() const {
  std::vector<std::string> result;
  result.reserve(size());
  for (int x = 0; x < size(); ++x) result.push_back(label(x));
  return result;
}

DigroupTables digroup_tables(const GDigroup& digroup) {
  DigroupTables T;
  T.size = digroup.size();
  T.vdash.assign(T.size, std::vector<int>(T.size));
  T.dashv.assign(T.size, std::vector<int>(T.size));
  for (int x = 0; x < T.size; ++x)
    for (int y = 0; y < T.size; ++y) {
      T.vdash[x][y] = digroup.dprod_left(x, y);
      T.dashv[x][y] = digroup.dprod_right(x, y);
    }
  T.bar_unit = digroup.bar_unit();
  return T;
}

AxiomReport verify_gdigroup_axioms(const DigroupTables& T,
                                   std::size_t triple_cap) {
  const int n = T.size;
  const std::size_t triples =
      static_cast<std::size_t>(n) * static_cast<std::size_t>(n) *
      static_cast<std::size_t>(n);
  if (triples > triple_cap)
    throw CapExceeded("triple count " + std::to_string(triples) +
                      " exceeds cap " + std::to_string(triple_cap));

  AxiomReport report;
  auto triple_check = [&](const std::string& name, auto&& identity) {
    AxiomCheck check{name, true, {}};
    for (int x = 0; x < n && check.pass; ++x)
      for (int y = 0; y < n && check.pass; ++y)
        for (int z = 0; z < n; ++z)
          if (!identity(x, y, z)) {
            check.pass = false;
            check.witness = {x, y, z};
            break;
          }
    report.checks.push_back(std::move(check));
  };

  const auto& L = T.vdash;
  const auto& R = T.dashv;
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

  {
    AxiomCheck check{"bar_unit", true, {}};
    for (int x = 0; x < n; ++x)
      if (R[x][T.bar_unit] != x || L[T.bar_unit][x] != x) {
        check.pass = false;
        check.witness = {x};
        break;
      }
    report.checks.push_back(std::move(check));
  }
  {
    AxiomCheck check{"inverse_existence", true, {}};
    for (int x = 0; x < n; ++x) {
      bool has_right = false, has_left = false;
      for (int y = 0; y < n; ++y) {
        has_right = has_right || L[x][y] == T.bar_unit;
        has_left = has_left || R[y][x] == T.bar_unit;
      }
      if (!has_right || !has_left) {
        check.pass = false;
        check.witness = {x};
        break;
      }
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

AxiomReport verify_gdigroup_axioms(const GDigroup& digroup,
                                   std::size_t triple_cap) {
  return verify_gdigroup_axioms(digroup_tables(digroup), triple_cap);
}

GDigroup kinyon_digroup(const GAction& action, int fixed_point) {
  if (fixed_point < 0 || fixed_point >= action.halo_size())
    throw IndexOutOfRange("fixed point " + std::to_string(fixed_point));
  for (int h = 0; h < action.group().order(); ++h)
    if (action.apply(h, fixed_point) != fixed_point)
      throw NotAFixedPoint("group element " + action.group().label(h) +
                           " moves the chosen point " +
                           action.halo_label(fixed_point));

  GDigroup D = GDigroup::from_action(action, fixed_point);

  // The source model lives on M x H with
  //   (u,h) |- (v,k) = (h•v, hk),   (u,h) -| (v,k) = (u, hk);
  // re-indexing (u,h) -> (h,u) must reproduce the engine products exactly.
  const int m = action.halo_size();
  const int n = action.group().order();
  for (int u = 0; u < m; ++u)
    for (int h = 0; h < n; ++h)
      for (int v = 0; v < m; ++v)
        for (int k = 0; k < n; ++k) {
          const int x = D.flat(h, u), y = D.flat(k, v);
          const int hk = action.group().mul(h, k);
          if (D.dprod_left(x, y) != D.flat(hk, action.apply(h, v)) ||
              D.dprod_right(x, y) != D.flat(hk, u))
            throw std::logic_error("coordinate transposition mismatch");
        }
  return D;
}

}  // namespace digrack
