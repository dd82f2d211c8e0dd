#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "digrack/action.hpp"
#include "digrack/report.hpp"

namespace digrack {

/// The generalized digroup on G x E induced by a group action:
///   (g,a) |- (h,b) = (g h, g•b)      (dprod_left)
///   (g,a) -| (h,b) = (g h, a)        (dprod_right)
/// Elements are flat indices g*|E| + a. The distinguished bar-unit is
/// (e, eta) for a chosen halo point eta; the construction verifies the
/// generalized-digroup axioms exhaustively.
class GDigroup {
public:
  static GDigroup from_action(GAction action, int bar_unit_halo_point = 0,
                              std::size_t verify_triple_cap = 1000000);

  int size() const { return action_.group().order() * action_.halo_size(); }
  const GAction& action() const { return action_; }
  const FiniteGroup& group() const { return action_.group(); }
  int halo_size() const { return action_.halo_size(); }

  int flat(int g, int alpha) const;
  std::pair<int, int> unflat(int x) const;

  int bar_halo_point() const { return bar_halo_; }
  int bar_unit() const;  // flat index of (e, eta)

  int dprod_left(int x, int y) const;
  int dprod_right(int x, int y) const;
  std::vector<int> halo() const;  // the bar-units (e, alpha)

  // One-sided inverses relative to the distinguished bar-unit:
  // right_inverse(g,a) = (g^-1, g^-1•eta), left_inverse(g,a) = (g^-1, eta).
  // The defining identities are re-checked on every call.
  int right_inverse(int x) const;
  int left_inverse(int x) const;

  // True iff the two one-sided inverses agree for every element,
  // equivalently eta is fixed by the whole group.
  bool is_digroup() const;

  GDigroup with_bar_halo_point(int eta) const;

  std::string label(int x) const;  // "(g-label,halo-label)"
  std::vector<std::string> labels() const;

private:
  GDigroup(GAction action, int bar_halo)
      : action_(std::move(action)), bar_halo_(bar_halo) {}

  GAction action_;
  int bar_halo_;
};

// Raw product tables with a candidate bar-unit. The axiom verifier consumes
// this form so corrupted tables can be fed to it directly.
struct DigroupTables {
  int size = 0;
  std::vector<std::vector<int>> vdash;  // x |- y
  std::vector<std::vector<int>> dashv;  // x -| y
  int bar_unit = 0;
};

DigroupTables digroup_tables(const GDigroup& digroup);

// Checks associativity of both products, the three mixed identities, the
// bar-unit law and one-sided inverse existence; reports the first
// counterexample per axiom. Throws CapExceeded when size^3 exceeds the cap.
AxiomReport verify_gdigroup_axioms(const DigroupTables& tables,
                                   std::size_t triple_cap = 1000000);
AxiomReport verify_gdigroup_axioms(const GDigroup& digroup,
                                   std::size_t triple_cap = 1000000);

// The digroup M x H attached to a group action with a chosen global fixed
// point, re-indexed into G x E coordinates (G := H, E := M, bar-unit
// (1, fixed_point)). The construction checks that the two coordinate
// presentations define the same products.
GDigroup kinyon_digroup(const GAction& action, int fixed_point);

}  // namespace digrack
