#include "digrack/fixtures.hpp"

#include "digrack/errors.hpp"

namespace digrack {

namespace {

FiniteGroup trivial_group() {
  return FiniteGroup::from_cayley({{0}}, {"e"});
}

FiniteGroup c2_group() {
  return FiniteGroup::from_cayley({{0, 1}, {1, 0}}, {"1", "s"});
}

GAction c2_eab_action() {
  // C2 on {e,a,b}: s fixes e and exchanges a and b.
  return GAction::from_table(c2_group(), {{0, 1, 2}, {0, 2, 1}},
                             {"e", "a", "b"});
}

GDigroup trivial_fixture(int halo_points) {
  return GDigroup::from_action(GAction::trivial(trivial_group(), halo_points));
}

GDigroup build(const std::string& name) {
  if (name.rfind("trivial-", 0) == 0) {
    const std::string suffix = name.substr(8);
    int n = 0;
    try {
      n = std::stoi(suffix);
    } catch (const std::exception&) {
      throw ValidationError("UnknownFixture", "'" + name + "'");
    }
    if (n < 1 || std::to_string(n) != suffix)
      throw ValidationError("UnknownFixture", "'" + name + "'");
    return trivial_fixture(n);
  }
  if (name == "c2-eab") return GDigroup::from_action(c2_eab_action());
  if (name == "c2-trivial-2")
    return GDigroup::from_action(GAction::trivial(c2_group(), 2));
  if (name == "c3-cyclic") {
    auto G = FiniteGroup::from_permutation_generators(
        3, {permutation_from_cycles("(0 1 2)", 3)});
    return GDigroup::from_action(GAction::from_generator_images(
        G, {permutation_from_cycles("(0 1 2)", 3)}, 3));
  }
  if (name == "c4-mod2") {
    // C4 acting through its order-2 quotient on 3 points, fixing point 0.
    auto G = FiniteGroup::from_permutation_generators(
        4, {permutation_from_cycles("(0 1 2 3)", 4)});
    return GDigroup::from_action(GAction::from_generator_images(
        G, {permutation_from_cycles("(1 2)", 3)}, 3));
  }
  if (name == "v4-pair") {
    auto gens = std::vector<Permutation>{permutation_from_cycles("(0 1)", 4),
                                         permutation_from_cycles("(2 3)", 4)};
    auto G = FiniteGroup::from_permutation_generators(4, gens);
    return GDigroup::from_action(GAction::from_generator_images(G, gens, 4));
  }
  if (name == "s3-natural") {
    auto gens = std::vector<Permutation>{permutation_from_cycles("(0 1)", 3),
                                         permutation_from_cycles("(0 1 2)", 3)};
    auto G = FiniteGroup::from_permutation_generators(3, gens);
    return GDigroup::from_action(GAction::from_generator_images(G, gens, 3));
  }
  if (name == "s3-trivial-2") {
    auto G = FiniteGroup::from_permutation_generators(
        3, {permutation_from_cycles("(0 1)", 3),
            permutation_from_cycles("(0 1 2)", 3)});
    return GDigroup::from_action(GAction::trivial(G, 2));
  }
  if (name == "d4-natural") {
    auto gens = std::vector<Permutation>{permutation_from_cycles("(0 1 2 3)", 4),
                                         permutation_from_cycles("(1 3)", 4)};
    auto G = FiniteGroup::from_permutation_generators(4, gens);
    return GDigroup::from_action(GAction::from_generator_images(G, gens, 4));
  }
  if (name == "kinyon-c2-eab") return kinyon_digroup(c2_eab_action(), 0);
  if (name == "kinyon-s3-fix") {
    // S3 on four points, the last one fixed; the bar-unit sits on it.
    auto gens = std::vector<Permutation>{permutation_from_cycles("(0 1)", 4),
                                         permutation_from_cycles("(0 1 2)", 4)};
    auto G = FiniteGroup::from_permutation_generators(4, gens);
    return kinyon_digroup(GAction::from_generator_images(G, gens, 4), 3);
  }
  if (name == "a4-fix5") {
    auto gens = std::vector<Permutation>{
        permutation_from_cycles("(0 1 2)", 5),
        permutation_from_cycles("(0 1)(2 3)", 5)};
    auto G = FiniteGroup::from_permutation_generators(5, gens);
    return kinyon_digroup(GAction::from_generator_images(G, gens, 5), 4);
  }
  throw ValidationError("UnknownFixture", "'" + name + "'");
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"trivial-1",  "trivial-2",    "trivial-3",  "c2-eab",
          "c2-trivial-2", "c3-cyclic",  "c4-mod2",    "v4-pair",
          "s3-natural", "s3-trivial-2", "d4-natural", "kinyon-c2-eab",
          "kinyon-s3-fix", "a4-fix5"};
}

GDigroup fixture(const std::string& name) { return build(name); }

std::vector<Fixture> fixture_catalog() {
  std::vector<Fixture> catalog;
  for (const auto& name : fixture_names())
    catalog.push_back({name, build(name)});
  return catalog;
}

}  // namespace digrack
