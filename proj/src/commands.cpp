#include "digrack/commands.hpp"

#include <random>

#include "digrack/dialgebra.hpp"
#include "digrack/errors.hpp"
#include "digrack/invariants.hpp"
#include "digrack/json_io.hpp"

namespace digrack {

namespace {

using nlohmann::json;

// Exhaustive below this size, seeded random subsets above.
constexpr int kExhaustiveSubsetLimit = 12;
constexpr int kRandomSubsetSamples = 200;

std::vector<int> random_nonempty_subset(std::mt19937& rng, int n) {
  std::vector<int> subset;
  for (int x = 0; x < n; ++x)
    if (rng() & 1u) subset.push_back(x);
  if (subset.empty()) subset.push_back(static_cast<int>(rng() % n));
  return subset;
}

// Structural subrack conditions against direct closure checking.
bool subrack_criterion_agrees(const GDigroup& D, const FiniteRack& conj,
                              const std::vector<int>& subset) {
  return subrack_criterion(D, subset).verdict == is_subrack(conj, subset);
}

json subracks_section(const GDigroup& D, const JobSpec& spec, bool& pass) {
  json section = json::object();
  const FiniteRack conj = conjugation_rack(D);
  const int n = D.size();

  bool agree = true;
  if (n <= kExhaustiveSubsetLimit) {
    for (std::uint32_t mask = 1; mask < (1u << n) && agree; ++mask) {
      std::vector<int> subset;
      for (int x = 0; x < n; ++x)
        if (mask & (1u << x)) subset.push_back(x);
      agree = subrack_criterion_agrees(D, conj, subset);
    }
    section["criterion_samples"] = "exhaustive";
  } else {
    std::mt19937 rng(spec.seed);
    for (int k = 0; k < kRandomSubsetSamples && agree; ++k)
      agree = subrack_criterion_agrees(D, conj, random_nonempty_subset(rng, n));
    section["criterion_samples"] =
        "random-" + std::to_string(kRandomSubsetSamples);
  }
  section["criterion_oracle_agreement"] = agree;
  pass = pass && agree;

  std::vector<std::vector<int>> enumerated;
  bool have_enumeration = false;
  if (n <= spec.cap_subsets) {
    enumerated = enumerate_subracks(conj, spec.cap_subsets);
    section["subrack_count"] = enumerated.size();
    section["subracks"] = subsets_to_json(enumerated);
    have_enumeration = true;
  } else {
    section["subracks"] = "skipped (size exceeds cap)";
  }

  const ProductSubposet poset =
      product_subposet(D, spec.cap_subsets, spec.cap_subsets);
  bool products_ok = true;
  for (const auto& entry : poset.entries)
    products_ok = products_ok && is_subrack(conj, entry.product);
  bool in_enumeration = true;
  if (have_enumeration)
    for (const auto& entry : poset.entries)
      in_enumeration =
          in_enumeration && std::binary_search(enumerated.begin(),
                                               enumerated.end(), entry.product);
  json subposet{{"pairs", poset.entries.size()},
                {"injective", poset.injective},
                {"order_preserving", poset.order_preserving},
                {"products_are_subracks", products_ok}};
  if (have_enumeration) subposet["products_in_enumeration"] = in_enumeration;
  section["product_subposet"] = std::move(subposet);
  pass = pass && poset.injective && poset.order_preserving && products_ok &&
         (!have_enumeration || in_enumeration);
  return section;
}

json hopf_section(const DigroupAlgebra& A, const JobSpec& spec, bool& pass) {
  json section = json::object();
  const AxiomReport hopf =
      A.verify_hopf_axioms(spec.cap_triples, spec.seed, 100);
  const AxiomReport adjoint =
      A.verify_adjoint_rack_axioms(spec.cap_triples, spec.seed, 100);
  const AxiomReport leibniz =
      A.verify_leibniz_identity(spec.cap_triples, spec.seed, 100);
  section["hopf_axioms"] = axiom_report_to_json(hopf);
  section["adjoint_rack_axioms"] = axiom_report_to_json(adjoint);
  section["leibniz"] = axiom_report_to_json(leibniz);
  pass = pass && hopf.all_pass() && adjoint.all_pass() && leibniz.all_pass();
  return section;
}

json factorization_section(const DigroupAlgebra& A, bool& pass) {
  const auto f = A.factorization_check();
  const auto primitives = A.primitive_elements();
  json section{{"factorization", f.pass()},
               {"group_likes_are_basis", f.group_likes_are_basis},
               {"support_certificate", f.support_certificate},
               {"adjoint_matches_conjugation_rack",
                f.adjoint_matches_conjugation_rack},
               {"group_like_count", A.group_like_elements().size()},
               {"primitive_dimension", primitives.size()},
               {"glike_digroup", A.glike_digroup_check()}};
  pass = pass && f.pass() && primitives.empty() && A.glike_digroup_check();
  return section;
}

}  // namespace

CommandResult run_command(const GDigroup& D, const JobSpec& spec) {
  CommandResult result;
  result.pass = true;
  json& report = result.report;
  report = json::object();
  report["size"] = D.size();
  report["is_digroup"] = D.is_digroup();

  if (spec.command == "check-axioms") {
    const AxiomReport gdig = verify_gdigroup_axioms(D, spec.cap_triples);
    report["gdigroup_axioms"] = axiom_report_to_json(gdig);
    conjugation_rack(D);  // validates the rack axioms on construction
    report["rack_valid"] = true;
    result.pass = gdig.all_pass();
  } else if (spec.command == "invariants") {
    const InvariantReport inv = invariant_report(D);
    report.update(invariant_report_to_json(inv));
    result.pass = inv.all_agree();
  } else if (spec.command == "subracks") {
    report["subracks"] = subracks_section(D, spec, result.pass);
  } else if (spec.command == "hopf-verify") {
    const DigroupAlgebra A = DigroupAlgebra::from_digroup(D);
    report.update(hopf_section(A, spec, result.pass));
  } else if (spec.command == "factorization") {
    const DigroupAlgebra A = DigroupAlgebra::from_digroup(D);
    report.update(factorization_section(A, result.pass));
  } else if (spec.command == "all") {
    const AxiomReport gdig = verify_gdigroup_axioms(D, spec.cap_triples);
    report["gdigroup_axioms"] = axiom_report_to_json(gdig);
    result.pass = result.pass && gdig.all_pass();
    conjugation_rack(D);
    report["rack_valid"] = true;
    const InvariantReport inv = invariant_report(D);
    report["invariants"] = invariant_report_to_json(inv);
    result.pass = result.pass && inv.all_agree();
    report["subracks"] = subracks_section(D, spec, result.pass);
    if (D.is_digroup()) {
      const DigroupAlgebra A = DigroupAlgebra::from_digroup(D);
      report["hopf"] = hopf_section(A, spec, result.pass);
      report["factorization"] = factorization_section(A, result.pass);
    } else {
      report["hopf"] = "skipped (not a digroup)";
      report["factorization"] = "skipped (not a digroup)";
    }
  } else {
    throw ValidationError("UnknownCommand", "'" + spec.command + "'");
  }

  report["pass"] = result.pass;
  return result;
}

namespace {

void render_lines(const json& j, const std::string& prefix, std::string& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      render_lines(value, prefix.empty() ? key : prefix + "." + key, out);
  } else if (j.is_array() &&
             !std::all_of(j.begin(), j.end(),
                          [](const json& v) { return v.is_number_integer(); })) {
    int index = 0;
    for (const auto& value : j)
      render_lines(value, prefix + "[" + std::to_string(index++) + "]", out);
  } else {
    out += prefix + " = " + j.dump() + "\n";
  }
}

}  // namespace

std::string render_text(const nlohmann::json& j) {
  std::string out;
  render_lines(j, "", out);
  return out;
}

}  // namespace digrack
