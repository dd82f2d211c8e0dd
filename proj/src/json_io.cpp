#include "digrack/json_io.hpp"

#include <set>

#include "digrack/errors.hpp"

namespace digrack {

namespace {

using nlohmann::json;

void require_object(const json& j, const std::string& what) {
  if (!j.is_object())
    throw ValidationError("InvalidRecord", what + " must be a JSON object");
}

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed,
                         const std::string& what) {
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key))
      throw ValidationError("UnknownField",
                            "'" + key + "' in " + what + " record");
}

std::vector<std::vector<int>> int_table(const json& j, const std::string& what) {
  if (!j.is_array())
    throw ValidationError("InvalidRecord", what + " must be an array of rows");
  std::vector<std::vector<int>> table;
  for (const auto& row : j) {
    if (!row.is_array())
      throw ValidationError("InvalidRecord", what + " rows must be arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer())
        throw ValidationError("InvalidRecord", what + " entries must be integers");
      r.push_back(v.get<int>());
    }
    table.push_back(std::move(r));
  }
  return table;
}

std::vector<std::string> string_list(const json& j, const std::string& what) {
  if (!j.is_array())
    throw ValidationError("InvalidRecord", what + " must be an array");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string())
      throw ValidationError("InvalidRecord", what + " entries must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace

FiniteGroup group_from_json(const json& j) {
  require_object(j, "group");
  if (j.contains("cayley")) {
    reject_unknown_keys(j, {"cayley", "labels"}, "group");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = string_list(j["labels"], "labels");
    return FiniteGroup::from_cayley(int_table(j["cayley"], "cayley"),
                                    std::move(labels));
  }
  if (j.contains("generators")) {
    reject_unknown_keys(j, {"degree", "generators"}, "group");
    if (!j.contains("degree") || !j["degree"].is_number_integer())
      throw ValidationError("InvalidRecord", "generator form needs 'degree'");
    const int degree = j["degree"].get<int>();
    std::vector<Permutation> generators;
    for (const auto& text : string_list(j["generators"], "generators"))
      generators.push_back(permutation_from_cycles(text, degree));
    return FiniteGroup::from_permutation_generators(degree,
                                                    std::move(generators));
  }
  throw ValidationError("InvalidRecord",
                        "group record needs 'cayley' or 'generators'");
}

GAction action_from_json(const json& j, const FiniteGroup& group) {
  require_object(j, "action");
  if (j.contains("table")) {
    reject_unknown_keys(j, {"table", "halo_labels"}, "action");
    std::vector<std::string> labels;
    if (j.contains("halo_labels"))
      labels = string_list(j["halo_labels"], "halo_labels");
    return GAction::from_table(group, int_table(j["table"], "table"),
                               std::move(labels));
  }
  if (j.contains("generator_images")) {
    reject_unknown_keys(j, {"generator_images", "halo_size", "halo_labels"},
                        "action");
    if (!j.contains("halo_size") || !j["halo_size"].is_number_integer())
      throw ValidationError("InvalidRecord",
                            "generator-image form needs 'halo_size'");
    const int halo = j["halo_size"].get<int>();
    std::vector<Permutation> images;
    for (const auto& text :
         string_list(j["generator_images"], "generator_images"))
      images.push_back(permutation_from_cycles(text, halo));
    std::vector<std::string> labels;
    if (j.contains("halo_labels"))
      labels = string_list(j["halo_labels"], "halo_labels");
    return GAction::from_generator_images(group, images, halo,
                                          std::move(labels));
  }
  throw ValidationError("InvalidRecord",
                        "action record needs 'table' or 'generator_images'");
}

GDigroup digroup_from_json(const json& j) {
  require_object(j, "digroup");
  if (j.contains("kinyon")) {
    reject_unknown_keys(j, {"kinyon"}, "digroup");
    const json& k = j["kinyon"];
    require_object(k, "kinyon");
    reject_unknown_keys(k, {"group", "action", "fixed_point"}, "kinyon");
    if (!k.contains("group") || !k.contains("action") ||
        !k.contains("fixed_point") || !k["fixed_point"].is_number_integer())
      throw ValidationError(
          "InvalidRecord", "kinyon record needs 'group', 'action', 'fixed_point'");
    FiniteGroup G = group_from_json(k["group"]);
    GAction A = action_from_json(k["action"], G);
    return kinyon_digroup(A, k["fixed_point"].get<int>());
  }
  reject_unknown_keys(j, {"group", "action", "bar_unit_halo_point"}, "digroup");
  if (!j.contains("group") || !j.contains("action"))
    throw ValidationError("InvalidRecord",
                          "digroup record needs 'group' and 'action'");
  int eta = 0;
  if (j.contains("bar_unit_halo_point")) {
    if (!j["bar_unit_halo_point"].is_number_integer())
      throw ValidationError("InvalidRecord",
                            "'bar_unit_halo_point' must be an integer");
    eta = j["bar_unit_halo_point"].get<int>();
  }
  FiniteGroup G = group_from_json(j["group"]);
  GAction A = action_from_json(j["action"], G);
  return GDigroup::from_action(std::move(A), eta);
}

DialgebraElement element_from_json(const json& j,
                                   const DigroupAlgebra& algebra) {
  require_object(j, "element");
  reject_unknown_keys(j, {"coeffs"}, "element");
  if (!j.contains("coeffs") || !j["coeffs"].is_object())
    throw ValidationError("InvalidRecord", "element record needs 'coeffs'");
  DialgebraElement x;
  for (const auto& [label, value] : j["coeffs"].items()) {
    if (!value.is_string())
      throw ValidationError("InvalidRecord",
                            "coefficients must be rational strings");
    x.add(algebra.basis_index(label),
          rational_from_string(value.get<std::string>()));
  }
  return x;
}

json element_to_json(const DialgebraElement& x, const DigroupAlgebra& algebra) {
  json coeffs = json::object();
  for (const auto& [d, c] : x.coeffs())
    coeffs[algebra.basis_label(d)] = rational_to_string(c);
  return json{{"coeffs", coeffs}};
}

json axiom_report_to_json(const AxiomReport& report) {
  json axioms = json::object();
  for (const auto& check : report.checks) {
    json entry{{"pass", check.pass}};
    if (!check.pass) entry["witness"] = check.witness;
    axioms[check.axiom] = std::move(entry);
  }
  json out{{"axioms", std::move(axioms)}, {"pass", report.all_pass()}};
  if (!report.note.empty()) out["note"] = report.note;
  return out;
}

json cycle_index_to_json(const CycleIndexPolynomial& z) {
  json terms = json::array();
  for (const auto& [monomial, coeff] : z.terms) {
    json mono = json::object();
    for (const auto& [length, exponent] : monomial)
      mono[std::to_string(length)] = exponent;
    terms.push_back(json{{"coeff", rational_to_string(coeff)},
                         {"monomial", std::move(mono)}});
  }
  return terms;
}

json fixed_point_polynomial_to_json(const FixedPointPolynomial& phi) {
  json out = json::object();
  for (const auto& [expo, coeff] : phi.terms)
    out[std::to_string(expo)] = coeff;
  return out;
}

json invariant_report_to_json(const InvariantReport& report) {
  json agreement = json::object();
  for (const auto& [name, ok] : report.oracle_agreement) agreement[name] = ok;
  return json{{"cycle_index", cycle_index_to_json(report.cycle_index)},
              {"fixed_point_polynomial",
               fixed_point_polynomial_to_json(report.fixed_point_poly)},
              {"orbit_count", report.orbit_count},
              {"inner_group_order", report.inner_group_order},
              {"is_quandle", report.is_quandle},
              {"oracle_agreement", std::move(agreement)}};
}

json subsets_to_json(const std::vector<std::vector<int>>& subsets) {
  json out = json::array();
  for (const auto& subset : subsets) out.push_back(subset);
  return out;
}

}  // namespace digrack
