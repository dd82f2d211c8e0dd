#pragma once

#include <string>

#include <json.hpp>

#include "digrack/dialgebra.hpp"
#include "digrack/digroup.hpp"
#include "digrack/invariants.hpp"

namespace digrack {

// Input records. Unknown fields are rejected.
//
// group:   {"cayley": [[...]], "labels": [...]}
//        | {"degree": m, "generators": ["(0 1)(2 3)", ...]}
// action:  {"table": [[...]], "halo_labels": [...]}
//        | {"generator_images": ["(1 2)", ...], "halo_size": k,
//           "halo_labels": [...]}
// digroup: {"group": ..., "action": ..., "bar_unit_halo_point": 0}
//        | {"kinyon": {"group": ..., "action": ..., "fixed_point": i}}
FiniteGroup group_from_json(const nlohmann::json& j);
GAction action_from_json(const nlohmann::json& j, const FiniteGroup& group);
GDigroup digroup_from_json(const nlohmann::json& j);

// {"coeffs": {"<basis-label>": "num/den", ...}}
DialgebraElement element_from_json(const nlohmann::json& j,
                                   const DigroupAlgebra& algebra);
nlohmann::json element_to_json(const DialgebraElement& x,
                               const DigroupAlgebra& algebra);

nlohmann::json axiom_report_to_json(const AxiomReport& report);
nlohmann::json cycle_index_to_json(const CycleIndexPolynomial& z);
nlohmann::json fixed_point_polynomial_to_json(const FixedPointPolynomial& phi);
nlohmann::json invariant_report_to_json(const InvariantReport& report);
nlohmann::json subsets_to_json(const std::vector<std::vector<int>>& subsets);

}  // namespace digrack
