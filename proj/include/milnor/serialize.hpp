#pragma once

#include <json.hpp>

#include "milnor/deformation.hpp"
#include "milnor/graded_ideal.hpp"
#include "milnor/inverse_system.hpp"
#include "milnor/reconstruction.hpp"
#include "milnor/st_analysis.hpp"

namespace milnor {

using json = nlohmann::json;

// { "n", "degree", "order": "grlex", "dim", "basis": [[rational strings]] }
json subspace_to_json(const Subspace& e);
Subspace subspace_from_json(const json& doc);

// { "n", "d", "gens": [poly strings] }
json generators_to_json(const GeneratorTuple& w);
GeneratorTuple generators_from_json(const json& doc);

// { "n", "d", "T", "form" }
json associated_form_to_json(const AssociatedForm& b);
AssociatedForm associated_form_from_json(const json& doc);

// { "s", "basis": [poly strings] }
json fiber_to_json(const FiberResult& fiber);
/// n and d are needed only when the basis is empty.
FiberResult fiber_from_json(const json& doc, int n, int d);

// { "is_st", "s", "fiber" }
json st_report_to_json(const STReport& report);

// { "k", "tangent_dim", "kernel_dim", "kernel_basis" }
json tangent_kernel_to_json(const TangentKernel& kernel, bool per_generator);

// { "n", "d", "T", "a": [...], "b": [...] }
json hilbert_to_json(const HilbertProfile& profile);

}  // namespace milnor
