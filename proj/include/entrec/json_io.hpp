#pragma once

#include <json.hpp>

#include "entrec/decomposition.hpp"
#include "entrec/order_solver.hpp"
#include "entrec/strict_recovery.hpp"
#include "entrec/uniformity.hpp"
#include "entrec/vectors.hpp"

namespace entrec {

using Json = nlohmann::json;

// State schema: {"dim": n, "coefficients": ["p/q" | "0.33" | int, ...],
// "normalized": bool (default true)}.  Coefficients may arrive in any order.
// Non-integer JSON numbers are rejected: they would pass through binary
// floating point, and this library promises exact values.
SchmidtVector state_from_json(const Json& j);
Json state_to_json(const SchmidtVector& v);

Json rationals_to_json(const std::vector<Rational>& values);

Json report_to_json(const MajorizationReport& report);
Json indices_to_json(const UniformityIndices& u);
Json compact_to_json(const CompactForm& form);
Json decomposition_to_json(const NormalDecomposition& nd);
Json strict_verdict_to_json(const StrictVerdict& verdict);

Json witness_to_json(const TransferWitness& witness);

}  // namespace entrec
