#include "entrec/json_io.hpp"

namespace entrec {

SchmidtVector state_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("coefficients")) {
    fail(ErrorKind::ParseError, "state needs {\"dim\", \"coefficients\"}");
  }
  if (!j["dim"].is_number_integer()) fail(ErrorKind::ParseError, "\"dim\" must be an integer");
  const int dim = j["dim"].get<int>();
  if (!j["coefficients"].is_array()) {
    fail(ErrorKind::ParseError, "\"coefficients\" must be an array");
  }
  std::vector<std::string> raw;
  for (const Json& c : j["coefficients"]) {
    if (c.is_string()) {
      raw.push_back(c.get<std::string>());
    } else if (c.is_number_integer()) {
      raw.push_back(std::to_string(c.get<long long>()));
    } else {
      fail(ErrorKind::ParseError,
           "coefficients must be strings (exact) or integers; got " + c.dump() +
               " — write it as a string to keep it exact");
    }
  }
  const bool normalized = j.value("normalized", true);
  return SchmidtVector::parse(raw, dim, normalized);
}

Json state_to_json(const SchmidtVector& v) {
  Json j;
  j["dim"] = v.dim();
  j["coefficients"] = rationals_to_json(v.coefficients());
  j["normalized"] = v.is_normalized();
  return j;
}

Json rationals_to_json(const std::vector<Rational>& values) {
  Json arr = Json::array();
  for (const Rational& r : values) arr.push_back(r.str());
  return arr;
}

Json report_to_json(const MajorizationReport& report) {
  Json j;
  j["majorized"] = report.majorized;
  j["strict"] = report.strict;
  j["delta"] = report.delta;
  j["first_violation"] = report.first_violation ? Json(*report.first_violation) : Json(nullptr);
  return j;
}

Json indices_to_json(const UniformityIndices& u) {
  Json j;
  j["l_u"] = u.l_u.str();
  j["L_u"] = u.L_u.str();
  j["g_u"] = u.g_u.str();
  return j;
}

Json compact_to_json(const CompactForm& form) {
  Json j;
  j["values"] = rationals_to_json(form.values);
  j["multiplicities"] = form.multiplicities;
  return j;
}

Json decomposition_to_json(const NormalDecomposition& nd) {
  Json blocks = Json::array();
  for (const Block& b : nd.blocks) {
    Json jb;
    jb["x"] = rationals_to_json(b.x.coefficients());
    jb["y"] = rationals_to_json(b.y.coefficients());
    jb["tag"] = b.tag == BlockTag::Equal ? "equal" : "strict";
    blocks.push_back(std::move(jb));
  }
  Json j;
  j["blocks"] = std::move(blocks);
  j["I"] = nd.I;
  j["D"] = nd.D;
  j["I_grouped"] = nd.I_grouped;
  j["D_grouped"] = nd.D_grouped;
  return j;
}

Json strict_verdict_to_json(const StrictVerdict& verdict) {
  Json j;
  j["feasible"] = verdict.feasible;
  j["case"] = to_string(verdict.outcome);
  // Negative verdicts cover every source majorized by the target.
  j["applies_to"] =
      verdict.feasible ? "any_strictly_majorized_source" : "any_majorized_source";
  if (const auto* up = std::get_if<UniformPaddedDetail>(&verdict.detail)) {
    j["detail"] = {{"a", up->a}, {"n_prime", up->n_prime}, {"n", up->n}};
  } else if (const auto* rd = std::get_if<RatioDetail>(&verdict.detail)) {
    j["detail"] = {{"boundary", rd->boundary}};
  } else if (const auto* cd = std::get_if<CriticalDetail>(&verdict.detail)) {
    j["detail"] = {{"boundary", cd->boundary}, {"u", cd->u}, {"v", cd->v},
                   {"m_rep", cd->m_rep}};
  }
  return j;
}

Json witness_to_json(const TransferWitness& witness) {
  Json j;
  j["i"] = witness.i;
  j["j"] = witness.j;
  j["epsilon"] = witness.epsilon.str();
  j["omega"] = rationals_to_json(witness.omega.coefficients());
  return j;
}

}  // namespace entrec
