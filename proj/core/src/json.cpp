#include "trilink/json.hpp"

#include "trilink/errors.hpp"

namespace trilink {

Json to_json(const LinkingMatrix& matrix) {
  Json out;
  out["m"] = matrix.size();
  out["entries"] = matrix.rows();
  return out;
}

Json to_json(const TripleLinkingTensor& tensor) {
  Json out;
  out["m"] = tensor.size();
  Json entries = Json::array();
  for (const auto& [t, v] : tensor.nonzero()) {
    Json e;
    e["i"] = t.i;
    e["j"] = t.j;
    e["k"] = t.k;
    e["v"] = v;
    entries.push_back(std::move(e));
  }
  out["entries"] = std::move(entries);
  return out;
}

Json to_json(const BoundReport& report) {
  Json out;
  out["m"] = report.m;
  out["n"] = report.n;
  out["mu"] = report.mu;
  out["nu"] = report.nu;
  Json terms = Json::array();
  for (const auto& [t, v] : report.nu_terms) {
    Json e;
    e["i"] = t.i;
    e["j"] = t.j;
    e["k"] = t.k;
    e["v"] = v;
    terms.push_back(std::move(e));
  }
  out["nu_terms"] = std::move(terms);
  out["lower_bound"] = report.lower_bound;
  out["tlk_abs_sum"] = report.tlk_abs_sum;
  out["realized_r3_count"] = report.realized_r3_count ? Json(*report.realized_r3_count) : Json(nullptr);
  return out;
}

Json to_json(const TriplePointRecord& record) {
  Json out;
  out["step"] = record.move_index + 1;
  out["sign"] = record.sign;
  out["type"] = {record.type.i, record.type.j, record.type.k};
  return out;
}

Json to_json(const ValidationReport& report) {
  Json out;
  out["valid"] = report.valid();
  out["moves"] = report.steps.size();
  out["endpoint_matches"] = report.endpoint_matches;
  out["audited"] = report.audited;
  Json failures = Json::array();
  for (const auto& step : report.steps) {
    const bool audit_failed = step.braid_equal_to_start == false;
    if (step.status == StepReport::Status::inapplicable || audit_failed) {
      Json f;
      f["step"] = step.step;
      f["reason"] = audit_failed ? "intermediate word is not braid-equal to start" : step.message;
      failures.push_back(std::move(f));
    }
  }
  out["failures"] = std::move(failures);
  out["final_word"] = report.final_word ? Json(report.final_word->to_signed()) : Json(nullptr);
  return out;
}

TripleLinkingTensor tensor_from_json(const Json& json) {
  try {
    TripleLinkingTensor tensor(json.at("m").get<int>());
    for (const auto& e : json.at("entries")) {
      tensor.set({e.at("i").get<int>(), e.at("j").get<int>(), e.at("k").get<int>()}, e.at("v").get<int>());
    }
    return tensor;
  } catch (const Json::exception& ex) {
    throw parse_error(std::string("bad tensor JSON: ") + ex.what());
  } catch (const precondition_error& ex) {
    throw parse_error(std::string("bad tensor JSON: ") + ex.what());
  }
}

std::string dump(const Json& json, int indent) { return json.dump(indent) + "\n"; }

}  // namespace trilink
