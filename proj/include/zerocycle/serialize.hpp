#pragma once

// JSON encodings for reports. Permutations are image arrays with 1-indexed labels,
// rationals are strings "p/q", complex numbers are [re, im].

#include <json.hpp>

#include "zerocycle/applications.hpp"

namespace zerocycle {

using nlohmann::json;

inline constexpr int schema_version = 1;

inline json to_json(const Rational& r) { return r.get_str(); }
inline json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

inline json to_json(const Poly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
  return {{"text", p.to_string()}, {"coeffs", coeffs}};
}

inline json to_json(const LaurentPoly& p) {
  json coeffs = json::array();
  for (int k = p.low(); k <= p.high(); k++) coeffs.push_back(p[k].get_str());
  return {{"text", p.to_string()}, {"low", p.low()}, {"coeffs", coeffs}};
}

inline json to_json(const Permutation& p) {
  json a = json::array();
  for (int v : p.images()) a.push_back(v + 1);
  return a;
}

inline json to_json(const ZeroCycle& c) { return c.weights(); }

inline json to_json(const std::vector<Complex>& v) {
  json a = json::array();
  for (Complex z : v) a.push_back(to_json(z));
  return a;
}

inline json to_json(const ComplexRootSet& r) {
  return {{"roots", to_json(r.roots)}, {"residual_bound", r.residual_bound}};
}

inline json to_json(const MonodromyData& d) {
  json gens = json::array();
  for (const auto& [s, p] : d.generators)
    gens.push_back({{"critical_value", to_json(s)}, {"permutation", to_json(p)}, {"cycles", p.to_string()}});
  return {{"f", to_json(d.f)},
          {"degree", d.degree()},
          {"basepoint", to_json(d.basepoint)},
          {"loop_radius", d.loop_radius},
          {"fiber", to_json(d.fiber)},
          {"generators", gens},
          {"tau_infinity", to_json(d.tau_infinity)},
          {"tau_infinity_cycles", d.tau_infinity.to_string()}};
}

inline json to_json(const BlockSystem& b) {
  json blocks = json::array();
  for (const auto& blk : b.blocks) {
    json a = json::array();
    for (int i : blk) a.push_back(i + 1);
    blocks.push_back(a);
  }
  return {{"block_size", b.block_size}, {"blocks", blocks}};
}

inline json to_json(const Decomposition& d) { return {{"outer", to_json(d.outer)}, {"inner", to_json(d.inner)}}; }

inline json to_json(const ProjectionOutcome& p) {
  json j = {{"inner_degree", p.inner_degree},
            {"decomposition", to_json(p.decomposition)},
            {"projected", to_json(p.projected)},
            {"kind", to_string(p.kind)}};
  if (p.witness) j["witness"] = to_json(*p.witness);
  return j;
}

inline json to_json(const CycleClassification& c) {
  json j = {{"trivial", c.trivial}, {"balanced", c.balanced}, {"totally_unbalanced", c.totally_unbalanced}};
  if (c.witness) j["witness"] = to_json(*c.witness);
  if (c.balanced_projection) j["balanced_projection"] = to_json(*c.balanced_projection);
  json ps = json::array();
  for (const auto& p : c.projections) ps.push_back(to_json(p));
  j["projections"] = ps;
  return j;
}

inline json to_json(const VanishingEvidence& e) {
  json j = {{"pass", e.pass},
            {"numeric_pass", e.numeric_pass},
            {"puiseux_pass", e.puiseux_pass},
            {"worst_numeric_residual", e.worst_numeric_residual},
            {"worst_puiseux_residual", e.worst_puiseux_residual},
            {"samples", e.samples},
            {"order", e.order}};
  if (e.first_failing_k) j["first_failing_k"] = *e.first_failing_k;
  return j;
}

inline json to_json(const BalancedResolution& r) {
  json j = {{"method", r.method}, {"vanishes", r.vanishes}, {"evidence", to_json(r.evidence)}};
  if (r.method == "zm-exact") j["allowed_residues"] = r.allowed_residues;
  return j;
}

inline json to_json(const VanishingCertificate& c) {
  json terms = json::array();
  for (const auto& t : c.terms) {
    json j = {{"h", to_json(t.inner)},
              {"f0", to_json(t.outer)},
              {"g", to_json(t.g)},
              {"projected", to_json(t.projected)},
              {"kind", to_string(t.kind)}};
    if (t.resolution) j["resolution"] = to_json(*t.resolution);
    terms.push_back(j);
  }
  return {{"status", to_string(c.status)},
          {"terms", terms},
          {"evidence", to_json(c.evidence)},
          {"reconstruction_exact", c.reconstruction_exact},
          {"diagnostics", c.diagnostics}};
}

inline json to_json(const ZmSolutions& s) { return {{"m", s.m}, {"allowed", s.allowed}, {"forbidden", s.forbidden}}; }

// Wraps a report with the schema version and the command name.
inline json report(const std::string& command, json body) {
  body["schema_version"] = schema_version;
  body["command"] = command;
  return body;
}

}  // namespace zerocycle
