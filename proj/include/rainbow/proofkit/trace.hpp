// Copyright 2026 The Rainbow Workbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Step traces: run extend_state from a root state, record every outcome
// with a full state snapshot, and re-check recorded traces independently.
//
// {"instance": <instance JSON>,
//  "steps": [{"step": 0, "outcome": "extended" | "augmented" | "infeasible",
//             "state": {"eps": "p/q", "mode": ..., "t": .., "k": .., "r": [..],
//                       "pi": [..], "e": [..], "g": [..],
//                       "x_sets": [[..]], "y_sets": [[..]]},
//             "properties": {"P1": true, ..., "P7": true},
//             "claim": 1, "matching": [..]           (augmented only)
//             "formula": "N_k", "required": "13/2",
//             "available": 1                          (infeasible only)
//            }, ...]}
//
// For "extended" the snapshot is the new state, otherwise the state the
// step was taken from.

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/core.hpp"
#include "rainbow/json_io.hpp"
#include "rainbow/proofkit/extend.hpp"
#include "rainbow/proofkit/properties.hpp"
#include "rainbow/proofkit/state.hpp"

namespace rainbow::proofkit {

struct TraceRecord {
  enum class Kind { extended, augmented, infeasible };
  Kind kind = Kind::extended;
  SwitchState state;
  PropertyReport properties;
  std::optional<Augmented> augmented;
  std::optional<ThresholdInfeasible> infeasible;
};

inline const char* to_string(TraceRecord::Kind k) {
  switch (k) {
    case TraceRecord::Kind::extended: return "extended";
    case TraceRecord::Kind::augmented: return "augmented";
    case TraceRecord::Kind::infeasible: return "infeasible";
  }
  return "?";
}

// Applies extend_state until it augments, stalls, or max_steps extensions
// have been made.
inline std::vector<TraceRecord> run_trace(const SwitchState& root, int max_steps) {
  std::vector<TraceRecord> out;
  SwitchState cur = root;
  for (int step = 0;; ++step) {
    auto outcome = extend_state(cur);
    TraceRecord rec;
    if (auto* ext = std::get_if<Extended>(&outcome)) {
      rec.kind = TraceRecord::Kind::extended;
      rec.state = ext->state;
    } else if (auto* aug = std::get_if<Augmented>(&outcome)) {
      rec.kind = TraceRecord::Kind::augmented;
      rec.state = cur;
      rec.augmented = *aug;
    } else {
      rec.kind = TraceRecord::Kind::infeasible;
      rec.state = cur;
      rec.infeasible = std::get<ThresholdInfeasible>(outcome);
    }
    rec.properties = verify_properties(rec.state);
    const bool extended = rec.kind == TraceRecord::Kind::extended;
    if (extended) cur = rec.state;
    out.push_back(std::move(rec));
    if (!extended || step + 1 >= max_steps) break;
  }
  return out;
}

inline ordered_json sets_to_json(const std::vector<VertexSet>& sets) {
  ordered_json arr = ordered_json::array();
  for (const auto& s : sets) arr.push_back(ordered_json(std::vector<int>(s.begin(), s.end())));
  return arr;
}

inline ordered_json state_to_json(const SwitchState& st) {
  ordered_json j;
  j["eps"] = st.eps.str();
  j["mode"] = to_string(st.mode);
  j["t"] = st.t;
  j["k"] = st.k();
  j["r"] = to_json(st.r);
  j["pi"] = st.pi;
  j["e"] = to_json(std::span<const ColouredEdge>(st.e_seq));
  j["g"] = to_json(std::span<const ColouredEdge>(st.g_seq));
  j["x_sets"] = sets_to_json(st.x_sets);
  j["y_sets"] = sets_to_json(st.y_sets);
  return j;
}

namespace detail {

// Keeps the recorded order, unlike matching_from_json.
inline std::vector<ColouredEdge> edge_list_from_json(const ordered_json& j) {
  if (!j.is_array()) throw FormatError("edge list must be an array");
  std::vector<ColouredEdge> out;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw FormatError("edges are [colour, a, b]");
    out.push_back({{rainbow::detail::json_int(t[1], "a"), rainbow::detail::json_int(t[2], "b")},
                   rainbow::detail::json_int(t[0], "colour")});
  }
  return out;
}

inline std::vector<VertexSet> sets_from_json(const ordered_json& j) {
  if (!j.is_array()) throw FormatError("vertex sets must be an array of arrays");
  std::vector<VertexSet> out;
  for (const auto& s : j) {
    if (!s.is_array()) throw FormatError("vertex sets must be an array of arrays");
    auto& set = out.emplace_back();
    for (const auto& v : s) set.insert(rainbow::detail::json_int(v, "vertex"));
  }
  return out;
}

}  // namespace detail

inline SwitchState state_from_json(const ordered_json& j, std::shared_ptr<const Instance> inst) {
  using rainbow::detail::json_field;
  SwitchState st;
  st.inst = std::move(inst);
  const auto& eps = json_field(j, "eps");
  if (!eps.is_string()) throw FormatError("\"eps\" must be a string \"p/q\"");
  st.eps = Epsilon::parse(eps.get<std::string>());
  const auto& mode = json_field(j, "mode");
  if (mode == "strict") {
    st.mode = Mode::strict;
  } else if (mode == "relaxed") {
    st.mode = Mode::relaxed;
  } else {
    throw FormatError("\"mode\" must be \"strict\" or \"relaxed\"");
  }
  st.t = rainbow::detail::json_int(json_field(j, "t"), "t");
  st.r = matching_from_json(json_field(j, "r"));
  st.pi.clear();
  const auto& pi = json_field(j, "pi");
  if (!pi.is_array()) throw FormatError("\"pi\" must be an array");
  for (const auto& v : pi) st.pi.push_back(rainbow::detail::json_int(v, "pi"));
  st.e_seq = detail::edge_list_from_json(json_field(j, "e"));
  st.g_seq = detail::edge_list_from_json(json_field(j, "g"));
  st.x_sets = detail::sets_from_json(json_field(j, "x_sets"));
  st.y_sets = detail::sets_from_json(json_field(j, "y_sets"));
  if (rainbow::detail::json_int(json_field(j, "k"), "k") != st.k()) {
    throw FormatError("\"k\" disagrees with the length of \"e\"");
  }
  return st;
}

inline ordered_json properties_to_json(const PropertyReport& rep) {
  ordered_json j;
  for (int p = 1; p <= 7; ++p) j["P" + std::to_string(p)] = rep[p].holds;
  return j;
}

inline ordered_json trace_to_json(const Instance& inst, const std::vector<TraceRecord>& recs) {
  ordered_json j;
  j["instance"] = to_json(inst);
  ordered_json steps = ordered_json::array();
  for (std::size_t i = 0; i < recs.size(); ++i) {
    const auto& rec = recs[i];
    ordered_json s;
    s["step"] = i;
    s["outcome"] = to_string(rec.kind);
    s["state"] = state_to_json(rec.state);
    s["properties"] = properties_to_json(rec.properties);
    if (rec.augmented) {
      s["claim"] = rec.augmented->claim;
      s["matching"] = to_json(rec.augmented->matching);
    }
    if (rec.infeasible) {
      s["formula"] = rec.infeasible->formula;
      s["required"] = to_string(rec.infeasible->required);
      s["available"] = rec.infeasible->available;
    }
    steps.push_back(std::move(s));
  }
  j["steps"] = std::move(steps);
  return j;
}

struct TraceVerdict {
  bool ok = true;
  std::size_t steps = 0;
  std::vector<std::string> failures;
};

// Recomputes structure and P1-P7 for every snapshot and re-validates every
// augmented matching. Recorded property flags are not trusted.
inline TraceVerdict verify_trace(const ordered_json& trace) {
  using rainbow::detail::json_field;
  TraceVerdict v;
  auto fail = [&v](std::string msg) {
    v.ok = false;
    v.failures.push_back(std::move(msg));
  };
  const auto& steps = json_field(trace, "steps");
  if (!steps.is_array()) throw FormatError("\"steps\" must be an array");
  v.steps = steps.size();
  if (steps.empty()) return v;
  auto inst = std::make_shared<const Instance>(instance_from_json(json_field(trace, "instance")));
  if (auto bad = validate_instance(*inst); !bad.empty()) {
    fail("instance: " + bad.front().message);
    return v;
  }
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto tag = "step " + std::to_string(i) + ": ";
    const auto& rec = steps[i];
    SwitchState st;
    try {
      st = state_from_json(json_field(rec, "state"), inst);
    } catch (const std::exception& e) {
      fail(tag + "unreadable state: " + e.what());
      continue;
    }
    if (auto bad = structural_violations(st); !bad.empty()) {
      for (auto& b : bad) fail(tag + "structure: " + b);
      continue;
    }
    const auto rep = verify_properties(st);
    for (int p : rep.failed()) fail(tag + "P" + std::to_string(p) + " violated: " + rep[p].detail);
    const auto& outcome = json_field(rec, "outcome");
    if (outcome == "augmented") {
      const auto m = matching_from_json(json_field(rec, "matching"));
      if (!is_rainbow_in(*inst, m)) fail(tag + "augmented matching is not rainbow");
      if (m.size() != st.r.size() + 1) fail(tag + "augmented matching is not one larger than r");
    } else if (outcome != "extended" && outcome != "infeasible") {
      fail(tag + "unknown outcome");
    }
  }
  return v;
}

}  // namespace rainbow::proofkit
