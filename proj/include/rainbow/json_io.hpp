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

// Canonical JSON encodings of instances and rainbow matchings.
//
//   instance: {"n_colours":N,"a_size":A,"b_size":B,"classes":[[[a,b],...],...]}
//   matching: [[colour,a,b],...] sorted by colour
//
// Output is compact, fields in the order above, one trailing newline.

#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rainbow/core.hpp"

namespace rainbow {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const Instance& inst) {
  ordered_json j;
  j["n_colours"] = inst.n_colours();
  j["a_size"] = inst.a_size();
  j["b_size"] = inst.b_size();
  ordered_json classes = ordered_json::array();
  for (const auto& cls : inst.classes()) {
    ordered_json arr = ordered_json::array();
    for (const Edge& e : cls) arr.push_back({e.a, e.b});
    classes.push_back(std::move(arr));
  }
  j["classes"] = std::move(classes);
  return j;
}

inline ordered_json to_json(std::span<const ColouredEdge> edges) {
  ordered_json arr = ordered_json::array();
  for (const auto& e : edges) arr.push_back({e.colour, e.edge.a, e.edge.b});
  return arr;
}
inline ordered_json to_json(const RainbowMatching& r) { return to_json(r.edges()); }

namespace detail {

inline int json_int(const ordered_json& j, std::string_view what) {
  if (!j.is_number_integer()) {
    throw FormatError(std::string(what) + " must be an integer");
  }
  return j.get<int>();
}

inline const ordered_json& json_field(const ordered_json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw FormatError(std::string("missing field \"") + name + "\"");
  }
  return j.at(name);
}

}  // namespace detail

inline Instance instance_from_json(const ordered_json& j) {
  const int n = detail::json_int(detail::json_field(j, "n_colours"), "n_colours");
  const int as = detail::json_int(detail::json_field(j, "a_size"), "a_size");
  const int bs = detail::json_int(detail::json_field(j, "b_size"), "b_size");
  const auto& classes = detail::json_field(j, "classes");
  if (!classes.is_array() || static_cast<int>(classes.size()) != n) {
    throw FormatError("\"classes\" must be an array of n_colours entries");
  }
  if (as < 0 || bs < 0) throw FormatError("universe sizes must be >= 0");
  std::vector<std::vector<Edge>> out;
  for (const auto& cls : classes) {
    if (!cls.is_array()) throw FormatError("each class must be an array");
    auto& edges = out.emplace_back();
    for (const auto& pair : cls) {
      if (!pair.is_array() || pair.size() != 2) {
        throw FormatError("each edge must be an [a_index, b_index] pair");
      }
      edges.push_back({detail::json_int(pair[0], "a_index"), detail::json_int(pair[1], "b_index")});
    }
  }
  return Instance(as, bs, std::move(out));
}

inline RainbowMatching matching_from_json(const ordered_json& j) {
  if (!j.is_array()) throw FormatError("a matching must be an array");
  std::vector<ColouredEdge> edges;
  for (const auto& triple : j) {
    if (!triple.is_array() || triple.size() != 3) {
      throw FormatError("each matching entry must be [colour, a_index, b_index]");
    }
    edges.push_back(
        {{detail::json_int(triple[1], "a_index"), detail::json_int(triple[2], "b_index")},
         detail::json_int(triple[0], "colour")});
  }
  return RainbowMatching(std::move(edges));
}

inline ordered_json parse_json(std::string_view text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

inline std::string dump_canonical(const ordered_json& j) { return j.dump() + "\n"; }

inline std::string instance_to_string(const Instance& inst) {
  return dump_canonical(to_json(inst));
}
inline Instance instance_from_string(std::string_view text) {
  return instance_from_json(parse_json(text));
}
inline std::string matching_to_string(const RainbowMatching& r) {
  return dump_canonical(to_json(r));
}
inline RainbowMatching matching_from_string(std::string_view text) {
  return matching_from_json(parse_json(text));
}

}  // namespace rainbow
