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

// Edge-coloured bipartite multigraphs given as a family of colour classes,
// each class a matching. Colours are dense ids 0..n_colours-1.

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rainbow {

// Thrown when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Side : std::uint8_t { A, B };

struct Vertex {
  Side side = Side::A;
  int index = 0;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

inline Vertex a_vertex(int i) { return {Side::A, i}; }
inline Vertex b_vertex(int i) { return {Side::B, i}; }

inline std::string to_string(const Vertex& v) {
  return (v.side == Side::A ? "a" : "b") + std::to_string(v.index);
}

// `a` indexes side A, `b` indexes side B.
struct Edge {
  int a = 0;
  int b = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::string to_string(const Edge& e) {
  return "a" + std::to_string(e.a) + "b" + std::to_string(e.b);
}

// An edge of the multigraph: endpoints plus the class it is taken from.
// Parallel edges of different colours are different ColouredEdges.
struct ColouredEdge {
  Edge edge;
  int colour = 0;

  friend bool operator==(const ColouredEdge&, const ColouredEdge&) = default;
  friend std::strong_ordering operator<=>(const ColouredEdge& l, const ColouredEdge& r) {
    if (auto c = l.colour <=> r.colour; c != 0) return c;
    return l.edge <=> r.edge;
  }
};

inline std::string to_string(const ColouredEdge& e) {
  return "(" + to_string(e.edge) + ", c" + std::to_string(e.colour) + ")";
}

// Vertex indices of a single side; which side is fixed by context.
using VertexSet = std::set<int>;

class Instance {
 public:
  Instance() = default;

  // Classes are stored sorted; invalid input is kept as-is so that
  // validate_instance() can report it.
  Instance(int a_size, int b_size, std::vector<std::vector<Edge>> classes)
      : a_size_(a_size), b_size_(b_size), classes_(std::move(classes)) {
    if (a_size_ < 0 || b_size_ < 0) {
      throw PreconditionError("universe sizes must be non-negative");
    }
    for (auto& cls : classes_) std::sort(cls.begin(), cls.end());
    index();
  }

  int n_colours() const { return static_cast<int>(classes_.size()); }
  int a_size() const { return a_size_; }
  int b_size() const { return b_size_; }

  const std::vector<std::vector<Edge>>& classes() const { return classes_; }
  std::span<const Edge> edges(int colour) const {
    return classes_.at(static_cast<std::size_t>(colour));
  }
  std::size_t class_size(int colour) const { return edges(colour).size(); }

  std::size_t total_edges() const {
    std::size_t total = 0;
    for (const auto& cls : classes_) total += cls.size();
    return total;
  }

  bool contains(int colour, const Edge& e) const {
    if (colour < 0 || colour >= n_colours()) return false;
    const auto& cls = classes_[static_cast<std::size_t>(colour)];
    return std::binary_search(cls.begin(), cls.end(), e);
  }
  bool contains(const ColouredEdge& ce) const { return contains(ce.colour, ce.edge); }

  // B-partner of A-vertex `a` inside class `colour`, assuming the class is a
  // matching.
  std::optional<int> mate_of_a(int colour, int a) const {
    if (a < 0 || a >= a_size_) return std::nullopt;
    const int m = a_mate_[slot(colour, a, a_size_)];
    return m < 0 ? std::nullopt : std::optional<int>(m);
  }
  std::optional<int> mate_of_b(int colour, int b) const {
    if (b < 0 || b >= b_size_) return std::nullopt;
    const int m = b_mate_[slot(colour, b, b_size_)];
    return m < 0 ? std::nullopt : std::optional<int>(m);
  }

  // Copy with one more edge in class `colour`; the result is not validated.
  Instance with_edge(int colour, const Edge& e) const {
    auto classes = classes_;
    classes.at(static_cast<std::size_t>(colour)).push_back(e);
    return Instance(std::max(a_size_, e.a + 1), std::max(b_size_, e.b + 1), std::move(classes));
  }

  friend bool operator==(const Instance& l, const Instance& r) {
    return l.a_size_ == r.a_size_ && l.b_size_ == r.b_size_ && l.classes_ == r.classes_;
  }

 private:
  static std::size_t slot(int colour, int v, int universe) {
    return static_cast<std::size_t>(colour) * static_cast<std::size_t>(universe) +
           static_cast<std::size_t>(v);
  }

  void index() {
    const auto n = classes_.size();
    a_mate_.assign(n * static_cast<std::size_t>(a_size_), -1);
    b_mate_.assign(n * static_cast<std::size_t>(b_size_), -1);
    for (int c = 0; c < n_colours(); ++c) {
      for (const Edge& e : classes_[static_cast<std::size_t>(c)]) {
        if (e.a < 0 || e.a >= a_size_ || e.b < 0 || e.b >= b_size_) continue;
        int& am = a_mate_[slot(c, e.a, a_size_)];
        int& bm = b_mate_[slot(c, e.b, b_size_)];
        if (am < 0) am = e.b;
        if (bm < 0) bm = e.a;
      }
    }
  }

  int a_size_ = 0;
  int b_size_ = 0;
  std::vector<std::vector<Edge>> classes_;
  std::vector<int> a_mate_;
  std::vector<int> b_mate_;
};

// A set of coloured edges kept sorted by colour. Construction does not check
// the rainbow property; use is_rainbow / is_rainbow_in.
class RainbowMatching {
 public:
  RainbowMatching() = default;
  explicit RainbowMatching(std::vector<ColouredEdge> edges) : edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
  }

  std::span<const ColouredEdge> edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  bool contains(const ColouredEdge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
  }
  bool uses_colour(int colour) const { return with_colour(colour).has_value(); }

  std::optional<ColouredEdge> with_colour(int colour) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), colour,
                               [](const ColouredEdge& e, int c) { return e.colour < c; });
    if (it == edges_.end() || it->colour != colour) return std::nullopt;
    return *it;
  }
  std::optional<ColouredEdge> at_a(int a) const {
    for (const auto& e : edges_) {
      if (e.edge.a == a) return e;
    }
    return std::nullopt;
  }
  std::optional<ColouredEdge> at_b(int b) const {
    for (const auto& e : edges_) {
      if (e.edge.b == b) return e;
    }
    return std::nullopt;
  }

  friend bool operator==(const RainbowMatching&, const RainbowMatching&) = default;

 private:
  std::vector<ColouredEdge> edges_;
};

// r minus `removed` plus `added`; every removed edge must be present.
inline RainbowMatching exchange(const RainbowMatching& r, std::span<const ColouredEdge> removed,
                                std::span<const ColouredEdge> added) {
  std::vector<ColouredEdge> out(r.edges().begin(), r.edges().end());
  for (const auto& e : removed) {
    auto it = std::find(out.begin(), out.end(), e);
    if (it == out.end()) {
      throw PreconditionError("exchange: " + to_string(e) + " is not in the matching");
    }
    out.erase(it);
  }
  out.insert(out.end(), added.begin(), added.end());
  return RainbowMatching(std::move(out));
}

struct Violation {
  enum class Kind { NotAMatching, OutOfUniverse };
  Kind kind;
  int colour = 0;
  std::vector<Edge> edges;
  std::optional<Vertex> vertex;
  std::string message;
};

inline std::vector<Violation> validate_instance(const Instance& inst) {
  std::vector<Violation> out;
  for (int c = 0; c < inst.n_colours(); ++c) {
    const auto cls = inst.edges(c);
    for (const Edge& e : cls) {
      if (e.a < 0 || e.a >= inst.a_size() || e.b < 0 || e.b >= inst.b_size()) {
        const bool bad_a = e.a < 0 || e.a >= inst.a_size();
        const Vertex v = bad_a ? a_vertex(e.a) : b_vertex(e.b);
        out.push_back({Violation::Kind::OutOfUniverse,
                       c,
                       {e},
                       v,
                       "colour " + std::to_string(c) + ": edge " + to_string(e) +
                           " has out-of-universe vertex " + to_string(v)});
      }
    }
    // Sorted, so a shared A endpoint shows up between neighbours.
    for (std::size_t i = 1; i < cls.size(); ++i) {
      if (cls[i - 1].a == cls[i].a) {
        out.push_back({Violation::Kind::NotAMatching,
                       c,
                       {cls[i - 1], cls[i]},
                       a_vertex(cls[i].a),
                       "colour " + std::to_string(c) + " is not a matching: shared vertex a" +
                           std::to_string(cls[i].a)});
      }
    }
    std::vector<Edge> by_b(cls.begin(), cls.end());
    std::sort(by_b.begin(), by_b.end(), [](const Edge& l, const Edge& r) {
      return std::pair(l.b, l.a) < std::pair(r.b, r.a);
    });
    for (std::size_t i = 1; i < by_b.size(); ++i) {
      if (by_b[i - 1].b == by_b[i].b && by_b[i - 1].a != by_b[i].a) {
        out.push_back({Violation::Kind::NotAMatching,
                       c,
                       {by_b[i - 1], by_b[i]},
                       b_vertex(by_b[i].b),
                       "colour " + std::to_string(c) + " is not a matching: shared vertex b" +
                           std::to_string(by_b[i].b)});
      }
    }
  }
  return out;
}

// Vertex-disjoint with pairwise distinct colours.
inline bool is_rainbow(std::span<const ColouredEdge> m) {
  std::set<int> colours, as, bs;
  for (const auto& e : m) {
    if (!colours.insert(e.colour).second) return false;
    if (!as.insert(e.edge.a).second) return false;
    if (!bs.insert(e.edge.b).second) return false;
  }
  return true;
}
inline bool is_rainbow(const RainbowMatching& r) { return is_rainbow(r.edges()); }

// is_rainbow plus membership of every edge in its colour class.
inline bool is_rainbow_in(const Instance& inst, std::span<const ColouredEdge> m) {
  for (const auto& e : m) {
    if (!inst.contains(e)) return false;
  }
  return is_rainbow(m);
}
inline bool is_rainbow_in(const Instance& inst, const RainbowMatching& r) {
  return is_rainbow_in(inst, r.edges());
}

struct Saturation {
  VertexSet x;  // A side
  VertexSet y;  // B side
};

inline Saturation saturated_sets(const RainbowMatching& r) {
  Saturation s;
  for (const auto& e : r.edges()) {
    s.x.insert(e.edge.a);
    s.y.insert(e.edge.b);
  }
  return s;
}

// B-vertices matched by r to an A-vertex of xs.
inline VertexSet neighbourhood_along(const RainbowMatching& r, const VertexSet& xs) {
  VertexSet out;
  for (const auto& e : r.edges()) {
    if (xs.contains(e.edge.a)) out.insert(e.edge.b);
  }
  return out;
}

// A-vertices matched by r to a B-vertex of ys.
inline VertexSet neighbourhood_along_from_b(const RainbowMatching& r, const VertexSet& ys) {
  VertexSet out;
  for (const auto& e : r.edges()) {
    if (ys.contains(e.edge.b)) out.insert(e.edge.a);
  }
  return out;
}

// Either an explicit finite set or the complement of one within its side.
class VertexSelector {
 public:
  VertexSelector(VertexSet members) : set_(std::move(members)) {}  // NOLINT

  static VertexSelector only(VertexSet members) { return VertexSelector(std::move(members)); }
  static VertexSelector all() { return all_except({}); }
  static VertexSelector all_except(VertexSet excluded) {
    VertexSelector s(std::move(excluded));
    s.complement_ = true;
    return s;
  }

  bool contains(int v) const { return set_.contains(v) != complement_; }

 private:
  VertexSet set_;
  bool complement_ = false;
};

inline std::vector<Edge> class_edges_between(const Instance& inst, int colour,
                                             const VertexSelector& s, const VertexSelector& t) {
  if (colour < 0 || colour >= inst.n_colours()) {
    throw PreconditionError("class_edges_between: colour out of range");
  }
  std::vector<Edge> out;
  for (const Edge& e : inst.edges(colour)) {
    if (s.contains(e.a) && t.contains(e.b)) out.push_back(e);
  }
  return out;
}

// Exchanges the labels of two colours.
inline Instance swap_colours(const Instance& inst, int c1, int c2) {
  auto classes = inst.classes();
  std::swap(classes.at(static_cast<std::size_t>(c1)), classes.at(static_cast<std::size_t>(c2)));
  return Instance(inst.a_size(), inst.b_size(), std::move(classes));
}

inline RainbowMatching swap_colours(const RainbowMatching& r, int c1, int c2) {
  std::vector<ColouredEdge> out(r.edges().begin(), r.edges().end());
  for (auto& e : out) {
    if (e.colour == c1) {
      e.colour = c2;
    } else if (e.colour == c2) {
      e.colour = c1;
    }
  }
  return RainbowMatching(std::move(out));
}

}  // namespace rainbow
