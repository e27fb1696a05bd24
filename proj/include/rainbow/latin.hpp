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

// Latin squares and their coloured complete bipartite graphs.
//
// Orientation: cell (row i, column j) holding symbol s becomes the edge
// a_j b_i in colour class s. A vertices are columns, B vertices are rows.

#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rainbow/core.hpp"

namespace rainbow {

class LatinSquare {
 public:
  LatinSquare() = default;

  // Rows of symbols; must be square. Latin-ness is checked separately.
  explicit LatinSquare(const std::vector<std::vector<int>>& rows)
      : order_(static_cast<int>(rows.size())) {
    cells_.reserve(rows.size() * rows.size());
    for (const auto& row : rows) {
      if (row.size() != rows.size()) {
        throw PreconditionError("a Latin square must be n x n");
      }
      cells_.insert(cells_.end(), row.begin(), row.end());
    }
  }

  int order() const { return order_; }
  int at(int row, int col) const { return cells_[static_cast<std::size_t>(row * order_ + col)]; }

  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> out;
    for (int i = 0; i < order_; ++i) {
      out.emplace_back(cells_.begin() + i * order_, cells_.begin() + (i + 1) * order_);
    }
    return out;
  }

  friend bool operator==(const LatinSquare&, const LatinSquare&) = default;

 private:
  int order_ = 0;
  std::vector<int> cells_;
};

struct LatinViolation {
  enum class Kind { EmptySquare, SymbolOutOfRange, RowRepeat, ColumnRepeat };
  Kind kind;
  int line = 0;  // row or column index (row for SymbolOutOfRange)
  int symbol = 0;
  std::string message;
};

inline std::vector<LatinViolation> validate_latin(const LatinSquare& ls) {
  std::vector<LatinViolation> out;
  const int n = ls.order();
  if (n < 1) {
    out.push_back({LatinViolation::Kind::EmptySquare, 0, 0, "order must be >= 1"});
    return out;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int s = ls.at(i, j);
      if (s < 0 || s >= n) {
        out.push_back({LatinViolation::Kind::SymbolOutOfRange, i, s,
                       "cell (" + std::to_string(i) + "," + std::to_string(j) + ") holds symbol " +
                           std::to_string(s) + " outside [0," + std::to_string(n - 1) + "]"});
      }
    }
  }
  if (!out.empty()) return out;
  for (int i = 0; i < n; ++i) {
    std::vector<int> row_seen(static_cast<std::size_t>(n), 0);
    std::vector<int> col_seen(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j) {
      if (row_seen[static_cast<std::size_t>(ls.at(i, j))]++ == 1) {
        out.push_back(
            {LatinViolation::Kind::RowRepeat, i, ls.at(i, j),
             "row " + std::to_string(i) + " repeats symbol " + std::to_string(ls.at(i, j))});
      }
      if (col_seen[static_cast<std::size_t>(ls.at(j, i))]++ == 1) {
        out.push_back(
            {LatinViolation::Kind::ColumnRepeat, i, ls.at(j, i),
             "column " + std::to_string(i) + " repeats symbol " + std::to_string(ls.at(j, i))});
      }
    }
  }
  return out;
}

inline void require_latin(const LatinSquare& ls) {
  if (auto v = validate_latin(ls); !v.empty()) {
    throw PreconditionError("not a Latin square: " + v.front().message);
  }
}

inline Instance latin_to_instance(const LatinSquare& ls) {
  require_latin(ls);
  const int n = ls.order();
  std::vector<std::vector<Edge>> classes(static_cast<std::size_t>(n));
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) {
      classes[static_cast<std::size_t>(ls.at(row, col))].push_back({col, row});
    }
  }
  return Instance(n, n, std::move(classes));
}

// Inverse of latin_to_instance: every cell must be covered by exactly one
// class.
inline LatinSquare instance_to_latin(const Instance& inst) {
  const int n = inst.n_colours();
  if (n < 1 || inst.a_size() != n || inst.b_size() != n) {
    throw PreconditionError(
        "instance is not a Latin square graph: need n colours on n + n vertices");
  }
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n),
                                     std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int c = 0; c < n; ++c) {
    for (const Edge& e : inst.edges(c)) {
      int& cell = rows.at(static_cast<std::size_t>(e.b)).at(static_cast<std::size_t>(e.a));
      if (cell != -1) {
        throw PreconditionError("cell (" + std::to_string(e.b) + "," + std::to_string(e.a) +
                                ") has two colours");
      }
      cell = c;
    }
  }
  LatinSquare ls(rows);
  require_latin(ls);
  return ls;
}

struct Cell {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

class PartialTransversal {
 public:
  PartialTransversal() = default;
  explicit PartialTransversal(std::vector<Cell> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end());
  }

  std::span<const Cell> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  friend bool operator==(const PartialTransversal&, const PartialTransversal&) = default;

 private:
  std::vector<Cell> entries_;
};

inline bool is_partial_transversal(const LatinSquare& ls, const PartialTransversal& pt) {
  std::set<int> rows, cols, symbols;
  for (const Cell& c : pt.entries()) {
    if (c.row < 0 || c.row >= ls.order() || c.col < 0 || c.col >= ls.order()) {
      return false;
    }
    if (!rows.insert(c.row).second || !cols.insert(c.col).second ||
        !symbols.insert(ls.at(c.row, c.col)).second) {
      return false;
    }
  }
  return true;
}

inline PartialTransversal rainbow_to_transversal(const LatinSquare& ls, const RainbowMatching& r) {
  if (!is_rainbow_in(latin_to_instance(ls), r)) {
    throw PreconditionError("not a rainbow matching of the square's graph");
  }
  std::vector<Cell> cells;
  for (const auto& e : r.edges()) cells.push_back({e.edge.b, e.edge.a});
  return PartialTransversal(std::move(cells));
}

inline RainbowMatching transversal_to_rainbow(const LatinSquare& ls, const PartialTransversal& pt) {
  require_latin(ls);
  if (!is_partial_transversal(ls, pt)) {
    throw PreconditionError("not a partial transversal of the square");
  }
  std::vector<ColouredEdge> edges;
  for (const Cell& c : pt.entries()) {
    edges.push_back({{c.col, c.row}, ls.at(c.row, c.col)});
  }
  return RainbowMatching(std::move(edges));
}

// Addition table of Z_n.
inline LatinSquare gen_cyclic(int n) {
  if (n < 1) throw PreconditionError("gen_cyclic: n must be >= 1");
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) rows[static_cast<std::size_t>(i)].push_back((i + j) % n);
  }
  return LatinSquare(rows);
}

namespace detail {

// Fills cells in row-major order, trying the free symbols in a shuffled
// order. Any Latin rectangle extends to a square, so backtracking never
// has to cross a row boundary.
inline bool fill_latin(int cell, int n, std::vector<std::vector<int>>& rows,
                       std::vector<std::vector<char>>& row_used,
                       std::vector<std::vector<char>>& col_used, std::mt19937_64& rng) {
  if (cell == n * n) return true;
  const auto i = static_cast<std::size_t>(cell / n);
  const auto j = static_cast<std::size_t>(cell % n);
  std::vector<int> symbols(static_cast<std::size_t>(n));
  std::iota(symbols.begin(), symbols.end(), 0);
  std::shuffle(symbols.begin(), symbols.end(), rng);
  for (int s : symbols) {
    const auto us = static_cast<std::size_t>(s);
    if (row_used[i][us] || col_used[j][us]) continue;
    row_used[i][us] = col_used[j][us] = 1;
    rows[i][j] = s;
    if (fill_latin(cell + 1, n, rows, row_used, col_used, rng)) return true;
    row_used[i][us] = col_used[j][us] = 0;
  }
  return false;
}

}  // namespace detail

// Seeded backtracking construction; not uniform over Latin squares.
inline LatinSquare gen_random_latin(int n, std::uint64_t seed) {
  if (n < 1) throw PreconditionError("gen_random_latin: n must be >= 1");
  const auto un = static_cast<std::size_t>(n);
  std::mt19937_64 rng(seed);
  std::vector<std::vector<int>> rows(un, std::vector<int>(un, 0));
  std::vector<std::vector<char>> row_used(un, std::vector<char>(un, 0));
  std::vector<std::vector<char>> col_used(un, std::vector<char>(un, 0));
  detail::fill_latin(0, n, rows, row_used, col_used, rng);
  return LatinSquare(rows);
}

// Text format: the order on the first line, then n rows of n symbols.
inline std::string latin_to_text(const LatinSquare& ls) {
  std::ostringstream out;
  out << ls.order() << '\n';
  for (int i = 0; i < ls.order(); ++i) {
    for (int j = 0; j < ls.order(); ++j) {
      if (j > 0) out << ' ';
      out << ls.at(i, j);
    }
    out << '\n';
  }
  return out.str();
}

inline LatinSquare latin_from_text(std::istream& in) {
  int n = 0;
  if (!(in >> n) || n < 1) {
    throw PreconditionError("latin text: expected a positive order on the first line");
  }
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
  for (auto& row : rows) {
    for (int j = 0; j < n; ++j) {
      int s = 0;
      if (!(in >> s)) throw PreconditionError("latin text: too few symbols");
      row.push_back(s);
    }
  }
  std::string rest;
  if (in >> rest) throw PreconditionError("latin text: trailing data after the square");
  return LatinSquare(rows);
}

inline LatinSquare latin_from_text(const std::string& text) {
  std::istringstream in(text);
  return latin_from_text(in);
}

}  // namespace rainbow
