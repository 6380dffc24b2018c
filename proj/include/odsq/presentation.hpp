#pragma once

#include <array>
#include <sstream>
#include <string>
#include <vector>

#include "odsq/algebra.hpp"

namespace odsq {

// Block table [M1|M2|M3|M4] tabulating *1, *2, R1, R2 (inverse tables are
// derived on import, never stored).
struct PresentationMatrix {
  int n = 0;
  std::array<SquareTable, 4> blocks;

  friend bool operator==(const PresentationMatrix&, const PresentationMatrix&) = default;
};

inline PresentationMatrix to_presentation_matrix(const OrientedDisingquandle& d) {
  return {d.n(), {d.star1, d.star2, d.r1, d.r2}};
}

// Re-derives the inverse tables and re-validates. Quandle-table defects and
// axiom failures surface as axiom_error carrying the report; malformed
// blocks as structural_error.
inline OrientedDisingquandle from_presentation_matrix(const PresentationMatrix& m) {
  for (const auto& b : m.blocks)
    if (b.n() != m.n) throw structural_error("blocks do not share one carrier size");

  AxiomReport q1 = validate_quandle(m.blocks[0], "op1:");
  if (!q1.passed()) throw axiom_error("block M1 is not a quandle table", q1);
  AxiomReport q2 = validate_quandle(m.blocks[1], "op2:");
  if (!q2.passed()) throw axiom_error("block M2 is not a quandle table", q2);

  OrientedDisingquandle d =
      make_oriented_disingquandle(m.blocks[0], m.blocks[1], m.blocks[2], m.blocks[3]);
  AxiomReport rep = validate_oriented_disingquandle(d);
  if (!rep.passed())
    throw axiom_error("axiom failure on import: " + rep.first_failure()->axiom, rep);
  return d;
}

// Text form: "n=<int>" line, then the four blocks in order, rows on lines,
// entries space-separated, one blank line between consecutive blocks.
inline std::string write_presentation_text(const PresentationMatrix& m) {
  std::ostringstream out;
  out << "n=" << m.n << "\n";
  for (int b = 0; b < 4; ++b) {
    if (b) out << "\n";
    for (int i = 0; i < m.n; ++i) {
      for (int j = 0; j < m.n; ++j) {
        if (j) out << " ";
        out << m.blocks[b].at(i, j);
      }
      out << "\n";
    }
  }
  return out.str();
}

inline PresentationMatrix parse_presentation_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw structural_error("empty structure file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line.rfind("n=", 0) != 0) throw structural_error("expected leading 'n=<int>' line");
  int n = 0;
  try {
    n = std::stoi(line.substr(2));
  } catch (const std::exception&) {
    throw structural_error("bad carrier size in '" + line + "'");
  }
  if (n < 1) throw structural_error("carrier size must be >= 1");

  std::vector<std::vector<int>> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::vector<int> row;
    long long v;
    while (ls >> v) row.push_back(static_cast<int>(v));
    if (!ls.eof())
      throw structural_error("non-integer entry in row '" + line + "'");
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.size() != static_cast<std::size_t>(4 * n))
    throw structural_error("expected 4 blocks of " + std::to_string(n) + " rows, got " +
                           std::to_string(rows.size()) + " rows");

  PresentationMatrix m;
  m.n = n;
  for (int b = 0; b < 4; ++b) {
    std::vector<int> cells;
    cells.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      const auto& row = rows[static_cast<std::size_t>(b) * n + i];
      if (row.size() != static_cast<std::size_t>(n))
        throw structural_error("block " + std::to_string(b + 1) + " row " + std::to_string(i) +
                               " has " + std::to_string(row.size()) + " entries, expected " +
                               std::to_string(n));
      cells.insert(cells.end(), row.begin(), row.end());
    }
    m.blocks[b] = SquareTable(n, std::move(cells));  // range-checks entries
  }
  return m;
}

}  // namespace odsq
