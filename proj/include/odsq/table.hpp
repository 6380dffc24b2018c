#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace odsq {

// Carrier elements are indices 0..n-1.
using Element = int;

// Malformed input (wrong shape, out-of-range entry, bad file syntax at the
// structural level). Distinct from an axiom failure, which is reported, not
// thrown.
class structural_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline int mod_reduce(long long v, int n) {
  long long r = v % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

// Row-major n x n table with entries in [0, n). entry(i, j) is i op j for a
// binary operation, or R(i, j) for a crossing map.
class SquareTable {
public:
  SquareTable() = default;

  SquareTable(int n, std::vector<int> cells) : n_(n), cells_(std::move(cells)) {
    if (n_ < 1)
      throw structural_error("table size must be >= 1, got " + std::to_string(n_));
    if (cells_.size() != static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_))
      throw structural_error("table is not square: expected " + std::to_string(n_) + "x" +
                             std::to_string(n_) + " = " + std::to_string(n_ * n_) +
                             " entries, got " + std::to_string(cells_.size()));
    for (std::size_t k = 0; k < cells_.size(); ++k)
      if (cells_[k] < 0 || cells_[k] >= n_)
        throw structural_error("table entry out of range at flat index " + std::to_string(k) +
                               ": " + std::to_string(cells_[k]));
  }

  template <class F>
  static SquareTable from_fn(int n, F&& f) {
    std::vector<int> cells;
    cells.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        cells.push_back(f(i, j));
    return SquareTable(n, std::move(cells));
  }

  int n() const noexcept { return n_; }

  int at(int i, int j) const { return cells_[static_cast<std::size_t>(i) * n_ + j]; }

  void set(int i, int j, int v) { cells_[static_cast<std::size_t>(i) * n_ + j] = v; }

  // Index of the first column y whose map x -> x op y is not a bijection,
  // or -1 when all columns are bijective.
  int first_non_bijective_column() const {
    std::vector<char> seen(n_);
    for (int y = 0; y < n_; ++y) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int x = 0; x < n_; ++x) {
        int v = at(x, y);
        if (seen[v]) return y;
        seen[v] = 1;
      }
    }
    return -1;
  }

  bool columns_bijective() const { return first_non_bijective_column() == -1; }

  friend bool operator==(const SquareTable&, const SquareTable&) = default;

private:
  int n_ = 0;
  std::vector<int> cells_;
};

// Operation tables and crossing-map tables share the representation; the
// difference is which invariants the validators demand of them.
using OpTable = SquareTable;
using MapTable = SquareTable;

}  // namespace odsq
