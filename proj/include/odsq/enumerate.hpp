#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "odsq/algebra.hpp"
#include "odsq/presentation.hpp"

namespace odsq {

struct EnumerationResult {
  std::vector<PresentationMatrix> structures;  // lexicographic table order
  bool truncated = false;
  std::uint64_t nodes = 0;  // decision nodes visited
};

namespace detail {

// Decision order: *1 off-diagonal entries row-major, then *2, then R1 entries
// row-major (diagonals of the quandle tables are forced by idempotency, R2 is
// forced entrywise by R2(x,y) = R1(y, x *1 y)). Values are tried ascending,
// so structures stream out in lexicographic order of the concatenated
// tables. Partial assignments are pruned by every axiom instance that is
// already fully determined; survivors are validated in full before emission.
class DisingquandleEnumerator {
public:
  DisingquandleEnumerator(int n, std::uint64_t budget,
                          const std::function<bool(const OrientedDisingquandle&)>& emit)
      : n_(n), budget_(budget), emit_(emit) {
    s1_.assign(n * n, -1);
    s2_.assign(n * n, -1);
    r1_.assign(n * n, -1);
    for (int i = 0; i < n; ++i) s1_[flat(i, i)] = s2_[flat(i, i)] = i;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i != j) slots_.push_back({&s1_, flat(i, j)});
      }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i != j) slots_.push_back({&s2_, flat(i, j)});
      }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) slots_.push_back({&r1_, flat(i, j)});
  }

  EnumerationResult run() {
    stopped_ = false;
    descend(0);
    EnumerationResult res;
    res.truncated = truncated_;
    res.nodes = nodes_;
    return res;
  }

private:
  int n_;
  std::uint64_t budget_;
  const std::function<bool(const OrientedDisingquandle&)>& emit_;
  std::vector<int> s1_, s2_, r1_;
  std::vector<std::pair<std::vector<int>*, int>> slots_;
  std::uint64_t nodes_ = 0;
  bool truncated_ = false;
  bool stopped_ = false;

  int flat(int i, int j) const { return i * n_ + j; }

  int look(const std::vector<int>& t, int i, int j) const { return t[flat(i, j)]; }

  // -1 when some needed entry is still undecided; 0/1 otherwise.
  int eval_op(const std::vector<int>& t, int a, int b) const {
    if (a < 0 || b < 0) return -1;
    return look(t, a, b);
  }

  int r2(int x, int y) const {
    int s = eval_op(s1_, x, y);
    if (s < 0) return -1;
    return eval_op(r1_, y, s);
  }

  // Checks every axiom instance whose inputs are all decided. Returns false
  // only on a definite violation.
  bool partial_ok() const {
    // column injectivity of the quandle tables
    for (const auto* t : {&s1_, &s2_}) {
      for (int y = 0; y < n_; ++y) {
        unsigned seen = 0;
        for (int x = 0; x < n_; ++x) {
          int v = look(*t, x, y);
          if (v < 0) continue;
          if (seen & (1u << v)) return false;
          seen |= 1u << v;
        }
      }
      // self-distributivity
      for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) {
          int xy = look(*t, x, y);
          if (xy < 0) continue;
          for (int z = 0; z < n_; ++z) {
            int l = eval_op(*t, xy, z);
            if (l < 0) continue;
            int xz = look(*t, x, z), yz = look(*t, y, z);
            int r = eval_op(*t, xz, yz);
            if (r < 0) continue;
            if (l != r) return false;
          }
        }
    }
    // two-variable axioms: S4 holds by construction of r2(); S5 and the
    // mixing pair D3/D4 are cheap and prune hard
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) {
        int a = eval_op(r1_, x, y);
        int b = r2(x, y);
        if (a < 0 || b < 0) continue;
        for (const auto* t : {&s1_, &s2_}) {
          int lhs = eval_op(*t, a, b);
          if (lhs < 0) continue;
          int srt = eval_op(t == &s1_ ? s2_ : s1_, x, y);
          if (srt < 0) continue;
          int rhs = r2(y, srt);
          if (rhs < 0) continue;
          if (lhs != rhs) return false;
        }
      }
    return true;
  }

  void descend(std::size_t slot) {
    if (stopped_) return;
    if (slot == slots_.size()) {
      finish();
      return;
    }
    auto [table, idx] = slots_[slot];
    for (int v = 0; v < n_; ++v) {
      if (stopped_) return;
      if (nodes_ >= budget_) {
        truncated_ = true;
        stopped_ = true;
        return;
      }
      ++nodes_;
      (*table)[idx] = v;
      if (partial_ok()) descend(slot + 1);
      (*table)[idx] = -1;
    }
  }

  void finish() {
    // derive R2 and validate in full; emit survivors
    std::vector<int> r2cells(n_ * n_);
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) {
        int v = r2(x, y);
        if (v < 0) return;
        r2cells[flat(x, y)] = v;
      }
    SquareTable t1(n_, s1_), t2(n_, s2_), tr1(n_, r1_), tr2(n_, std::move(r2cells));
    if (!t1.columns_bijective() || !t2.columns_bijective()) return;
    OrientedDisingquandle d = make_oriented_disingquandle(t1, t2, tr1, tr2);
    if (!validate_oriented_disingquandle(d).passed()) return;
    if (!emit_(d)) stopped_ = true;
  }
};

}  // namespace detail

// Streams every oriented disingquandle on {0..n-1}, each exactly once, in
// lexicographic order of the (*1, *2, R1) tables. The callback returns false
// to stop early. Budget bounds the number of decision nodes; exhaustion sets
// the truncation flag instead of throwing.
inline EnumerationResult enumerate_disingquandles(
    int n, std::uint64_t budget, const std::function<bool(const OrientedDisingquandle&)>& emit) {
  if (n < 1) throw structural_error("carrier size must be >= 1");
  if (n > 31) throw structural_error("enumeration supports n <= 31");
  detail::DisingquandleEnumerator e(n, budget, emit);
  return e.run();
}

inline EnumerationResult enumerate_disingquandles(int n, std::uint64_t budget = 50'000'000) {
  EnumerationResult collected;
  auto res = enumerate_disingquandles(n, budget, [&](const OrientedDisingquandle& d) {
    collected.structures.push_back(to_presentation_matrix(d));
    return true;
  });
  collected.truncated = res.truncated;
  collected.nodes = res.nodes;
  return collected;
}

}  // namespace odsq
