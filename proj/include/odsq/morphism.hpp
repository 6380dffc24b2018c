#pragma once

#include <array>
#include <optional>
#include <vector>

#include "odsq/algebra.hpp"

namespace odsq {

// Total map between carriers, mapping[i] = image of i.
struct Morphism {
  std::vector<int> mapping;

  int size() const noexcept { return static_cast<int>(mapping.size()); }
  int operator()(int x) const { return mapping[x]; }

  bool is_bijection_onto(int n_target) const {
    if (size() != n_target) return false;
    std::vector<char> seen(n_target, 0);
    for (int v : mapping) {
      if (v < 0 || v >= n_target || seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  }

  Morphism inverse() const {
    Morphism inv;
    inv.mapping.assign(mapping.size(), -1);
    for (int x = 0; x < size(); ++x) inv.mapping[mapping[x]] = x;
    return inv;
  }

  friend bool operator==(const Morphism&, const Morphism&) = default;
};

// f preserves *1, *2, R1 and R2 on every pair.
inline bool is_homomorphism(const OrientedDisingquandle& src, const OrientedDisingquandle& dst,
                            const Morphism& f) {
  const int n = src.n();
  if (f.size() != n) throw structural_error("morphism does not cover the source carrier");
  for (int v : f.mapping)
    if (v < 0 || v >= dst.n())
      throw structural_error("morphism image outside the target carrier");
  const OpKind ops[4] = {OpKind::Star1, OpKind::Star2, OpKind::R1, OpKind::R2};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (OpKind op : ops)
        if (f(src.apply(op, x, y)) != dst.apply(op, f(x), f(y))) return false;
  return true;
}

namespace detail {

// Relabeling-invariant signature of an element: for each operation, the
// sorted multiplicity profile of its row and column plus fixed-point counts.
// Two elements can only correspond under an isomorphism if their signatures
// agree.
inline std::vector<int> element_signature(const OrientedDisingquandle& d, int x) {
  const int n = d.n();
  std::vector<int> sig;
  const OpKind ops[4] = {OpKind::Star1, OpKind::Star2, OpKind::R1, OpKind::R2};
  std::vector<int> mult(n);
  for (OpKind op : ops) {
    std::fill(mult.begin(), mult.end(), 0);
    int row_fixed = 0;
    for (int y = 0; y < n; ++y) {
      int v = d.apply(op, x, y);
      ++mult[v];
      if (v == x) ++row_fixed;
    }
    std::vector<int> hist = mult;
    std::sort(hist.begin(), hist.end());
    sig.insert(sig.end(), hist.begin(), hist.end());
    sig.push_back(row_fixed);

    std::fill(mult.begin(), mult.end(), 0);
    int col_fixed = 0;
    for (int y = 0; y < n; ++y) {
      int v = d.apply(op, y, x);
      ++mult[v];
      if (v == y) ++col_fixed;
    }
    hist = mult;
    std::sort(hist.begin(), hist.end());
    sig.insert(sig.end(), hist.begin(), hist.end());
    sig.push_back(col_fixed);

    sig.push_back(d.apply(op, x, x) == x ? 1 : 0);
  }
  return sig;
}

struct IsoSearch {
  const OrientedDisingquandle& a;
  const OrientedDisingquandle& b;
  int n;
  std::vector<std::vector<char>> candidate;  // candidate[x][u]: sig match
  std::vector<int> img;                      // partial map a -> b, -1 unset
  std::vector<char> used;                    // images already taken
  std::vector<int> trail;

  static constexpr std::array<OpKind, 4> kOps = {OpKind::Star1, OpKind::Star2, OpKind::R1,
                                                 OpKind::R2};

  bool assign(int x, int u) {
    if (img[x] != -1) return img[x] == u;
    if (used[u] || !candidate[x][u]) return false;
    img[x] = u;
    used[u] = 1;
    trail.push_back(x);
    // Close the partial map under all four operations against every element
    // already mapped; force images of results as they become determined.
    for (int y = 0; y < n; ++y) {
      if (img[y] == -1) continue;
      for (OpKind op : kOps) {
        int t1 = a.apply(op, x, y);
        int w1 = b.apply(op, u, img[y]);
        if (img[t1] != -1 ? img[t1] != w1 : !assign(t1, w1)) return false;
        int t2 = a.apply(op, y, x);
        int w2 = b.apply(op, img[y], u);
        if (img[t2] != -1 ? img[t2] != w2 : !assign(t2, w2)) return false;
      }
    }
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail.size() > mark) {
      int x = trail.back();
      trail.pop_back();
      used[img[x]] = 0;
      img[x] = -1;
    }
  }

  bool search(int x) {
    while (x < n && img[x] != -1) ++x;
    if (x == n) return true;
    for (int u = 0; u < n; ++u) {
      if (used[u] || !candidate[x][u]) continue;
      std::size_t mark = trail.size();
      if (assign(x, u) && search(x + 1)) return true;
      undo_to(mark);
    }
    return false;
  }
};

}  // namespace detail

// Backtracking search for a bijective homomorphism, pruned by element
// signatures, images tried smallest first. Returns the first witness found
// (verified before returning) or nullopt.
inline std::optional<Morphism> find_isomorphism(const OrientedDisingquandle& a,
                                                const OrientedDisingquandle& b) {
  const int n = a.n();
  if (b.n() != n) return std::nullopt;

  std::vector<std::vector<int>> sig_a(n), sig_b(n);
  for (int x = 0; x < n; ++x) {
    sig_a[x] = detail::element_signature(a, x);
    sig_b[x] = detail::element_signature(b, x);
  }
  detail::IsoSearch s{a, b, n, {}, std::vector<int>(n, -1), std::vector<char>(n, 0), {}};
  s.candidate.assign(n, std::vector<char>(n, 0));
  for (int x = 0; x < n; ++x) {
    bool any = false;
    for (int u = 0; u < n; ++u) {
      s.candidate[x][u] = sig_a[x] == sig_b[u];
      any = any || s.candidate[x][u];
    }
    if (!any) return std::nullopt;
  }

  if (!s.search(0)) return std::nullopt;
  Morphism f{std::move(s.img)};
  if (!f.is_bijection_onto(n) || !is_homomorphism(a, b, f)) return std::nullopt;
  return f;
}

}  // namespace odsq
