#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "odsq/algebra.hpp"
#include "odsq/term.hpp"

namespace odsq {

class ceiling_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct ColoringOptions {
  // Max assignments the exhaustive route may sweep (n^|vars| gate).
  std::uint64_t oracle_ceiling = 1'000'000'000ULL;
  // Max colorings that may be materialized.
  std::uint64_t max_colorings = 1'000'000ULL;
  int threads = 1;
};

struct ColoringResult {
  long long count = 0;
  std::optional<std::vector<std::vector<int>>> colorings;  // system variable order
  std::string structure_id;
  std::string system_id;

  friend bool operator==(const ColoringResult&, const ColoringResult&) = default;
};

// Tuple of counting invariants of one system under several structures.
struct PsiTuple {
  std::vector<long long> values;

  friend bool operator==(const PsiTuple&, const PsiTuple&) = default;
};

namespace detail {

// --- exhaustive route -------------------------------------------------------
//
// Sweeps assignments in plain system variable order, values ascending. Each
// equation is checked at the first depth where all of its variables are
// bound. Pure table-lookup evaluation over a flattened postfix form of each
// equation; no inversion, no reordering. This is the reference the solver is
// audited against.

struct OracleEq {
  // postfix program: var >= 0 pushes assignment[var]; op < 0 applies table
  std::vector<int> prog;
  int depth = 0;       // check once this many leading variables are bound
  int stack_need = 0;  // peak evaluation stack size
};

class Oracle {
public:
  Oracle(const RelationSystem& sys, const OrientedDisingquandle& d) : sys_(sys), d_(d) {
    nvars_ = sys.variable_count();
    for (const auto& eq : sys.equations()) {
      OracleEq oe;
      flatten(eq.lhs, oe.prog);
      oe.prog.push_back(kEquals);
      flatten(eq.rhs, oe.prog);
      int maxv = -1;
      for (int p : oe.prog)
        if (p >= 0) maxv = std::max(maxv, p);
      oe.depth = maxv + 1;
      int cur = 0;
      for (int p : oe.prog) {
        // push: +1; '=' stores and pops: -1; apply pops two, pushes one: -1
        cur += p >= 0 ? 1 : -1;
        oe.stack_need = std::max(oe.stack_need, cur);
      }
      if (oe.stack_need > kMaxStack)
        throw structural_error("equation nests deeper than the evaluator supports");
      eqs_.push_back(std::move(oe));
    }
    by_depth_.assign(nvars_ + 1, {});
    for (std::size_t i = 0; i < eqs_.size(); ++i) by_depth_[eqs_[i].depth].push_back((int)i);
  }

  long long count(int threads) const {
    std::vector<int> assign(std::max(nvars_, 1), -1);
    if (nvars_ == 0) return check_depth(0, assign) ? 1 : 0;
    if (threads <= 1 || d_.n() == 1) return count_from(0, assign);

    const int n = d_.n();
    std::vector<long long> partial(n, 0);
    std::vector<std::thread> pool;
    for (int t = 0; t < std::min(threads, n); ++t) {
      pool.emplace_back([&, t] {
        std::vector<int> local(nvars_, -1);
        for (int v = t; v < n; v += std::min(threads, n)) {
          local[0] = v;
          if (check_depth(1, local)) partial[v] = count_from(1, local);
          local[0] = -1;
        }
      });
    }
    for (auto& th : pool) th.join();
    long long total = 0;
    for (long long p : partial) total += p;
    return total;
  }

private:
  static constexpr int kApplyBase = -2;  // op k encoded as kApplyBase - k
  static constexpr int kEquals = -1;
  static constexpr int kMaxStack = 64;

  const RelationSystem& sys_;
  const OrientedDisingquandle& d_;
  int nvars_ = 0;
  std::vector<OracleEq> eqs_;
  std::vector<std::vector<int>> by_depth_;

  void flatten(int node_id, std::vector<int>& prog) const {
    const Term& t = sys_.node(node_id);
    if (t.kind == Term::Kind::Var) {
      prog.push_back(t.var);
      return;
    }
    flatten(t.lhs, prog);
    flatten(t.rhs, prog);
    prog.push_back(kApplyBase - static_cast<int>(t.op));
  }

  bool holds(const OracleEq& eq, const std::vector<int>& assign) const {
    int stack[kMaxStack];
    int sp = 0;
    int lhs = -1;
    for (int p : eq.prog) {
      if (p >= 0) {
        stack[sp++] = assign[p];
      } else if (p == kEquals) {
        lhs = stack[--sp];
      } else {
        int b = stack[--sp];
        int a = stack[--sp];
        stack[sp++] = d_.apply(static_cast<OpKind>(kApplyBase - p), a, b);
      }
    }
    return lhs == stack[sp - 1];
  }

  bool check_depth(int depth, const std::vector<int>& assign) const {
    for (int ei : by_depth_[depth])
      if (!holds(eqs_[ei], assign)) return false;
    return true;
  }

  long long count_from(int depth, std::vector<int>& assign) const {
    if (depth == nvars_) return 1;
    const int n = d_.n();
    long long total = 0;
    for (int v = 0; v < n; ++v) {
      assign[depth] = v;
      if (check_depth(depth + 1, assign)) total += count_from(depth + 1, assign);
    }
    assign[depth] = -1;
    return total;
  }
};

// --- solver route ------------------------------------------------------------
//
// Backtracking in most-constrained-first variable order with propagation:
// whenever an equation has a single unbound variable occurrence reachable
// through invertible positions (left slot of * or /, either side of =), the
// value is forced. Crossing-map arguments are never inverted; such equations
// wait until fully bound and then act as checks.

class Solver {
public:
  Solver(const RelationSystem& sys, const OrientedDisingquandle& d) : sys_(sys), d_(d) {
    nvars_ = sys.variable_count();
    assign_.assign(nvars_, -1);
    std::vector<int> uses(nvars_, 0);
    std::vector<int> vars;
    for (const auto& eq : sys.equations()) {
      vars.clear();
      sys.collect_vars(eq.lhs, vars);
      sys.collect_vars(eq.rhs, vars);
      std::sort(vars.begin(), vars.end());
      vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
      for (int v : vars) ++uses[v];
    }
    for (int v = 0; v < nvars_; ++v)
      (uses[v] > 0 ? constrained_ : unconstrained_).push_back(v);
    std::stable_sort(constrained_.begin(), constrained_.end(),
                     [&](int a, int b) { return uses[a] > uses[b]; });
  }

  // Counting: unconstrained variables contribute a factor n each.
  long long count(int threads) {
    collect_ = nullptr;
    order_ = constrained_;
    long long base = run(threads);
    for (std::size_t i = 0; i < unconstrained_.size(); ++i) {
      if (base > (long long)4e18 / d_.n())
        throw ceiling_error("coloring count exceeds the representable range");
      base *= d_.n();
    }
    return base;
  }

  // Materialization: every variable is branched so full tuples come out.
  std::vector<std::vector<int>> enumerate(int threads, std::uint64_t cap) {
    std::vector<std::vector<int>> out;
    collect_ = &out;
    cap_ = cap;
    order_ = constrained_;
    order_.insert(order_.end(), unconstrained_.begin(), unconstrained_.end());
    run(threads);
    std::sort(out.begin(), out.end());
    return out;
  }

private:
  const RelationSystem& sys_;
  const OrientedDisingquandle& d_;
  int nvars_ = 0;
  std::vector<int> assign_;
  std::vector<int> constrained_, unconstrained_, order_;
  std::vector<std::vector<int>>* collect_ = nullptr;
  std::uint64_t cap_ = 0;
  long long count_ = 0;
  std::vector<int> trail_;

  bool bound(int node_id) const {
    const Term& t = sys_.node(node_id);
    if (t.kind == Term::Kind::Var) return assign_[t.var] != -1;
    return bound(t.lhs) && bound(t.rhs);
  }

  int unbound_occurrences(int node_id) const {
    const Term& t = sys_.node(node_id);
    if (t.kind == Term::Kind::Var) return assign_[t.var] == -1 ? 1 : 0;
    return unbound_occurrences(t.lhs) + unbound_occurrences(t.rhs);
  }

  int eval(int node_id) const {
    const Term& t = sys_.node(node_id);
    if (t.kind == Term::Kind::Var) return assign_[t.var];
    return d_.apply(t.op, eval(t.lhs), eval(t.rhs));
  }

  void set(int var, int value) {
    assign_[var] = value;
    trail_.push_back(var);
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      assign_[trail_.back()] = -1;
      trail_.pop_back();
    }
  }

  // Forces the single unbound variable of `node` to make it evaluate to
  // `value`, when every step down to it is invertible. Returns false only on
  // an inconsistency; *progress reports whether an assignment happened.
  bool force(int node_id, int value, bool* progress) {
    const Term& t = sys_.node(node_id);
    if (t.kind == Term::Kind::Var) {
      if (assign_[t.var] != -1) return assign_[t.var] == value;
      set(t.var, value);
      *progress = true;
      return true;
    }
    if (t.op == OpKind::R1 || t.op == OpKind::R2) return true;  // defer
    bool in_lhs = unbound_occurrences(t.lhs) == 1;
    if (!in_lhs) return true;  // unknown sits in the right slot: defer
    int other = eval(t.rhs);
    int inverted;
    switch (t.op) {
      case OpKind::Star1: inverted = d_.star1_bar.at(value, other); break;
      case OpKind::Star2: inverted = d_.star2_bar.at(value, other); break;
      case OpKind::Bar1: inverted = d_.star1.at(value, other); break;
      case OpKind::Bar2: inverted = d_.star2.at(value, other); break;
      default: return true;
    }
    return force(t.lhs, inverted, progress);
  }

  // Fixpoint propagation; false means contradiction.
  bool propagate() {
    bool progress = true;
    while (progress) {
      progress = false;
      for (const auto& eq : sys_.equations()) {
        int lhs_un = unbound_occurrences(eq.lhs);
        int rhs_un = unbound_occurrences(eq.rhs);
        int total = lhs_un + rhs_un;
        if (total == 0) {
          if (eval(eq.lhs) != eval(eq.rhs)) return false;
        } else if (total == 1) {
          if (lhs_un == 1) {
            if (!force(eq.lhs, eval(eq.rhs), &progress)) return false;
          } else {
            if (!force(eq.rhs, eval(eq.lhs), &progress)) return false;
          }
        }
      }
    }
    return true;
  }

  int next_unassigned() const {
    for (int v : order_)
      if (assign_[v] == -1) return v;
    return -1;
  }

  void leaf() {
    if (!collect_) {
      ++count_;
      return;
    }
    if (collect_->size() >= cap_)
      throw ceiling_error("materialization ceiling exceeded (" + std::to_string(cap_) +
                          " colorings)");
    collect_->push_back(assign_);
  }

  void search() {
    std::size_t mark = trail_.size();
    if (!propagate()) {
      undo_to(mark);
      return;
    }
    int var = next_unassigned();
    if (var == -1) {
      leaf();
      undo_to(mark);
      return;
    }
    for (int v = 0; v < d_.n(); ++v) {
      std::size_t inner = trail_.size();
      set(var, v);
      search();
      undo_to(inner);
    }
    undo_to(mark);
  }

  long long run(int threads) {
    count_ = 0;
    trail_.clear();
    if (nvars_ == 0 || order_.empty()) {
      // nothing to branch; equations (if any) must already be decidable
      if (propagate()) leaf();
      undo_to(0);
      return count_;
    }
    if (threads <= 1 || collect_ != nullptr || d_.n() == 1) {
      search();
      return count_;
    }

    // Split the first branch variable's values across workers. Propagation
    // at the root is re-done per worker on its own copy.
    const int n = d_.n();
    std::vector<long long> partial(n, 0);
    bool root_ok;
    int var;
    {
      std::size_t mark = trail_.size();
      root_ok = propagate();
      var = root_ok ? next_unassigned() : -1;
      undo_to(mark);
    }
    if (!root_ok) return 0;
    if (var == -1) {
      search();  // fully forced at the root
      return count_;
    }
    std::vector<std::thread> pool;
    int nt = std::min(threads, n);
    for (int t = 0; t < nt; ++t) {
      pool.emplace_back([&, t] {
        for (int v = t; v < n; v += nt) {
          Solver clone(sys_, d_);
          clone.order_ = order_;
          clone.propagate();
          clone.set(var, v);
          clone.search();
          partial[v] = clone.count_;
        }
      });
    }
    for (auto& th : pool) th.join();
    long long total = 0;
    for (long long p : partial) total += p;
    return total;
  }
};

}  // namespace detail

// Exhaustive reference count: every one of the n^|vars| assignments is
// swept (early-failing prefixes are cut at the first violated equation,
// which does not change the count). Refuses when n^|vars| exceeds the
// configured ceiling.
inline ColoringResult count_colorings_exhaustive(const RelationSystem& sys,
                                                 const OrientedDisingquandle& d,
                                                 const ColoringOptions& opts = {}) {
  long double space = 1.0L;
  for (int i = 0; i < sys.variable_count(); ++i) space *= d.n();
  if (space > static_cast<long double>(opts.oracle_ceiling))
    throw ceiling_error("assignment space " + std::to_string((double)space) +
                        " exceeds the exhaustive-mode ceiling " +
                        std::to_string(opts.oracle_ceiling));
  detail::Oracle oracle(sys, d);
  ColoringResult res;
  res.count = oracle.count(opts.threads);
  return res;
}

// Propagating backtracker; agrees with count_colorings_exhaustive on every
// instance the latter accepts.
inline ColoringResult count_colorings(const RelationSystem& sys, const OrientedDisingquandle& d,
                                      const ColoringOptions& opts = {}) {
  detail::Solver solver(sys, d);
  ColoringResult res;
  res.count = solver.count(opts.threads);
  return res;
}

// Full solution set in lexicographic assignment order (system variable
// order).
inline ColoringResult enumerate_colorings(const RelationSystem& sys,
                                          const OrientedDisingquandle& d,
                                          const ColoringOptions& opts = {}) {
  ColoringResult res = count_colorings(sys, d, opts);
  if (res.count < 0 || static_cast<std::uint64_t>(res.count) > opts.max_colorings)
    throw ceiling_error("count " + std::to_string(res.count) +
                        " exceeds the materialization ceiling " +
                        std::to_string(opts.max_colorings));
  detail::Solver solver(sys, d);
  res.colorings = solver.enumerate(opts.threads, opts.max_colorings);
  return res;
}

// Ordered counts of one system under several structures.
inline PsiTuple psi(const RelationSystem& sys, const std::vector<OrientedDisingquandle>& ds,
                    const ColoringOptions& opts = {}) {
  if (ds.empty()) throw structural_error("psi needs at least one structure");
  PsiTuple t;
  for (const auto& d : ds) t.values.push_back(count_colorings(sys, d, opts).count);
  return t;
}

}  // namespace odsq
