#pragma once

#include <string>
#include <vector>

#include "odsq/algebra.hpp"

namespace odsq {

// Term tree node: either a variable reference or a binary operation applied
// to two sub-terms. Nodes live in the owning RelationSystem's pool.
struct Term {
  enum class Kind { Var, App };
  Kind kind = Kind::Var;
  int var = -1;       // Kind::Var
  OpKind op{};        // Kind::App
  int lhs = -1, rhs = -1;

  friend bool operator==(const Term&, const Term&) = default;
};

struct Equation {
  int lhs = -1, rhs = -1;

  friend bool operator==(const Equation&, const Equation&) = default;
};

// Finite set of equations over arc variables; the algebraic shadow of a
// diagram. Variables are kept in first-occurrence order.
class RelationSystem {
public:
  int var(const std::string& name) {
    for (int i = 0; i < static_cast<int>(vars_.size()); ++i)
      if (vars_[i] == name) return i;
    vars_.push_back(name);
    return static_cast<int>(vars_.size()) - 1;
  }

  int var_index(const std::string& name) const {
    for (int i = 0; i < static_cast<int>(vars_.size()); ++i)
      if (vars_[i] == name) return i;
    return -1;
  }

  int var_term(const std::string& name) {
    Term t;
    t.kind = Term::Kind::Var;
    t.var = var(name);
    nodes_.push_back(t);
    return static_cast<int>(nodes_.size()) - 1;
  }

  int app(OpKind op, int lhs, int rhs) {
    Term t;
    t.kind = Term::Kind::App;
    t.op = op;
    t.lhs = lhs;
    t.rhs = rhs;
    nodes_.push_back(t);
    return static_cast<int>(nodes_.size()) - 1;
  }

  void equate(int lhs, int rhs) { eqs_.push_back({lhs, rhs}); }

  const std::vector<std::string>& variables() const noexcept { return vars_; }
  const std::vector<Term>& nodes() const noexcept { return nodes_; }
  const std::vector<Equation>& equations() const noexcept { return eqs_; }
  const Term& node(int i) const { return nodes_[i]; }

  int variable_count() const noexcept { return static_cast<int>(vars_.size()); }
  int equation_count() const noexcept { return static_cast<int>(eqs_.size()); }

  bool mentions(OpKind op) const {
    for (const auto& t : nodes_)
      if (t.kind == Term::Kind::App && t.op == op) return true;
    return false;
  }

  void collect_vars(int node_id, std::vector<int>& out) const {
    const Term& t = nodes_[node_id];
    if (t.kind == Term::Kind::Var) {
      out.push_back(t.var);
      return;
    }
    collect_vars(t.lhs, out);
    collect_vars(t.rhs, out);
  }

  // Evaluates a term under a total assignment.
  int eval(int node_id, const std::vector<int>& assign, const OrientedDisingquandle& d) const {
    const Term& t = nodes_[node_id];
    if (t.kind == Term::Kind::Var) return assign[t.var];
    return d.apply(t.op, eval(t.lhs, assign, d), eval(t.rhs, assign, d));
  }

  bool satisfied(const std::vector<int>& assign, const OrientedDisingquandle& d) const {
    for (const auto& eq : eqs_)
      if (eval(eq.lhs, assign, d) != eval(eq.rhs, assign, d)) return false;
    return true;
  }

  std::string print_term(int node_id) const {
    const Term& t = nodes_[node_id];
    if (t.kind == Term::Kind::Var) return vars_[t.var];
    if (t.op == OpKind::R1 || t.op == OpKind::R2)
      return std::string(op_name(t.op)) + "(" + print_term(t.lhs) + "," + print_term(t.rhs) + ")";
    std::string l = print_term(t.lhs);
    std::string r = print_term(t.rhs);
    const Term& rn = nodes_[t.rhs];
    if (rn.kind == Term::Kind::App && rn.op != OpKind::R1 && rn.op != OpKind::R2)
      r = "(" + r + ")";  // infix ops are left-associative
    return l + op_name(t.op) + r;
  }

  // DSL text; a leading vars line preserves variables that occur in no
  // equation (free arcs).
  std::string print() const {
    std::string out = "vars";
    for (const auto& v : vars_) out += " " + v;
    out += "\n";
    for (const auto& eq : eqs_) out += print_term(eq.lhs) + "=" + print_term(eq.rhs) + "\n";
    return out;
  }

  // Bijective renaming: variable i becomes variable perm[i] in the result.
  // The solution set is unchanged up to the same reindexing, so counts are
  // preserved; solver variable order genuinely changes.
  RelationSystem permuted(const std::vector<int>& perm) const {
    if (perm.size() != vars_.size())
      throw structural_error("permutation does not match variable count");
    RelationSystem out;
    out.vars_.resize(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) out.vars_[perm[i]] = vars_[i];
    out.nodes_ = nodes_;
    for (auto& t : out.nodes_)
      if (t.kind == Term::Kind::Var) t.var = perm[t.var];
    out.eqs_ = eqs_;
    return out;
  }

private:
  std::vector<std::string> vars_;
  std::vector<Term> nodes_;
  std::vector<Equation> eqs_;
};

}  // namespace odsq
