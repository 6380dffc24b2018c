#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "odsq/report.hpp"
#include "odsq/table.hpp"

namespace odsq {

// The six operations a colored arc can pass through. Star is the quandle
// operation, Bar its right inverse, R1/R2 the singular-crossing maps.
enum class OpKind { Star1, Star2, Bar1, Bar2, R1, R2 };

inline const char* op_name(OpKind op) {
  switch (op) {
    case OpKind::Star1: return "*1";
    case OpKind::Star2: return "*2";
    case OpKind::Bar1: return "/1";
    case OpKind::Bar2: return "/2";
    case OpKind::R1: return "R1";
    case OpKind::R2: return "R2";
  }
  return "?";
}

// One quandle with its derived inverse and the shared crossing maps.
struct OrientedSingquandle {
  OpTable star;
  OpTable star_bar;
  MapTable r1;
  MapTable r2;

  int n() const noexcept { return star.n(); }

  friend bool operator==(const OrientedSingquandle&, const OrientedSingquandle&) = default;
};

// Two quandles on one carrier sharing a pair of crossing maps.
struct OrientedDisingquandle {
  OpTable star1;
  OpTable star1_bar;
  OpTable star2;
  OpTable star2_bar;
  MapTable r1;
  MapTable r2;

  int n() const noexcept { return star1.n(); }

  int apply(OpKind op, int a, int b) const {
    switch (op) {
      case OpKind::Star1: return star1.at(a, b);
      case OpKind::Star2: return star2.at(a, b);
      case OpKind::Bar1: return star1_bar.at(a, b);
      case OpKind::Bar2: return star2_bar.at(a, b);
      case OpKind::R1: return r1.at(a, b);
      case OpKind::R2: return r2.at(a, b);
    }
    return 0;
  }

  friend bool operator==(const OrientedDisingquandle&, const OrientedDisingquandle&) = default;
};

// Human-readable statement of each axiom id used in reports.
inline std::string axiom_formula(const std::string& id) {
  std::string bare = id;
  if (auto p = bare.find(':'); p != std::string::npos) bare = bare.substr(p + 1);
  if (bare == "idempotent") return "x*x = x";
  if (bare == "right-invertible") return "x -> x*y is a bijection for every y";
  if (bare == "self-distributive") return "(x*y)*z = (x*z)*(y*z)";
  if (bare == "inverse-coherent") return "(x*y)/y = x and (x/y)*y = x";
  if (bare == "S1") return "R1(x/y,z)*y = R1(x,z*y)";
  if (bare == "S2") return "R2(x/y,z) = R2(x,z*y)/y";
  if (bare == "S3") return "(y/R1(x,z))*x = (y*R2(x,z))/z";
  if (bare == "S4") return "R2(x,y) = R1(y,x*y)";
  if (bare == "S5") return "R1(x,y)*R2(x,y) = R2(y,x*y)";
  if (bare == "D1") return "(y/1R1(x,z))*2x = (y*2R2(x,z))/1z";
  if (bare == "D2") return "(y/2R1(x,z))*1x = (y*1R2(x,z))/2z";
  if (bare == "D3") return "R1(x,y)*1R2(x,y) = R2(y,x*2y)";
  if (bare == "D4") return "R1(x,y)*2R2(x,y) = R2(y,x*1y)";
  if (bare == "D5") return "R2(y,x*1y) = R2(y,x*2y)";
  return "";
}

namespace detail {

// Scans pairs in lexicographic (x, y) order; records the first violation.
template <class Pred>
AxiomCheck check_pairs(const std::string& id, int n, Pred&& holds) {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!holds(x, y)) return {id, false, {x, y}};
  return {id, true, {}};
}

template <class Pred>
AxiomCheck check_triples(const std::string& id, int n, Pred&& holds) {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (!holds(x, y, z)) return {id, false, {x, y, z}};
  return {id, true, {}};
}

}  // namespace detail

// The three quandle axioms, each reported separately. Counterexamples:
// idempotent -> (x); right-invertible -> (x, x', y) with x*y = x'*y, x < x';
// self-distributive -> (x, y, z).
inline AxiomReport validate_quandle(const OpTable& t, const std::string& prefix = "") {
  const int n = t.n();
  AxiomReport rep;

  AxiomCheck idem{prefix + "idempotent", true, {}};
  for (int x = 0; x < n; ++x)
    if (t.at(x, x) != x) {
      idem = {prefix + "idempotent", false, {x}};
      break;
    }
  rep.checks.push_back(idem);

  AxiomCheck inv{prefix + "right-invertible", true, {}};
  [&] {
    for (int x = 0; x < n; ++x)
      for (int x2 = x + 1; x2 < n; ++x2)
        for (int y = 0; y < n; ++y)
          if (t.at(x, y) == t.at(x2, y)) {
            inv = {prefix + "right-invertible", false, {x, x2, y}};
            return;
          }
  }();
  rep.checks.push_back(inv);

  rep.checks.push_back(detail::check_triples(prefix + "self-distributive", n, [&](int x, int y, int z) {
    return t.at(t.at(x, y), z) == t.at(t.at(x, z), t.at(y, z));
  }));

  return rep;
}

// Column-wise inverse: returns b with b(t(x,y), y) = x for all x, y.
// Requires every column of t to be a bijection.
inline OpTable right_inverse_table(const OpTable& t) {
  const int n = t.n();
  if (int bad = t.first_non_bijective_column(); bad != -1)
    throw structural_error("column " + std::to_string(bad) + " is not a bijection; no right inverse");
  std::vector<int> cells(static_cast<std::size_t>(n) * n);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x)
      cells[static_cast<std::size_t>(t.at(x, y)) * n + y] = x;
  return OpTable(n, std::move(cells));
}

inline OrientedSingquandle make_oriented_singquandle(OpTable star, MapTable r1, MapTable r2) {
  if (star.n() != r1.n() || star.n() != r2.n())
    throw structural_error("tables do not share one carrier size");
  OpTable bar = right_inverse_table(star);
  return {std::move(star), std::move(bar), std::move(r1), std::move(r2)};
}

// Checks the quandle axioms, inverse coherence, and the five singquandle
// axioms S1..S5 exhaustively. Axiom ids are prefixed so that the two halves
// of a disingquandle stay distinguishable in one report.
inline AxiomReport validate_oriented_singquandle(const OrientedSingquandle& s,
                                                 const std::string& prefix = "") {
  const int n = s.star.n();
  if (s.star_bar.n() != n || s.r1.n() != n || s.r2.n() != n)
    throw structural_error("tables do not share one carrier size");

  AxiomReport rep = validate_quandle(s.star, prefix);

  const auto& st = s.star;
  const auto& ba = s.star_bar;
  const auto& r1 = s.r1;
  const auto& r2 = s.r2;

  rep.checks.push_back(detail::check_pairs(prefix + "inverse-coherent", n, [&](int x, int y) {
    return ba.at(st.at(x, y), y) == x && st.at(ba.at(x, y), y) == x;
  }));

  rep.checks.push_back(detail::check_triples(prefix + "S1", n, [&](int x, int y, int z) {
    return st.at(r1.at(ba.at(x, y), z), y) == r1.at(x, st.at(z, y));
  }));
  rep.checks.push_back(detail::check_triples(prefix + "S2", n, [&](int x, int y, int z) {
    return r2.at(ba.at(x, y), z) == ba.at(r2.at(x, st.at(z, y)), y);
  }));
  rep.checks.push_back(detail::check_triples(prefix + "S3", n, [&](int x, int y, int z) {
    return st.at(ba.at(y, r1.at(x, z)), x) == ba.at(st.at(y, r2.at(x, z)), z);
  }));
  rep.checks.push_back(detail::check_pairs(prefix + "S4", n, [&](int x, int y) {
    return r2.at(x, y) == r1.at(y, st.at(x, y));
  }));
  rep.checks.push_back(detail::check_pairs(prefix + "S5", n, [&](int x, int y) {
    return st.at(r1.at(x, y), r2.at(x, y)) == r2.at(y, st.at(x, y));
  }));

  return rep;
}

inline OrientedDisingquandle make_oriented_disingquandle(OpTable star1, OpTable star2, MapTable r1,
                                                         MapTable r2) {
  const int n = star1.n();
  if (star2.n() != n || r1.n() != n || r2.n() != n)
    throw structural_error("tables do not share one carrier size");
  OpTable bar1 = right_inverse_table(star1);
  OpTable bar2 = right_inverse_table(star2);
  return {std::move(star1), std::move(bar1), std::move(star2), std::move(bar2), std::move(r1),
          std::move(r2)};
}

// Validates both constituent singquandles (axiom ids prefixed op1:/op2:),
// the four mixing axioms D1..D4, and the consequence D5, all exhaustively.
inline AxiomReport validate_oriented_disingquandle(const OrientedDisingquandle& d) {
  const int n = d.star1.n();
  if (d.star1_bar.n() != n || d.star2.n() != n || d.star2_bar.n() != n || d.r1.n() != n ||
      d.r2.n() != n)
    throw structural_error("tables do not share one carrier size");

  AxiomReport rep =
      validate_oriented_singquandle({d.star1, d.star1_bar, d.r1, d.r2}, "op1:");
  AxiomReport rep2 =
      validate_oriented_singquandle({d.star2, d.star2_bar, d.r1, d.r2}, "op2:");
  rep.checks.insert(rep.checks.end(), rep2.checks.begin(), rep2.checks.end());

  const auto& s1 = d.star1;
  const auto& b1 = d.star1_bar;
  const auto& s2 = d.star2;
  const auto& b2 = d.star2_bar;
  const auto& r1 = d.r1;
  const auto& r2 = d.r2;

  rep.checks.push_back(detail::check_triples("D1", n, [&](int x, int y, int z) {
    return s2.at(b1.at(y, r1.at(x, z)), x) == b1.at(s2.at(y, r2.at(x, z)), z);
  }));
  rep.checks.push_back(detail::check_triples("D2", n, [&](int x, int y, int z) {
    return s1.at(b2.at(y, r1.at(x, z)), x) == b2.at(s1.at(y, r2.at(x, z)), z);
  }));
  rep.checks.push_back(detail::check_pairs("D3", n, [&](int x, int y) {
    return s1.at(r1.at(x, y), r2.at(x, y)) == r2.at(y, s2.at(x, y));
  }));
  rep.checks.push_back(detail::check_pairs("D4", n, [&](int x, int y) {
    return s2.at(r1.at(x, y), r2.at(x, y)) == r2.at(y, s1.at(x, y));
  }));
  rep.checks.push_back(detail::check_pairs("D5", n, [&](int x, int y) {
    return r2.at(y, s1.at(x, y)) == r2.at(y, s2.at(x, y));
  }));

  return rep;
}

// Smallest superset of seed closed under *1, *2, /1, /2, R1 and R2.
inline std::vector<int> closure(const OrientedDisingquandle& d, const std::vector<int>& seed) {
  if (seed.empty()) throw structural_error("closure seed must be non-empty");
  const int n = d.n();
  std::vector<char> in(n, 0);
  std::vector<int> work;
  for (int e : seed) {
    if (e < 0 || e >= n)
      throw structural_error("seed element " + std::to_string(e) + " outside carrier");
    if (!in[e]) {
      in[e] = 1;
      work.push_back(e);
    }
  }
  const OpTable* tables[6] = {&d.star1, &d.star2, &d.star1_bar, &d.star2_bar, &d.r1, &d.r2};
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a = 0; a < n; ++a) {
      if (!in[a]) continue;
      for (int b = 0; b < n; ++b) {
        if (!in[b]) continue;
        for (const OpTable* t : tables) {
          int v = t->at(a, b);
          if (!in[v]) {
            in[v] = 1;
            grew = true;
          }
        }
      }
    }
  }
  std::vector<int> out;
  for (int e = 0; e < n; ++e)
    if (in[e]) out.push_back(e);
  return out;
}

// Direct closure test (equivalent to closure(d, subset) == subset but scans
// once without iterating to a fixed point).
inline bool is_subdisingquandle(const OrientedDisingquandle& d, const std::vector<int>& subset) {
  if (subset.empty()) throw structural_error("subset must be non-empty");
  const int n = d.n();
  std::vector<char> in(n, 0);
  for (int e : subset) {
    if (e < 0 || e >= n)
      throw structural_error("subset element " + std::to_string(e) + " outside carrier");
    in[e] = 1;
  }
  const OpTable* tables[6] = {&d.star1, &d.star2, &d.star1_bar, &d.star2_bar, &d.r1, &d.r2};
  for (int a = 0; a < n; ++a) {
    if (!in[a]) continue;
    for (int b = 0; b < n; ++b) {
      if (!in[b]) continue;
      for (const OpTable* t : tables)
        if (!in[t->at(a, b)]) return false;
    }
  }
  return true;
}

}  // namespace odsq
