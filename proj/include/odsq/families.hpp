#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "odsq/algebra.hpp"
#include "odsq/poly.hpp"

namespace odsq {

// Rejected construction parameters; message names the violated condition.
class parameter_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Affine-quadratic family over Z_n:
//   x*y   = a x + (1-a) y           (one quandle, used for both operations)
//   R1    = alpha + beta x + gamma y + lambda x^2 + mu y^2 + delta xy
//   R2    = R1(y, x*y)              (always derived, never user-supplied)
// Admissible iff gcd(a,n) = 1, a^2 != 1, and (1-a) annihilates alpha,
// 1-beta-gamma, lambda, mu and delta mod n.
// ---------------------------------------------------------------------------

struct AffineQuadraticParams {
  int n = 0;
  int a = 0;
  int alpha = 0, beta = 0, gamma = 0, lambda = 0, mu = 0, delta = 0;

  QuadPoly r1_poly() const {
    return QuadPoly::make(n, alpha, beta, gamma, lambda, mu, delta);
  }

  QuadPoly derived_r2_poly() const { return r1_poly().substitute_swap(mod_reduce(a, n)); }

  friend bool operator==(const AffineQuadraticParams&, const AffineQuadraticParams&) = default;
};

inline int modular_inverse(int a, int n) {
  // extended Euclid; caller guarantees gcd(a, n) = 1
  long long t = 0, newt = 1, r = n, newr = mod_reduce(a, n);
  while (newr != 0) {
    long long q = r / newr;
    t = std::exchange(newt, t - q * newt);
    r = std::exchange(newr, r - q * newr);
  }
  return mod_reduce(t, n);
}

inline void check_affine_quadratic_params(const AffineQuadraticParams& p) {
  if (p.n < 3) throw parameter_error("n must be > 2, got " + std::to_string(p.n));
  const int n = p.n;
  const int a = mod_reduce(p.a, n);
  if (std::gcd(a, n) != 1) throw parameter_error("gcd(a,n) != 1");
  if (mod_reduce((long long)a * a, n) == 1) throw parameter_error("a^2 == 1 (mod n)");
  const long long om = mod_reduce(1 - (long long)a, n);  // 1-a
  auto ann = [&](long long v) { return mod_reduce(om * mod_reduce(v, n), n) == 0; };
  if (!ann(p.alpha)) throw parameter_error("(1-a)*alpha != 0 (mod n)");
  if (!ann(1LL - p.beta - p.gamma)) throw parameter_error("(1-a)*(1-beta-gamma) != 0 (mod n)");
  if (!ann(p.lambda)) throw parameter_error("(1-a)*lambda != 0 (mod n)");
  if (!ann(p.mu)) throw parameter_error("(1-a)*mu != 0 (mod n)");
  if (!ann(p.delta)) throw parameter_error("(1-a)*delta != 0 (mod n)");
}

// Tabulates the structure without checking the admissibility conditions.
// Used by tests probing what happens to inadmissible parameter tuples.
inline OrientedDisingquandle affine_quadratic_disingquandle_unchecked(
    const AffineQuadraticParams& p) {
  const int n = p.n;
  const int a = mod_reduce(p.a, n);
  OpTable star = OpTable::from_fn(
      n, [&](int x, int y) { return mod_reduce((long long)a * x + (1LL - a) * y, n); });
  MapTable r1 = p.r1_poly().tabulate();
  MapTable r2 = MapTable::from_fn(n, [&](int x, int y) { return r1.at(y, star.at(x, y)); });
  return make_oriented_disingquandle(star, star, std::move(r1), std::move(r2));
}

inline OrientedDisingquandle affine_quadratic_disingquandle(const AffineQuadraticParams& p) {
  check_affine_quadratic_params(p);
  OrientedDisingquandle d = affine_quadratic_disingquandle_unchecked(p);
  AxiomReport rep = validate_oriented_disingquandle(d);
  if (!rep.passed())
    throw std::logic_error("internal consistency: admissible parameters produced an invalid "
                           "structure; first failure: " +
                           rep.first_failure()->axiom);
  return d;
}

// Parses the CLI parameter syntax "n=10 a=3 alpha=0 beta=4 gamma=2 ...".
// Coefficients default to 0; negative values reduce mod n.
inline AffineQuadraticParams parse_affine_params(const std::string& text) {
  AffineQuadraticParams p;
  bool have_n = false, have_a = false;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos)
      throw parameter_error("expected key=value, got '" + tok + "'");
    std::string key = tok.substr(0, eq);
    long long val;
    try {
      val = std::stoll(tok.substr(eq + 1));
    } catch (const std::exception&) {
      throw parameter_error("bad integer in '" + tok + "'");
    }
    if (key == "n") {
      p.n = (int)val;
      have_n = true;
    } else if (key == "a") {
      p.a = (int)val;
      have_a = true;
    } else if (key == "alpha") p.alpha = (int)val;
    else if (key == "beta") p.beta = (int)val;
    else if (key == "gamma") p.gamma = (int)val;
    else if (key == "lambda") p.lambda = (int)val;
    else if (key == "mu") p.mu = (int)val;
    else if (key == "delta") p.delta = (int)val;
    else throw parameter_error("unknown parameter '" + key + "'");
  }
  if (!have_n || !have_a) throw parameter_error("parameters n and a are required");
  p.a = mod_reduce(p.a, p.n < 1 ? 1 : p.n);
  p.alpha = mod_reduce(p.alpha, p.n < 1 ? 1 : p.n);
  p.beta = mod_reduce(p.beta, p.n < 1 ? 1 : p.n);
  p.gamma = mod_reduce(p.gamma, p.n < 1 ? 1 : p.n);
  p.lambda = mod_reduce(p.lambda, p.n < 1 ? 1 : p.n);
  p.mu = mod_reduce(p.mu, p.n < 1 ? 1 : p.n);
  p.delta = mod_reduce(p.delta, p.n < 1 ? 1 : p.n);
  return p;
}

// ---------------------------------------------------------------------------
// Conjugation families over a finite group: x*y = y^-1 x y with word-built
// crossing maps. The validator, not the construction, decides whether a
// given (group, variant, k) choice satisfies the axioms.
// ---------------------------------------------------------------------------

struct GroupTable {
  int n = 0;
  std::vector<int> mul;  // row-major, mul[i*n+j] = i*j
  std::vector<int> inv;
  int id = 0;

  int times(int a, int b) const { return mul[static_cast<std::size_t>(a) * n + b]; }
  int inverse(int a) const { return inv[a]; }

  int power(int a, int k) const {
    int acc = id;
    for (int i = 0; i < k; ++i) acc = times(acc, a);
    return acc;
  }
};

inline void validate_group(const GroupTable& g) {
  const int n = g.n;
  if (n < 1 || g.mul.size() != static_cast<std::size_t>(n) * n ||
      g.inv.size() != static_cast<std::size_t>(n))
    throw structural_error("malformed group table");
  for (int v : g.mul)
    if (v < 0 || v >= n) throw structural_error("group product out of range");
  for (int v : g.inv)
    if (v < 0 || v >= n) throw structural_error("group inverse out of range");
  if (g.id < 0 || g.id >= n) throw structural_error("group identity out of range");
  for (int x = 0; x < n; ++x)
    if (g.times(g.id, x) != x || g.times(x, g.id) != x)
      throw structural_error("identity law fails at " + std::to_string(x));
  for (int x = 0; x < n; ++x)
    if (g.times(x, g.inv[x]) != g.id || g.times(g.inv[x], x) != g.id)
      throw structural_error("inverse law fails at " + std::to_string(x));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (g.times(g.times(x, y), z) != g.times(x, g.times(y, z)))
          throw structural_error("associativity fails at (" + std::to_string(x) + "," +
                                 std::to_string(y) + "," + std::to_string(z) + ")");
}

inline GroupTable cyclic_group(int n) {
  GroupTable g;
  g.n = n;
  g.id = 0;
  g.mul.resize(static_cast<std::size_t>(n) * n);
  g.inv.resize(n);
  for (int i = 0; i < n; ++i) {
    g.inv[i] = mod_reduce(-i, n);
    for (int j = 0; j < n; ++j) g.mul[static_cast<std::size_t>(i) * n + j] = mod_reduce(i + j, n);
  }
  return g;
}

// Symmetric group on k letters; elements indexed by lexicographic rank of
// the permutation word. Composition is (p*q)(i) = p(q(i)).
inline GroupTable symmetric_group(int k) {
  if (k < 1 || k > 5) throw structural_error("symmetric_group supports 1 <= k <= 5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(k);
  for (int i = 0; i < k; ++i) p[i] = i;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int n = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> rank;
  for (int i = 0; i < n; ++i) rank[perms[i]] = i;

  GroupTable g;
  g.n = n;
  g.mul.resize(static_cast<std::size_t>(n) * n);
  g.inv.resize(n);
  std::vector<int> comp(k), ivp(k);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int t = 0; t < k; ++t) comp[t] = perms[i][perms[j][t]];
      g.mul[static_cast<std::size_t>(i) * n + j] = rank[comp];
    }
    for (int t = 0; t < k; ++t) ivp[perms[i][t]] = t;
    g.inv[i] = rank[ivp];
  }
  g.id = 0;  // identity permutation is lexicographically first
  return g;
}

enum class ConjugationVariant { A, B, D };

inline ConjugationVariant conjugation_variant_from(const std::string& s) {
  if (s == "A" || s == "a") return ConjugationVariant::A;
  if (s == "B" || s == "b") return ConjugationVariant::B;
  if (s == "D" || s == "d") return ConjugationVariant::D;
  throw parameter_error("unknown conjugation variant '" + s + "' (expected A, B or D)");
}

struct ConjugationResult {
  OrientedSingquandle structure;
  AxiomReport report;
};

// Word forms per variant, k >= 0:
//   A: R1 = x (x y^-1)^k        R2 = y (x^-1 y)^k
//   B: R1 = (x y^-1)^k x        R2 = (x^-1 y)^k y
//   D: R1 = x (y x^-1)^(k+1)    R2 = x (y^-1 x)^k
inline ConjugationResult conjugation_singquandle(const GroupTable& g, ConjugationVariant variant,
                                                 int k) {
  validate_group(g);
  if (k < 0) throw parameter_error("k must be non-negative");
  const int n = g.n;

  OpTable star = OpTable::from_fn(
      n, [&](int x, int y) { return g.times(g.times(g.inverse(y), x), y); });

  auto r1f = [&](int x, int y) {
    switch (variant) {
      case ConjugationVariant::A: return g.times(x, g.power(g.times(x, g.inverse(y)), k));
      case ConjugationVariant::B: return g.times(g.power(g.times(x, g.inverse(y)), k), x);
      case ConjugationVariant::D: return g.times(x, g.power(g.times(y, g.inverse(x)), k + 1));
    }
    return 0;
  };
  auto r2f = [&](int x, int y) {
    switch (variant) {
      case ConjugationVariant::A: return g.times(y, g.power(g.times(g.inverse(x), y), k));
      case ConjugationVariant::B: return g.times(g.power(g.times(g.inverse(x), y), k), y);
      case ConjugationVariant::D: return g.times(x, g.power(g.times(g.inverse(y), x), k));
    }
    return 0;
  };

  OrientedSingquandle s =
      make_oriented_singquandle(star, MapTable::from_fn(n, r1f), MapTable::from_fn(n, r2f));
  AxiomReport rep = validate_oriented_singquandle(s);
  return {std::move(s), std::move(rep)};
}

// Self-consistency word identity for crossing maps over a conjugation
// quandle: R2(x,y) = R2(u,x) R1(u,x)^-1 R2(u,x) with u = x y^-1 x.
// Returns the first violating pair, if any.
inline std::optional<std::pair<int, int>> check_conjugation_r2_identity(
    const GroupTable& g, const OrientedSingquandle& s) {
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y) {
      int u = g.times(g.times(x, g.inverse(y)), x);
      int lhs = s.r2.at(x, y);
      int rhs = g.times(g.times(s.r2.at(u, x), g.inverse(s.r1.at(u, x))), s.r2.at(u, x));
      if (lhs != rhs) return std::make_pair(x, y);
    }
  return std::nullopt;
}

// Any oriented singquandle embeds diagonally (*1 = *2) as a disingquandle.
inline OrientedDisingquandle as_disingquandle(const OrientedSingquandle& s) {
  return {s.star, s.star_bar, s.star, s.star_bar, s.r1, s.r2};
}

// ---------------------------------------------------------------------------
// Built-in structures used throughout the reference tables.
// ---------------------------------------------------------------------------

struct BuiltinInfo {
  std::string name;
  AffineQuadraticParams params;
  QuadPoly r1;
  QuadPoly derived_r2;
  // Closed form historically quoted for R2, when one exists. For z10_uno and
  // z60 the quoted form disagrees with the derivation; the derived table is
  // the one the structure carries.
  std::optional<QuadPoly> quoted_r2;
};

inline const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"z10_canonical", "z10_uno", "z30", "z60"};
  return names;
}

inline BuiltinInfo builtin_info(const std::string& name) {
  AffineQuadraticParams p;
  std::optional<QuadPoly> quoted;
  if (name == "z10_canonical") {
    p = {10, 3, 0, 4, 2, 0, 0, 5};
    quoted = QuadPoly::make(10, 0, 6, 0, 0, 0, 5);
  } else if (name == "z10_uno") {
    p = {10, 3, 5, 1, 5, 5, 5, 5};
    quoted = QuadPoly::make(10, 0, 6, 0, 0, 0, 5);
  } else if (name == "z30") {
    p = {30, 13, 5, -9, 5, 10, 15, 20};
    quoted = QuadPoly::make(30, 5, 5, 21, 15, 10, 20);
  } else if (name == "z60") {
    p = {60, 7, 10, 6, 5, 10, 20, 30};
    quoted = QuadPoly::make(60, 10, 35, -24, 20, 10, 0);
  } else {
    throw parameter_error("unknown builtin '" + name + "'");
  }
  p.alpha = mod_reduce(p.alpha, p.n);
  p.beta = mod_reduce(p.beta, p.n);
  p.gamma = mod_reduce(p.gamma, p.n);
  p.lambda = mod_reduce(p.lambda, p.n);
  p.mu = mod_reduce(p.mu, p.n);
  p.delta = mod_reduce(p.delta, p.n);
  return {name, p, p.r1_poly(), p.derived_r2_poly(), quoted};
}

inline const OrientedDisingquandle& builtin(const std::string& name) {
  static const std::map<std::string, OrientedDisingquandle> cache = [] {
    std::map<std::string, OrientedDisingquandle> m;
    for (const auto& nm : builtin_names())
      m.emplace(nm, affine_quadratic_disingquandle(builtin_info(nm).params));
    return m;
  }();
  auto it = cache.find(name);
  if (it == cache.end()) throw parameter_error("unknown builtin '" + name + "'");
  return it->second;
}

inline bool is_builtin(const std::string& name) {
  const auto& names = builtin_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

// Pairs where the quoted R2 closed form disagrees with the derived table.
inline int quoted_r2_mismatch_count(const BuiltinInfo& info) {
  if (!info.quoted_r2) return 0;
  const MapTable derived = info.derived_r2.tabulate();
  const MapTable quoted = info.quoted_r2->tabulate();
  int count = 0;
  for (int x = 0; x < derived.n(); ++x)
    for (int y = 0; y < derived.n(); ++y)
      if (derived.at(x, y) != quoted.at(x, y)) ++count;
  return count;
}

}  // namespace odsq
