#pragma once

// Shared test fixtures: reference data transcribed digit-by-digit from the
// published presentation of the order-10 structure, parameter samplers for
// the affine-quadratic family, and the brute-force reference enumerations.

#include <random>
#include <string>
#include <vector>

#include "odsq/algebra.hpp"
#include "odsq/enumerate.hpp"
#include "odsq/families.hpp"
#include "odsq/morphism.hpp"
#include "odsq/presentation.hpp"

namespace testsupport {

// Exact expected file content for the exported z10_canonical structure.
inline const char* kGoldenZ10Presentation =
    "n=10\n"
    "0 8 6 4 2 0 8 6 4 2\n"
    "3 1 9 7 5 3 1 9 7 5\n"
    "6 4 2 0 8 6 4 2 0 8\n"
    "9 7 5 3 1 9 7 5 3 1\n"
    "2 0 8 6 4 2 0 8 6 4\n"
    "5 3 1 9 7 5 3 1 9 7\n"
    "8 6 4 2 0 8 6 4 2 0\n"
    "1 9 7 5 3 1 9 7 5 3\n"
    "4 2 0 8 6 4 2 0 8 6\n"
    "7 5 3 1 9 7 5 3 1 9\n"
    "\n"
    "0 8 6 4 2 0 8 6 4 2\n"
    "3 1 9 7 5 3 1 9 7 5\n"
    "6 4 2 0 8 6 4 2 0 8\n"
    "9 7 5 3 1 9 7 5 3 1\n"
    "2 0 8 6 4 2 0 8 6 4\n"
    "5 3 1 9 7 5 3 1 9 7\n"
    "8 6 4 2 0 8 6 4 2 0\n"
    "1 9 7 5 3 1 9 7 5 3\n"
    "4 2 0 8 6 4 2 0 8 6\n"
    "7 5 3 1 9 7 5 3 1 9\n"
    "\n"
    "0 2 4 6 8 0 2 4 6 8\n"
    "4 1 8 5 2 9 6 3 0 7\n"
    "8 0 2 4 6 8 0 2 4 6\n"
    "2 9 6 3 0 7 4 1 8 5\n"
    "6 8 0 2 4 6 8 0 2 4\n"
    "0 7 4 1 8 5 2 9 6 3\n"
    "4 6 8 0 2 4 6 8 0 2\n"
    "8 5 2 9 6 3 0 7 4 1\n"
    "2 4 6 8 0 2 4 6 8 0\n"
    "6 3 0 7 4 1 8 5 2 9\n"
    "\n"
    "0 0 0 0 0 0 0 0 0 0\n"
    "6 1 6 1 6 1 6 1 6 1\n"
    "2 2 2 2 2 2 2 2 2 2\n"
    "8 3 8 3 8 3 8 3 8 3\n"
    "4 4 4 4 4 4 4 4 4 4\n"
    "0 5 0 5 0 5 0 5 0 5\n"
    "6 6 6 6 6 6 6 6 6 6\n"
    "2 7 2 7 2 7 2 7 2 7\n"
    "8 8 8 8 8 8 8 8 8 8\n"
    "4 9 4 9 4 9 4 9 4 9\n";

// ---------------------------------------------------------------------------
// Parameter samplers for the affine-quadratic family.
// ---------------------------------------------------------------------------

inline std::vector<int> valid_multipliers(int n) {
  std::vector<int> out;
  for (int a = 2; a < n; ++a)
    if (std::gcd(a, n) == 1 && odsq::mod_reduce((long long)a * a, n) != 1) out.push_back(a);
  return out;
}

// Random parameters satisfying every admissibility condition.
inline odsq::AffineQuadraticParams sample_admissible(std::mt19937& rng, int n_lo = 6,
                                                     int n_hi = 40) {
  for (;;) {
    int n = n_lo + (int)(rng() % (n_hi - n_lo + 1));
    auto as = valid_multipliers(n);
    if (as.empty()) continue;
    int a = as[rng() % as.size()];
    int g = std::gcd(n, odsq::mod_reduce(1 - a, n));
    int step = n / g;  // annihilated coefficients are the multiples of n/g
    auto coef = [&] { return step * (int)(rng() % g); };
    odsq::AffineQuadraticParams p;
    p.n = n;
    p.a = a;
    p.alpha = coef();
    p.lambda = coef();
    p.mu = coef();
    p.delta = coef();
    p.beta = (int)(rng() % n);
    p.gamma = odsq::mod_reduce(1 - p.beta - coef(), n);
    return p;
  }
}

// Random parameters violating exactly one admissibility condition; returns
// the name of the violated condition.
inline std::pair<odsq::AffineQuadraticParams, std::string> sample_violating(std::mt19937& rng) {
  for (;;) {
    odsq::AffineQuadraticParams p = sample_admissible(rng);
    int n = p.n;
    int g = std::gcd(n, odsq::mod_reduce(1 - p.a, n));
    int step = n / g;
    auto non_multiple = [&]() -> int {
      for (;;) {
        int v = (int)(rng() % n);
        if (v % step != 0) return v;
      }
    };
    switch (rng() % 6) {
      case 0:
        p.alpha = non_multiple();
        return {p, "alpha"};
      case 1:
        p.lambda = non_multiple();
        return {p, "lambda"};
      case 2:
        p.mu = non_multiple();
        return {p, "mu"};
      case 3:
        p.delta = non_multiple();
        return {p, "delta"};
      case 4:
        p.gamma = odsq::mod_reduce(1 - p.beta - non_multiple(), n);
        return {p, "beta-gamma"};
      case 5: {
        // (n-1)^2 = 1 mod n and gcd(n-1, n) = 1; re-fit the coefficients to
        // the new multiplier so only the square condition is violated
        p.a = n - 1;
        int g2 = std::gcd(n, odsq::mod_reduce(1 - p.a, n));
        int step2 = n / g2;
        auto coef2 = [&] { return step2 * (int)(rng() % g2); };
        p.alpha = coef2();
        p.lambda = coef2();
        p.mu = coef2();
        p.delta = coef2();
        p.gamma = odsq::mod_reduce(1 - p.beta - coef2(), n);
        return {p, "a-square"};
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Structure relabeling.
// ---------------------------------------------------------------------------

inline odsq::OrientedDisingquandle conjugate_by(const odsq::OrientedDisingquandle& d,
                                                const std::vector<int>& pi) {
  const int n = d.n();
  auto relabel = [&](const odsq::SquareTable& t) {
    odsq::SquareTable out = t;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out.set(pi[i], pi[j], pi[t.at(i, j)]);
    return out;
  };
  return odsq::make_oriented_disingquandle(relabel(d.star1), relabel(d.star2), relabel(d.r1),
                                           relabel(d.r2));
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
  std::vector<int> pi(n);
  for (int i = 0; i < n; ++i) pi[i] = i;
  std::shuffle(pi.begin(), pi.end(), rng);
  return pi;
}

// ---------------------------------------------------------------------------
// Brute-force reference enumerations (independent of the pruned search).
// ---------------------------------------------------------------------------

// All structures on 2 elements by filtering every raw (s1, s2, r1) table
// triple; R2 forced entrywise.
inline std::vector<odsq::PresentationMatrix> brute_force_structures_n2() {
  std::vector<odsq::PresentationMatrix> out;
  auto decode = [](int code) {
    std::vector<int> cells(4);
    for (int k = 0; k < 4; ++k) cells[k] = (code >> k) & 1;
    return odsq::SquareTable(2, cells);
  };
  for (int c1 = 0; c1 < 16; ++c1)
    for (int c2 = 0; c2 < 16; ++c2)
      for (int cr = 0; cr < 16; ++cr) {
        odsq::SquareTable s1 = decode(c1), s2 = decode(c2), r1 = decode(cr);
        if (!s1.columns_bijective() || !s2.columns_bijective()) continue;
        odsq::SquareTable r2 = odsq::SquareTable::from_fn(
            2, [&](int x, int y) { return r1.at(y, s1.at(x, y)); });
        odsq::OrientedDisingquandle d = odsq::make_oriented_disingquandle(s1, s2, r1, r2);
        if (odsq::validate_oriented_disingquandle(d).passed())
          out.push_back(odsq::to_presentation_matrix(d));
      }
  return out;
}

inline std::vector<odsq::SquareTable> all_quandles_n3() {
  std::vector<odsq::SquareTable> out;
  std::vector<int> cells(9);
  for (int code = 0; code < 19683; ++code) {
    int c = code;
    for (int k = 0; k < 9; ++k) {
      cells[k] = c % 3;
      c /= 3;
    }
    odsq::SquareTable t(3, cells);
    if (odsq::validate_quandle(t).passed()) out.push_back(t);
  }
  return out;
}

// All structures on 3 elements: every quandle pair crossed with every raw R1
// table.
inline std::vector<odsq::PresentationMatrix> brute_force_structures_n3() {
  std::vector<odsq::PresentationMatrix> out;
  std::vector<odsq::SquareTable> quandles = all_quandles_n3();
  std::vector<int> cells(9);
  for (const auto& s1 : quandles)
    for (const auto& s2 : quandles)
      for (int code = 0; code < 19683; ++code) {
        int c = code;
        for (int k = 0; k < 9; ++k) {
          cells[k] = c % 3;
          c /= 3;
        }
        odsq::SquareTable r1(3, cells);
        odsq::SquareTable r2 = odsq::SquareTable::from_fn(
            3, [&](int x, int y) { return r1.at(y, s1.at(x, y)); });
        odsq::OrientedDisingquandle d = odsq::make_oriented_disingquandle(s1, s2, r1, r2);
        if (odsq::validate_oriented_disingquandle(d).passed())
          out.push_back(odsq::to_presentation_matrix(d));
      }
  return out;
}

inline std::vector<std::string> presentation_keys(
    const std::vector<odsq::PresentationMatrix>& ms) {
  std::vector<std::string> keys;
  for (const auto& m : ms) keys.push_back(odsq::write_presentation_text(m));
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace testsupport
