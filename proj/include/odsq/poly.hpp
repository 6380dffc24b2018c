#pragma once

#include <string>

#include "odsq/table.hpp"

namespace odsq {

// Bivariate quadratic c + cx*x + cy*y + cxx*x^2 + cyy*y^2 + cxy*xy over Z_n.
// Coefficients are kept reduced to [0, n).
struct QuadPoly {
  int n = 1;
  int c = 0, cx = 0, cy = 0, cxx = 0, cyy = 0, cxy = 0;

  static QuadPoly make(int n, long long c, long long cx, long long cy, long long cxx,
                       long long cyy, long long cxy) {
    return {n,
            mod_reduce(c, n),
            mod_reduce(cx, n),
            mod_reduce(cy, n),
            mod_reduce(cxx, n),
            mod_reduce(cyy, n),
            mod_reduce(cxy, n)};
  }

  int eval(int x, int y) const {
    long long v = c + (long long)cx * x + (long long)cy * y + (long long)cxx * x * x +
                  (long long)cyy * y * y + (long long)cxy * x * y;
    return mod_reduce(v, n);
  }

  MapTable tabulate() const {
    return MapTable::from_fn(n, [this](int x, int y) { return eval(x, y); });
  }

  // Substitution p(y, a*x + (1-a)*y): the crossing map forced on the other
  // outgoing arc when the quandle operation is x*y = ax + (1-a)y.
  QuadPoly substitute_swap(int a) const {
    long long one_a = mod_reduce(1 - (long long)a, n);
    // p(u, v) with u = y, v = a x + (1-a) y
    long long nc = c;
    long long ncx = (long long)cy * a;
    long long ncy = cx + (long long)cy * one_a;
    long long ncxx = (long long)cyy * a % n * a;
    long long ncyy = cxx + (long long)cyy * one_a % n * one_a + (long long)cxy * one_a;
    long long ncxy = 2LL * cyy * a % n * one_a + (long long)cxy * a;
    return make(n, nc, ncx, ncy, ncxx, ncyy, ncxy);
  }

  std::string str() const {
    std::string out;
    auto term = [&](int coef, const char* sym) {
      if (coef == 0) return;
      if (!out.empty()) out += " + ";
      if (coef != 1 || sym[0] == '\0')
        out += std::to_string(coef);
      out += sym;
    };
    term(c, "");
    term(cx, "x");
    term(cy, "y");
    term(cxx, "x^2");
    term(cyy, "y^2");
    term(cxy, "xy");
    if (out.empty()) out = "0";
    return out;
  }

  friend bool operator==(const QuadPoly&, const QuadPoly&) = default;
};

}  // namespace odsq
