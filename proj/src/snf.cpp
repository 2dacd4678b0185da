#include "sigma/snf.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace sigma {

namespace {

using boost::multiprecision::abs;

struct Work {
  int rows, cols;
  std::vector<Int> a;

  Int& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }

  void swap_rows(int r1, int r2) {
    if (r1 == r2) return;
    for (int c = 0; c < cols; ++c) std::swap(at(r1, c), at(r2, c));
  }
  void swap_cols(int c1, int c2) {
    if (c1 == c2) return;
    for (int r = 0; r < rows; ++r) std::swap(at(r, c1), at(r, c2));
  }
};

// g = gcd(a, b) > 0 together with s, u such that s*a + u*b = g.
// Requires (a, b) != (0, 0).
struct Bezout {
  Int g, s, u;
};

Bezout extended_gcd(Int a, Int b) {
  Int old_r = std::move(a), r = std::move(b);
  Int old_s = 1, s = 0;
  Int old_u = 0, u = 1;
  while (r != 0) {
    const Int q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
    old_u -= q * u;
    std::swap(old_u, u);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_u = -old_u;
  }
  return {std::move(old_r), std::move(old_s), std::move(old_u)};
}

}  // namespace

SnfResult smith_normal_form(const IntegerMatrix& m) {
  Work w{m.rows(), m.cols(), m.entries()};
  std::vector<Int> factors;
  const int bound = std::min(w.rows, w.cols);

  for (int t = 0; t < bound; ++t) {
    // Minimal-absolute-value pivot in the working submatrix keeps the
    // exact quotients (and hence the intermediate entries) small.
    int pr = -1, pc = -1;
    for (int r = t; r < w.rows; ++r)
      for (int c = t; c < w.cols; ++c)
        if (w.at(r, c) != 0 &&
            (pr < 0 || abs(w.at(r, c)) < abs(w.at(pr, pc)))) {
          pr = r;
          pc = c;
        }
    if (pr < 0) break;
    w.swap_rows(t, pr);
    w.swap_cols(t, pc);

    for (;;) {
      // Clear the pivot column and row. An entry the pivot divides is
      // cleared by an exact quotient, which touches nothing else in the
      // pivot line; any other entry is cleared by a unimodular Bezout
      // transform that replaces the pivot with gcd(pivot, entry), a
      // proper divisor. Plain remainder-swapping would also terminate
      // but lets the off-pivot entries grow doubly exponentially; the
      // gcd step bounds the number of non-exact rounds by the length of
      // the pivot's divisor chain. Clearing the row can re-dirty the
      // column (and vice versa) only through a Bezout step, so we loop
      // until a full round needs none.
      bool transformed = false;
      for (int r = t + 1; r < w.rows; ++r) {
        const Int e = w.at(r, t);
        if (e == 0) continue;
        const Int p = w.at(t, t);
        if (e % p == 0) {
          const Int q = e / p;
          for (int c = t; c < w.cols; ++c) w.at(r, c) -= q * w.at(t, c);
        } else {
          const Bezout bz = extended_gcd(p, e);
          const Int alpha = p / bz.g, beta = e / bz.g;
          for (int c = t; c < w.cols; ++c) {
            const Int x = w.at(t, c), y = w.at(r, c);
            w.at(t, c) = bz.s * x + bz.u * y;
            w.at(r, c) = alpha * y - beta * x;
          }
          transformed = true;
        }
      }
      for (int c = t + 1; c < w.cols; ++c) {
        const Int e = w.at(t, c);
        if (e == 0) continue;
        const Int p = w.at(t, t);
        if (e % p == 0) {
          const Int q = e / p;
          for (int r = t; r < w.rows; ++r) w.at(r, c) -= q * w.at(r, t);
        } else {
          const Bezout bz = extended_gcd(p, e);
          const Int alpha = p / bz.g, beta = e / bz.g;
          for (int r = t; r < w.rows; ++r) {
            const Int x = w.at(r, t), y = w.at(r, c);
            w.at(r, t) = bz.s * x + bz.u * y;
            w.at(r, c) = alpha * y - beta * x;
          }
          transformed = true;
        }
      }
      if (transformed) continue;

      // Pivot line is clear; force the pivot to divide the rest of the
      // submatrix before moving on, so the diagonal forms a chain. Each
      // fix feeds a non-divisible entry into the pivot row, where the
      // next round's Bezout step shrinks the pivot to a proper divisor,
      // so only finitely many fixes can happen.
      bool fixed = false;
      for (int r = t + 1; r < w.rows && !fixed; ++r)
        for (int c = t + 1; c < w.cols && !fixed; ++c)
          if (w.at(r, c) % w.at(t, t) != 0) {
            for (int cc = t; cc < w.cols; ++cc) w.at(t, cc) += w.at(r, cc);
            fixed = true;
          }
      if (!fixed) break;
    }

    if (w.at(t, t) < 0) w.at(t, t) = -w.at(t, t);
    factors.push_back(w.at(t, t));
  }

  for (std::size_t i = 1; i < factors.size(); ++i)
    assert(factors[i] % factors[i - 1] == 0);
  return SnfResult{std::move(factors)};
}

}  // namespace sigma
