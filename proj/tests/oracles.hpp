#pragma once

// Brute-force oracles, written independently of the library algorithms
// they are used to judge. Everything here favors obviousness over speed.

#include <algorithm>
#include <numeric>
#include <vector>

#include "sigma/flag_complex.hpp"
#include "sigma/graph.hpp"
#include "sigma/matrix.hpp"
#include "sigma/numeric.hpp"
#include "sigma/polyhedron.hpp"

namespace oracles {

// All k-subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    out.push_back(pick);
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

// Dimension-d simplices of the flag complex on `present`, by definition:
// every (d+1)-subset of present vertices that is pairwise adjacent.
inline std::vector<sigma::Simplex> brute_force_cliques(const sigma::Graph& g,
                                                       const sigma::Bitset& present,
                                                       int d) {
  std::vector<sigma::Simplex> out;
  if (d < 0) {
    if (d == -1) out.push_back(sigma::Simplex{});
    return out;
  }
  for (const auto& pick : subsets_of_size(g.vertex_count(), d + 1)) {
    bool ok = true;
    for (const int v : pick)
      if (!present.test(v)) ok = false;
    for (std::size_t i = 0; ok && i < pick.size(); ++i)
      for (std::size_t j = i + 1; ok && j < pick.size(); ++j)
        if (!g.adjacent(pick[i], pick[j])) ok = false;
    if (ok) out.push_back(sigma::Simplex{pick});
  }
  return out;
}

// Rank over the rationals by Gaussian elimination.
inline int rational_rank(const sigma::IntegerMatrix& m) {
  std::vector<std::vector<sigma::Rational>> a(
      m.rows(), std::vector<sigma::Rational>(m.cols()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) a[r][c] = sigma::Rational(m.at(r, c));
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows(); ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int r = 0; r < m.rows(); ++r) {
      if (r == rank || a[r][col] == 0) continue;
      const sigma::Rational f = a[r][col] / a[rank][col];
      for (int c = col; c < m.cols(); ++c) a[r][c] -= f * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

// Determinant of a square integer matrix by cofactor expansion over the
// first row. Exponential and obviously correct; fine for size <= 8.
inline sigma::Int cofactor_det(const std::vector<std::vector<sigma::Int>>& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  sigma::Int det = 0;
  for (int c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    std::vector<std::vector<sigma::Int>> minor;
    minor.reserve(n - 1);
    for (int r = 1; r < n; ++r) {
      std::vector<sigma::Int> row;
      row.reserve(n - 1);
      for (int cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(a[r][cc]);
      minor.push_back(std::move(row));
    }
    const sigma::Int sub = cofactor_det(minor);
    det += (c % 2 == 0 ? sub : -sub) * a[0][c];
  }
  return det;
}

// gcd of all k-by-k minors, 0 when all vanish.
inline sigma::Int minor_gcd(const sigma::IntegerMatrix& m, int k) {
  sigma::Int g = 0;
  for (const auto& rows : subsets_of_size(m.rows(), k)) {
    for (const auto& cols : subsets_of_size(m.cols(), k)) {
      std::vector<std::vector<sigma::Int>> sub(k, std::vector<sigma::Int>(k));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub[i][j] = m.at(rows[i], cols[j]);
      g = boost::multiprecision::gcd(g, cofactor_det(sub));
      if (g == 1) return 1;
    }
  }
  return g < 0 ? sigma::Int(-g) : g;
}

// Inclusion-minimal bad sets by definition: enumerate every nonempty
// proper subset, keep the bad ones none of whose proper subsets are bad.
// No pruning, no monotonicity assumption.
inline std::vector<sigma::BadSet> exhaustive_minimal_bad_sets(
    const sigma::Graph& g) {
  const int n = g.vertex_count();
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<char> bad(full + 1, 0);
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    sigma::Bitset d(n);
    for (int v = 0; v < n; ++v)
      if (mask & (std::uint32_t{1} << v)) d.set(v);
    bad[mask] = sigma::is_bad_set(g, d);
  }
  std::vector<std::uint32_t> minimal;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    if (!bad[mask]) continue;
    bool has_bad_subset = false;
    for (std::uint32_t sub = (mask - 1) & mask; sub != 0; sub = (sub - 1) & mask)
      if (bad[sub]) {
        has_bad_subset = true;
        break;
      }
    if (!has_bad_subset) minimal.push_back(mask);
  }
  std::vector<sigma::BadSet> out;
  for (const std::uint32_t mask : minimal) {
    sigma::BadSet d;
    for (int v = 0; v < n; ++v)
      if (mask & (std::uint32_t{1} << v)) d.vertices.push_back(v);
    out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.vertices.size() != y.vertices.size())
      return x.vertices.size() < y.vertices.size();
    return x.vertices < y.vertices;
  });
  return out;
}

// Bieri-Stallings membership on the m-part graph K_{2,...,2}, derived
// independently of the sweep: the extension at critical t kills part i
// entirely iff c(x_i) = c(y_i) = -t, and membership at level n needs every
// extension to keep at least n+1 parts alive.
inline bool gm_oracle(int m, const std::vector<sigma::Rational>& weights, int n) {
  std::vector<sigma::Rational> criticals;
  for (const auto& w : weights) criticals.push_back(-w);
  int worst_dead = 0;
  for (const auto& t : criticals) {
    int dead_parts = 0;
    for (int part = 0; part < m; ++part)
      if (weights[2 * part] == -t && weights[2 * part + 1] == -t) ++dead_parts;
    worst_dead = std::max(worst_dead, dead_parts);
  }
  return worst_dead <= m - n - 1;
}

}  // namespace oracles
