#pragma once

// Independent reference implementations used only by the tests. They are
// deliberately naive so that they share no code path with the library.

#include <nilorb/matrix.hpp>
#include <nilorb/polynomial.hpp>
#include <nilorb/rootcomb.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using nilorb::Polynomial;
using nilorb::Rational;

// Leibniz formula over all permutations.
inline Polynomial leibniz_det(const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial total;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    Polynomial term = inversions % 2 == 0 ? 1 : -1;
    for (std::size_t r = 0; r < n && !term.is_zero(); ++r) term *= m[r][perm[r]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Plain Gauss-Jordan over Q with full pivot search.
inline int gauss_rank(std::vector<std::vector<Rational>> m) {
  int rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
    std::size_t p = static_cast<std::size_t>(rank);
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[static_cast<std::size_t>(rank)]);
    auto& piv = m[static_cast<std::size_t>(rank)];
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == static_cast<std::size_t>(rank) || m[r][c] == 0) continue;
      const Rational f = m[r][c] / piv[c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * piv[k];
    }
    ++rank;
  }
  return rank;
}

inline std::vector<std::vector<Rational>> to_rows(const nilorb::RationalMatrix& m) {
  std::vector<std::vector<Rational>> out(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

// Rank of the weight vectors e_i - e_j: read the roots as edges of a graph on
// {1..n}; the rank is the size of a spanning forest.
inline int weight_rank_by_components(const std::vector<nilorb::Root>& roots, int n) {
  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
    return v;
  };
  int rank = 0;
  for (const auto& r : roots) {
    int a = find(r.i), b = find(r.j);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      ++rank;
    }
  }
  return rank;
}

// Polynomial with a few random terms in x11..x33 and t, coefficients in [-5, 5].
inline Polynomial random_poly(std::mt19937_64& rng, int terms = 4) {
  std::uniform_int_distribution<int> coef(-5, 5), idx(1, 3), expo(0, 2), pick(0, 3);
  Polynomial p;
  for (int k = 0; k < terms; ++k) {
    Polynomial term = coef(rng);
    for (int f = 0; f < pick(rng); ++f) term *= Polynomial::x(idx(rng), idx(rng)).pow(static_cast<unsigned>(expo(rng)));
    if (pick(rng) == 0) term *= Polynomial::t();
    p += term;
  }
  return p;
}

// Closed form for non-increasing types: (m_i - j + 1, m_i + j) with
// m_i the end of block i, for j = 1..n_{i+1}.
inline std::vector<nilorb::Root> closed_form_base(const std::vector<int>& sizes) {
  std::vector<nilorb::Root> out;
  int end = 0;
  for (std::size_t b = 0; b + 1 < sizes.size(); ++b) {
    end += sizes[b];
    for (int j = 1; j <= sizes[b + 1]; ++j) out.push_back({end - j + 1, end + j});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle

namespace oracle {

// Every composition of n, in lexicographic order of the size vector.
inline std::vector<std::vector<int>> compositions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = 1; k <= left; ++k) {
      cur.push_back(k);
      rec(left - k);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

inline std::vector<nilorb::Root> sorted(std::vector<nilorb::Root> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace oracle
