#include <nilorb/matrix.hpp>

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

namespace nilorb {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

std::size_t rank(const RationalMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
  }

  // Bareiss: after step k every entry below the pivot row is an exact k x k minor.
  Integer prev = 1;
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t pivot = rk;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rk]);
    for (std::size_t r = rk + 1; r < rows; ++r) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[r][j] = a[r][j] * a[rk][c] - a[r][c] * a[rk][j];
        mpz_divexact(a[r][j].get_mpz_t(), a[r][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][c] = 0;
    }
    prev = a[rk][c];
    ++rk;
  }
  return rk;
}

// ---------------------------------------------------------------------------

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("matrix product: size mismatch");
  const int n = a.size();
  PolyMatrix out(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      PolynomialBuilder acc;
      for (int k = 1; k <= n; ++k) {
        const auto& x = a.at(i, k);
        const auto& y = b.at(k, j);
        if (!x.is_zero() && !y.is_zero()) acc.add(x * y);
      }
      out.at(i, j) = std::move(acc).build();
    }
  return out;
}

PolyMatrix PolyMatrix::pow(unsigned k) const {
  if (k == 0) {
    PolyMatrix id(n_);
    for (int i = 1; i <= n_; ++i) id.at(i, i) = 1;
    return id;
  }
  PolyMatrix out = *this;
  for (unsigned e = 1; e < k; ++e) out = out * *this;
  return out;
}

Polynomial PolyMatrix::minor(std::span<const int> rows, std::span<const int> cols) const {
  if (rows.size() != cols.size())
    throw std::invalid_argument("minor: ragged index sets (" + std::to_string(rows.size()) +
                                " rows, " + std::to_string(cols.size()) + " cols)");
  const std::size_t k = rows.size();
  if (k == 0) return 1;
  if (k > 20) throw std::invalid_argument("minor: too large for Laplace expansion");
  for (std::size_t i = 0; i < k; ++i) {
    if (rows[i] < 1 || rows[i] > n_ || cols[i] < 1 || cols[i] > n_)
      throw std::invalid_argument("minor: index out of range");
    if (i > 0 && (rows[i] <= rows[i - 1] || cols[i] <= cols[i - 1]))
      throw std::invalid_argument("minor: indices must be strictly ascending");
  }

  // det of rows[depth..k) against the column subset `mask` (popcount == k - depth),
  // expanding along the first remaining row.
  std::unordered_map<std::uint32_t, Polynomial> memo;
  auto rec = [&](auto&& self, std::size_t depth, std::uint32_t mask) -> Polynomial {
    if (depth == k) return 1;
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    PolynomialBuilder acc;
    int sign = 1;
    for (std::size_t c = 0; c < k; ++c) {
      if ((mask & (1U << c)) == 0) continue;
      const Polynomial& e = at(rows[depth], cols[c]);
      if (!e.is_zero()) {
        Polynomial sub = self(self, depth + 1, mask & ~(1U << c));
        if (!sub.is_zero()) acc.add(e * sub, {}, sign);
      }
      sign = -sign;
    }
    Polynomial res = std::move(acc).build();
    memo.emplace(mask, res);
    return res;
  };
  return rec(rec, 0, (k == 32 ? 0U : (1U << k)) - 1U);
}

}  // namespace nilorb
