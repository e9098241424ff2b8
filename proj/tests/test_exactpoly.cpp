#include "oracles.hpp"

#include <nilorb/matrix.hpp>
#include <nilorb/polynomial.hpp>
#include <nilorb/rational.hpp>

#include <doctest.h>

#include <random>

using namespace nilorb;
using P = Polynomial;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("variables order by position with t last") {
  CHECK(Var::entry(1, 2) < Var::entry(1, 3));
  CHECK(Var::entry(1, 9) < Var::entry(2, 1));
  CHECK(Var::entry(127, 127) < Var::param());
  CHECK(Var::entry(2, 3).name() == "x23");
  CHECK(Var::entry(2, 11).name() == "x{2,11}");
  CHECK(Var::param().name() == "t");
}

TEST_CASE("canonical form is grlex with no zero terms") {
  P f = P::x(2, 4) + P::x(1, 3) * P::x(2, 4) - P::x(1, 4) * P::x(2, 3) + 1;
  CHECK(f.to_string() == "x13*x24 - x14*x23 + x24 + 1");
  CHECK((f - f).is_zero());
  CHECK((f - f).to_string() == "0");
  P g = Rational(-3, 2) * P::x(2, 3).pow(2) * P::t();
  CHECK(g.to_string() == "-3/2*x23^2*t");
  CHECK(P::x(1, 2).to_latex() == "x_{12}");
}

TEST_CASE("parse_polynomial inverts to_string") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    P f = oracle::random_poly(rng, 5);
    CHECK(parse_polynomial(f.to_string()) == f);
  }
  CHECK(parse_polynomial(" x{2,11} * x13 -  2/3 ") == P::x(2, 11) * P::x(1, 3) - Rational(2, 3));
  CHECK_THROWS_AS(parse_polynomial("x13 +"), std::invalid_argument);
  CHECK_THROWS_AS(parse_polynomial("y12"), std::invalid_argument);
  CHECK_THROWS_AS(parse_polynomial("x1"), std::invalid_argument);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    P a = oracle::random_poly(rng), b = oracle::random_poly(rng), c = oracle::random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * 1 == a);
    CHECK((a * 0).is_zero());
    CHECK(a - a == P());
    CHECK(a.pow(3) == a * a * a);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(8);
  auto value = [](Var v) { return v.is_param() ? Rational(1, 3) : Rational(v.row() * 2 - v.col(), 5); };
  for (int k = 0; k < 50; ++k) {
    P a = oracle::random_poly(rng), b = oracle::random_poly(rng);
    CHECK((a * b).evaluate(value) == a.evaluate(value) * b.evaluate(value));
    CHECK((a - b).evaluate(value) == a.evaluate(value) - b.evaluate(value));
  }
}

TEST_CASE("substitute") {
  P f = P::x(1, 3) * P::x(2, 4);
  CHECK(f.substitute({{Var::entry(1, 3), P()}}).is_zero());
  CHECK(P::x(2, 3).substitute({{Var::entry(2, 3), P::x(2, 3)}}) == P::x(2, 3));
  P g = P::x(2, 4).substitute({{Var::entry(2, 4), P::x(2, 4) + P::t() * P::x(2, 3)}});
  CHECK(g == P::x(2, 4) + P::t() * P::x(2, 3));
  // Simultaneous, not sequential.
  P swap = (P::x(1, 2) - P::x(2, 1)).substitute({{Var::entry(1, 2), P::x(2, 1)}, {Var::entry(2, 1), P::x(1, 2)}});
  CHECK(swap == P::x(2, 1) - P::x(1, 2));
  CHECK((P::x(1, 2).pow(3) + 2).substitute({{Var::entry(1, 2), P::x(1, 1) + 1}}) == (P::x(1, 1) + 1).pow(3) + 2);
}

TEST_CASE("derivative, degree and restriction") {
  P f = P::x(1, 2).pow(3) * P::x(2, 3) + 4 * P::x(2, 3) + 7;
  CHECK(f.derivative(Var::entry(1, 2)) == 3 * P::x(1, 2).pow(2) * P::x(2, 3));
  CHECK(f.derivative(Var::entry(2, 3)) == P::x(1, 2).pow(3) + 4);
  CHECK(f.derivative(Var::entry(3, 4)).is_zero());
  CHECK(f.total_degree() == 4);
  CHECK(f.degree_in(Var::entry(1, 2)) == 3);
  CHECK(f.constant_term() == 7);
  CHECK(f.restrict_to([](Var v) { return v == Var::entry(2, 3); }) == 4 * P::x(2, 3) + 7);
}

TEST_CASE("rank: examples") {
  RationalMatrix zero(3, 4);
  CHECK(rank(zero) == 0);
  CHECK(rank(RationalMatrix::identity(5)) == 5);
  // Weights of the four pair roots of (2,4,2): e3-e6, e3-e5, e4-e6, e4-e5.
  RationalMatrix w(4, 8);
  const int pairs[4][2] = {{3, 6}, {3, 5}, {4, 6}, {4, 5}};
  for (std::size_t r = 0; r < 4; ++r) {
    w(r, static_cast<std::size_t>(pairs[r][0] - 1)) = 1;
    w(r, static_cast<std::size_t>(pairs[r][1] - 1)) = -1;
  }
  CHECK(rank(w) == 3);
  CHECK(RationalMatrix(0, 0).rows() == 0);
  CHECK(rank(RationalMatrix(0, 3)) == 0);
}

TEST_CASE("rank agrees with transpose and with a Gauss-Jordan oracle") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> dim(1, 7), val(-3, 3), den(1, 4), sparse(0, 2);
  for (int k = 0; k < 300; ++k) {
    RationalMatrix m(static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (sparse(rng) != 0) m(r, c) = Rational(val(rng)) / den(rng);
    // Force some dependent rows.
    if (m.rows() >= 3)
      for (std::size_t c = 0; c < m.cols(); ++c) m(2, c) = m(0, c) * Rational(2, 3) - m(1, c);
    const auto r = rank(m);
    CHECK(r == rank(m.transpose()));
    CHECK(static_cast<int>(r) == oracle::gauss_rank(oracle::to_rows(m)));
  }
}

TEST_CASE("matrix products") {
  RationalMatrix a(2, 3), b(3, 2);
  int v = 1;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 3; ++c) a(r, c) = v++;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 2; ++c) b(r, c) = v++;
  RationalMatrix ab = a * b;
  CHECK(ab(0, 0) == 1 * 7 + 2 * 9 + 3 * 11);
  CHECK(ab(1, 1) == 4 * 8 + 5 * 10 + 6 * 12);
  CHECK(a * RationalMatrix::identity(3) == a);
  CHECK_THROWS(a * a);
}

TEST_CASE("minor agrees with the Leibniz oracle on symbolic matrices") {
  const int n = 6;
  PolyMatrix m(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if ((i * 7 + j * 3) % 5 != 0) m.at(i, j) = P::x(i, j) + (i == j ? P(1) : P());
  std::mt19937_64 rng(17);
  for (int size = 1; size <= 4; ++size) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<int> all = {1, 2, 3, 4, 5, 6};
      std::shuffle(all.begin(), all.end(), rng);
      std::vector<int> rows(all.begin(), all.begin() + size);
      std::shuffle(all.begin(), all.end(), rng);
      std::vector<int> cols(all.begin(), all.begin() + size);
      std::sort(rows.begin(), rows.end());
      std::sort(cols.begin(), cols.end());
      std::vector<std::vector<P>> sub(static_cast<std::size_t>(size), std::vector<P>(static_cast<std::size_t>(size)));
      for (int r = 0; r < size; ++r)
        for (int c = 0; c < size; ++c)
          sub[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
              m.at(rows[static_cast<std::size_t>(r)], cols[static_cast<std::size_t>(c)]);
      CHECK(m.minor(rows, cols) == oracle::leibniz_det(sub));
    }
  }
}

TEST_CASE("minor: examples and errors") {
  PolyMatrix x(8);
  for (int i = 1; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j) x.at(i, j) = P::x(i, j);
  const std::vector<int> r12 = {1, 2}, c34 = {3, 4}, r2 = {2}, c3 = {3}, c21 = {2, 1}, r123 = {1, 2, 3};
  CHECK(x.minor(r12, c34) == P::x(1, 3) * P::x(2, 4) - P::x(1, 4) * P::x(2, 3));
  CHECK(x.minor(r2, c3) == P::x(2, 3));
  CHECK(x.minor(r12, r12).is_zero());  // strictly upper triangular
  CHECK_THROWS_AS(x.minor(r12, c21), std::invalid_argument);
  CHECK_THROWS_AS(x.minor(r123, c34), std::invalid_argument);
  const std::vector<int> bad = {9};
  CHECK_THROWS_AS(x.minor(bad, c3), std::invalid_argument);
}

TEST_CASE("polynomial matrix power") {
  PolyMatrix x(3);
  x.at(1, 2) = P::x(1, 2);
  x.at(2, 3) = P::x(2, 3);
  x.at(1, 3) = P::x(1, 3);
  PolyMatrix sq = x.pow(2);
  CHECK(sq.at(1, 3) == P::x(1, 2) * P::x(2, 3));
  CHECK(sq.at(1, 2).is_zero());
  CHECK(x.pow(3).at(1, 3).is_zero());
  CHECK(x.pow(1).at(1, 3) == P::x(1, 3));
  CHECK(x.pow(0).at(2, 2) == P(1));
}
