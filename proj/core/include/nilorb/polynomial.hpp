#pragma once

#include <nilorb/rational.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nilorb {

/// A polynomial variable: either the matrix entry x_{ij} or the deformation
/// parameter t. Entries compare by (row, col); t sorts after every entry.
class Var {
 public:
  static constexpr Var entry(int row, int col) {
    return Var(static_cast<std::uint16_t>(row * kStride + col));
  }
  static constexpr Var param() { return Var(kParamCode); }

  constexpr bool is_param() const { return code_ == kParamCode; }
  constexpr int row() const { return code_ / kStride; }
  constexpr int col() const { return code_ % kStride; }
  constexpr std::uint16_t code() const { return code_; }

  constexpr auto operator<=>(const Var&) const = default;

  std::string name() const;
  std::string latex() const;

  static constexpr int kMaxIndex = 127;

 private:
  static constexpr int kStride = 128;
  static constexpr std::uint16_t kParamCode = 0xFFFF;
  constexpr explicit Var(std::uint16_t code) : code_(code) {}
  std::uint16_t code_;
};

/// Sparse power product, stored as (variable, exponent) pairs sorted by variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(Var v, unsigned exponent = 1);

  unsigned degree() const;
  unsigned exponent(Var v) const;
  bool is_one() const { return factors_.empty(); }
  const std::vector<std::pair<Var, unsigned>>& factors() const { return factors_; }

  Monomial operator*(const Monomial& other) const;
  /// Drops variable v entirely.
  Monomial without(Var v) const;

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<std::pair<Var, unsigned>> factors_;
};

/// Graded lexicographic comparison; x11 > x12 > ... > t among degree-one terms.
std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b);

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grlex_compare(a, b) == std::strong_ordering::greater;
  }
};

/// Exact sparse multivariate polynomial over Q. Terms are kept in descending
/// graded-lex order with no zero coefficients, so equality is structural.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  static Polynomial variable(Var v);
  static Polynomial x(int row, int col) { return variable(Var::entry(row, col)); }
  static Polynomial t() { return variable(Var::param()); }
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  unsigned total_degree() const;
  unsigned degree_in(Var v) const;
  std::set<Var> variables() const;
  /// Constant term, or zero.
  Rational constant_term() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial pow(unsigned e) const;

  bool operator==(const Polynomial& other) const;

  /// Replaces each assigned variable by its image; unassigned variables are kept.
  Polynomial substitute(const std::map<Var, Polynomial>& assignment) const;
  /// Keeps only the terms whose variables all satisfy keep.
  Polynomial restrict_to(const std::function<bool(Var)>& keep) const;
  Rational evaluate(const std::function<Rational(Var)>& value) const;
  Polynomial derivative(Var v) const;

  /// Canonical text, e.g. "x13*x24 - x14*x23" or "-3/2*x23^2*t + 1".
  std::string to_string() const;
  /// Same layout with custom variable names.
  std::string to_string(const std::function<std::string(Var)>& namer) const;
  std::string to_latex() const;

 private:
  std::vector<Term> terms_;
};

/// Parses the canonical text form (also accepts extra spaces and x{i,j} names).
/// Throws std::invalid_argument on malformed input.
Polynomial parse_polynomial(std::string_view text);

/// Accumulates terms in a sorted map and normalizes once at the end.
class PolynomialBuilder {
 public:
  void add(const Monomial& m, const Rational& c);
  void add(const Polynomial& p, const Monomial& shift = {}, const Rational& scale = 1);
  Polynomial build() &&;

 private:
  std::map<Monomial, Rational, GrlexGreater> acc_;
};

}  // namespace nilorb
