#pragma once

// Invariant generators of the unitriangular group acting on the nilradical:
// corner minors of the formal matrix for base roots, and the pair
// polynomials built from products of such minors.

#include <nilorb/matrix.hpp>
#include <nilorb/polynomial.hpp>
#include <nilorb/rootcomb.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilorb {

/// n x n exact rational matrix used as a point of the nilradical (1-based access).
class MatrixPoint {
 public:
  explicit MatrixPoint(int n = 0) : n_(n), entries_(static_cast<std::size_t>(n * n)) {}
  int size() const { return n_; }
  Rational& at(int row, int col) { return entries_[index(row, col)]; }
  const Rational& at(int row, int col) const { return entries_[index(row, col)]; }
  /// Value of a variable at this point; the parameter t has no value here.
  Rational value(Var v) const;
  /// True when every nonzero entry is in the given position set.
  bool supported_on(const std::vector<Root>& positions) const;
  bool operator==(const MatrixPoint&) const = default;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>((row - 1) * n_ + (col - 1));
  }
  int n_;
  std::vector<Rational> entries_;
};

/// A point leaves U_0: some base minor vanishes.
class OutsideU0Error : public std::domain_error {
 public:
  explicit OutsideU0Error(Root xi)
      : std::domain_error("point outside U0: minor M" + xi.to_string() + " vanishes"), root_(xi) {}
  Root root() const { return root_; }

 private:
  Root root_;
};

/// Formal matrix with x_ij at every nilradical position and zero elsewhere.
PolyMatrix formal_matrix(const ParabolicType& type);

/// M_gamma: minor on rows ord{a, rows of S_gamma} and columns ord{cols of S_gamma, b}.
/// Throws std::invalid_argument when gamma is not a nilradical root.
Polynomial minor_poly(const Base& base, Root gamma);

/// L_q = sum over c = b..a' of M_(a,c) * M_(c,b'). Throws std::invalid_argument
/// when q is not admissible.
Polynomial l_poly(const Base& base, const AdmissiblePair& q);

/// Minor of the k-th power of the formal matrix.
Polynomial power_minor(const ParabolicType& type, unsigned k, const std::vector<int>& rows,
                       const std::vector<int>& cols);

/// Restriction to the slice spanned by the base and marked positions: every
/// other variable is set to zero.
Polynomial restrict_to_slice(const Base& base, const std::vector<Root>& marked, const Polynomial& f);

struct NamedPolynomial {
  std::string name;
  Polynomial poly;
};

struct GeneratorSet {
  ParabolicType type;
  Base base;
  std::vector<AdmissiblePair> pairs;
  std::vector<Polynomial> base_minors;  // aligned with base.roots()
  std::vector<Polynomial> pair_polys;   // aligned with pairs
  std::vector<NamedPolynomial> extras;  // D for (2,4,2)

  std::vector<Root> phi() const { return marked_roots(pairs); }
  /// Base minors followed by pair polynomials.
  std::vector<Polynomial> primary() const;
  std::string base_label(std::size_t k) const;
  std::string pair_label(std::size_t k) const;
};

/// Builds every base minor and pair polynomial; adds D when the type is (2,4,2).
GeneratorSet build_generators(const ParabolicType& type);

/// The extra (2,4,2) invariant: minor on rows {1,2}, columns {7,8} of X^2.
Polynomial case242_d();

struct InvariantValues {
  std::vector<Rational> base;   // aligned with GeneratorSet::base_minors
  std::vector<Rational> pairs;  // aligned with GeneratorSet::pair_polys
  bool operator==(const InvariantValues&) const = default;
};

InvariantValues evaluate_invariants(const GeneratorSet& gens, const MatrixPoint& x);

/// Image of a generator on the slice written as sign * x_fresh * (product of base variables).
struct SliceMonomial {
  bool single_monomial = false;
  Rational coefficient;
  std::optional<Root> fresh;     // the variable solved for from this generator
  std::vector<Root> cofactors;   // remaining base variables (with multiplicity)
};

/// Analyses the restriction of a generator whose fresh variable should be `fresh`.
SliceMonomial slice_monomial(const GeneratorSet& gens, const Polynomial& f, Root fresh);

/// The unique slice point with the given invariant values. Throws
/// OutsideU0Error when a base value is zero, std::domain_error when the
/// type is outside the covered family or the slice images are not monomial.
MatrixPoint y_coordinates(const GeneratorSet& gens, const InvariantValues& values);

}  // namespace nilorb
