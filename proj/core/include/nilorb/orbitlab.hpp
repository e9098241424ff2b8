#pragma once

// Exact orbit geometry of the unitriangular group N acting on the nilradical
// by conjugation: orbit dimensions via the rank of ad, and reduction of
// U_0 points onto the slice spanned by the base and marked positions.

#include <nilorb/invgen.hpp>
#include <nilorb/matrix.hpp>
#include <nilorb/rootcomb.hpp>

#include <cstdint>
#include <vector>

namespace nilorb {

/// Upper unitriangular matrix.
class GroupElement {
 public:
  static GroupElement identity(int n);
  /// 1 + t E_{k,l}, k < l.
  static GroupElement elementary(int n, int k, int l, const Rational& t);
  /// Throws std::invalid_argument unless m is upper unitriangular.
  static GroupElement from_matrix(RationalMatrix m);

  int size() const { return static_cast<int>(m_.rows()); }
  const RationalMatrix& matrix() const { return m_; }
  const Rational& at(int row, int col) const { return m_(static_cast<std::size_t>(row - 1), static_cast<std::size_t>(col - 1)); }
  GroupElement inverse() const;
  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  bool operator==(const GroupElement&) const = default;

 private:
  explicit GroupElement(RationalMatrix m) : m_(std::move(m)) {}
  RationalMatrix m_;
};

/// g x g^{-1}.
MatrixPoint adjoint(const GroupElement& g, const MatrixPoint& x);
/// Same, asserting that x and the result are supported on the nilradical.
MatrixPoint adjoint(const ParabolicType& type, const GroupElement& g, const MatrixPoint& x);

/// Rank of a -> [a, x] from the upper nilpotent algebra into the nilradical.
int orbit_dim(const ParabolicType& type, const MatrixPoint& x);

struct OrbitExperiment {
  ParabolicType type;
  std::uint64_t seed = 0;
  int trials = 0;
  Dimensions dimensions;
  int max_rank = 0;
  int predicted = 0;
  bool covered = false;   // non-increasing blocks or at most three blocks
  bool exceeds = false;   // sampled maximum above the prediction
  bool pass = false;      // equality on covered types, no excess otherwise
};

OrbitExperiment max_orbit_dim(const ParabolicType& type, int trials, std::uint64_t seed);

struct Reduction {
  GroupElement g;
  MatrixPoint y;
};

/// Conjugates a U_0 point into the slice. Throws OutsideU0Error when a base
/// minor vanishes at A and std::domain_error for unsupported types.
Reduction reduce_to_canonical(const GeneratorSet& gens, const MatrixPoint& a);
Reduction reduce_to_canonical(const ParabolicType& type, const MatrixPoint& a);

struct UniquenessReport {
  Reduction reduction;
  bool conjugation_consistent = false;  // y == g A g^{-1}
  bool in_slice = false;                // support(y) within S u Phi
  bool invariants_preserved = false;
  bool matches_y_coordinates = false;
  bool pass() const {
    return conjugation_consistent && in_slice && invariants_preserved && matches_y_coordinates;
  }
};

UniquenessReport verify_unique_intersection(const GeneratorSet& gens, const MatrixPoint& a);

}  // namespace nilorb
