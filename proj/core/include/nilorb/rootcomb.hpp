#pragma once

// Root-system and block combinatorics of a parabolic subalgebra of gl(n).
// All indices are 1-based, matching the usual (i, j) matrix convention.

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nilorb {

/// Positive root e_i - e_j, identified with the matrix position (i, j), i < j.
struct Root {
  int i = 0;
  int j = 0;
  auto operator<=>(const Root&) const = default;
  std::string to_string() const;
};

/// Ordered composition (n_1, ..., n_s) of n giving the diagonal block sizes.
class ParabolicType {
 public:
  /// Throws std::invalid_argument on an empty list or a non-positive size.
  explicit ParabolicType(std::vector<int> block_sizes);
  /// Parses "2,4,2" (spaces allowed).
  static ParabolicType parse(std::string_view text);

  int n() const { return n_; }
  int block_count() const { return static_cast<int>(sizes_.size()); }
  const std::vector<int>& sizes() const { return sizes_; }

  /// 0-based block index of the 1-based position k.
  int block_of(int k) const;
  /// First / last 1-based position of block b (0-based).
  int block_begin(int b) const { return starts_[static_cast<std::size_t>(b)]; }
  int block_end(int b) const { return block_begin(b) + sizes_[static_cast<std::size_t>(b)] - 1; }

  bool same_block(int k, int l) const { return block_of(k) == block_of(l); }
  bool in_nilradical(Root r) const;
  bool is_non_increasing() const;
  /// Block sizes non-increasing, or at most three blocks.
  bool admits_canonical_slice() const { return is_non_increasing() || block_count() <= 3; }

  std::string to_string() const;
  bool operator==(const ParabolicType& other) const { return sizes_ == other.sizes_; }

 private:
  std::vector<int> sizes_;
  std::vector<int> starts_;
  std::vector<int> block_index_;  // position -> block, index 0 unused
  int n_ = 0;
};

/// Positions of the nilradical: {(i, j) : block(i) < block(j)}, row-major order.
std::vector<Root> nilradical_roots(const ParabolicType& type);

/// g1 > g2 when g1 - g2 is a positive root of the block-diagonal part.
bool higher(const ParabolicType& type, Root g1, Root g2);

/// The base S. Roots are kept in construction order: strips of increasing
/// block distance, and inside a strip from the lowest row upward.
class Base {
 public:
  Base(ParabolicType type, std::vector<Root> roots);

  const ParabolicType& type() const { return type_; }
  const std::vector<Root>& roots() const { return roots_; }
  std::size_t size() const { return roots_.size(); }
  bool contains(Root r) const;
  std::vector<Root> sorted_by_row() const;
  /// Base root in the given row / column, if any.
  std::optional<Root> in_row(int row) const;
  std::optional<Root> in_col(int col) const;

 private:
  ParabolicType type_;
  std::vector<Root> roots_;
};

Base compute_base(const ParabolicType& type);

/// q = (xi, xi'), xi = (a, b), xi' = (a', b') with b < a' in one diagonal block.
struct AdmissiblePair {
  Root xi;
  Root xi_prime;

  Root alpha() const { return {xi.j, xi_prime.i}; }
  /// alpha + xi'
  Root phi() const { return {xi.j, xi_prime.j}; }
  /// xi + alpha
  Root psi() const { return {xi.i, xi_prime.i}; }
  bool operator==(const AdmissiblePair&) const = default;
};

/// All admissible pairs, ordered by (position of xi in the base, position of xi').
std::vector<AdmissiblePair> admissible_pairs(const Base& base);
bool is_admissible(const ParabolicType& type, Root xi, Root xi_prime);

enum class MarkedSet { kPhi, kPsi };
std::vector<Root> marked_roots(const std::vector<AdmissiblePair>& pairs, MarkedSet which = MarkedSet::kPhi);

/// Base roots (i, j) strictly inside gamma = (a, b): i > a and j < b. Ascending by row.
std::vector<Root> s_gamma(const Base& base, Root gamma);

struct Dimensions {
  int dim_m = 0;
  int base_size = 0;
  int pair_count = 0;
  int marked_count = 0;
  int predicted_regular_orbit_dim = 0;
  int y_dim = 0;
  /// predicted + y_dim == dim_m; holds whenever |Phi| == |Q|.
  bool consistent = false;
};
Dimensions dims(const ParabolicType& type);

}  // namespace nilorb
