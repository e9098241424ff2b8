#pragma once

// Verification engines: symbolic invariance under the one-parameter
// subgroups 1 + t E_{k,k+1}, algebraic independence through exact Jacobian
// rank, weight-lattice coranks, and the (2,4,2) case study.

#include <nilorb/invgen.hpp>
#include <nilorb/polynomial.hpp>
#include <nilorb/rootcomb.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace nilorb {

/// Substitutes x_ij by entry (i, j) of (1 - t E_{k,k+1}) X (1 + t E_{k,k+1}).
/// Throws std::out_of_range unless 1 <= k < n.
Polynomial one_param_transform(const ParabolicType& type, int k, const Polynomial& f);

/// Per-k invariance flags, index k - 1.
std::vector<bool> invariance_by_subgroup(const ParabolicType& type, const Polynomial& f);
bool is_n_invariant(const ParabolicType& type, const Polynomial& f);

struct IndependenceResult {
  int rank = 0;
  int attempts = 0;
  std::uint64_t seed = 0;
};

/// Exact Jacobian rank at seeded random integer points in [-9, 9], keeping the
/// best of up to `max_attempts` points. Full rank certifies independence; a
/// deficient rank means dependent, or unlucky with Schwartz-Zippel probability.
IndependenceResult independence_rank(const ParabolicType& type, const std::vector<Polynomial>& polys,
                                     std::uint64_t seed, int max_attempts = 4);

/// |roots| - rank of the weight vectors e_i - e_j.
int roots_corank(const std::vector<Root>& roots, int n);
/// Corank of the weights alpha_q.
int weight_corank(const std::vector<AdmissiblePair>& pairs, int n);

struct GeneratorCheck {
  std::string label;
  std::string kind;  // "base", "pair" or "extra"
  std::vector<bool> invariant_by_k;
  bool invariant = false;
  /// Restriction to the slice is the expected single monomial (base and pair generators).
  bool slice_form = true;
  std::string slice_image;
};

struct VerificationReport {
  ParabolicType type;
  std::uint64_t seed = 0;
  Dimensions dimensions;
  std::vector<GeneratorCheck> generators;
  std::vector<IndependenceResult> independence;  // one per derived seed
  int expected_rank = 0;
  int weight_corank = 0;
  int slice_corank = 0;  // corank of S u Phi
  int trdeg_invariant_field = 0;
  int trdeg_borel_field = 0;

  bool invariance_pass = false;
  bool independence_pass = false;
  bool slice_pass = false;
  bool corank_pass = false;
  bool pass() const { return invariance_pass && independence_pass && slice_pass && corank_pass; }
};

/// Invariance, independence, slice form and corank checks for one type. Independence is
/// checked at seeds seed, seed+1, seed+2.
VerificationReport verify_type(const ParabolicType& type, std::uint64_t seed);

/// Checks that the restriction of every base minor and pair polynomial is
/// +-x_xi * prod x_{S_xi}, resp. +-x_phi * x_xi * prod x_{S_xi} * prod x_{S_xi'}.
bool slice_form_matches(const GeneratorSet& gens, std::size_t index, bool is_pair, std::string* image = nullptr);

// ---------------------------------------------------------------------------

struct TableEntry {
  std::string generator;
  std::string computed;   // value at Y in a1, a2, b1, b2, c11, ..., c22
  std::string published;
  int sign = 0;           // computed == sign * published; 0 when neither
  bool sign_must_match = false;
  bool pass = false;
};

struct Case242Report {
  std::uint64_t seed = 0;
  std::size_t identity_lhs_terms = 0;  // term count of L12*L21 - L11*L22
  int identity_sign = 0;      // lhs == sign * M1*N1*D; 0 when it fails
  bool identity_pass = false;
  std::vector<bool> d_invariant_by_k;
  bool d_invariant = false;
  std::vector<TableEntry> table;
  bool table_pass = false;
  IndependenceResult rank_without_d;
  IndependenceResult rank_with_d;
  bool rank_pass = false;
  bool pass() const { return identity_pass && d_invariant && table_pass && rank_pass; }
};

/// Evaluation point Y_{a,b,c} of the (2,4,2) case study, as variable renaming:
/// a1 = x13, a2 = x24, b1 = x67, b2 = x58, c_ij = x_{2+i, 6+j}.
std::string case242_symbol(Var v);
/// Restricts f to the support of Y_{a,b,c}.
Polynomial at_case242_point(const Polynomial& f);

Case242Report case242_report(std::uint64_t seed);

}  // namespace nilorb
