#include "oracles.hpp"

#include <nilorb/checker.hpp>
#include <nilorb/invgen.hpp>
#include <nilorb/matrix.hpp>

#include <doctest.h>

using namespace nilorb;
using P = Polynomial;

namespace {

P x(int i, int j) { return P::x(i, j); }

const ParabolicType& t242() {
  static const ParabolicType t({2, 4, 2});
  return t;
}

// Oracle for one_param_transform: the full product (1 - t E) X (1 + t E) over
// polynomial entries, then a simultaneous substitution.
P transform_by_matrix_product(const ParabolicType& type, int k, const P& f) {
  const int n = type.n();
  PolyMatrix xm = formal_matrix(type), left(n), right(n);
  for (int i = 1; i <= n; ++i) left.at(i, i) = right.at(i, i) = 1;
  left.at(k, k + 1) = -P::t();
  right.at(k, k + 1) = P::t();
  const PolyMatrix image = left * xm * right;
  std::map<Var, P> assignment;
  for (const auto& r : nilradical_roots(type)) assignment.emplace(Var::entry(r.i, r.j), image.at(r.i, r.j));
  return f.substitute(assignment);
}

}  // namespace

TEST_CASE("one_param_transform examples") {
  CHECK(one_param_transform(t242(), 3, x(2, 4)) == x(2, 4) + P::t() * x(2, 3));
  CHECK(one_param_transform(t242(), 5, P(1)) == P(1));
  CHECK_THROWS_AS(one_param_transform(t242(), 0, x(2, 4)), std::out_of_range);
  CHECK_THROWS_AS(one_param_transform(t242(), 8, x(2, 4)), std::out_of_range);
}

TEST_CASE("one_param_transform agrees with the explicit matrix product") {
  const GeneratorSet g = build_generators(t242());
  std::vector<P> probes = {x(2, 4), x(3, 7) * x(4, 8) - x(5, 8), g.pair_polys[1], g.base_minors[3]};
  for (int k = 1; k < 8; ++k)
    for (const auto& f : probes) CHECK(one_param_transform(t242(), k, f) == transform_by_matrix_product(t242(), k, f));
  const ParabolicType t = ParabolicType::parse("2,1,3,2");
  for (int k = 1; k < 8; ++k) CHECK(one_param_transform(t, k, x(4, 7) * x(1, 5)) == transform_by_matrix_product(t, k, x(4, 7) * x(1, 5)));
}

TEST_CASE("invariance of generators") {
  for (const char* name : {"2,1,3,2", "2,2,2,1,1", "2,2,1,1", "2,4,2", "3,2,1", "1,1,1,1"}) {
    const ParabolicType type = ParabolicType::parse(name);
    CAPTURE(name);
    const GeneratorSet g = build_generators(type);
    for (const auto& f : g.base_minors) CHECK(is_n_invariant(type, f));
    for (const auto& f : g.pair_polys) CHECK(is_n_invariant(type, f));
    for (const auto& e : g.extras) CHECK(is_n_invariant(type, e.poly));
  }
  CHECK_FALSE(is_n_invariant(t242(), x(2, 4)));
  const auto flags = invariance_by_subgroup(t242(), x(2, 4));
  REQUIRE(flags.size() == 7);
  CHECK_FALSE(flags[2]);
  CHECK(flags[0]);
}

TEST_CASE("column transformation shifts a minor by the neighbouring minor") {
  // For xi = (a, b) in S and b <= k < a', T_k M_(a,k+1) = M_(a,k+1) + t M_(a,k).
  const Base base = compute_base(t242());
  for (const Root xi : {Root{2, 3}, Root{1, 4}})
    for (int k = xi.j; k < 6; ++k) {
      CAPTURE(xi.to_string());
      CAPTURE(k);
      const P moved = one_param_transform(t242(), k, minor_poly(base, {xi.i, k + 1}));
      CHECK(moved == minor_poly(base, {xi.i, k + 1}) + P::t() * minor_poly(base, {xi.i, k}));
    }
}

TEST_CASE("independence rank") {
  const GeneratorSet g = build_generators(t242());
  CHECK(independence_rank(t242(), g.primary(), 1).rank == 8);
  auto with_d = g.primary();
  with_d.push_back(g.extras[0].poly);
  CHECK(independence_rank(t242(), with_d, 1).rank == 8);
  CHECK(independence_rank(ParabolicType::parse("1,1"), {x(1, 2)}, 3).rank == 1);
  CHECK(independence_rank(t242(), {x(1, 3) * x(2, 4), x(1, 3) * x(1, 3) * x(2, 4) * x(2, 4)}, 2).rank == 1);
  const IndependenceResult r = independence_rank(t242(), {P(1)}, 9);
  CHECK(r.rank == 0);
  CHECK(r.attempts == 4);
  CHECK(r.seed == 9);
}

TEST_CASE("weight coranks") {
  const GeneratorSet g = build_generators(t242());
  CHECK(weight_corank(g.pairs, 8) == 1);
  CHECK(weight_corank(build_generators(ParabolicType::parse("2,2,2,1,1")).pairs, 8) == 0);
  CHECK(weight_corank({}, 5) == 0);
  // Spanning-forest oracle on every type with n <= 8.
  for (int n = 1; n <= 8; ++n)
    for (const auto& sizes : oracle::compositions(n)) {
      const ParabolicType type(sizes);
      const Base base = compute_base(type);
      const auto pairs = admissible_pairs(base);
      std::vector<Root> alphas;
      for (const auto& q : pairs) alphas.push_back(q.alpha());
      CHECK(weight_corank(pairs, n) == static_cast<int>(alphas.size()) - oracle::weight_rank_by_components(alphas, n));
      std::vector<Root> slice = base.roots();
      for (const auto& q : pairs) slice.push_back(q.phi());
      CHECK(roots_corank(slice, n) == static_cast<int>(slice.size()) - oracle::weight_rank_by_components(slice, n));
    }
}

TEST_CASE("verify_type on (2,4,2)") {
  const VerificationReport r = verify_type(t242(), 11);
  CHECK(r.pass());
  CHECK(r.expected_rank == 8);
  REQUIRE(r.independence.size() == 3);
  CHECK(r.independence[2].seed == 13);
  CHECK(r.generators.size() == 9);
  CHECK(r.weight_corank == 1);
  CHECK(r.slice_corank == 1);
  CHECK(r.trdeg_invariant_field == 8);
  CHECK(r.trdeg_borel_field == 1);
}

TEST_CASE("slice images have the expected monomial form") {
  for (const char* name : {"2,1,3,2", "2,2,2,1,1", "2,2,1,1", "2,4,2"}) {
    CAPTURE(name);
    const GeneratorSet g = build_generators(ParabolicType::parse(name));
    for (std::size_t k = 0; k < g.base_minors.size(); ++k) CHECK(slice_form_matches(g, k, false));
    for (std::size_t k = 0; k < g.pair_polys.size(); ++k) CHECK(slice_form_matches(g, k, true));
  }
}

TEST_CASE("case study (2,4,2)") {
  const Case242Report r = case242_report(5);
  CHECK(r.identity_pass);
  CHECK(r.identity_sign != 0);
  CHECK(r.d_invariant);
  CHECK(r.table_pass);
  REQUIRE(r.table.size() == 9);
  CHECK(r.table[0].computed == "0");
  CHECK(r.table[4].computed == "a2*c21");
  CHECK(r.table[4].sign == 1);
  CHECK(r.table[8].sign == 1);
  CHECK(r.rank_without_d.rank == 8);
  CHECK(r.rank_with_d.rank == 8);
  CHECK(r.pass());
}

TEST_CASE("case study symbols") {
  CHECK(case242_symbol(Var::entry(1, 3)) == "a1");
  CHECK(case242_symbol(Var::entry(4, 7)) == "c21");
  CHECK(case242_symbol(Var::entry(1, 2)) == "x12");
  CHECK(at_case242_point(x(1, 3) * x(2, 4) + x(1, 2)) == x(1, 3) * x(2, 4));
}
