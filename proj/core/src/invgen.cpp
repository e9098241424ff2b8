#include <nilorb/invgen.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace nilorb {

Rational MatrixPoint::value(Var v) const {
  if (v.is_param()) throw std::invalid_argument("matrix point has no value for t");
  return at(v.row(), v.col());
}

bool MatrixPoint::supported_on(const std::vector<Root>& positions) const {
  std::set<Root> allowed(positions.begin(), positions.end());
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      if (at(i, j) != 0 && allowed.count({i, j}) == 0) return false;
  return true;
}

PolyMatrix formal_matrix(const ParabolicType& type) {
  PolyMatrix x(type.n());
  for (const auto& r : nilradical_roots(type)) x.at(r.i, r.j) = Polynomial::x(r.i, r.j);
  return x;
}

namespace {

// The determinant only touches nilradical entries, so it is built directly from
// variables without materializing the whole formal matrix.
Polynomial formal_minor(const ParabolicType& type, const std::vector<int>& rows, const std::vector<int>& cols) {
  const int k = static_cast<int>(rows.size());
  PolyMatrix sub(k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (type.in_nilradical({rows[static_cast<std::size_t>(a)], cols[static_cast<std::size_t>(b)]}))
        sub.at(a + 1, b + 1) = Polynomial::x(rows[static_cast<std::size_t>(a)], cols[static_cast<std::size_t>(b)]);
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int a = 0; a < k; ++a) idx[static_cast<std::size_t>(a)] = a + 1;
  return sub.minor(idx, idx);
}

}  // namespace

Polynomial minor_poly(const Base& base, Root gamma) {
  const auto& type = base.type();
  if (gamma.i < 1 || gamma.j > type.n() || !type.in_nilradical(gamma))
    throw std::invalid_argument("minor_poly: " + gamma.to_string() + " is not a nilradical root");
  std::vector<int> rows{gamma.i};
  std::vector<int> cols{gamma.j};
  for (const auto& r : s_gamma(base, gamma)) {
    rows.push_back(r.i);
    cols.push_back(r.j);
  }
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  return formal_minor(type, rows, cols);
}

Polynomial l_poly(const Base& base, const AdmissiblePair& q) {
  const auto& type = base.type();
  if (!base.contains(q.xi) || !base.contains(q.xi_prime) || !is_admissible(type, q.xi, q.xi_prime))
    throw std::invalid_argument("l_poly: (" + q.xi.to_string() + ", " + q.xi_prime.to_string() +
                                ") is not an admissible pair");
  const int a = q.xi.i;
  const int b = q.xi.j;
  const int a2 = q.xi_prime.i;
  const int b2 = q.xi_prime.j;
  PolynomialBuilder acc;
  for (int c = b; c <= a2; ++c) acc.add(minor_poly(base, {a, c}) * minor_poly(base, {c, b2}));
  return std::move(acc).build();
}

Polynomial power_minor(const ParabolicType& type, unsigned k, const std::vector<int>& rows,
                       const std::vector<int>& cols) {
  if (k == 0) throw std::invalid_argument("power_minor: exponent must be positive");
  if (rows.size() != cols.size()) throw std::invalid_argument("power_minor: ragged index sets");
  return formal_matrix(type).pow(k).minor(rows, cols);
}

Polynomial restrict_to_slice(const Base& base, const std::vector<Root>& marked, const Polynomial& f) {
  std::set<Root> keep(base.roots().begin(), base.roots().end());
  keep.insert(marked.begin(), marked.end());
  return f.restrict_to([&](Var v) { return !v.is_param() && keep.count({v.row(), v.col()}) != 0; });
}

// ---------------------------------------------------------------------------

std::vector<Polynomial> GeneratorSet::primary() const {
  std::vector<Polynomial> out = base_minors;
  out.insert(out.end(), pair_polys.begin(), pair_polys.end());
  return out;
}

std::string GeneratorSet::base_label(std::size_t k) const {
  return "M" + base.roots().at(k).to_string();
}

std::string GeneratorSet::pair_label(std::size_t k) const {
  const auto& q = pairs.at(k);
  return "L(" + std::to_string(q.xi.i) + "," + std::to_string(q.xi.j) + "|" +
         std::to_string(q.xi_prime.i) + "," + std::to_string(q.xi_prime.j) + ")";
}

Polynomial case242_d() { return power_minor(ParabolicType({2, 4, 2}), 2, {1, 2}, {7, 8}); }

GeneratorSet build_generators(const ParabolicType& type) {
  Base base = compute_base(type);
  auto pairs = admissible_pairs(base);
  GeneratorSet gens{type, base, pairs, {}, {}, {}};
  for (const auto& xi : base.roots()) gens.base_minors.push_back(minor_poly(base, xi));
  for (const auto& q : pairs) gens.pair_polys.push_back(l_poly(base, q));
  if (type == ParabolicType({2, 4, 2})) gens.extras.push_back({"D", case242_d()});
  return gens;
}

InvariantValues evaluate_invariants(const GeneratorSet& gens, const MatrixPoint& x) {
  auto value = [&](Var v) { return x.value(v); };
  InvariantValues out;
  for (const auto& p : gens.base_minors) out.base.push_back(p.evaluate(value));
  for (const auto& p : gens.pair_polys) out.pairs.push_back(p.evaluate(value));
  return out;
}

SliceMonomial slice_monomial(const GeneratorSet& gens, const Polynomial& f, Root fresh) {
  SliceMonomial sm;
  Polynomial image = restrict_to_slice(gens.base, gens.phi(), f);
  if (!image.is_monomial()) return sm;
  const auto& [mono, coef] = image.terms().front();
  sm.coefficient = coef;
  const Var fv = Var::entry(fresh.i, fresh.j);
  if (mono.exponent(fv) != 1) return sm;
  for (const auto& [v, e] : mono.factors()) {
    if (v == fv) continue;
    if (!gens.base.contains({v.row(), v.col()})) return sm;
    for (unsigned k = 0; k < e; ++k) sm.cofactors.push_back({v.row(), v.col()});
  }
  sm.fresh = fresh;
  sm.single_monomial = true;
  return sm;
}

MatrixPoint y_coordinates(const GeneratorSet& gens, const InvariantValues& values) {
  const auto& roots = gens.base.roots();
  if (!gens.type.admits_canonical_slice())
    throw std::domain_error("y_coordinates: type (" + gens.type.to_string() +
                            ") needs non-increasing blocks or at most three blocks");
  if (values.base.size() != roots.size() || values.pairs.size() != gens.pairs.size())
    throw std::invalid_argument("y_coordinates: invariant value count mismatch");
  for (std::size_t k = 0; k < roots.size(); ++k)
    if (values.base[k] == 0) throw OutsideU0Error(roots[k]);

  MatrixPoint y(gens.type.n());
  std::vector<SliceMonomial> forms;
  for (std::size_t k = 0; k < roots.size(); ++k) {
    forms.push_back(slice_monomial(gens, gens.base_minors[k], roots[k]));
    if (!forms.back().single_monomial)
      throw std::domain_error("y_coordinates: restricted " + gens.base_label(k) + " is not of monomial form");
  }

  // Each base variable is solved once all of its cofactors are known.
  std::vector<bool> solved(roots.size(), false);
  std::set<Root> known;
  for (std::size_t done = 0; done < roots.size();) {
    bool progress = false;
    for (std::size_t k = 0; k < roots.size(); ++k) {
      if (solved[k]) continue;
      const auto& cof = forms[k].cofactors;
      if (!std::all_of(cof.begin(), cof.end(), [&](Root r) { return known.count(r) != 0; })) continue;
      Rational denom = forms[k].coefficient;
      for (const auto& r : cof) denom *= y.at(r.i, r.j);
      y.at(roots[k].i, roots[k].j) = values.base[k] / denom;
      known.insert(roots[k]);
      solved[k] = true;
      ++done;
      progress = true;
    }
    if (!progress) throw std::domain_error("y_coordinates: cyclic dependency among base minors");
  }

  for (std::size_t k = 0; k < gens.pairs.size(); ++k) {
    const Root phi = gens.pairs[k].phi();
    SliceMonomial sm = slice_monomial(gens, gens.pair_polys[k], phi);
    if (!sm.single_monomial)
      throw std::domain_error("y_coordinates: restricted " + gens.pair_label(k) + " is not of monomial form");
    Rational denom = sm.coefficient;
    for (const auto& r : sm.cofactors) denom *= y.at(r.i, r.j);
    y.at(phi.i, phi.j) = values.pairs[k] / denom;
  }
  return y;
}

}  // namespace nilorb
