#include <nilorb/orbitlab.hpp>

#include <nilorb/sampling.hpp>

#include <algorithm>
#include <stdexcept>

namespace nilorb {

GroupElement GroupElement::identity(int n) {
  return GroupElement(RationalMatrix::identity(static_cast<std::size_t>(n)));
}

GroupElement GroupElement::elementary(int n, int k, int l, const Rational& t) {
  if (k >= l || k < 1 || l > n) throw std::invalid_argument("elementary: need 1 <= k < l <= n");
  RationalMatrix m = RationalMatrix::identity(static_cast<std::size_t>(n));
  m(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(l - 1)) = t;
  return GroupElement(std::move(m));
}

GroupElement GroupElement::from_matrix(RationalMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("group element must be square");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (m(i, j) != (i == j ? 1 : 0)) throw std::invalid_argument("group element is not upper unitriangular");
  return GroupElement(std::move(m));
}

GroupElement GroupElement::inverse() const {
  // Back substitution for g * h = 1, column by column.
  const std::size_t n = m_.rows();
  RationalMatrix h = RationalMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = j; i-- > 0;) {
      Rational s = 0;
      for (std::size_t k = i + 1; k <= j; ++k) s += m_(i, k) * h(k, j);
      h(i, j) = (i == j ? Rational(1) : Rational(0)) - s;
    }
  return GroupElement(std::move(h));
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) { return GroupElement(a.m_ * b.m_); }

namespace {

RationalMatrix to_matrix(const MatrixPoint& x) {
  const auto n = static_cast<std::size_t>(x.size());
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = x.at(static_cast<int>(i + 1), static_cast<int>(j + 1));
  return m;
}

MatrixPoint to_point(const RationalMatrix& m) {
  MatrixPoint x(static_cast<int>(m.rows()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) x.at(static_cast<int>(i + 1), static_cast<int>(j + 1)) = m(i, j);
  return x;
}

}  // namespace

MatrixPoint adjoint(const GroupElement& g, const MatrixPoint& x) {
  if (g.size() != x.size()) throw std::invalid_argument("adjoint: size mismatch");
  return to_point(g.matrix() * to_matrix(x) * g.inverse().matrix());
}

MatrixPoint adjoint(const ParabolicType& type, const GroupElement& g, const MatrixPoint& x) {
  const auto m = nilradical_roots(type);
  if (!x.supported_on(m)) throw std::invalid_argument("adjoint: point is not in the nilradical");
  MatrixPoint y = adjoint(g, x);
  if (!y.supported_on(m)) throw std::logic_error("adjoint: image left the nilradical");
  return y;
}

int orbit_dim(const ParabolicType& type, const MatrixPoint& x) {
  const int n = type.n();
  const auto targets = nilradical_roots(type);
  std::vector<Root> sources;
  for (int k = 1; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l) sources.push_back({k, l});
  if (targets.empty() || sources.empty()) return 0;

  RationalMatrix ad(targets.size(), sources.size());
  MatrixPoint bracket(n);
  for (std::size_t s = 0; s < sources.size(); ++s) {
    const auto [k, l] = sources[s];
    // [E_kl, x] = E_kl x - x E_kl: row k gains row l of x, column l loses column k of x.
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) bracket.at(i, j) = 0;
    for (int c = 1; c <= n; ++c) bracket.at(k, c) += x.at(l, c);
    for (int r = 1; r <= n; ++r) bracket.at(r, l) -= x.at(r, k);
    for (std::size_t t = 0; t < targets.size(); ++t) ad(t, s) = bracket.at(targets[t].i, targets[t].j);
  }
  return static_cast<int>(rank(ad));
}

OrbitExperiment max_orbit_dim(const ParabolicType& type, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("max_orbit_dim: trials must be positive");
  OrbitExperiment e{type, seed, trials, dims(type), 0, 0, type.admits_canonical_slice(), false, false};
  e.predicted = e.dimensions.predicted_regular_orbit_dim;
  Sampler sampler(seed);
  for (int t = 0; t < trials; ++t) e.max_rank = std::max(e.max_rank, orbit_dim(type, sampler.point(type)));
  e.exceeds = e.max_rank > e.predicted;
  e.pass = e.covered ? e.max_rank == e.predicted : !e.exceeds;
  return e;
}

// ---------------------------------------------------------------------------

namespace {

// Working state of the reduction: the current point and the accumulated g.
class Reducer {
 public:
  Reducer(const GeneratorSet& gens, const MatrixPoint& a)
      : gens_(gens), type_(gens.type), a_(a), g_(GroupElement::identity(a.size())) {}

  Reduction run() {
    const int s = type_.block_count();
    // The trailing blocks are reduced first; each step then settles one more
    // block of rows on top of them.
    for (int block = s - 2; block >= 0; --block) {
      strip(block);
      residual(block);
    }
    return {g_, a_};
  }

 private:
  // x <- e x e^{-1} for e = 1 + t E_kl: row k += t * row l, column l -= t * column k.
  void conjugate(int k, int l, const Rational& t) {
    if (t == 0) return;
    const int n = type_.n();
    for (int c = 1; c <= n; ++c)
      if (a_.at(l, c) != 0) a_.at(k, c) += t * a_.at(l, c);
    for (int r = 1; r <= n; ++r)
      if (a_.at(r, k) != 0) a_.at(r, l) -= t * a_.at(r, k);
    g_ = GroupElement::elementary(n, k, l, t) * g_;
  }

  const Rational& pivot(Root xi) const {
    const Rational& v = a_.at(xi.i, xi.j);
    if (v == 0) throw OutsideU0Error(xi);
    return v;
  }

  // Pivots between block b and block b+1: clear each pivot's column above it
  // inside block b and its row to the right inside block b+1.
  void strip(int b) {
    for (const auto& xi : gens_.base.roots()) {
      if (type_.block_of(xi.i) != b || type_.block_of(xi.j) != b + 1) continue;
      for (int r = type_.block_begin(b); r < xi.i; ++r)
        if (a_.at(r, xi.j) != 0) conjugate(r, xi.i, -a_.at(r, xi.j) / pivot(xi));
      for (int c = xi.j + 1; c <= type_.block_end(b + 1); ++c)
        if (a_.at(xi.i, c) != 0) conjugate(xi.j, c, a_.at(xi.i, c) / pivot(xi));
    }
  }

  // Rows of block b against every column right of block b+1, right to left.
  void residual(int b) {
    if (b + 2 >= type_.block_count()) return;
    for (int c = type_.n(); c >= type_.block_begin(b + 2); --c) {
      // A column without a base root is cleared entirely through the row pivots.
      auto xi = gens_.base.in_col(c);
      for (int r = type_.block_begin(b); r <= type_.block_end(b); ++r) {
        if ((xi && r == xi->i) || a_.at(r, c) == 0) continue;
        if (xi && r < xi->i) {
          conjugate(r, xi->i, -a_.at(r, c) / pivot(*xi));
        } else {
          // Use the base root of row r, which lies to the left.
          auto own = gens_.base.in_row(r);
          if (!own || own->j >= c)
            throw std::domain_error("reduce_to_canonical: no pivot to clear " + Root{r, c}.to_string());
          conjugate(own->j, c, a_.at(r, c) / pivot(*own));
        }
      }
    }
  }

  const GeneratorSet& gens_;
  const ParabolicType& type_;
  MatrixPoint a_;
  GroupElement g_;
};

}  // namespace

Reduction reduce_to_canonical(const GeneratorSet& gens, const MatrixPoint& a) {
  const auto& type = gens.type;
  if (!type.admits_canonical_slice())
    throw std::domain_error("reduce_to_canonical: type (" + type.to_string() +
                            ") needs non-increasing blocks or at most three blocks");
  if (a.size() != type.n() || !a.supported_on(nilradical_roots(type)))
    throw std::invalid_argument("reduce_to_canonical: point is not in the nilradical");
  auto value = [&](Var v) { return a.value(v); };
  for (std::size_t k = 0; k < gens.base_minors.size(); ++k)
    if (gens.base_minors[k].evaluate(value) == 0) throw OutsideU0Error(gens.base.roots()[k]);

  Reduction red = Reducer(gens, a).run();
  std::vector<Root> slice = gens.base.roots();
  for (const auto& r : gens.phi()) slice.push_back(r);
  if (!red.y.supported_on(slice))
    throw std::logic_error("reduce_to_canonical: elimination did not reach the slice");
  return red;
}

Reduction reduce_to_canonical(const ParabolicType& type, const MatrixPoint& a) {
  return reduce_to_canonical(build_generators(type), a);
}

UniquenessReport verify_unique_intersection(const GeneratorSet& gens, const MatrixPoint& a) {
  UniquenessReport report{reduce_to_canonical(gens, a), false, false, false, false};
  const auto& [g, y] = report.reduction;
  report.conjugation_consistent = adjoint(gens.type, g, a) == y;
  std::vector<Root> slice = gens.base.roots();
  for (const auto& r : gens.phi()) slice.push_back(r);
  report.in_slice = y.supported_on(slice);
  const InvariantValues before = evaluate_invariants(gens, a);
  report.invariants_preserved = evaluate_invariants(gens, y) == before;
  report.matches_y_coordinates = y_coordinates(gens, before) == y;
  return report;
}

}  // namespace nilorb
