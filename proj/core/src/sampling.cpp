#include <nilorb/sampling.hpp>

#include <stdexcept>

namespace nilorb {

int Sampler::nonzero_small_int() {
  int v = 0;
  while (v == 0) v = small_int();
  return v;
}

MatrixPoint Sampler::point(const ParabolicType& type) {
  MatrixPoint x(type.n());
  for (const auto& r : nilradical_roots(type)) x.at(r.i, r.j) = small_int();
  return x;
}

bool in_u0(const GeneratorSet& gens, const MatrixPoint& x) {
  auto value = [&](Var v) { return x.value(v); };
  for (const auto& m : gens.base_minors)
    if (m.evaluate(value) == 0) return false;
  return true;
}

MatrixPoint Sampler::u0_point(const GeneratorSet& gens, int max_attempts) {
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    MatrixPoint x = point(gens.type);
    if (in_u0(gens, x)) return x;
  }
  throw std::runtime_error("no U0 point found after " + std::to_string(max_attempts) + " samples");
}

}  // namespace nilorb
