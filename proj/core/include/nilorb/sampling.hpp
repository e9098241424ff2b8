#pragma once

#include <nilorb/invgen.hpp>
#include <nilorb/rootcomb.hpp>

#include <cstdint>
#include <random>

namespace nilorb {

/// Seeded source of small integers in [-9, 9]. The mapping from the engine's
/// output is fixed here so that identical seeds give identical points on
/// every standard library.
class Sampler {
 public:
  static constexpr int kRange = 9;

  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  int small_int() { return static_cast<int>(engine_() % (2 * kRange + 1)) - kRange; }
  int nonzero_small_int();

  /// Uniform point of the nilradical.
  MatrixPoint point(const ParabolicType& type);
  /// Uniform point of the nilradical, resampled until every base minor is nonzero.
  MatrixPoint u0_point(const GeneratorSet& gens, int max_attempts = 1000);

 private:
  std::mt19937_64 engine_;
};

bool in_u0(const GeneratorSet& gens, const MatrixPoint& x);

}  // namespace nilorb
