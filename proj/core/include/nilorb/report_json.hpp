#pragma once

// JSON and LaTeX documents for the report types. Key order is fixed so that
// identical inputs serialize to identical bytes.

#include <nilorb/checker.hpp>
#include <nilorb/invgen.hpp>
#include <nilorb/orbitlab.hpp>
#include <nilorb/rootcomb.hpp>

#include <nlohmann/json.hpp>

#include <string>

namespace nilorb {

using Json = nlohmann::ordered_json;

Json to_json(Root r);
Json to_json(const Dimensions& d);
Json to_json(const MatrixPoint& x);
Json to_json(const GroupElement& g);

/// S, Q with alpha/phi/psi, Phi, Psi and the dimension counts.
Json base_listing_json(const ParabolicType& type);
Json generator_set_json(const GeneratorSet& gens);
Json to_json(const VerificationReport& report);
Json to_json(const OrbitExperiment& e);
Json to_json(const UniquenessReport& report);
Json to_json(const Case242Report& report);

/// {n, entries: [[i, j, "p/q"], ...]}; only exact rational strings or integers.
/// Throws std::invalid_argument on floats, duplicates or out-of-range indices.
MatrixPoint point_from_json(const nlohmann::json& j);

/// Generator polynomials as an align* block.
std::string generator_set_latex(const GeneratorSet& gens);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace nilorb
