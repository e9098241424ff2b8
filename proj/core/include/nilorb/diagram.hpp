#pragma once

#include <nilorb/rootcomb.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace nilorb {

enum class DiagramFormat { kText, kLatex, kJson };

/// Throws std::invalid_argument for an unknown name.
DiagramFormat parse_diagram_format(std::string_view name);

/// n x n grid with the diagonal blocks drawn, base roots marked ⊗ and the
/// marked set (Phi by default) marked ×.
std::string render_diagram(const ParabolicType& type, DiagramFormat format,
                           MarkedSet marks = MarkedSet::kPhi);

/// Marks recovered from a rendered diagram.
struct DiagramMarks {
  int n = 0;
  std::vector<int> blocks;
  std::vector<Root> base;    // row-sorted
  std::vector<Root> marked;  // row-sorted
};

/// Reads back any of the three formats. Throws std::invalid_argument.
DiagramMarks parse_diagram(std::string_view text, DiagramFormat format);

}  // namespace nilorb
