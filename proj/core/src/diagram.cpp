#include <nilorb/diagram.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace nilorb {

namespace {

constexpr std::string_view kBaseGlyph = "⊗";
constexpr std::string_view kMarkGlyph = "×";

enum class Cell { kLower, kDiagonal, kBlock, kEmpty, kBase, kMarked };

std::vector<std::vector<Cell>> layout(const ParabolicType& type, MarkedSet marks) {
  const int n = type.n();
  Base base = compute_base(type);
  auto marked = marked_roots(admissible_pairs(base), marks);
  std::vector<std::vector<Cell>> grid(static_cast<std::size_t>(n), std::vector<Cell>(static_cast<std::size_t>(n)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Cell c = Cell::kLower;
      if (i == j) c = Cell::kDiagonal;
      else if (type.same_block(i, j)) c = Cell::kBlock;
      else if (type.in_nilradical({i, j})) c = Cell::kEmpty;
      grid[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = c;
    }
  for (const auto& r : base.roots()) grid[static_cast<std::size_t>(r.i - 1)][static_cast<std::size_t>(r.j - 1)] = Cell::kBase;
  for (const auto& r : marked) grid[static_cast<std::size_t>(r.i - 1)][static_cast<std::size_t>(r.j - 1)] = Cell::kMarked;
  return grid;
}

std::string_view glyph(Cell c) {
  switch (c) {
    case Cell::kLower: return " ";
    case Cell::kDiagonal: return "1";
    case Cell::kBlock: return "-";
    case Cell::kEmpty: return ".";
    case Cell::kBase: return kBaseGlyph;
    case Cell::kMarked: return kMarkGlyph;
  }
  return "?";
}

std::string render_text(const ParabolicType& type, MarkedSet marks) {
  const int n = type.n();
  const auto grid = layout(type, marks);
  const int width = static_cast<int>(std::to_string(n).size());
  std::ostringstream out;
  out << "Diagram (" << type.to_string() << ")" << (marks == MarkedSet::kPsi ? " [psi]" : "") << "\n";
  out << std::string(static_cast<std::size_t>(width + 1), ' ');
  for (int j = 1; j <= n; ++j) out << (j % 10) << (j < n ? " " : "");
  out << "\n";
  for (int i = 1; i <= n; ++i) {
    std::string label = std::to_string(i);
    out << std::string(static_cast<std::size_t>(width) - label.size(), ' ') << label << " ";
    for (int j = 1; j <= n; ++j) {
      out << glyph(grid[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]);
      if (j < n) out << " ";
    }
    out << "\n";
  }
  return out.str();
}

std::string render_latex(const ParabolicType& type, MarkedSet marks) {
  const int n = type.n();
  const auto grid = layout(type, marks);
  std::ostringstream out;
  out << "\\begin{tabular}{";
  for (int j = 0; j < n; ++j) out << "|p{0.1cm}";
  out << "|l}\n";
  for (int j = 1; j <= n; ++j) out << "{\\small " << j << "}&";
  out << "\\\\\n";
  if (n > 0) out << "\\cline{1-" << n << "}\n";
  for (int i = 1; i <= n; ++i) {
    const int b = type.block_of(i);
    const int begin = type.block_begin(b);
    const int end = type.block_end(b);
    const int size = end - begin + 1;
    std::vector<std::string> cells;
    if (begin > 1) cells.push_back("\\multicolumn{" + std::to_string(begin - 1) + "}{|c|}{}");
    if (size == 1) {
      cells.emplace_back("1");
    } else {
      const char* align = i == begin ? "l" : (i == end ? "r" : "c");
      cells.push_back("\\multicolumn{" + std::to_string(size) + "}{|" + align + "|}{1}");
    }
    for (int j = end + 1; j <= n; ++j) {
      switch (grid[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]) {
        case Cell::kBase: cells.emplace_back("$\\otimes$"); break;
        case Cell::kMarked: cells.emplace_back("$\\times$"); break;
        default: cells.emplace_back(""); break;
      }
    }
    cells.push_back("{\\small " + std::to_string(i) + "}");
    for (std::size_t k = 0; k < cells.size(); ++k) out << (k > 0 ? "&" : "") << cells[k];
    out << "\\\\\n";
    if (i == n) {
      out << "\\cline{1-" << n << "}\n";
    } else {
      const int from = i == end ? begin : end + 1;
      if (from <= n) out << "\\cline{" << from << "-" << n << "}\n";
    }
  }
  out << "\\multicolumn{" << std::max(n, 1) << "}{c}{Diagram (" << type.to_string() << ")}\\\\\n";
  out << "\\end{tabular}\n";
  return out.str();
}

nlohmann::ordered_json roots_json(const std::vector<Root>& roots) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : roots) arr.push_back({r.i, r.j});
  return arr;
}

std::string render_json(const ParabolicType& type, MarkedSet marks) {
  Base base = compute_base(type);
  auto marked = marked_roots(admissible_pairs(base), marks);
  nlohmann::ordered_json j;
  j["n"] = type.n();
  j["blocks"] = type.sizes();
  j["base"] = roots_json(base.roots());
  j[marks == MarkedSet::kPhi ? "phi" : "psi"] = roots_json(marked);
  return j.dump(2) + "\n";
}

// Splits a UTF-8 string into code points.
std::vector<std::string> code_points(std::string_view s) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < s.size();) {
    auto c = static_cast<unsigned char>(s[i]);
    std::size_t len = c < 0x80 ? 1 : (c >> 5) == 0x6 ? 2 : (c >> 4) == 0xE ? 3 : 4;
    out.emplace_back(s.substr(i, len));
    i += len;
  }
  return out;
}

std::vector<int> parse_blocks_title(const std::string& text) {
  static const std::regex title(R"(Diagram \(([0-9, ]+)\))");
  std::smatch m;
  if (!std::regex_search(text, m, title)) throw std::invalid_argument("diagram title not found");
  return ParabolicType::parse(m[1].str()).sizes();
}

DiagramMarks parse_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  if (lines.size() < 2) throw std::invalid_argument("diagram text too short");
  DiagramMarks marks;
  marks.blocks = parse_blocks_title(lines[0]);
  for (int b : marks.blocks) marks.n += b;
  const std::size_t width = std::to_string(marks.n).size();
  if (lines.size() != static_cast<std::size_t>(marks.n) + 2) throw std::invalid_argument("diagram row count mismatch");
  for (int i = 1; i <= marks.n; ++i) {
    const std::string& row = lines[static_cast<std::size_t>(i + 1)];
    if (row.size() < width + 1 || std::stoi(row.substr(0, width)) != i)
      throw std::invalid_argument("diagram row label mismatch at row " + std::to_string(i));
    auto cps = code_points(std::string_view(row).substr(width + 1));
    for (std::size_t k = 0; k < cps.size(); k += 2) {
      const int j = static_cast<int>(k / 2) + 1;
      if (cps[k] == kBaseGlyph) marks.base.push_back({i, j});
      else if (cps[k] == kMarkGlyph) marks.marked.push_back({i, j});
    }
  }
  return marks;
}

DiagramMarks parse_latex(std::string_view text) {
  DiagramMarks marks;
  marks.blocks = parse_blocks_title(std::string(text));
  for (int b : marks.blocks) marks.n += b;
  static const std::regex row_label(R"(\{\\small ([0-9]+)\}\\\\$)");
  static const std::regex span(R"(^\\multicolumn\{([0-9]+)\})");
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::smatch m;
    if (!std::regex_search(line, m, row_label)) continue;
    const int i = std::stoi(m[1].str());
    int col = 1;
    std::size_t start = 0;
    while (start <= line.size()) {
      std::size_t amp = line.find('&', start);
      std::string cell = line.substr(start, amp == std::string::npos ? std::string::npos : amp - start);
      if (amp == std::string::npos) break;  // trailing row label
      std::smatch sm;
      int width = 1;
      if (std::regex_search(cell, sm, span)) width = std::stoi(sm[1].str());
      if (cell.find("\\otimes") != std::string::npos) marks.base.push_back({i, col});
      else if (cell.find("\\times") != std::string::npos) marks.marked.push_back({i, col});
      col += width;
      start = amp + 1;
    }
    if (col != marks.n + 1) throw std::invalid_argument("latex diagram row " + std::to_string(i) + " has wrong width");
  }
  return marks;
}

DiagramMarks parse_json(std::string_view text) {
  auto j = nlohmann::json::parse(text);
  DiagramMarks marks;
  marks.n = j.at("n").get<int>();
  marks.blocks = j.at("blocks").get<std::vector<int>>();
  for (const auto& r : j.at("base")) marks.base.push_back({r.at(0).get<int>(), r.at(1).get<int>()});
  const auto& m = j.contains("phi") ? j.at("phi") : j.at("psi");
  for (const auto& r : m) marks.marked.push_back({r.at(0).get<int>(), r.at(1).get<int>()});
  return marks;
}

}  // namespace

DiagramFormat parse_diagram_format(std::string_view name) {
  if (name == "text") return DiagramFormat::kText;
  if (name == "latex") return DiagramFormat::kLatex;
  if (name == "json") return DiagramFormat::kJson;
  throw std::invalid_argument("unknown diagram format '" + std::string(name) + "'");
}

std::string render_diagram(const ParabolicType& type, DiagramFormat format, MarkedSet marks) {
  switch (format) {
    case DiagramFormat::kText: return render_text(type, marks);
    case DiagramFormat::kLatex: return render_latex(type, marks);
    case DiagramFormat::kJson: return render_json(type, marks);
  }
  throw std::invalid_argument("unknown diagram format");
}

DiagramMarks parse_diagram(std::string_view text, DiagramFormat format) {
  DiagramMarks marks;
  switch (format) {
    case DiagramFormat::kText: marks = parse_text(text); break;
    case DiagramFormat::kLatex: marks = parse_latex(text); break;
    case DiagramFormat::kJson:
      try {
        marks = parse_json(text);
      } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("json diagram: ") + e.what());
      }
      break;
  }
  std::sort(marks.base.begin(), marks.base.end());
  std::sort(marks.marked.begin(), marks.marked.end());
  return marks;
}

}  // namespace nilorb
