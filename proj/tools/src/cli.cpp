#include <nilorb_cli/cli.hpp>

#include <nilorb/checker.hpp>
#include <nilorb/diagram.hpp>
#include <nilorb/invgen.hpp>
#include <nilorb/orbitlab.hpp>
#include <nilorb/report_json.hpp>
#include <nilorb/rootcomb.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace nilorb::cli {

namespace {

struct Options {
  std::string type;
  std::string format = "text";
  std::string marks = "phi";
  std::uint64_t seed = kDefaultSeed;
  int trials = kDefaultTrials;
  std::string point;
  std::string output;
};

struct Document {
  std::string body;
  std::string extension;
  bool pass = true;
};

// Thrown for bad input that CLI11 cannot see: malformed types, points, files.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ParabolicType parse_type(const std::string& text) {
  try {
    return ParabolicType::parse(text);
  } catch (const std::exception& e) {
    throw UsageError("invalid type '" + text + "': " + e.what());
  }
}

std::string roots_text(const std::vector<Root>& roots) {
  std::string s;
  for (const auto& r : roots) s += (s.empty() ? "" : " ") + r.to_string();
  return s.empty() ? "(none)" : s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string pass_fail(bool b) { return b ? "PASS" : "FAIL"; }

std::string point_text(const MatrixPoint& x) {
  std::string s;
  for (int i = 1; i <= x.size(); ++i)
    for (int j = 1; j <= x.size(); ++j)
      if (x.at(i, j) != 0) s += "  (" + std::to_string(i) + "," + std::to_string(j) + ") = " + to_string(x.at(i, j)) + "\n";
  return s.empty() ? "  0\n" : s;
}

Document json_doc(const Json& j, bool pass = true) { return {dump(j), "json", pass}; }

Document diagram_cmd(const Options& o) {
  const ParabolicType type = parse_type(o.type);
  const DiagramFormat fmt = parse_diagram_format(o.format);
  const MarkedSet marks = o.marks == "psi" ? MarkedSet::kPsi : MarkedSet::kPhi;
  const char* ext = fmt == DiagramFormat::kJson ? "json" : fmt == DiagramFormat::kLatex ? "tex" : "txt";
  return {render_diagram(type, fmt, marks), ext, true};
}

Document base_cmd(const Options& o) {
  const ParabolicType type = parse_type(o.type);
  if (o.format == "json") return json_doc(base_listing_json(type));
  const Base base = compute_base(type);
  const auto pairs = admissible_pairs(base);
  const Dimensions d = dims(type);
  std::ostringstream out;
  out << "Type (" << type.to_string() << "), n = " << type.n() << "\n";
  out << "S: " << roots_text(base.roots()) << "\n";
  out << "Q:" << (pairs.empty() ? " (none)" : "") << "\n";
  for (const auto& q : pairs)
    out << "  " << q.xi.to_string() << " " << q.xi_prime.to_string() << "  alpha " << q.alpha().to_string() << "  phi "
        << q.phi().to_string() << "  psi " << q.psi().to_string() << "\n";
  out << "Phi: " << roots_text(marked_roots(pairs, MarkedSet::kPhi)) << "\n";
  out << "Psi: " << roots_text(marked_roots(pairs, MarkedSet::kPsi)) << "\n";
  out << "dim m = " << d.dim_m << ", |S| = " << d.base_size << ", |Q| = " << d.pair_count
      << ", predicted regular orbit dim = " << d.predicted_regular_orbit_dim << ", dim Y = " << d.y_dim << "\n";
  return {out.str(), "txt", true};
}

Document invariants_cmd(const Options& o) {
  const GeneratorSet gens = build_generators(parse_type(o.type));
  if (o.format == "json") return json_doc(generator_set_json(gens));
  if (o.format == "latex") return {generator_set_latex(gens), "tex", true};
  std::ostringstream out;
  for (std::size_t k = 0; k < gens.base_minors.size(); ++k)
    out << gens.base_label(k) << " = " << gens.base_minors[k].to_string() << "\n";
  for (std::size_t k = 0; k < gens.pair_polys.size(); ++k)
    out << gens.pair_label(k) << " = " << gens.pair_polys[k].to_string() << "\n";
  for (const auto& e : gens.extras) out << e.name << " = " << e.poly.to_string() << "\n";
  return {out.str(), "txt", true};
}

Document verify_cmd(const Options& o) {
  const VerificationReport r = verify_type(parse_type(o.type), o.seed);
  if (o.format == "json") return json_doc(to_json(r), r.pass());
  std::ostringstream out;
  out << "verify (" << r.type.to_string() << ") seed " << r.seed << "\n";
  for (const auto& g : r.generators) {
    out << "  " << std::left << std::setw(16) << g.label << " invariant " << yes_no(g.invariant);
    if (g.kind != "extra") out << "  slice " << g.slice_image << (g.slice_form ? "" : "  [unexpected form]");
    out << "\n";
  }
  out << "independence:";
  for (const auto& i : r.independence) out << " rank " << i.rank << " (seed " << i.seed << ")";
  out << ", expected " << r.expected_rank << "\n";
  out << "corank: weights " << r.weight_corank << ", S u Phi " << r.slice_corank << "\n";
  out << "trdeg: invariant field " << r.trdeg_invariant_field << ", Borel-invariant field " << r.trdeg_borel_field
      << "\n";
  out << "invariance " << pass_fail(r.invariance_pass) << ", independence " << pass_fail(r.independence_pass)
      << ", slice form " << pass_fail(r.slice_pass) << ", corank " << pass_fail(r.corank_pass) << "\n";
  out << "result: " << pass_fail(r.pass()) << "\n";
  return {out.str(), "txt", r.pass()};
}

Document orbit_dim_cmd(const Options& o) {
  const OrbitExperiment e = max_orbit_dim(parse_type(o.type), o.trials, o.seed);
  if (o.format == "json") return json_doc(to_json(e), e.pass);
  std::ostringstream out;
  out << "orbit-dim (" << e.type.to_string() << ") seed " << e.seed << ", " << e.trials << " trials\n";
  out << "max sampled orbit dim " << e.max_rank << ", predicted " << e.predicted
      << (e.covered ? "" : " (type not covered by the slice construction)") << "\n";
  if (e.exceeds) out << "WARNING: sampled dimension exceeds the prediction\n";
  out << "result: " << pass_fail(e.pass) << "\n";
  return {out.str(), "txt", e.pass};
}

MatrixPoint read_point(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open point file '" + path + "'");
  try {
    return point_from_json(nlohmann::json::parse(in));
  } catch (const std::exception& e) {
    throw UsageError("bad point file '" + path + "': " + e.what());
  }
}

Document reduce_cmd(const Options& o) {
  const ParabolicType type = parse_type(o.type);
  const MatrixPoint a = read_point(o.point);
  if (a.size() != type.n()) throw UsageError("point has n = " + std::to_string(a.size()) + ", type needs " + std::to_string(type.n()));
  const GeneratorSet gens = build_generators(type);
  UniquenessReport r = [&] {
    try {
      return verify_unique_intersection(gens, a);
    } catch (const OutsideU0Error& e) {
      throw UsageError(e.what());
    } catch (const std::domain_error& e) {
      throw UsageError(e.what());
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  if (o.format == "json") {
    Json j{{"type", type.to_string()}};
    const Json body = to_json(r);
    for (const auto& [key, value] : body.items()) j[key] = value;
    return json_doc(j, r.pass());
  }
  std::ostringstream out;
  out << "reduce (" << type.to_string() << ")\n";
  out << "g (strictly upper entries):\n" << point_text([&] {
    MatrixPoint g(type.n());
    for (int i = 1; i <= type.n(); ++i)
      for (int j = i + 1; j <= type.n(); ++j) g.at(i, j) = r.reduction.g.at(i, j);
    return g;
  }());
  out << "y = g a g^-1:\n" << point_text(r.reduction.y);
  out << "conjugation consistent " << yes_no(r.conjugation_consistent) << ", in slice " << yes_no(r.in_slice)
      << ", invariants preserved " << yes_no(r.invariants_preserved) << ", matches y-coordinates "
      << yes_no(r.matches_y_coordinates) << "\n";
  out << "result: " << pass_fail(r.pass()) << "\n";
  return {out.str(), "txt", r.pass()};
}

Document case242_cmd(const Options& o) {
  const Case242Report r = case242_report(o.seed);
  if (o.format == "json") return json_doc(to_json(r), r.pass());
  std::ostringstream out;
  out << "case study (2,4,2) seed " << r.seed << "\n";
  out << "identity L12*L21 - L11*L22 = " << (r.identity_sign < 0 ? "-" : "") << "M1*N1*D: " << pass_fail(r.identity_pass)
      << "\n";
  out << "D invariant: " << yes_no(r.d_invariant) << "\n";
  out << "values at Y:\n";
  for (const auto& e : r.table)
    out << "  " << std::left << std::setw(4) << e.generator << " = " << e.computed << "   published " << e.published
        << (e.sign == -1 ? "   [opposite sign]" : "") << (e.pass ? "" : "   MISMATCH") << "\n";
  out << "Jacobian rank: " << r.rank_without_d.rank << " without D, " << r.rank_with_d.rank << " with D\n";
  out << "result: " << pass_fail(r.pass()) << "\n";
  return {out.str(), "txt", r.pass()};
}

std::string default_file_name(const std::string& command, const Options& o, const std::string& ext) {
  std::string name = command;
  if (!o.type.empty()) {
    name += "-";
    for (char c : o.type) name += c == ',' ? '-' : c;
  }
  return name + "." + ext;
}

void emit(const Document& doc, const std::string& command, const Options& o, std::ostream& out, std::ostream& err) {
  std::filesystem::path path;
  if (!o.output.empty()) {
    path = o.output;
  } else if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
    path = std::filesystem::path(dir) / default_file_name(command, o, doc.extension);
  } else {
    out << doc.body;
    return;
  }
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + path.string() + "'");
  file << doc.body;
  err << "wrote " << path.string() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants and orbits of unitriangular groups on parabolic nilradicals", "nilorb"};
  app.require_subcommand(1);
  Options o;

  auto add_type = [&](CLI::App* cmd) {
    cmd->add_option("--type,-t", o.type, "Block sizes, e.g. 2,4,2")->required();
  };
  auto add_format = [&](CLI::App* cmd, std::vector<std::string> allowed) {
    cmd->add_option("--format,-f", o.format, "Output format")->check(CLI::IsMember(std::move(allowed)));
  };
  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed,-s", o.seed, "Random seed (recorded in the output)")->capture_default_str();
  };
  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--output,-o", o.output,
                    std::string("Output file; default is stdout, or a file in $") + kOutputDirEnv);
  };

  std::vector<std::pair<CLI::App*, std::function<Document(const Options&)>>> commands;

  auto* diagram = app.add_subcommand("diagram", "Root diagram with base and marked roots");
  add_type(diagram);
  add_format(diagram, {"text", "latex", "json"});
  diagram->add_option("--marks", o.marks, "Marked set")->check(CLI::IsMember({"phi", "psi"}));
  commands.emplace_back(diagram, diagram_cmd);

  auto* base = app.add_subcommand("base", "Base S, admissible pairs Q, marked sets and dimensions");
  add_type(base);
  add_format(base, {"text", "json"});
  commands.emplace_back(base, base_cmd);

  auto* invariants = app.add_subcommand("invariants", "Generator polynomials M and L");
  add_type(invariants);
  add_format(invariants, {"text", "json", "latex"});
  commands.emplace_back(invariants, invariants_cmd);

  auto* verify = app.add_subcommand("verify", "Invariance, independence, slice form and corank checks");
  add_type(verify);
  add_format(verify, {"text", "json"});
  add_seed(verify);
  commands.emplace_back(verify, verify_cmd);

  auto* orbit = app.add_subcommand("orbit-dim", "Largest sampled orbit dimension against the prediction");
  add_type(orbit);
  add_format(orbit, {"text", "json"});
  add_seed(orbit);
  orbit->add_option("--trials", o.trials, "Number of random points")->check(CLI::PositiveNumber)->capture_default_str();
  commands.emplace_back(orbit, orbit_dim_cmd);

  auto* reduce = app.add_subcommand("reduce", "Conjugate a point of U0 into the canonical slice");
  add_type(reduce);
  add_format(reduce, {"text", "json"});
  reduce->add_option("--point,-p", o.point, "JSON file {n, entries: [[i, j, \"p/q\"], ...]}")->required();
  commands.emplace_back(reduce, reduce_cmd);

  auto* c242 = app.add_subcommand("case242", "Full report for type (2,4,2)");
  add_format(c242, {"text", "json"});
  add_seed(c242);
  commands.emplace_back(c242, case242_cmd);

  for (auto& [cmd, fn] : commands) add_output(cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  for (auto& [cmd, fn] : commands) {
    if (!cmd->parsed()) continue;
    try {
      const Document doc = fn(o);
      emit(doc, cmd->get_name(), o, out, err);
      return doc.pass ? kPass : kCheckFailed;
    } catch (const UsageError& e) {
      err << "error: " << e.what() << "\n";
      return kUsage;
    }
  }
  err << "error: no subcommand\n";
  return kUsage;
}

}  // namespace nilorb::cli
