#include <nilorb/report_json.hpp>

#include <set>
#include <sstream>
#include <stdexcept>

namespace nilorb {

Json to_json(Root r) { return Json::array({r.i, r.j}); }

namespace {

Json roots_json(const std::vector<Root>& roots) {
  Json arr = Json::array();
  for (const auto& r : roots) arr.push_back(to_json(r));
  return arr;
}

Json bools_json(const std::vector<bool>& v) {
  Json arr = Json::array();
  for (bool b : v) arr.push_back(b);
  return arr;
}

Json independence_json(const IndependenceResult& r) {
  return Json{{"seed", r.seed}, {"rank", r.rank}, {"attempts", r.attempts}};
}

}  // namespace

Json to_json(const Dimensions& d) {
  return Json{{"dim_m", d.dim_m},
              {"base_size", d.base_size},
              {"pair_count", d.pair_count},
              {"marked_count", d.marked_count},
              {"predicted_regular_orbit_dim", d.predicted_regular_orbit_dim},
              {"y_dim", d.y_dim},
              {"consistent", d.consistent}};
}

Json to_json(const MatrixPoint& x) {
  Json entries = Json::array();
  for (int i = 1; i <= x.size(); ++i)
    for (int j = 1; j <= x.size(); ++j)
      if (x.at(i, j) != 0) entries.push_back(Json::array({i, j, to_string(x.at(i, j))}));
  return Json{{"n", x.size()}, {"entries", entries}};
}

Json to_json(const GroupElement& g) {
  Json entries = Json::array();
  for (int i = 1; i <= g.size(); ++i)
    for (int j = i + 1; j <= g.size(); ++j)
      if (g.at(i, j) != 0) entries.push_back(Json::array({i, j, to_string(g.at(i, j))}));
  return Json{{"n", g.size()}, {"unitriangular", true}, {"entries", entries}};
}

Json base_listing_json(const ParabolicType& type) {
  Base base = compute_base(type);
  auto pairs = admissible_pairs(base);
  Json qs = Json::array();
  for (const auto& q : pairs)
    qs.push_back(Json{{"xi", to_json(q.xi)},
                      {"xi_prime", to_json(q.xi_prime)},
                      {"alpha", to_json(q.alpha())},
                      {"phi", to_json(q.phi())},
                      {"psi", to_json(q.psi())}});
  return Json{{"type", type.to_string()},
              {"n", type.n()},
              {"blocks", type.sizes()},
              {"base", roots_json(base.roots())},
              {"pairs", qs},
              {"phi", roots_json(marked_roots(pairs, MarkedSet::kPhi))},
              {"psi", roots_json(marked_roots(pairs, MarkedSet::kPsi))},
              {"dims", to_json(dims(type))}};
}

Json generator_set_json(const GeneratorSet& gens) {
  Json polys = Json::array();
  for (std::size_t k = 0; k < gens.base_minors.size(); ++k)
    polys.push_back(Json{{"name", gens.base_label(k)},
                         {"kind", "base"},
                         {"root", to_json(gens.base.roots()[k])},
                         {"polynomial", gens.base_minors[k].to_string()}});
  for (std::size_t k = 0; k < gens.pair_polys.size(); ++k)
    polys.push_back(Json{{"name", gens.pair_label(k)},
                         {"kind", "pair"},
                         {"pair", Json::array({to_json(gens.pairs[k].xi), to_json(gens.pairs[k].xi_prime)})},
                         {"polynomial", gens.pair_polys[k].to_string()}});
  for (const auto& e : gens.extras)
    polys.push_back(Json{{"name", e.name}, {"kind", "extra"}, {"polynomial", e.poly.to_string()}});
  Json pairs = Json::array();
  for (const auto& q : gens.pairs) pairs.push_back(Json::array({to_json(q.xi), to_json(q.xi_prime)}));
  return Json{{"type", gens.type.to_string()},
              {"base", roots_json(gens.base.roots())},
              {"pairs", pairs},
              {"polynomials", polys}};
}

Json to_json(const VerificationReport& r) {
  Json gens = Json::array();
  for (const auto& g : r.generators) {
    Json item{{"name", g.label},
              {"kind", g.kind},
              {"invariant_by_k", bools_json(g.invariant_by_k)},
              {"invariant", g.invariant}};
    if (g.kind != "extra") {
      item["slice_image"] = g.slice_image;
      item["slice_form"] = g.slice_form;
    }
    gens.push_back(std::move(item));
  }
  Json indep = Json::array();
  Json seeds = Json::array();
  for (const auto& i : r.independence) {
    indep.push_back(independence_json(i));
    seeds.push_back(i.seed);
  }
  return Json{{"type", r.type.to_string()},
              {"seed", r.seed},
              {"seeds", seeds},
              {"dims", to_json(r.dimensions)},
              {"generators", gens},
              {"independence", indep},
              {"expected_rank", r.expected_rank},
              {"weight_corank", r.weight_corank},
              {"slice_corank", r.slice_corank},
              {"trdeg", Json{{"invariant_field", r.trdeg_invariant_field}, {"borel_field", r.trdeg_borel_field}}},
              {"checks", Json{{"invariance", r.invariance_pass},
                              {"independence", r.independence_pass},
                              {"slice_form", r.slice_pass},
                              {"corank", r.corank_pass}}},
              {"pass", r.pass()}};
}

Json to_json(const OrbitExperiment& e) {
  return Json{{"type", e.type.to_string()}, {"seed", e.seed},         {"trials", e.trials},
              {"dims", to_json(e.dimensions)}, {"max_rank", e.max_rank}, {"predicted", e.predicted},
              {"covered", e.covered},           {"exceeds", e.exceeds},   {"pass", e.pass}};
}

Json to_json(const UniquenessReport& r) {
  return Json{{"g", to_json(r.reduction.g)},
              {"y", to_json(r.reduction.y)},
              {"checks", Json{{"conjugation_consistent", r.conjugation_consistent},
                              {"in_slice", r.in_slice},
                              {"invariants_preserved", r.invariants_preserved},
                              {"matches_y_coordinates", r.matches_y_coordinates}}},
              {"pass", r.pass()}};
}

Json to_json(const Case242Report& r) {
  Json table = Json::array();
  for (const auto& e : r.table)
    table.push_back(Json{{"generator", e.generator},
                         {"computed", e.computed},
                         {"published", e.published},
                         {"sign", e.sign},
                         {"sign_must_match", e.sign_must_match},
                         {"pass", e.pass}});
  return Json{{"type", "2,4,2"},
              {"seed", r.seed},
              {"identity", Json{{"statement", "L12*L21 - L11*L22 = sign * M1*N1*D"},
                                {"sign", r.identity_sign},
                                {"lhs_terms", r.identity_lhs_terms},
                                {"pass", r.identity_pass}}},
              {"d_invariance", Json{{"invariant_by_k", bools_json(r.d_invariant_by_k)}, {"invariant", r.d_invariant}}},
              {"evaluation_table", table},
              {"table_pass", r.table_pass},
              {"jacobian", Json{{"without_d", independence_json(r.rank_without_d)},
                                {"with_d", independence_json(r.rank_with_d)},
                                {"pass", r.rank_pass}}},
              {"pass", r.pass()}};
}

MatrixPoint point_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
    throw std::invalid_argument("point must be an object with n and entries");
  if (!j.at("n").is_number_integer()) throw std::invalid_argument("n must be an integer");
  const int n = j.at("n").get<int>();
  if (n < 1 || n > Var::kMaxIndex) throw std::invalid_argument("n out of range");
  MatrixPoint x(n);
  std::set<std::pair<int, int>> seen;
  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw std::invalid_argument("entry must be [i, j, \"p/q\"]");
    const int r = e[0].get<int>();
    const int c = e[1].get<int>();
    if (r < 1 || r > n || c < 1 || c > n) throw std::invalid_argument("entry index out of range");
    if (!seen.insert({r, c}).second) throw std::invalid_argument("duplicate entry");
    if (e[2].is_string()) x.at(r, c) = parse_rational(e[2].get<std::string>());
    else if (e[2].is_number_integer()) x.at(r, c) = Rational(Integer(e[2].dump()));
    else throw std::invalid_argument("entry values must be exact rationals (string \"p/q\" or integer)");
  }
  return x;
}

std::string generator_set_latex(const GeneratorSet& gens) {
  std::ostringstream out;
  auto label = [](const std::string& s) {
    // M(2,3) -> M_{(2,3)}, L(2,3|6,7) -> L_{(2,3),(6,7)}
    std::string body = s.substr(1);
    for (auto& ch : body)
      if (ch == '|') ch = ';';
    return s.substr(0, 1) + "_{" + body + "}";
  };
  out << "% Generators for type (" << gens.type.to_string() << ")\n";
  out << "\\begin{align*}\n";
  std::vector<std::pair<std::string, const Polynomial*>> rows;
  for (std::size_t k = 0; k < gens.base_minors.size(); ++k) rows.emplace_back(label(gens.base_label(k)), &gens.base_minors[k]);
  for (std::size_t k = 0; k < gens.pair_polys.size(); ++k) rows.emplace_back(label(gens.pair_label(k)), &gens.pair_polys[k]);
  for (const auto& e : gens.extras) rows.emplace_back(e.name, &e.poly);
  for (std::size_t k = 0; k < rows.size(); ++k)
    out << rows[k].first << " &= " << rows[k].second->to_latex() << (k + 1 < rows.size() ? " \\\\\n" : "\n");
  out << "\\end{align*}\n";
  return out.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace nilorb
