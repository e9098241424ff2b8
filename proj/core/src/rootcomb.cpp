#include <nilorb/rootcomb.hpp>

#include <algorithm>
#include <charconv>
#include <functional>
#include <set>
#include <stdexcept>

namespace nilorb {

std::string Root::to_string() const {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

ParabolicType::ParabolicType(std::vector<int> block_sizes) : sizes_(std::move(block_sizes)) {
  if (sizes_.empty()) throw std::invalid_argument("parabolic type needs at least one block");
  int start = 1;
  block_index_.push_back(-1);
  for (std::size_t b = 0; b < sizes_.size(); ++b) {
    if (sizes_[b] < 1) throw std::invalid_argument("block sizes must be positive");
    starts_.push_back(start);
    for (int k = 0; k < sizes_[b]; ++k) block_index_.push_back(static_cast<int>(b));
    start += sizes_[b];
  }
  n_ = start - 1;
  if (n_ > 127) throw std::invalid_argument("matrix size above 127 is not supported");
}

ParabolicType ParabolicType::parse(std::string_view text) {
  std::vector<int> sizes;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view field = text.substr(pos, comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
      throw std::invalid_argument("invalid block size '" + std::string(field) + "' in type '" +
                                  std::string(text) + "'");
    sizes.push_back(value);
    pos = comma + 1;
  }
  return ParabolicType(std::move(sizes));
}

int ParabolicType::block_of(int k) const {
  if (k < 1 || k > n_) throw std::out_of_range("position " + std::to_string(k) + " outside 1.." + std::to_string(n_));
  return block_index_[static_cast<std::size_t>(k)];
}

bool ParabolicType::in_nilradical(Root r) const {
  return r.i >= 1 && r.j <= n_ && r.i < r.j && block_of(r.i) < block_of(r.j);
}

bool ParabolicType::is_non_increasing() const {
  return std::is_sorted(sizes_.begin(), sizes_.end(), std::greater<>());
}

std::string ParabolicType::to_string() const {
  std::string s;
  for (std::size_t b = 0; b < sizes_.size(); ++b) {
    if (b > 0) s += ",";
    s += std::to_string(sizes_[b]);
  }
  return s;
}

std::vector<Root> nilradical_roots(const ParabolicType& type) {
  std::vector<Root> out;
  for (int i = 1; i <= type.n(); ++i)
    for (int j = i + 1; j <= type.n(); ++j)
      if (type.block_of(i) < type.block_of(j)) out.push_back({i, j});
  return out;
}

bool higher(const ParabolicType& type, Root g1, Root g2) {
  // (i, j') - (i, j) = e_j - e_j', a root of the reductive part iff j < j' in one block;
  // (i', j) - (i, j) = e_i' - e_i, iff i' < i in one block.
  if (g1.i == g2.i && g2.j < g1.j) return type.same_block(g1.j, g2.j);
  if (g1.j == g2.j && g1.i < g2.i) return type.same_block(g1.i, g2.i);
  return false;
}

// ---------------------------------------------------------------------------

Base::Base(ParabolicType type, std::vector<Root> roots) : type_(std::move(type)), roots_(std::move(roots)) {}

bool Base::contains(Root r) const { return std::find(roots_.begin(), roots_.end(), r) != roots_.end(); }

std::vector<Root> Base::sorted_by_row() const {
  auto out = roots_;
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Root> Base::in_row(int row) const {
  for (const auto& r : roots_)
    if (r.i == row) return r;
  return std::nullopt;
}

std::optional<Root> Base::in_col(int col) const {
  for (const auto& r : roots_)
    if (r.j == col) return r;
  return std::nullopt;
}

Base compute_base(const ParabolicType& type) {
  const int s = type.block_count();
  std::vector<bool> row_used(static_cast<std::size_t>(type.n() + 1), false);
  std::vector<bool> col_used(static_cast<std::size_t>(type.n() + 1), false);
  std::vector<Root> roots;
  for (int d = 1; d < s; ++d) {
    for (int a = 0; a + d < s; ++a) {
      const int b = a + d;
      std::vector<int> rows;  // lowest first
      for (int r = type.block_end(a); r >= type.block_begin(a); --r)
        if (!row_used[static_cast<std::size_t>(r)]) rows.push_back(r);
      std::vector<int> cols;  // leftmost first
      for (int c = type.block_begin(b); c <= type.block_end(b); ++c)
        if (!col_used[static_cast<std::size_t>(c)]) cols.push_back(c);
      const std::size_t m = std::min(rows.size(), cols.size());
      for (std::size_t k = 0; k < m; ++k) {
        roots.push_back({rows[k], cols[k]});
        row_used[static_cast<std::size_t>(rows[k])] = true;
        col_used[static_cast<std::size_t>(cols[k])] = true;
      }
    }
  }
  return Base(type, std::move(roots));
}

bool is_admissible(const ParabolicType& type, Root xi, Root xi_prime) {
  return xi.j < xi_prime.i && type.same_block(xi.j, xi_prime.i);
}

std::vector<AdmissiblePair> admissible_pairs(const Base& base) {
  std::vector<AdmissiblePair> out;
  for (const auto& xi : base.roots())
    for (const auto& xp : base.roots())
      if (is_admissible(base.type(), xi, xp)) out.push_back({xi, xp});
  return out;
}

std::vector<Root> marked_roots(const std::vector<AdmissiblePair>& pairs, MarkedSet which) {
  std::vector<Root> out;
  out.reserve(pairs.size());
  for (const auto& q : pairs) out.push_back(which == MarkedSet::kPhi ? q.phi() : q.psi());
  return out;
}

std::vector<Root> s_gamma(const Base& base, Root gamma) {
  std::vector<Root> out;
  for (const auto& r : base.roots())
    if (r.i > gamma.i && r.j < gamma.j) out.push_back(r);
  std::sort(out.begin(), out.end());
  return out;
}

Dimensions dims(const ParabolicType& type) {
  Dimensions d;
  const auto& sz = type.sizes();
  for (std::size_t a = 0; a < sz.size(); ++a)
    for (std::size_t b = a + 1; b < sz.size(); ++b) d.dim_m += sz[a] * sz[b];
  Base base = compute_base(type);
  auto pairs = admissible_pairs(base);
  auto phi = marked_roots(pairs);
  std::set<Root> distinct(phi.begin(), phi.end());
  d.base_size = static_cast<int>(base.size());
  d.pair_count = static_cast<int>(pairs.size());
  d.marked_count = static_cast<int>(distinct.size());
  d.predicted_regular_orbit_dim = d.dim_m - d.base_size - d.pair_count;
  d.y_dim = d.base_size + d.marked_count;
  d.consistent = d.predicted_regular_orbit_dim + d.y_dim == d.dim_m;
  return d;
}

}  // namespace nilorb
