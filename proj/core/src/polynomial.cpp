#include <nilorb/polynomial.hpp>

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace nilorb {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto valid = [](const std::string& part) {
    std::size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (start >= part.size()) return false;
    return std::all_of(part.begin() + static_cast<std::ptrdiff_t>(start), part.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num) || !valid(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational: " + s);
  if (num[0] == '+') num.erase(0, 1);
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  Rational q{Integer(num), d};
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

// ---------------------------------------------------------------------------

std::string Var::name() const {
  if (is_param()) return "t";
  if (row() < 10 && col() < 10) return "x" + std::to_string(row()) + std::to_string(col());
  return "x{" + std::to_string(row()) + "," + std::to_string(col()) + "}";
}

std::string Var::latex() const {
  if (is_param()) return "t";
  if (row() < 10 && col() < 10)
    return "x_{" + std::to_string(row()) + std::to_string(col()) + "}";
  return "x_{" + std::to_string(row()) + "," + std::to_string(col()) + "}";
}

Monomial::Monomial(Var v, unsigned exponent) {
  if (exponent > 0) factors_.emplace_back(v, exponent);
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

unsigned Monomial::exponent(Var v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const auto& f, Var key) { return f.first < key; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::without(Var v) const {
  Monomial out;
  for (const auto& f : factors_)
    if (f.first != v) out.factors_.push_back(f);
  return out;
}

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  for (; i < fa.size() && i < fb.size(); ++i) {
    if (fa[i].first != fb[i].first) {
      // The monomial carrying the earlier variable has the larger exponent there.
      return fa[i].first < fb[i].first ? std::strong_ordering::greater
                                       : std::strong_ordering::less;
    }
    if (auto c = fa[i].second <=> fb[i].second; c != 0) return c;
  }
  if (i < fa.size()) return std::strong_ordering::greater;
  if (i < fb.size()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------

void PolynomialBuilder::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = acc_.try_emplace(m, c);
  if (!inserted) it->second += c;
}

void PolynomialBuilder::add(const Polynomial& p, const Monomial& shift, const Rational& scale) {
  if (scale == 0) return;
  const bool plain_shift = shift.is_one();
  const bool plain_scale = scale == 1;
  for (const auto& [m, c] : p.terms()) {
    if (plain_shift && plain_scale) add(m, c);
    else if (plain_shift) add(m, c * scale);
    else add(m * shift, plain_scale ? c : Rational(c * scale));
  }
}

Polynomial PolynomialBuilder::build() && {
  std::vector<Polynomial::Term> terms;
  terms.reserve(acc_.size());
  for (auto& [m, c] : acc_)
    if (c != 0) terms.emplace_back(m, std::move(c));
  Polynomial out;
  // Already sorted and zero-free.
  out = Polynomial::from_terms(std::move(terms));
  return out;
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.emplace_back(Monomial{}, c);
}

Polynomial Polynomial::variable(Var v) {
  Polynomial p;
  p.terms_.emplace_back(Monomial(v), Rational(1));
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  Polynomial p;
  bool canonical = std::is_sorted(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return grlex_compare(a.first, b.first) == std::strong_ordering::greater;
  });
  if (canonical) {
    for (std::size_t i = 1; i < terms.size() && canonical; ++i)
      canonical = !(terms[i].first == terms[i - 1].first);
    for (const auto& t : terms) canonical = canonical && t.second != 0;
  }
  if (canonical) {
    p.terms_ = std::move(terms);
    return p;
  }
  PolynomialBuilder b;
  for (auto& [m, c] : terms) b.add(m, c);
  return std::move(b).build();
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

unsigned Polynomial::total_degree() const {
  // Terms are grlex-descending, so the leading term has maximal degree.
  return terms_.empty() ? 0 : terms_.front().first.degree();
}

unsigned Polynomial::degree_in(Var v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.exponent(v));
  return d;
}

std::set<Var> Polynomial::variables() const {
  std::set<Var> vars;
  for (const auto& t : terms_)
    for (const auto& f : t.first.factors()) vars.insert(f.first);
  return vars;
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
  return 0;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

namespace {

// Merges two canonical term lists; sign = +1 or -1 for the second operand.
std::vector<Polynomial::Term> merge_terms(const std::vector<Polynomial::Term>& a,
                                          const std::vector<Polynomial::Term>& b, int sign) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    std::strong_ordering c = std::strong_ordering::equal;
    if (i == a.size()) c = std::strong_ordering::less;
    else if (j == b.size()) c = std::strong_ordering::greater;
    else c = grlex_compare(a[i].first, b[j].first);
    if (c == std::strong_ordering::greater) {
      out.push_back(a[i++]);
    } else if (c == std::strong_ordering::less) {
      out.emplace_back(b[j].first, sign > 0 ? Rational(b[j].second) : Rational(-b[j].second));
      ++j;
    } else {
      Rational s = sign > 0 ? Rational(a[i].second + b[j].second)
                            : Rational(a[i].second - b[j].second);
      if (s != 0) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  terms_ = merge_terms(terms_, other.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  terms_ = merge_terms(terms_, other.terms_, -1);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_constant()) {
    Polynomial out = b;
    return out *= a.terms_.front().second;
  }
  if (b.is_constant()) {
    Polynomial out = a;
    return out *= b.terms_.front().second;
  }
  PolynomialBuilder builder;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) builder.add(ma * mb, ca * cb);
  return std::move(builder).build();
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].first == other.terms_[i].first) || terms_[i].second != other.terms_[i].second)
      return false;
  return true;
}

Polynomial Polynomial::substitute(const std::map<Var, Polynomial>& assignment) const {
  // Powers of substituted variables are cached per (variable, exponent).
  std::map<std::pair<Var, unsigned>, Polynomial> powers;
  auto power_of = [&](Var v, unsigned e) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, assignment.at(v).pow(e)).first;
    return it->second;
  };

  PolynomialBuilder builder;
  for (const auto& [m, c] : terms_) {
    Monomial kept;
    Polynomial image(c);
    for (const auto& [v, e] : m.factors()) {
      if (assignment.count(v) != 0) image *= power_of(v, e);
      else kept = kept * Monomial(v, e);
      if (image.is_zero()) break;
    }
    builder.add(image, kept);
  }
  return std::move(builder).build();
}

Polynomial Polynomial::restrict_to(const std::function<bool(Var)>& keep) const {
  std::vector<Term> kept;
  for (const auto& t : terms_) {
    bool ok = std::all_of(t.first.factors().begin(), t.first.factors().end(),
                          [&](const auto& f) { return keep(f.first); });
    if (ok) kept.push_back(t);
  }
  Polynomial p;
  p.terms_ = std::move(kept);
  return p;
}

Rational Polynomial::evaluate(const std::function<Rational(Var)>& value) const {
  std::map<Var, Rational> cache;
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = cache.find(v);
      if (it == cache.end()) it = cache.emplace(v, value(v)).first;
      for (unsigned k = 0; k < e; ++k) term *= it->second;
      if (term == 0) break;
    }
    sum += term;
  }
  return sum;
}

Polynomial Polynomial::derivative(Var v) const {
  PolynomialBuilder builder;
  for (const auto& [m, c] : terms_) {
    unsigned e = m.exponent(v);
    if (e == 0) continue;
    Monomial reduced = m.without(v);
    if (e > 1) reduced = reduced * Monomial(v, e - 1);
    builder.add(reduced, c * e);
  }
  return std::move(builder).build();
}

namespace {

using Namer = std::function<std::string(Var)>;

std::string monomial_text(const Monomial& m, bool latex, const Namer& namer) {
  std::string out;
  for (const auto& [v, e] : m.factors()) {
    if (!out.empty() && !latex) out += "*";
    out += namer(v);
    if (e > 1) out += latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
  }
  return out;
}

std::string render(const std::vector<Polynomial::Term>& terms, bool latex, const Namer& namer) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string body = monomial_text(m, latex, namer);
    if (body.empty()) {
      out += latex && mag.get_den() != 1
                 ? "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}"
                 : mag.get_str();
    } else if (mag == 1) {
      out += body;
    } else if (latex) {
      out += mag.get_den() != 1
                 ? "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}"
                 : mag.get_str();
      out += body;
    } else {
      out += mag.get_str() + "*" + body;
    }
  }
  return out;
}

}  // namespace

std::string Polynomial::to_string() const {
  return render(terms_, false, [](Var v) { return v.name(); });
}
std::string Polynomial::to_string(const std::function<std::string(Var)>& namer) const {
  return render(terms_, false, namer);
}
std::string Polynomial::to_latex() const {
  return render(terms_, true, [](Var v) { return v.latex(); });
}

// ---------------------------------------------------------------------------

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  Polynomial parse() {
    PolynomialBuilder builder;
    skip_ws();
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    while (true) {
      auto [m, c] = parse_term();
      builder.add(m, sign > 0 ? c : Rational(-c));
      skip_ws();
      if (pos_ == s_.size()) break;
      char op = s_[pos_++];
      if (op == '+') sign = 1;
      else if (op == '-') sign = -1;
      else fail("expected '+' or '-'");
    }
    return std::move(builder).build();
  }

 private:
  std::pair<Monomial, Rational> parse_term() {
    skip_ws();
    Rational coef = 1;
    Monomial mono;
    bool any = false;
    while (true) {
      skip_ws();
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isdigit(static_cast<unsigned char>(s_[pos_])) != 0 || s_[pos_] == '/'))
          ++pos_;
        coef *= parse_rational(s_.substr(start, pos_ - start));
      } else if (c == 'x' || c == 't') {
        Var v = parse_var();
        unsigned e = 1;
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          skip_ws();
          e = static_cast<unsigned>(parse_uint());
        }
        mono = mono * Monomial(v, e);
      } else {
        fail("expected factor");
      }
      any = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    return {mono, coef};
  }

  Var parse_var() {
    char c = s_[pos_++];
    if (c == 't') return Var::param();
    if (peek() == '{') {
      ++pos_;
      int r = parse_uint();
      expect(',');
      int col = parse_uint();
      expect('}');
      return checked(r, col);
    }
    if (pos_ + 2 > s_.size() || std::isdigit(static_cast<unsigned char>(s_[pos_])) == 0 ||
        std::isdigit(static_cast<unsigned char>(s_[pos_ + 1])) == 0)
      fail("variable needs two digits or braces");
    int r = s_[pos_] - '0';
    int col = s_[pos_ + 1] - '0';
    pos_ += 2;
    return checked(r, col);
  }

  Var checked(int r, int c) {
    if (r < 1 || c < 1 || r > Var::kMaxIndex || c > Var::kMaxIndex) fail("index out of range");
    return Var::entry(r, c);
  }

  int parse_uint() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at " + std::to_string(pos_) + ": " +
                                what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace nilorb
