#include "incseq/poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace incseq {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_)
    if (e < 0) throw Error("negative exponent in monomial");
}

Monomial Monomial::variable(int n, int j, int e) {
  if (j < 1 || j > n) throw Error("variable index x" + std::to_string(j) + " out of range");
  Monomial m(n);
  m.exps_[static_cast<std::size_t>(j - 1)] = e;
  return m;
}

int Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool Monomial::divides(const Monomial& other) const {
  if (width() != other.width()) throw Error("monomial width mismatch");
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (width() != other.width()) throw Error("monomial width mismatch");
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw Error("monomial division is not exact");
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= divisor.exps_[i];
  return r;
}

std::string Monomial::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(i + 1);
    if (exps_[i] > 1) s += '^' + std::to_string(exps_[i]);
  }
  return s.empty() ? "1" : s;
}

namespace {

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw Error("malformed " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

// Splits on '*' outside brackets.
std::vector<std::string> split_factors(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == '*' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// x<i> or x<i>^<e>
bool parse_variable_power(std::string_view f, int n, Monomial& m) {
  if (f.empty() || f[0] != 'x') return false;
  auto caret = f.find('^');
  int j = parse_int(f.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1), "variable");
  int e = caret == std::string_view::npos ? 1 : parse_int(f.substr(caret + 1), "exponent");
  if (e < 0) throw Error("negative exponent");
  m = m * Monomial::variable(n, j, e);
  return true;
}

}  // namespace

Monomial Monomial::parse(std::string_view text, int n) {
  const std::string s = strip_spaces(text);
  Monomial m(n);
  if (s == "1") return m;
  for (const auto& f : split_factors(s))
    if (!parse_variable_power(f, n, m)) throw Error("malformed monomial '" + s + "'");
  return m;
}

// ---------------------------------------------------------------------------
// Term orders

std::string to_string(TermOrder order) { return order == TermOrder::lex ? "lex" : "deglex"; }

TermOrder parse_term_order(std::string_view text) {
  if (text == "lex") return TermOrder::lex;
  if (text == "deglex" || text == "grlex") return TermOrder::deglex;
  throw Error("unknown term order '" + std::string(text) + "' (expected lex or deglex)");
}

bool term_less(const Monomial& u, const Monomial& v, TermOrder order) {
  if (order == TermOrder::deglex) {
    const int du = u.degree(), dv = v.degree();
    if (du != dv) return du < dv;
  }
  return u < v;
}

std::vector<Monomial> monomials_of_degree(int n, int d, TermOrder order) {
  std::vector<Monomial> out;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  // Compositions of d into n parts.
  auto rec = [&](auto&& self, int idx, int remaining) -> void {
    if (idx == n - 1) {
      e[static_cast<std::size_t>(idx)] = remaining;
      out.emplace_back(e);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      e[static_cast<std::size_t>(idx)] = v;
      self(self, idx + 1, remaining - v);
    }
  };
  if (n == 0) {
    if (d == 0) out.emplace_back(e);
  } else {
    rec(rec, 0, d);
  }
  std::sort(out.begin(), out.end(), TermLess{order});
  return out;
}

std::vector<Monomial> monomials_up_to_degree(int n, int max_degree, TermOrder order) {
  std::vector<Monomial> out;
  for (int d = 0; d <= max_degree; ++d) {
    auto layer = monomials_of_degree(n, d, order);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  std::sort(out.begin(), out.end(), TermLess{order});
  return out;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(Field field, int n, const Element& c) {
  Polynomial p(field, n);
  p.add_term(c, Monomial::one(n));
  return p;
}

Polynomial Polynomial::term(const Element& c, const Monomial& m) {
  Polynomial p(c.field(), m.width());
  p.add_term(c, m);
  return p;
}

Polynomial Polynomial::variable(Field field, int n, int j) {
  return term(field.one(), Monomial::variable(n, j));
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

void Polynomial::add_term(const Element& c, const Monomial& m) {
  if (m.width() != n_) throw Error("monomial width does not match polynomial");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::vector<std::pair<Monomial, Element>> Polynomial::sorted_terms(TermOrder order) const {
  std::vector<std::pair<Monomial, Element>> out(terms_.begin(), terms_.end());
  if (order == TermOrder::lex) {
    std::reverse(out.begin(), out.end());
  } else {
    std::stable_sort(out.begin(), out.end(),
                     [order](const auto& a, const auto& b) { return term_less(b.first, a.first, order); });
  }
  return out;
}

Monomial Polynomial::leading_monomial(TermOrder order) const {
  if (terms_.empty()) throw Error("the zero polynomial has no leading monomial");
  if (order == TermOrder::lex) return terms_.rbegin()->first;
  const Monomial* best = nullptr;
  for (const auto& [m, c] : terms_)
    if (!best || term_less(*best, m, order)) best = &m;
  return *best;
}

Element Polynomial::leading_coefficient(TermOrder order) const { return terms_.at(leading_monomial(order)); }

Element Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field_.zero() : it->second;
}

Polynomial Polynomial::homogeneous_part(int d) const {
  Polynomial out(field_, n_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) out.terms_.emplace(m, c);
  return out;
}

Element Polynomial::eval(std::span<const Element> point) const {
  if (static_cast<int>(point.size()) != n_) throw Error("evaluation point has the wrong width");
  // powers[j][e] = point[j]^e
  std::vector<std::vector<Element>> powers(static_cast<std::size_t>(n_));
  for (const auto& [m, c] : terms_)
    for (int j = 0; j < n_; ++j) {
      auto& pw = powers[static_cast<std::size_t>(j)];
      const auto e = static_cast<std::size_t>(m[static_cast<std::size_t>(j)]);
      if (pw.empty()) pw.push_back(field_.one());
      while (pw.size() <= e) pw.push_back(pw.back() * point[static_cast<std::size_t>(j)]);
    }
  Element sum = field_.zero();
  for (const auto& [m, c] : terms_) {
    Element t = c;
    for (int j = 0; j < n_; ++j) {
      const auto e = m[static_cast<std::size_t>(j)];
      if (e) t *= powers[static_cast<std::size_t>(j)][static_cast<std::size_t>(e)];
    }
    sum += t;
  }
  return sum;
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (n_ != other.n_) throw Error("polynomial width mismatch");
  if (!(field_ == other.field_)) throw Error("polynomial field mismatch");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(c, m);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(-c, m);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial r = *this;
  r += other;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial r = *this;
  r -= other;
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(field_, n_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_compatible(other);
  Polynomial r(field_, n_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) r.add_term(ca * cb, ma * mb);
  return r;
}

Polynomial Polynomial::scale(const Element& c) const {
  Polynomial r(field_, n_);
  if (c.is_zero()) return r;
  for (const auto& [m, a] : terms_) r.terms_.emplace(m, a * c);
  return r;
}

namespace {

bool is_negative(const Element& c) { return !c.field().is_finite() && sgn(c.rational()) < 0; }

}  // namespace

std::string Polynomial::to_string(TermOrder order) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : sorted_terms(order)) {
    const bool neg = is_negative(c);
    const Element mag = neg ? -c : c;
    std::string body;
    if (m.degree() == 0)
      body = mag.to_string();
    else if (mag.is_one())
      body = m.to_string();
    else
      body = mag.to_string() + "*" + m.to_string();
    if (first)
      s += neg ? "-" + body : body;
    else
      s += (neg ? " - " : " + ") + body;
    first = false;
  }
  return s;
}

Polynomial Polynomial::parse(std::string_view text, Field field, int n) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw Error("empty polynomial");
  Polynomial result(field, n);
  std::size_t pos = 0;
  int depth = 0;
  while (pos < s.size()) {
    bool negate = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negate = s[pos] == '-';
      ++pos;
    }
    std::size_t end = pos;
    for (; end < s.size(); ++end) {
      char c = s[end];
      if (c == '[') ++depth;
      if (c == ']') --depth;
      if (depth == 0 && (c == '+' || c == '-') && end > pos && s[end - 1] != '^' && s[end - 1] != '*' &&
          s[end - 1] != '/')
        break;
    }
    const std::string term_text = s.substr(pos, end - pos);
    if (term_text.empty()) throw Error("malformed polynomial '" + std::string(text) + "'");
    Element coeff = field.one();
    Monomial mono(n);
    for (const auto& f : split_factors(term_text)) {
      if (f.empty()) throw Error("malformed term '" + term_text + "'");
      if (!parse_variable_power(f, n, mono)) coeff *= field.parse(f);
    }
    result.add_term(negate ? -coeff : coeff, mono);
    pos = end;
  }
  return result;
}

// ---------------------------------------------------------------------------

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis, TermOrder order) {
  std::vector<Monomial> leads;
  std::vector<Element> lead_inv;
  for (const auto& g : basis) {
    if (g.width() != f.width()) throw Error("basis polynomial width mismatch");
    if (!(g.field() == f.field())) throw Error("basis polynomial field mismatch");
    if (g.is_zero()) throw Error("basis contains the zero polynomial");
    leads.push_back(g.leading_monomial(order));
    lead_inv.push_back(g.leading_coefficient(order).inverse());
  }
  Polynomial remainder(f.field(), f.width());
  Polynomial work = f;
  while (!work.is_zero()) {
    const Monomial m = work.leading_monomial(order);
    const Element c = work.coefficient(m);
    std::size_t i = 0;
    while (i < leads.size() && !leads[i].divides(m)) ++i;
    if (i == leads.size()) {
      remainder.add_term(c, m);
      work.add_term(-c, m);
    } else {
      work -= basis[i] * Polynomial::term(c * lead_inv[i], m / leads[i]);
    }
  }
  return remainder;
}

Polynomial product(std::span<const Polynomial> factors, Field field, int n) {
  Polynomial r = Polynomial::constant(field, n, field.one());
  for (const auto& f : factors) r = r * f;
  return r;
}

}  // namespace incseq
