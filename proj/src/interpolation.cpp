#include "incseq/interpolation.hpp"

#include <algorithm>

namespace incseq {

Polynomial LinearFactor::polynomial() const {
  const int n = static_cast<int>(coeffs.size());
  Polynomial p(constant.field(), n);
  for (int j = 0; j < n; ++j) p.add_term(coeffs[static_cast<std::size_t>(j)], Monomial::variable(n, j + 1));
  p.add_term(constant, Monomial::one(n));
  return p;
}

namespace {

void append_signed(std::string& out, const Element& c, const std::string& body) {
  const bool neg = !c.field().is_finite() && sgn(c.rational()) < 0;
  const Element mag = neg ? -c : c;
  std::string text;
  if (body.empty())
    text = mag.to_string();
  else
    text = mag.is_one() ? body : mag.to_string() + "*" + body;
  if (out.empty())
    out = neg ? "-" + text : text;
  else
    out += (neg ? " - " : " + ") + text;
}

}  // namespace

std::string LinearFactor::to_string() const {
  std::string out;
  for (std::size_t j = coeffs.size(); j-- > 0;)
    if (!coeffs[j].is_zero()) append_signed(out, coeffs[j], "x" + std::to_string(j + 1));
  if (!constant.is_zero() || out.empty()) append_signed(out, constant, "");
  return out;
}

Polynomial FactoredForm::expand() const {
  Polynomial p = Polynomial::constant(scalar.field(), n, scalar);
  for (const auto& f : factors) p = p * f.polynomial();
  return p;
}

std::string FactoredForm::product_string() const {
  if (factors.empty()) return "1";
  std::string out;
  for (const auto& f : factors) out += "(" + f.to_string() + ")";
  return out;
}

std::vector<LinearFactor> grid_delta_factors(const IncSeq& s, int q, const Embedding& emb) {
  if (!emb.is_grid()) throw Error("the factored form needs a grid embedding");
  const int n = static_cast<int>(s.size());
  if (!is_nondecreasing(s, q)) throw Error("point " + format_seq(s) + " is not in I(n,q)");
  Field field = emb.field();
  auto make = [&](int var, const Element& c_var, int other, const Element& c_other, const Element& constant) {
    LinearFactor f{std::vector<Element>(static_cast<std::size_t>(n), field.zero()), constant};
    f.coeffs[static_cast<std::size_t>(var)] = c_var;
    if (other >= 0) f.coeffs[static_cast<std::size_t>(other)] = c_other;
    return f;
  };
  std::vector<LinearFactor> out;
  const Element one = field.one();
  for (int t = 1; t < s.front(); ++t) out.push_back(make(0, one, -1, one, -emb(t)));
  for (int t = s.back() + 1; t <= q; ++t) out.push_back(make(n - 1, one, -1, one, -emb(t)));
  for (int j = n - 1; j >= 1; --j) {
    const int gap = s[static_cast<std::size_t>(j)] - s[static_cast<std::size_t>(j - 1)];
    for (int c = 0; c < gap; ++c) out.push_back(make(j, one, j - 1, -one, -field.from_int(c)));
  }
  return out;
}

// ---------------------------------------------------------------------------

Interpolator::Interpolator(int n, int q, const Embedding& emb)
    : n_(n), q_(q), emb_(emb), seqs_(enumerate_incseq(n, q)), monomials_(monomials_up_to_degree(n, q - 1, TermOrder::deglex)) {
  if (emb.q() != q) throw Error("embedding does not match q");
  Field field = emb.field();
  Matrix eval(field, seqs_.size(), monomials_.size());
  for (std::size_t r = 0; r < seqs_.size(); ++r) {
    const Point p = emb.apply(seqs_[r]);
    for (std::size_t c = 0; c < monomials_.size(); ++c) {
      Element v = field.one();
      for (int j = 0; j < n; ++j) v *= p[static_cast<std::size_t>(j)].pow(static_cast<std::uint64_t>(monomials_[c][static_cast<std::size_t>(j)]));
      eval(r, c) = v;
    }
  }
  auto inv = inverse(eval);
  if (!inv) throw Error("evaluation matrix on J(n,q) is singular; the embedding is not injective");
  inverse_ = std::move(*inv);
}

Polynomial Interpolator::column_polynomial(std::size_t point_index) const {
  Polynomial p(emb_.field(), n_);
  for (std::size_t c = 0; c < monomials_.size(); ++c) p.add_term(inverse_(c, point_index), monomials_[c]);
  return p;
}

InterpolationBasisElement Interpolator::basis_element(const IncSeq& s) const {
  if (static_cast<int>(s.size()) != n_ || !is_nondecreasing(s, q_))
    throw Error("point " + format_seq(s) + " is not in I(" + std::to_string(n_) + "," + std::to_string(q_) + ")");
  auto it = std::lower_bound(seqs_.begin(), seqs_.end(), s);
  InterpolationBasisElement out{s, column_polynomial(static_cast<std::size_t>(it - seqs_.begin())), std::nullopt};
  if (emb_.is_grid()) {
    FactoredForm form{n_, emb_.field().one(), grid_delta_factors(s, q_, emb_)};
    const Element at_s = form.expand().eval(emb_.apply(s));
    form.scalar = at_s.inverse();
    out.factored = std::move(form);
  }
  return out;
}

Polynomial Interpolator::interpolate(const std::map<IncSeq, Element>& values) const {
  Field field = emb_.field();
  std::vector<Element> rhs;
  rhs.reserve(seqs_.size());
  for (const auto& s : seqs_) {
    auto it = values.find(s);
    if (it == values.end()) throw Error("no value given for point " + format_seq(s));
    if (!(it->second.field() == field)) throw Error("value lies in a different field");
    rhs.push_back(it->second);
  }
  if (values.size() != seqs_.size()) throw Error("values given for points outside I(n,q)");
  Polynomial p(field, n_);
  for (std::size_t c = 0; c < monomials_.size(); ++c) {
    Element acc = field.zero();
    for (std::size_t r = 0; r < seqs_.size(); ++r)
      if (!rhs[r].is_zero()) acc += inverse_(c, r) * rhs[r];
    p.add_term(acc, monomials_[c]);
  }
  return p;
}

InterpolationBasisElement interp_basis_element(const IncSeq& s, int n, int q, const Embedding& emb) {
  return Interpolator(n, q, emb).basis_element(s);
}

Polynomial interp_function(const std::map<IncSeq, Element>& values, int n, int q, const Embedding& emb) {
  return Interpolator(n, q, emb).interpolate(values);
}

}  // namespace incseq
