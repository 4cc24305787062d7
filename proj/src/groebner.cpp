#include "incseq/groebner.hpp"

#include <algorithm>
#include <set>

namespace incseq {

std::string to_string(IdealKind kind) {
  switch (kind) {
    case IdealKind::full:
      return "full";
    case IdealKind::downset:
      return "downset";
    case IdealKind::strict:
      return "strict";
  }
  return {};
}

IdealKind parse_ideal_kind(std::string_view text) {
  if (text == "full") return IdealKind::full;
  if (text == "downset") return IdealKind::downset;
  if (text == "strict") return IdealKind::strict;
  throw Error("unknown ideal kind '" + std::string(text) + "' (expected full, strict or downset)");
}

Polynomial interval_product(const std::vector<Interval>& parts, const Embedding& emb) {
  const int n = static_cast<int>(parts.size());
  Field field = emb.field();
  Polynomial f = Polynomial::constant(field, n, field.one());
  for (int j = 0; j < n; ++j) {
    const auto& iv = parts[static_cast<std::size_t>(j)];
    for (int t = iv.lo; t <= iv.hi; ++t) {
      Polynomial factor = Polynomial::variable(field, n, j + 1);
      factor.add_term(-emb(t), Monomial::one(n));
      f = f * factor;
    }
  }
  return f;
}

std::vector<Polynomial> GroebnerBasis::polynomials() const {
  std::vector<Polynomial> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) out.push_back(e.polynomial);
  return out;
}

bool GroebnerBasis::is_reduced() const {
  std::vector<Monomial> leads;
  for (const auto& e : elements_) {
    if (!e.polynomial.leading_coefficient(order_).is_one()) return false;
    leads.push_back(e.polynomial.leading_monomial(order_));
  }
  for (std::size_t i = 0; i < elements_.size(); ++i)
    for (const auto& [m, c] : elements_[i].polynomial.terms())
      for (std::size_t j = 0; j < leads.size(); ++j) {
        if (j == i) continue;
        if (leads[j].divides(m)) return false;
      }
  return true;
}

namespace {

void check_embedding(int n, int q, const Embedding& emb) {
  if (n < 1 || q < 1) throw Error("n and q must be positive");
  if (emb.q() != q)
    throw Error("embedding covers [" + std::to_string(emb.q()) + "] but q = " + std::to_string(q));
}

}  // namespace

GroebnerBasis gb_full(int n, int q, const Embedding& emb, TermOrder order) {
  check_embedding(n, q, emb);
  GroebnerBasis gb(IdealKind::full, n, q, emb, order);
  for (auto& d : enumerate_decompositions(n, q, Decomposition::Kind::good))
    gb.elements_.push_back({d.parts, interval_product(d.parts, emb)});
  gb.standard_ = monomials_up_to_degree(n, q - 1, order);
  gb.points_ = embedded_points(n, q, emb);
  return gb;
}

GroebnerBasis gb_strict(int n, int q, const Embedding& emb, TermOrder order) {
  check_embedding(n, q, emb);
  if (q < n) throw Error("strictly increasing sequences need q >= n");
  GroebnerBasis gb(IdealKind::strict, n, q, emb, order);
  for (auto& d : enumerate_decompositions(n, q, Decomposition::Kind::super))
    gb.elements_.push_back({d.parts, interval_product(d.parts, emb)});
  gb.standard_ = monomials_up_to_degree(n, q - n, order);
  gb.points_ = embedded_points(n, q, emb, true);
  return gb;
}

GroebnerBasis gb_downset(int n, int q, const std::vector<IncSeq>& downset, const Embedding& emb, TermOrder order,
                         bool drop_redundant) {
  check_embedding(n, q, emb);
  if (downset.empty()) throw Error("the downset must be nonempty");
  if (!validate_downset(downset, n, q)) throw Error("the given point set is not a downset of I(n,q)");
  GroebnerBasis gb(IdealKind::downset, n, q, emb, order);
  for (auto& d : enumerate_decompositions(n, q, Decomposition::Kind::good))
    gb.elements_.push_back({d.parts, interval_product(d.parts, emb)});
  const std::set<IncSeq> members(downset.begin(), downset.end());
  for (const auto& g : enumerate_incseq(n, q)) {
    if (members.count(g)) continue;
    auto parts = downset_intervals(g);
    gb.elements_.push_back({parts, interval_product(parts, emb)});
  }
  if (drop_redundant) {
    std::vector<BasisElement> kept;
    std::vector<Monomial> leads;
    for (auto& e : gb.elements_) {
      const Monomial lm = e.polynomial.leading_monomial(order);
      bool redundant = false;
      for (const auto& l : leads) redundant = redundant || l.divides(lm);
      if (redundant) continue;
      leads.push_back(lm);
      kept.push_back(std::move(e));
    }
    gb.elements_ = std::move(kept);
  }
  for (const auto& g : members) gb.standard_.emplace_back(phi(g));
  std::sort(gb.standard_.begin(), gb.standard_.end(), TermLess{order});
  for (const auto& g : members) gb.points_.push_back(emb.apply(g));
  return gb;
}

HilbertValue hilbert(IdealKind kind, int n, int q, int s) {
  if (n < 1 || q < 1) throw Error("n and q must be positive");
  if (s < 0) throw Error("the Hilbert function is defined for s >= 0");
  int top = 0;
  switch (kind) {
    case IdealKind::full:
      top = q - 1;
      break;
    case IdealKind::strict:
      if (q < n) throw Error("strictly increasing sequences need q >= n");
      top = q - n;
      break;
    case IdealKind::downset:
      throw Error("hilbert is defined here for the full and strict kinds only");
  }
  const int effective = std::min(s, top);
  return {binomial(static_cast<std::uint64_t>(n + effective), static_cast<std::uint64_t>(effective)), s <= top};
}

NonvanishingWitness nonvanishing_point(const Polynomial& f, IdealKind kind, int n, int q, const Embedding& emb) {
  check_embedding(n, q, emb);
  if (f.width() != n) throw Error("polynomial width does not match n");
  if (!(f.field() == emb.field()) && !f.is_zero()) throw Error("polynomial and embedding use different fields");
  int bound = 0;
  bool strict = false;
  switch (kind) {
    case IdealKind::full:
      bound = q - 1;
      break;
    case IdealKind::strict:
      if (q < n) throw Error("strictly increasing sequences need q >= n");
      bound = q - n;
      strict = true;
      break;
    case IdealKind::downset:
      throw Error("the nonvanishing guarantee covers the full and strict kinds only");
  }
  if (f.degree() > bound)
    throw Error("deg f = " + std::to_string(f.degree()) + " exceeds the bound " + std::to_string(bound) +
                "; no nonvanishing guarantee applies");
  if (f.is_zero()) return std::nullopt;
  for (const auto& s : enumerate_incseq(n, q, strict)) {
    Point p = emb.apply(s);
    if (!f.eval(p).is_zero()) return p;
  }
  throw Error("nonzero polynomial of admissible degree vanishes on every point; the closed-form basis is wrong");
}

}  // namespace incseq
