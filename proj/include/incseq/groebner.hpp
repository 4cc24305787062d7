#pragma once

#include <optional>
#include <string>
#include <vector>

#include "incseq/combinatorics.hpp"
#include "incseq/poly.hpp"

namespace incseq {

enum class IdealKind { full, downset, strict };

std::string to_string(IdealKind kind);
IdealKind parse_ideal_kind(std::string_view text);

/// One basis member: prod_j prod_{t in I_j} (x_j - i(t)), kept both as the
/// interval factors and expanded.
struct BasisElement {
  std::vector<Interval> parts;
  Polynomial polynomial;
};

/// Closed-form Groebner basis of the vanishing ideal of J(n,q), of a downset
/// F of J(n,q), or of SJ(n,q). The members never depend on the term order;
/// the order only affects leading monomials and output sorting.
class GroebnerBasis {
 public:
  IdealKind kind() const { return kind_; }
  int n() const { return n_; }
  int q() const { return q_; }
  TermOrder order() const { return order_; }
  const Embedding& embedding() const { return emb_; }

  const std::vector<BasisElement>& elements() const { return elements_; }
  std::vector<Polynomial> polynomials() const;
  /// Standard monomials, ascending in the term order.
  const std::vector<Monomial>& standard_monomials() const { return standard_; }
  /// The embedded point set whose vanishing ideal this basis generates.
  const std::vector<Point>& points() const { return points_; }

  /// Monic members, and no monomial of a member other than its leading one
  /// is divisible by another member's leading monomial.
  bool is_reduced() const;

  friend GroebnerBasis gb_full(int, int, const Embedding&, TermOrder);
  friend GroebnerBasis gb_strict(int, int, const Embedding&, TermOrder);
  friend GroebnerBasis gb_downset(int, int, const std::vector<IncSeq>&, const Embedding&, TermOrder, bool);

 private:
  GroebnerBasis(IdealKind kind, int n, int q, const Embedding& emb, TermOrder order)
      : kind_(kind), n_(n), q_(q), order_(order), emb_(emb) {}

  IdealKind kind_;
  int n_;
  int q_;
  TermOrder order_;
  Embedding emb_;
  std::vector<BasisElement> elements_;
  std::vector<Monomial> standard_;
  std::vector<Point> points_;
};

/// Expands prod_j prod_{t in parts[j]} (x_j - i(t)).
Polynomial interval_product(const std::vector<Interval>& parts, const Embedding& emb);

/// One member per good decomposition of [q]; standard monomials are all
/// monomials of degree <= q-1.
GroebnerBasis gb_full(int n, int q, const Embedding& emb, TermOrder order = TermOrder::deglex);

/// One member per super decomposition; standard monomials have degree <= q-n.
GroebnerBasis gb_strict(int n, int q, const Embedding& emb, TermOrder order = TermOrder::deglex);

/// The good-decomposition members plus one member per g outside F; the
/// standard monomials are x^phi(g) for g in F. With `drop_redundant`,
/// members whose leading monomial is divisible by an earlier member's are
/// removed.
GroebnerBasis gb_downset(int n, int q, const std::vector<IncSeq>& downset, const Embedding& emb,
                         TermOrder order = TermOrder::deglex, bool drop_redundant = false);

struct HilbertValue {
  std::uint64_t value = 0;
  /// False when s lies outside the range where h(s) = C(n+s, s).
  bool in_range = true;
};

/// h(s) for J(n,q) or SJ(n,q). Outside the closed-form range the true
/// standard-monomial count is returned with in_range = false.
HilbertValue hilbert(IdealKind kind, int n, int q, int s);

/// Result of a nonvanishing search: nullopt means f is the zero polynomial.
using NonvanishingWitness = std::optional<Point>;

/// First point of J(n,q) (or SJ(n,q)) in lexicographic sequence order where
/// f is nonzero. Requires deg f <= q-1 (resp. q-n), which guarantees a
/// witness for nonzero f.
NonvanishingWitness nonvanishing_point(const Polynomial& f, IdealKind kind, int n, int q, const Embedding& emb);

}  // namespace incseq
