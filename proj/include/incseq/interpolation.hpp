#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "incseq/combinatorics.hpp"
#include "incseq/linalg.hpp"
#include "incseq/poly.hpp"

namespace incseq {

/// sum_j coeffs[j] x_{j+1} + constant.
struct LinearFactor {
  std::vector<Element> coeffs;
  Element constant;

  Polynomial polynomial() const;
  /// Variables in descending index order, then the constant: `x4 - x3 - 1`.
  std::string to_string() const;
};

/// scalar * prod factors.
struct FactoredForm {
  int n = 0;
  Element scalar;
  std::vector<LinearFactor> factors;

  Polynomial expand() const;
  /// The product without the scalar: `(x5 - 5)(x4 - x3)`.
  std::string product_string() const;
};

struct InterpolationBasisElement {
  IncSeq s;
  /// Supported on the standard monomials of degree <= q-1.
  Polynomial expanded;
  /// Present only for grid embeddings.
  std::optional<FactoredForm> factored;
};

/// The product Q of q-1 linear factors that vanishes on J(n,q) \ {s} and not
/// at s, for a grid embedding. Order: x1 factors, xn factors, then the
/// difference factors from j = n down to 2.
std::vector<LinearFactor> grid_delta_factors(const IncSeq& s, int q, const Embedding& emb);

/// Shared exact solver for interpolation on J(n,q): the evaluation matrix
/// in the standard-monomial basis {deg <= q-1} is inverted once and reused.
class Interpolator {
 public:
  Interpolator(int n, int q, const Embedding& emb);

  int n() const { return n_; }
  int q() const { return q_; }
  const std::vector<IncSeq>& sequences() const { return seqs_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }

  /// P_s: 1 at s, 0 on the rest of J(n,q), degree q-1.
  InterpolationBasisElement basis_element(const IncSeq& s) const;

  /// The unique polynomial on the standard monomials matching `values`.
  Polynomial interpolate(const std::map<IncSeq, Element>& values) const;

 private:
  Polynomial column_polynomial(std::size_t point_index) const;

  int n_;
  int q_;
  Embedding emb_;
  std::vector<IncSeq> seqs_;
  std::vector<Monomial> monomials_;
  Matrix inverse_;  // coefficients = inverse_ * values
};

InterpolationBasisElement interp_basis_element(const IncSeq& s, int n, int q, const Embedding& emb);
Polynomial interp_function(const std::map<IncSeq, Element>& values, int n, int q, const Embedding& emb);

}  // namespace incseq
