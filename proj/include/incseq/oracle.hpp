#pragma once

#include <optional>
#include <vector>

#include "incseq/combinatorics.hpp"
#include "incseq/linalg.hpp"
#include "incseq/poly.hpp"

namespace incseq::oracle {

/// Rows are points, columns are monomials (in the given order).
Matrix evaluation_matrix(const std::vector<Point>& points, const std::vector<Monomial>& columns, Field field);

/// sm(I(points), order) by a Buchberger-Moeller style scan: monomials are
/// visited in ascending order and kept when their evaluation vector is
/// independent of the ones kept so far. Ascending in `order`.
std::vector<Monomial> standard_monomials(const std::vector<Point>& points, TermOrder order);

/// A nonzero polynomial of degree <= max_degree vanishing on every point,
/// or nullopt when the degree-bounded monomials are independent there.
/// For an empty point set this is the constant 1.
std::optional<Polynomial> vanishing_polynomial(const std::vector<Point>& points, int max_degree, Field field, int n);

/// True iff f is zero at every point.
bool membership(const Polynomial& f, const std::vector<Point>& points);

}  // namespace incseq::oracle
