#include "incseq/oracle.hpp"

#include <algorithm>
#include <set>

namespace incseq::oracle {

namespace {

Element monomial_value(const Monomial& m, const Point& p, Field field) {
  Element v = field.one();
  for (std::size_t j = 0; j < p.size(); ++j)
    if (m[j]) v *= p[j].pow(static_cast<std::uint64_t>(m[j]));
  return v;
}

// Monomials in the box prod [0, bound_j] with total degree <= max_degree.
std::vector<Monomial> box_monomials(const std::vector<int>& bounds, int max_degree) {
  std::vector<Monomial> out;
  std::vector<int> e(bounds.size(), 0);
  auto rec = [&](auto&& self, std::size_t idx, int budget) -> void {
    if (idx == bounds.size()) {
      out.emplace_back(e);
      return;
    }
    for (int v = 0; v <= std::min(bounds[idx], budget); ++v) {
      e[idx] = v;
      self(self, idx + 1, budget - v);
    }
  };
  rec(rec, 0, max_degree);
  return out;
}

}  // namespace

Matrix evaluation_matrix(const std::vector<Point>& points, const std::vector<Monomial>& columns, Field field) {
  Matrix m(field, points.size(), columns.size());
  for (std::size_t r = 0; r < points.size(); ++r)
    for (std::size_t c = 0; c < columns.size(); ++c) m(r, c) = monomial_value(columns[c], points[r], field);
  return m;
}

std::vector<Monomial> standard_monomials(const std::vector<Point>& input, TermOrder order) {
  if (input.empty()) throw Error("the oracle needs a nonempty point set");
  const std::set<Point> unique(input.begin(), input.end());
  const std::vector<Point> points(unique.begin(), unique.end());
  const std::size_t n = points.front().size();
  Field field = points.front().front().field();

  // Every standard monomial has x_j-degree below the number of distinct
  // j-th coordinates, and total degree below |points|.
  std::vector<int> bounds(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::set<Element> values;
    for (const auto& p : points) values.insert(p[j]);
    bounds[j] = static_cast<int>(values.size()) - 1;
  }
  auto candidates = box_monomials(bounds, static_cast<int>(points.size()) - 1);
  std::sort(candidates.begin(), candidates.end(), TermLess{order});

  EchelonBasis basis(field, points.size());
  std::vector<Monomial> kept;
  for (const auto& m : candidates) {
    std::vector<Element> column;
    column.reserve(points.size());
    for (const auto& p : points) column.push_back(monomial_value(m, p, field));
    if (basis.insert(std::move(column))) kept.push_back(m);
    if (kept.size() == points.size()) break;
  }
  return kept;
}

std::optional<Polynomial> vanishing_polynomial(const std::vector<Point>& points, int max_degree, Field field, int n) {
  if (max_degree < 0) return std::nullopt;
  const auto columns = monomials_up_to_degree(n, max_degree, TermOrder::deglex);
  const Matrix m = evaluation_matrix(points, columns, field);
  auto x = nullspace_vector(m);
  if (!x) return std::nullopt;
  Polynomial p(field, n);
  for (std::size_t c = 0; c < columns.size(); ++c) p.add_term((*x)[c], columns[c]);
  return p;
}

bool membership(const Polynomial& f, const std::vector<Point>& points) {
  return std::all_of(points.begin(), points.end(), [&](const Point& p) { return f.eval(p).is_zero(); });
}

}  // namespace incseq::oracle
