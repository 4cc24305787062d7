#include <algorithm>
#include <set>

#include "incseq/geometry.hpp"
#include "incseq/linalg.hpp"
#include "incseq/oracle.hpp"

namespace incseq {

namespace {

inline constexpr std::size_t kMaxCoverPoints = 10'000;
inline constexpr std::size_t kMaxCoverHyperplanes = 1'000;

std::vector<Point> required_points(int n, int q, const Embedding& emb, const std::vector<IncSeq>& excluded) {
  if (static_cast<int>(excluded.size()) > n)
    throw Error("at most n = " + std::to_string(n) + " points may be excluded");
  const std::set<IncSeq> skip(excluded.begin(), excluded.end());
  for (const auto& s : skip)
    if (static_cast<int>(s.size()) != n || !is_nondecreasing(s, q))
      throw Error("excluded point " + format_seq(s) + " is not in I(n,q)");
  std::vector<Point> out;
  for (const auto& s : enumerate_incseq(n, q))
    if (!skip.count(s)) out.push_back(emb.apply(s));
  return out;
}

}  // namespace

bool Hyperplane::contains(const Point& x) const {
  if (x.size() != normal.size()) throw Error("hyperplane and point widths differ");
  Element acc = offset.field().zero();
  for (std::size_t j = 0; j < x.size(); ++j) acc += normal[j] * x[j];
  return acc == offset;
}

Hyperplane Hyperplane::canonical() const {
  auto pivot = std::find_if(normal.begin(), normal.end(), [](const Element& e) { return !e.is_zero(); });
  if (pivot == normal.end()) throw Error("a hyperplane needs a nonzero normal");
  const Element inv = pivot->inverse();
  Hyperplane h;
  for (const auto& e : normal) h.normal.push_back(e * inv);
  h.offset = offset * inv;
  return h;
}

std::string Hyperplane::to_string() const { return format_point(normal) + "=" + offset.to_string(); }

Hyperplane Hyperplane::parse(std::string_view text, Field field) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos) throw Error("hyperplane '" + std::string(text) + "' must look like a1,...,an=b");
  Hyperplane h{parse_point(text.substr(0, eq), field), field.parse(text.substr(eq + 1))};
  if (is_zero_vector(h.normal)) throw Error("a hyperplane needs a nonzero normal");
  return h;
}

Hyperplane coordinate_hyperplane(int n, int j, const Element& c) {
  if (j < 1 || j > n) throw Error("coordinate index out of range");
  Field field = c.field();
  Hyperplane h{Point(static_cast<std::size_t>(n), field.zero()), c};
  h.normal[static_cast<std::size_t>(j - 1)] = field.one();
  return h;
}

std::vector<Hyperplane> canonical_hyperplanes(Field field, int n) {
  std::vector<Hyperplane> out;
  const auto elems = field.elements();
  for (const auto& normal : all_directions(field, n))
    for (const auto& c : elems) out.push_back({normal, c});
  return out;
}

CoverReport cover_verify(const std::vector<Hyperplane>& hyperplanes, int n, int q, const Embedding& emb,
                         const std::vector<IncSeq>& excluded) {
  const auto points = required_points(n, q, emb, excluded);
  std::vector<Hyperplane> distinct;
  for (const auto& h : hyperplanes) {
    if (static_cast<int>(h.normal.size()) != n) throw Error("hyperplane width does not match n");
    Hyperplane c = h.canonical();
    if (std::find(distinct.begin(), distinct.end(), c) == distinct.end()) distinct.push_back(std::move(c));
  }
  CoverReport report;
  report.hyperplanes = distinct.size();
  report.required_points = points.size();
  report.bound = excluded.empty() ? static_cast<std::size_t>(q) : static_cast<std::size_t>(q - 1);
  report.covered = true;
  for (const auto& p : points) {
    if (std::none_of(distinct.begin(), distinct.end(), [&](const Hyperplane& h) { return h.contains(p); })) {
      report.covered = false;
      report.uncovered = p;
      break;
    }
  }
  report.bound_respected = !report.covered || report.hyperplanes >= report.bound;
  return report;
}

CoverSearchResult cover_search(int n, int q, const Embedding& emb, const std::vector<IncSeq>& excluded) {
  Field field = emb.field();
  if (!field.is_finite()) throw Error("cover search needs a finite field");
  const auto points = required_points(n, q, emb, excluded);
  if (points.size() > kMaxCoverPoints) throw Error("cover search is limited to 10^4 points");
  const auto all_planes = canonical_hyperplanes(field, n);
  if (all_planes.size() > kMaxCoverHyperplanes) throw Error("cover search is limited to 10^3 canonical hyperplanes");

  CoverSearchResult result;
  if (points.empty()) return result;

  // Point masks as sorted index lists; sizes are tiny.
  const std::size_t np = points.size();
  std::vector<std::vector<char>> covers(all_planes.size(), std::vector<char>(np, 0));
  std::vector<std::size_t> cover_count(all_planes.size(), 0);
  std::vector<std::size_t> last_cover(np, 0);
  for (std::size_t h = 0; h < all_planes.size(); ++h)
    for (std::size_t p = 0; p < np; ++p)
      if (all_planes[h].contains(points[p])) {
        covers[h][p] = 1;
        ++cover_count[h];
        last_cover[p] = h;
      }
  const std::size_t max_cover = *std::max_element(cover_count.begin(), cover_count.end());

  // Greedy upper bound.
  {
    std::vector<char> done(np, 0);
    std::size_t left = np;
    while (left) {
      std::size_t best_h = 0, best_gain = 0;
      for (std::size_t h = 0; h < all_planes.size(); ++h) {
        std::size_t gain = 0;
        for (std::size_t p = 0; p < np; ++p) gain += covers[h][p] && !done[p];
        if (gain > best_gain) {
          best_gain = gain;
          best_h = h;
        }
      }
      for (std::size_t p = 0; p < np; ++p)
        if (covers[best_h][p] && !done[p]) {
          done[p] = 1;
          --left;
        }
      ++result.greedy;
    }
  }

  std::vector<std::size_t> chosen;
  std::vector<int> hit(np, 0);
  std::size_t uncovered = np;
  bool found = false;
  auto rec = [&](auto&& self, std::size_t start, std::size_t slots) -> void {
    ++result.nodes;
    if (uncovered == 0) {
      found = true;
      return;
    }
    if (slots == 0 || uncovered > slots * max_cover) return;
    std::size_t first = 0;
    while (hit[first]) ++first;
    // Some later hyperplane must still cover the first uncovered point.
    if (last_cover[first] < start || !covers[last_cover[first]][first]) return;
    for (std::size_t h = start; h < all_planes.size() && !found; ++h) {
      chosen.push_back(h);
      for (std::size_t p = 0; p < np; ++p)
        if (covers[h][p] && hit[p]++ == 0) --uncovered;
      self(self, h + 1, slots - 1);
      if (found) return;
      for (std::size_t p = 0; p < np; ++p)
        if (covers[h][p] && --hit[p] == 0) ++uncovered;
      chosen.pop_back();
    }
  };
  for (std::size_t k = 1; k <= result.greedy && !found; ++k) {
    chosen.clear();
    rec(rec, 0, k);
    if (found) result.minimum = k;
  }
  for (auto h : chosen) result.witness.push_back(all_planes[h]);
  return result;
}

std::optional<std::pair<Polynomial, std::vector<IncSeq>>> sparse_support_polynomial(int n, int q, const Embedding& emb,
                                                                                    int max_degree,
                                                                                    int max_support) {
  Field field = emb.field();
  const auto fq = field.size();
  if (!fq) throw Error("the sparse-support search needs a finite field");
  const auto seqs = enumerate_incseq(n, q);
  if (seqs.size() > 20) throw Error("the sparse-support search is limited to |J(n,q)| <= 20");
  const auto columns = monomials_up_to_degree(n, max_degree, TermOrder::deglex);

  for (std::uint32_t mask = 1; mask < (1u << seqs.size()); ++mask) {
    const int support = std::popcount(mask);
    if (support > max_support) continue;
    std::vector<Point> zeros, nonzeros;
    std::vector<IncSeq> chosen;
    for (std::size_t i = 0; i < seqs.size(); ++i) {
      if (mask >> i & 1u) {
        nonzeros.push_back(emb.apply(seqs[i]));
        chosen.push_back(seqs[i]);
      } else {
        zeros.push_back(emb.apply(seqs[i]));
      }
    }
    const auto basis = nullspace_basis(oracle::evaluation_matrix(zeros, columns, field));
    if (basis.empty()) continue;
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      combos *= *fq;
      if (combos > 1'000'000) throw Error("solution space too large to enumerate");
    }
    const auto elems = field.elements();
    for (std::uint64_t c = 1; c < combos; ++c) {
      Polynomial p(field, n);
      std::uint64_t x = c;
      for (const auto& vec : basis) {
        const Element coef = elems[x % *fq];
        x /= *fq;
        if (coef.is_zero()) continue;
        for (std::size_t col = 0; col < columns.size(); ++col) p.add_term(coef * vec[col], columns[col]);
      }
      if (p.is_zero()) continue;
      if (std::all_of(nonzeros.begin(), nonzeros.end(), [&](const Point& s) { return !p.eval(s).is_zero(); }))
        return std::make_pair(p, chosen);
    }
  }
  return std::nullopt;
}

}  // namespace incseq
