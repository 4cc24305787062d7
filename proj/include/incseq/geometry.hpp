#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "incseq/combinatorics.hpp"
#include "incseq/poly.hpp"

namespace incseq {

// ---------------------------------------------------------------------------
// Points and lines in F_q^n

/// Deduplicated, sorted set of points of F^n.
class PointSet {
 public:
  PointSet() = default;
  PointSet(Field field, int n) : field_(field), n_(n) {}
  PointSet(Field field, int n, std::vector<Point> points);

  Field field() const { return field_; }
  int width() const { return n_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::vector<Point>& points() const { return points_; }
  bool contains(const Point& p) const;

  void insert(const Point& p);
  void insert_all(const std::vector<Point>& ps);

  /// One point per line, comma-separated canonical element strings.
  std::string to_text() const;
  /// Blank lines and lines starting with '#' are skipped; the width comes
  /// from the first point.
  static PointSet parse(std::string_view text, Field field);

 private:
  Field field_;
  int n_ = 0;
  std::vector<Point> points_;
};

std::string format_point(const Point& p);
/// Splits on commas outside brackets.
Point parse_point(std::string_view text, Field field);

bool is_zero_vector(const Point& v);
/// Scales v so its first nonzero coordinate is 1.
Point canonical_direction(const Point& v);

/// {a + t v : t in F} in code order of t. Finite fields only.
std::vector<Point> line_points(const Point& a, const Point& v);

/// Every point of F_q^n in code order.
std::vector<Point> all_points(Field field, int n);

/// Canonical nonzero directions of F_q^n in code order of their index.
std::vector<Point> all_directions(Field field, int n);

/// Canonical representatives of the nonzero points of J(n,q), deduplicated,
/// in the order of first appearance.
std::vector<Point> increasing_directions(int n, const Embedding& emb);

/// Deduplicated canonical forms of the nonzero vectors, first-seen order.
std::vector<Point> canonical_directions(const std::vector<Point>& vectors);

// ---------------------------------------------------------------------------
// Kakeya sets

struct LineWitness {
  Point direction;
  Point base;
  std::size_t hits = 0;
};

struct KakeyaReport {
  bool ok = false;
  std::vector<LineWitness> witnesses;
  std::optional<Point> failing_direction;
};

/// For each direction, finds a line meeting K in at least `threshold`
/// points. Base points range over the transversal a[pivot] = 0, where pivot
/// is the first nonzero coordinate of the direction.
KakeyaReport verify_kakeya(const PointSet& k, const std::vector<Point>& directions, int threshold);

/// verify_kakeya over the nonzero increasing directions J(n,q).
KakeyaReport verify_increasing_kakeya(const PointSet& k, const Embedding& emb, int threshold);

/// Union of the lines through 0 in every nonzero direction of J(n,q).
/// The field must have exactly q elements.
PointSet build_T(int n, int q, const Embedding& emb);

/// (q-1)(C(q+n-1,n) - (q-1)) + 1.
std::uint64_t t_size_bound(int n, int q);

/// The 10-point increasing Kakeya set of F_3^3 built from K0 and three
/// lines through (1,1,2).
PointSet paper_kakeya_f3();

struct KakeyaSearchResult {
  std::size_t minimum = 0;
  PointSet witness;
  std::vector<LineWitness> lines;
  std::uint64_t nodes = 0;
};

/// Smallest increasing Kakeya set, by exhaustive branch and bound over
/// unions of one line per canonical increasing direction. The witness is
/// the lexicographically least choice of lines among the minima.
KakeyaSearchResult search_min_increasing_kakeya(int n, int q, const Embedding& emb);

// ---------------------------------------------------------------------------
// Nikodym sets

struct NikodymWitness {
  Point z;
  Point direction;
};

struct NikodymReport {
  bool ok = false;
  std::vector<NikodymWitness> witnesses;
  std::optional<Point> failing_point;
};

/// For each z in J(n,q) finds v != 0 with z + t v in B for every t != 0.
NikodymReport verify_nikodym(const PointSet& b, const Embedding& emb);

// ---------------------------------------------------------------------------
// Polynomial-method bounds

enum class BoundStatus {
  /// |K| reaches the bound.
  bound_met,
  /// |K| is below the bound and the vanishing polynomial certifies a
  /// direction (or point) with no admissible line.
  obstruction,
  /// The proof chain broke; indicates a bug or a false theorem.
  contradiction,
};

std::string to_string(BoundStatus status);

struct LowerBoundReport {
  BoundStatus status = BoundStatus::contradiction;
  std::uint64_t bound = 0;
  std::size_t size = 0;
  bool kakeya = false;
  std::optional<Polynomial> vanishing;
  std::optional<Polynomial> top_part;
  /// v in T \ {0} with P_D(v) != 0.
  std::optional<Point> direction;
  /// Largest |line ∩ K| over lines in that direction.
  std::size_t max_hits = 0;
};

/// The (T, l)-Kakeya bound |K| >= C(n+l, n). Requires 0 < l <= q-1 and that
/// every monomial of degree <= l is standard for T (checked by the oracle).
LowerBoundReport lower_bound_check(const PointSet& k, const std::vector<Point>& t, int ell,
                                   TermOrder order = TermOrder::deglex);

struct NikodymBoundReport {
  BoundStatus status = BoundStatus::contradiction;
  std::uint64_t bound = 0;
  std::size_t size = 0;
  std::optional<Polynomial> vanishing;
  /// z in J(n,q) with P(z) != 0.
  std::optional<Point> point;
  /// True when no punctured line through `point` lies inside B.
  bool point_blocked = false;
};

/// |B| >= C(n+q-2, n) for a certified increasing Nikodym set B (throws if
/// B is not one). Below the bound the proof chain is replayed.
NikodymBoundReport nikodym_bound_check(const PointSet& b, const Embedding& emb);

/// The proof chain on its own: for |B| < C(n+q-2, n), a polynomial of
/// degree <= q-2 vanishing on B and a point z of J(n,q) where it does not
/// vanish, so no punctured line through z lies in B.
NikodymBoundReport nikodym_obstruction(const PointSet& b, const Embedding& emb);

// ---------------------------------------------------------------------------
// Hyperplane covers

/// {x : normal . x = offset}.
struct Hyperplane {
  Point normal;
  Element offset;

  bool contains(const Point& x) const;
  /// First nonzero normal coordinate scaled to 1.
  Hyperplane canonical() const;
  /// `1,0=2`: normal coordinates, then the offset.
  std::string to_string() const;
  static Hyperplane parse(std::string_view text, Field field);

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

/// Hyperplane {x_j = c}, j 1-indexed.
Hyperplane coordinate_hyperplane(int n, int j, const Element& c);

/// Every canonical affine hyperplane of F_q^n: canonical normals in
/// code order, offsets in code order.
std::vector<Hyperplane> canonical_hyperplanes(Field field, int n);

struct CoverReport {
  bool covered = false;
  std::optional<Point> uncovered;
  std::size_t hyperplanes = 0;  // distinct
  std::size_t required_points = 0;
  /// q with no exclusions, q-1 otherwise.
  std::size_t bound = 0;
  bool bound_respected = false;
};

/// Checks that J(n,q) minus the excluded points lies in the union, and that
/// a covering family respects the lower bound. At most n exclusions.
CoverReport cover_verify(const std::vector<Hyperplane>& hyperplanes, int n, int q, const Embedding& emb,
                         const std::vector<IncSeq>& excluded);

struct CoverSearchResult {
  std::size_t minimum = 0;
  std::vector<Hyperplane> witness;
  std::size_t greedy = 0;
  std::uint64_t nodes = 0;
};

/// Exact minimum cover by canonical hyperplanes: greedy upper bound, then
/// increasing cover sizes with lexicographic subset search and coverage
/// pruning. The witness is the lexicographically least minimum cover.
CoverSearchResult cover_search(int n, int q, const Embedding& emb, const std::vector<IncSeq>& excluded);

/// Searches for a polynomial of degree <= max_degree that is nonzero at
/// every point of some set S of 1..max_support points of J(n,q) and zero on
/// the rest. Exhaustive over S and over the solution space; finite fields.
std::optional<std::pair<Polynomial, std::vector<IncSeq>>> sparse_support_polynomial(int n, int q, const Embedding& emb,
                                                                                    int max_degree,
                                                                                    int max_support);

}  // namespace incseq
