#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "incseq/field.hpp"
#include "incseq/poly.hpp"

namespace incseq {

/// Sequence (f1,...,fn) with entries in [q] = {1..q}.
using IncSeq = std::vector<int>;
/// Point of F^n.
using Point = std::vector<Element>;

/// Enumerations larger than this are refused.
inline constexpr std::uint64_t kMaxEnumeration = 10'000'000;

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

bool is_nondecreasing(const IncSeq& s, int q);
bool is_strictly_increasing(const IncSeq& s, int q);

/// All nondecreasing (or strictly increasing) sequences of length n over [q],
/// in lexicographic order. The strict set is empty when q < n.
std::vector<IncSeq> enumerate_incseq(int n, int q, bool strict = false);

/// (f1-1, f2-f1, ..., fn-f_{n-1}); a bijection from I(n,q) onto exponent
/// vectors of total degree <= q-1.
std::vector<int> phi(const IncSeq& s);
IncSeq phi_inv(const std::vector<int>& v);

/// Injective map [q] -> F carrying the order 1 < 2 < ... < q.
class Embedding {
 public:
  /// i(j) = a + j.
  static Embedding grid(Field field, int q, const Element& offset);
  static Embedding list(Field field, std::vector<Element> images);
  /// Grid with image {0..q-1} when the characteristic allows it, else the
  /// first q field elements in canonical order.
  static Embedding standard(Field field, int q);
  /// `grid:<a>` or `list:<e1>,<e2>,...`.
  static Embedding parse(std::string_view text, Field field, int q);

  int q() const { return static_cast<int>(images_.size()); }
  Field field() const { return field_; }
  bool is_grid() const { return grid_offset_.has_value(); }
  const std::optional<Element>& grid_offset() const { return grid_offset_; }
  const std::vector<Element>& images() const { return images_; }

  /// i(j) for j in [q].
  const Element& operator()(int j) const;
  /// Componentwise image of a sequence.
  Point apply(const IncSeq& s) const;
  /// j with i(j) == e.
  std::optional<int> preimage(const Element& e) const;
  std::optional<IncSeq> preimage(const Point& p) const;

  std::string to_string() const;

 private:
  Embedding(Field field, std::vector<Element> images, std::optional<Element> offset);

  Field field_;
  std::vector<Element> images_;
  std::optional<Element> grid_offset_;
};

/// Images of all of I(n,q) (strict=false) or SI(n,q) (strict=true).
std::vector<Point> embedded_points(int n, int q, const Embedding& emb, bool strict = false);

/// Closed interval [lo, hi] of [q]; empty when lo > hi.
struct Interval {
  int lo = 1;
  int hi = 0;
  int size() const { return hi >= lo ? hi - lo + 1 : 0; }
  bool empty() const { return hi < lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct Decomposition {
  enum class Kind { good, super };
  Kind kind = Kind::good;
  std::vector<Interval> parts;
  /// Super decompositions: j1 < ... < j_{n-1}.
  std::vector<int> gaps;

  /// x1^|I1| ... xn^|In|.
  Monomial exponent() const;
  std::string to_string() const;
};

/// Good decompositions ordered by exponent vector descending (x1^q first);
/// super decompositions ordered by gap sequence ascending.
std::vector<Decomposition> enumerate_decompositions(int n, int q, Decomposition::Kind kind);

bool is_good_decomposition(const Decomposition& d, int q);

/// The intervals I1(g) = {1..g1-1}, Ij(g) = {g_{j-1}..gj-1}.
std::vector<Interval> downset_intervals(const IncSeq& g);

/// True iff every u in I(n,q) below some member (componentwise) is a member.
bool validate_downset(const std::vector<IncSeq>& points, int n, int q);

/// True iff the exponent set is closed under componentwise decrease.
bool is_exponent_downset(const std::vector<std::vector<int>>& exps);

/// Every nonempty downset of I(n,q), each sorted lexicographically.
/// Brute force over subsets; requires |I(n,q)| <= 20.
std::vector<std::vector<IncSeq>> enumerate_downsets(int n, int q);

std::string format_seq(const IncSeq& s);
IncSeq parse_seq(std::string_view text);

}  // namespace incseq
