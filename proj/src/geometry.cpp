#include "incseq/geometry.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "incseq/oracle.hpp"

namespace incseq {

namespace {

std::uint32_t field_size(Field field) {
  auto size = field.size();
  if (!size) throw Error("this operation needs a finite field");
  return *size;
}

void check_point(const Point& p, Field field, int n) {
  if (static_cast<int>(p.size()) != n) throw Error("point " + format_point(p) + " has the wrong width");
  for (const auto& e : p)
    if (!(e.field() == field)) throw Error("point " + format_point(p) + " lies in a different field");
}

// Fixed-size bitset over the points of F_q^n, indexed in code order.
class Bits {
 public:
  explicit Bits(std::size_t size = 0) : words_((size + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return words_[i / 64] >> (i % 64) & 1u; }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bits without(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
    return r;
  }
  /// Index of the lowest set bit, or npos.
  std::size_t first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return npos;
  }
  bool none() const { return first() == npos; }
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<std::uint64_t> words_;
};

std::size_t point_index(const Point& p, std::uint32_t q) {
  std::size_t idx = 0;
  for (const auto& e : p) idx = idx * q + e.code();
  return idx;
}

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// PointSet

PointSet::PointSet(Field field, int n, std::vector<Point> points) : field_(field), n_(n) { insert_all(points); }

bool PointSet::contains(const Point& p) const { return std::binary_search(points_.begin(), points_.end(), p); }

void PointSet::insert(const Point& p) {
  check_point(p, field_, n_);
  auto it = std::lower_bound(points_.begin(), points_.end(), p);
  if (it == points_.end() || *it != p) points_.insert(it, p);
}

void PointSet::insert_all(const std::vector<Point>& ps) {
  for (const auto& p : ps) check_point(p, field_, n_);
  points_.insert(points_.end(), ps.begin(), ps.end());
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

std::string PointSet::to_text() const {
  std::string out;
  for (const auto& p : points_) out += format_point(p) + "\n";
  return out;
}

PointSet PointSet::parse(std::string_view text, Field field) {
  std::vector<Point> pts;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    pts.push_back(parse_point(line, field));
  }
  if (pts.empty()) return PointSet(field, 0);
  const int n = static_cast<int>(pts.front().size());
  return PointSet(field, n, std::move(pts));
}

std::string format_point(const Point& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + p[i].to_string();
  return s;
}

Point parse_point(std::string_view text, Field field) {
  Point p;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '[') ++depth;
    if (i < text.size() && text[i] == ']') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      p.push_back(field.parse(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  return p;
}

bool is_zero_vector(const Point& v) {
  return std::all_of(v.begin(), v.end(), [](const Element& e) { return e.is_zero(); });
}

Point canonical_direction(const Point& v) {
  auto pivot = std::find_if(v.begin(), v.end(), [](const Element& e) { return !e.is_zero(); });
  if (pivot == v.end()) throw Error("the zero vector is not a direction");
  const Element inv = pivot->inverse();
  Point out;
  for (const auto& e : v) out.push_back(e * inv);
  return out;
}

std::vector<Point> line_points(const Point& a, const Point& v) {
  if (a.empty() || a.size() != v.size()) throw Error("line base and direction widths differ");
  if (is_zero_vector(v)) throw Error("a line needs a nonzero direction");
  std::vector<Point> out;
  for (const auto& t : a.front().field().elements()) {
    Point x;
    for (std::size_t j = 0; j < a.size(); ++j) x.push_back(a[j] + t * v[j]);
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<Point> all_points(Field field, int n) {
  const auto elems = field.elements();
  const std::size_t q = elems.size();
  const std::size_t total = ipow(q, n);
  if (total > kMaxEnumeration) throw Error("F_q^n is too large to enumerate");
  std::vector<Point> out;
  out.reserve(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    Point p(static_cast<std::size_t>(n));
    std::size_t x = idx;
    for (int j = n; j-- > 0;) {
      p[static_cast<std::size_t>(j)] = elems[x % q];
      x /= q;
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Point> all_directions(Field field, int n) {
  std::vector<Point> out;
  for (auto& p : all_points(field, n)) {
    auto pivot = std::find_if(p.begin(), p.end(), [](const Element& e) { return !e.is_zero(); });
    if (pivot != p.end() && pivot->is_one()) out.push_back(std::move(p));
  }
  return out;
}

std::vector<Point> canonical_directions(const std::vector<Point>& vectors) {
  std::vector<Point> out;
  std::set<Point> seen;
  for (const auto& v : vectors) {
    if (is_zero_vector(v)) continue;
    Point c = canonical_direction(v);
    if (seen.insert(c).second) out.push_back(std::move(c));
  }
  return out;
}

std::vector<Point> increasing_directions(int n, const Embedding& emb) {
  return canonical_directions(embedded_points(n, emb.q(), emb));
}

// ---------------------------------------------------------------------------
// Kakeya

KakeyaReport verify_kakeya(const PointSet& k, const std::vector<Point>& directions, int threshold) {
  Field field = k.field();
  const auto q = field_size(field);
  if (threshold < 1 || static_cast<std::uint32_t>(threshold) > q)
    throw Error("threshold must lie in [1, q]");
  const int n = k.width();
  const auto space = all_points(field, n);
  KakeyaReport report;
  for (const auto& raw : directions) {
    check_point(raw, field, n);
    const Point v = canonical_direction(raw);
    const auto pivot = static_cast<std::size_t>(
        std::find_if(v.begin(), v.end(), [](const Element& e) { return !e.is_zero(); }) - v.begin());
    bool found = false;
    for (const auto& a : space) {
      if (!a[pivot].is_zero()) continue;
      std::size_t hits = 0;
      for (const auto& x : line_points(a, v)) hits += k.contains(x) ? 1 : 0;
      if (hits >= static_cast<std::size_t>(threshold)) {
        report.witnesses.push_back({v, a, hits});
        found = true;
        break;
      }
    }
    if (!found) {
      report.failing_direction = v;
      report.ok = false;
      return report;
    }
  }
  report.ok = true;
  return report;
}

KakeyaReport verify_increasing_kakeya(const PointSet& k, const Embedding& emb, int threshold) {
  if (!(k.field() == emb.field())) throw Error("point set and embedding use different fields");
  return verify_kakeya(k, increasing_directions(k.width(), emb), threshold);
}

std::uint64_t t_size_bound(int n, int q) {
  const std::uint64_t lines = binomial(static_cast<std::uint64_t>(q + n - 1), static_cast<std::uint64_t>(n));
  return static_cast<std::uint64_t>(q - 1) * (lines - static_cast<std::uint64_t>(q - 1)) + 1;
}

PointSet build_T(int n, int q, const Embedding& emb) {
  Field field = emb.field();
  if (field_size(field) != static_cast<std::uint32_t>(q))
    throw Error("T(n,q) lives in F_q^n; field " + field.spec().to_string() + " does not have q = " +
                std::to_string(q) + " elements");
  if (emb.q() != q) throw Error("embedding does not match q");
  PointSet t(field, n);
  const Point origin(static_cast<std::size_t>(n), field.zero());
  t.insert(origin);
  for (const auto& v : increasing_directions(n, emb)) t.insert_all(line_points(origin, v));
  return t;
}

PointSet paper_kakeya_f3() {
  Field f3 = Field::make(FieldSpec::prime(3));
  auto pt = [&](int a, int b, int c) { return Point{f3.from_int(a), f3.from_int(b), f3.from_int(c)}; };
  PointSet k(f3, 3, {pt(0, 0, 0), pt(0, 0, 1), pt(0, 0, 2), pt(0, 1, 2), pt(0, 2, 0), pt(0, 2, 1)});
  k.insert_all(line_points(pt(0, 0, 1), pt(1, 1, 1)));
  k.insert_all(line_points(pt(0, 0, 0), pt(1, 1, 2)));
  k.insert_all(line_points(pt(0, 2, 0), pt(1, 2, 2)));
  return k;
}

KakeyaSearchResult search_min_increasing_kakeya(int n, int q, const Embedding& emb) {
  Field field = emb.field();
  const auto fq = field_size(field);
  if (fq != static_cast<std::uint32_t>(q)) throw Error("the Kakeya search works in F_q^n with |F| = q");
  const auto space = all_points(field, n);
  const auto dirs = increasing_directions(n, emb);

  struct Candidate {
    Point base;
    Bits bits;
  };
  std::vector<std::vector<Candidate>> lines(dirs.size());
  for (std::size_t d = 0; d < dirs.size(); ++d) {
    const auto& v = dirs[d];
    const auto pivot = static_cast<std::size_t>(
        std::find_if(v.begin(), v.end(), [](const Element& e) { return !e.is_zero(); }) - v.begin());
    for (const auto& a : space) {
      if (!a[pivot].is_zero()) continue;
      Bits b(space.size());
      for (const auto& x : line_points(a, v)) b.set(point_index(x, fq));
      lines[d].push_back({a, std::move(b)});
    }
  }

  KakeyaSearchResult result;
  std::size_t best = space.size() + 1;
  std::vector<std::size_t> choice(dirs.size()), best_choice;
  auto rec = [&](auto&& self, std::size_t depth, const Bits& acc) -> void {
    ++result.nodes;
    const std::size_t size = acc.count();
    if (size >= best) return;
    if (depth == dirs.size()) {
      best = size;
      best_choice = choice;
      return;
    }
    for (std::size_t i = 0; i < lines[depth].size(); ++i) {
      choice[depth] = i;
      Bits next = acc;
      next |= lines[depth][i].bits;
      self(self, depth + 1, next);
    }
  };
  rec(rec, 0, Bits(space.size()));

  result.minimum = best;
  result.witness = PointSet(field, n);
  for (std::size_t d = 0; d < dirs.size(); ++d) {
    const auto& cand = lines[d][best_choice[d]];
    result.witness.insert_all(line_points(cand.base, dirs[d]));
    result.lines.push_back({dirs[d], cand.base, static_cast<std::size_t>(q)});
  }
  return result;
}

// ---------------------------------------------------------------------------
// Nikodym

NikodymReport verify_nikodym(const PointSet& b, const Embedding& emb) {
  Field field = b.field();
  if (!(field == emb.field())) throw Error("point set and embedding use different fields");
  field_size(field);
  const int n = b.width();
  const auto dirs = all_directions(field, n);
  const auto elems = field.elements();
  NikodymReport report;
  for (const auto& z : embedded_points(n, emb.q(), emb)) {
    bool found = false;
    for (const auto& v : dirs) {
      bool inside = true;
      for (const auto& t : elems) {
        if (t.is_zero()) continue;
        Point x;
        for (std::size_t j = 0; j < z.size(); ++j) x.push_back(z[j] + t * v[j]);
        if (!b.contains(x)) {
          inside = false;
          break;
        }
      }
      if (inside) {
        report.witnesses.push_back({z, v});
        found = true;
        break;
      }
    }
    if (!found) {
      report.failing_point = z;
      report.ok = false;
      return report;
    }
  }
  report.ok = true;
  return report;
}

// ---------------------------------------------------------------------------
// Bounds

std::string to_string(BoundStatus status) {
  switch (status) {
    case BoundStatus::bound_met:
      return "bound_met";
    case BoundStatus::obstruction:
      return "obstruction";
    case BoundStatus::contradiction:
      return "contradiction";
  }
  return {};
}

LowerBoundReport lower_bound_check(const PointSet& k, const std::vector<Point>& t, int ell, TermOrder order) {
  Field field = k.field();
  const auto q = field_size(field);
  const int n = k.width();
  if (ell < 1 || static_cast<std::uint32_t>(ell) > q - 1) throw Error("l must satisfy 0 < l <= q-1");
  if (t.empty()) throw Error("T must be nonempty");
  for (const auto& v : t) check_point(v, field, n);

  // Condition: every monomial of degree <= l is standard for T.
  const auto sm = oracle::standard_monomials(t, order);
  const std::set<Monomial> standard(sm.begin(), sm.end());
  for (const auto& m : monomials_up_to_degree(n, ell, order))
    if (!standard.count(m)) throw Error("T fails the standard-monomial condition: " + m.to_string() + " is not standard");

  LowerBoundReport report;
  report.bound = binomial(static_cast<std::uint64_t>(n + ell), static_cast<std::uint64_t>(n));
  report.size = k.size();
  report.kakeya = verify_kakeya(k, canonical_directions(t), ell + 1).ok;
  if (report.size >= report.bound) {
    report.status = BoundStatus::bound_met;
    return report;
  }

  auto p = oracle::vanishing_polynomial(k.points(), ell, field, n);
  if (!p) return report;  // impossible: more columns than rows
  const Polynomial top = p->homogeneous_part(p->degree());
  report.vanishing = p;
  report.top_part = top;
  for (const auto& v : t) {
    if (is_zero_vector(v) || top.eval(v).is_zero()) continue;
    report.direction = v;
    break;
  }
  if (!report.direction) return report;
  const Point dir = canonical_direction(*report.direction);
  for (const auto& a : all_points(field, n)) {
    std::size_t hits = 0;
    for (const auto& x : line_points(a, dir)) hits += k.contains(x) ? 1 : 0;
    report.max_hits = std::max(report.max_hits, hits);
  }
  const bool blocked = report.max_hits <= static_cast<std::size_t>(ell);
  report.status = blocked && !report.kakeya ? BoundStatus::obstruction : BoundStatus::contradiction;
  return report;
}

NikodymBoundReport nikodym_obstruction(const PointSet& b, const Embedding& emb) {
  Field field = b.field();
  const auto q = static_cast<int>(field_size(field));
  const int n = b.width();
  NikodymBoundReport report;
  report.bound = binomial(static_cast<std::uint64_t>(n + q - 2), static_cast<std::uint64_t>(n));
  report.size = b.size();
  if (report.size >= report.bound) {
    report.status = BoundStatus::bound_met;
    return report;
  }
  auto p = oracle::vanishing_polynomial(b.points(), q - 2, field, n);
  if (!p) return report;
  report.vanishing = p;
  for (const auto& z : embedded_points(n, emb.q(), emb))
    if (!p->eval(z).is_zero()) {
      report.point = z;
      break;
    }
  if (!report.point) return report;
  bool blocked = true;
  const auto elems = field.elements();
  for (const auto& v : all_directions(field, n)) {
    bool inside = true;
    for (const auto& t : elems) {
      if (t.is_zero()) continue;
      Point x;
      for (std::size_t j = 0; j < report.point->size(); ++j) x.push_back((*report.point)[j] + t * v[j]);
      inside = inside && b.contains(x);
    }
    blocked = blocked && !inside;
  }
  report.point_blocked = blocked;
  report.status = blocked ? BoundStatus::obstruction : BoundStatus::contradiction;
  return report;
}

NikodymBoundReport nikodym_bound_check(const PointSet& b, const Embedding& emb) {
  if (!verify_nikodym(b, emb).ok) throw Error("B is not an increasing Nikodym set");
  auto report = nikodym_obstruction(b, emb);
  // For a certified Nikodym set an obstruction point is itself a contradiction.
  if (report.status == BoundStatus::obstruction) report.status = BoundStatus::contradiction;
  return report;
}

}  // namespace incseq
