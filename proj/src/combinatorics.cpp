#include "incseq/combinatorics.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace incseq {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

bool is_nondecreasing(const IncSeq& s, int q) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > q) return false;
    if (i && s[i] < s[i - 1]) return false;
  }
  return true;
}

bool is_strictly_increasing(const IncSeq& s, int q) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > q) return false;
    if (i && s[i] <= s[i - 1]) return false;
  }
  return true;
}

std::vector<IncSeq> enumerate_incseq(int n, int q, bool strict) {
  if (n < 1 || q < 1) throw Error("n and q must be positive");
  if (strict && q < n) return {};
  const auto count = strict ? binomial(q, n) : binomial(n + q - 1, q - 1);
  if (count > kMaxEnumeration) throw Error("refusing to enumerate " + std::to_string(count) + " sequences");
  std::vector<IncSeq> out;
  out.reserve(count);
  IncSeq s(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int idx, int lo) -> void {
    if (idx == n) {
      out.push_back(s);
      return;
    }
    // Leave room for the remaining strictly larger entries.
    const int hi = strict ? q - (n - 1 - idx) : q;
    for (int v = lo; v <= hi; ++v) {
      s[static_cast<std::size_t>(idx)] = v;
      self(self, idx + 1, strict ? v + 1 : v);
    }
  };
  rec(rec, 0, 1);
  return out;
}

std::vector<int> phi(const IncSeq& s) {
  std::vector<int> v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) v[i] = i == 0 ? s[0] - 1 : s[i] - s[i - 1];
  return v;
}

IncSeq phi_inv(const std::vector<int>& v) {
  IncSeq s(v.size());
  int acc = 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) throw Error("phi_inv needs nonnegative entries");
    acc += v[i];
    s[i] = acc;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Embedding

Embedding::Embedding(Field field, std::vector<Element> images, std::optional<Element> offset)
    : field_(field), images_(std::move(images)), grid_offset_(std::move(offset)) {
  if (images_.empty()) throw Error("an embedding needs q >= 1");
  std::set<Element> seen;
  for (const auto& e : images_) {
    if (!(e.field() == field_)) throw Error("embedding image lies in a different field");
    if (!seen.insert(e).second) throw Error("embedding is not injective: " + e.to_string() + " repeats");
  }
}

Embedding Embedding::grid(Field field, int q, const Element& offset) {
  if (q < 1) throw Error("q must be positive");
  const auto ch = field.characteristic();
  if (ch != 0 && ch < static_cast<std::uint32_t>(q))
    throw Error("no grid map of [" + std::to_string(q) + "] exists in characteristic " + std::to_string(ch));
  std::vector<Element> images;
  for (int j = 1; j <= q; ++j) images.push_back(offset + field.from_int(j));
  return Embedding(field, std::move(images), offset);
}

Embedding Embedding::list(Field field, std::vector<Element> images) {
  return Embedding(field, std::move(images), std::nullopt);
}

Embedding Embedding::standard(Field field, int q) {
  const auto ch = field.characteristic();
  if (ch == 0 || ch >= static_cast<std::uint32_t>(q)) return grid(field, q, field.from_int(-1));
  if (field.size() && *field.size() < static_cast<std::uint32_t>(q))
    throw Error("field " + field.spec().to_string() + " has fewer than q = " + std::to_string(q) + " elements");
  auto all = field.elements();
  all.resize(static_cast<std::size_t>(q));
  return list(field, std::move(all));
}

Embedding Embedding::parse(std::string_view text, Field field, int q) {
  if (text.empty() || text == "default" || text == "standard") return standard(field, q);
  if (text.rfind("grid:", 0) == 0) return grid(field, q, field.parse(text.substr(5)));
  if (text.rfind("list:", 0) == 0) {
    std::vector<Element> images;
    std::string_view body = text.substr(5);
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= body.size(); ++i) {
      if (i < body.size() && body[i] == '[') ++depth;
      if (i < body.size() && body[i] == ']') --depth;
      if (i == body.size() || (body[i] == ',' && depth == 0)) {
        images.push_back(field.parse(body.substr(start, i - start)));
        start = i + 1;
      }
    }
    if (static_cast<int>(images.size()) != q)
      throw Error("list embedding has " + std::to_string(images.size()) + " images, expected q = " +
                  std::to_string(q));
    return list(field, std::move(images));
  }
  throw Error("unknown embedding '" + std::string(text) + "' (expected grid:<a> or list:<e1>,...)");
}

const Element& Embedding::operator()(int j) const {
  if (j < 1 || j > q()) throw Error("sequence entry " + std::to_string(j) + " outside [q]");
  return images_[static_cast<std::size_t>(j - 1)];
}

Point Embedding::apply(const IncSeq& s) const {
  Point p;
  p.reserve(s.size());
  for (int v : s) p.push_back((*this)(v));
  return p;
}

std::optional<int> Embedding::preimage(const Element& e) const {
  for (std::size_t j = 0; j < images_.size(); ++j)
    if (images_[j] == e) return static_cast<int>(j + 1);
  return std::nullopt;
}

std::optional<IncSeq> Embedding::preimage(const Point& p) const {
  IncSeq s;
  for (const auto& e : p) {
    auto j = preimage(e);
    if (!j) return std::nullopt;
    s.push_back(*j);
  }
  return s;
}

std::string Embedding::to_string() const {
  if (grid_offset_) return "grid:" + grid_offset_->to_string();
  std::string s = "list:";
  for (std::size_t i = 0; i < images_.size(); ++i) s += (i ? "," : "") + images_[i].to_string();
  return s;
}

std::vector<Point> embedded_points(int n, int q, const Embedding& emb, bool strict) {
  if (emb.q() != q) throw Error("embedding is defined on [" + std::to_string(emb.q()) + "], not [" +
                                std::to_string(q) + "]");
  std::vector<Point> out;
  for (const auto& s : enumerate_incseq(n, q, strict)) out.push_back(emb.apply(s));
  return out;
}

// ---------------------------------------------------------------------------
// Decompositions

Monomial Decomposition::exponent() const {
  std::vector<int> e;
  for (const auto& iv : parts) e.push_back(iv.size());
  return Monomial(std::move(e));
}

std::string Decomposition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ", ";
    const auto& iv = parts[i];
    if (iv.empty()) {
      s += "{}";
      continue;
    }
    s += "{";
    for (int t = iv.lo; t <= iv.hi; ++t) s += (t > iv.lo ? "," : "") + std::to_string(t);
    s += "}";
  }
  return s + ")";
}

std::vector<Decomposition> enumerate_decompositions(int n, int q, Decomposition::Kind kind) {
  if (n < 1 || q < 1) throw Error("n and q must be positive");
  std::vector<Decomposition> out;
  if (kind == Decomposition::Kind::good) {
    // Sizes (c1..cn) with sum q, descending lexicographically.
    std::vector<int> sizes(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self, int idx, int remaining) -> void {
      if (idx == n - 1) {
        sizes[static_cast<std::size_t>(idx)] = remaining;
        Decomposition d;
        int next = 1;
        for (int c : sizes) {
          d.parts.push_back({next, next + c - 1});
          next += c;
        }
        out.push_back(std::move(d));
        return;
      }
      for (int c = remaining; c >= 0; --c) {
        sizes[static_cast<std::size_t>(idx)] = c;
        self(self, idx + 1, remaining - c);
      }
    };
    rec(rec, 0, q);
    return out;
  }
  if (q < n) throw Error("super decompositions need q >= n");
  std::vector<int> gaps(static_cast<std::size_t>(n - 1));
  auto emit = [&] {
    Decomposition d;
    d.kind = Decomposition::Kind::super;
    d.gaps = gaps;
    int lo = 1;
    for (int g : gaps) {
      d.parts.push_back({lo, g - 1});
      lo = g + 1;
    }
    d.parts.push_back({lo, q});
    out.push_back(std::move(d));
  };
  auto rec = [&](auto&& self, int idx, int lo) -> void {
    if (idx == n - 1) {
      emit();
      return;
    }
    for (int j = lo; j <= q - (n - 2 - idx); ++j) {
      gaps[static_cast<std::size_t>(idx)] = j;
      self(self, idx + 1, j + 1);
    }
  };
  rec(rec, 0, 1);
  return out;
}

bool is_good_decomposition(const Decomposition& d, int q) {
  int next = 1;
  for (const auto& iv : d.parts) {
    if (iv.empty()) continue;
    if (iv.lo != next) return false;
    next = iv.hi + 1;
  }
  return next == q + 1;
}

std::vector<Interval> downset_intervals(const IncSeq& g) {
  std::vector<Interval> parts;
  for (std::size_t j = 0; j < g.size(); ++j) parts.push_back(j == 0 ? Interval{1, g[0] - 1} : Interval{g[j - 1], g[j] - 1});
  return parts;
}

bool validate_downset(const std::vector<IncSeq>& points, int n, int q) {
  std::set<IncSeq> members;
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != n || !is_nondecreasing(p, q)) return false;
    members.insert(p);
  }
  for (const auto& u : enumerate_incseq(n, q)) {
    if (members.count(u)) continue;
    for (const auto& v : members) {
      bool below = true;
      for (std::size_t i = 0; i < u.size() && below; ++i) below = u[i] <= v[i];
      if (below) return false;
    }
  }
  return true;
}

bool is_exponent_downset(const std::vector<std::vector<int>>& exps) {
  std::set<std::vector<int>> members(exps.begin(), exps.end());
  for (const auto& e : exps)
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto below = e;
      --below[i];
      if (!members.count(below)) return false;
    }
  return true;
}

std::vector<std::vector<IncSeq>> enumerate_downsets(int n, int q) {
  const auto all = enumerate_incseq(n, q);
  if (all.size() > 20) throw Error("downset enumeration is limited to |I(n,q)| <= 20");
  std::vector<std::vector<IncSeq>> out;
  for (std::uint32_t mask = 1; mask < (1u << all.size()); ++mask) {
    std::vector<IncSeq> subset;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (mask >> i & 1u) subset.push_back(all[i]);
    if (validate_downset(subset, n, q)) out.push_back(std::move(subset));
  }
  return out;
}

std::string format_seq(const IncSeq& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out;
}

IncSeq parse_seq(std::string_view text) {
  IncSeq s;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto tok = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\r')) tok.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw Error("malformed sequence '" + std::string(text) + "'");
    s.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return s;
}

}  // namespace incseq
