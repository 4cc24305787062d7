#include "incseq/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "incseq/geometry.hpp"
#include "incseq/groebner.hpp"
#include "incseq/interpolation.hpp"
#include "incseq/oracle.hpp"

namespace incseq::acceptance {

namespace {

/// Counts checks and keeps the first few failure messages.
class Tally {
 public:
  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (messages_.size() < 3) messages_.push_back(what());
  }
  bool ok() const { return failures_ == 0; }

  std::string summary(const std::string& extra = "") const {
    std::ostringstream out;
    out << checks_ << " checks, " << failures_ << " failures";
    if (!extra.empty()) out << "; " << extra;
    for (const auto& m : messages_) out << "; " << m;
    return out.str();
  }

 private:
  std::uint64_t checks_ = 0;
  std::uint64_t failures_ = 0;
  std::vector<std::string> messages_;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Field prime_field_for(int q) {
  return Field::make(FieldSpec::prime(smallest_prime_at_least(static_cast<std::uint32_t>(q))));
}

Field rationals() { return Field::make(FieldSpec::rational()); }

std::string tag(const Field& f, int n, int q) {
  return f.spec().to_string() + " n=" + std::to_string(n) + " q=" + std::to_string(q);
}

std::string tag(const Field& f, int n, int q, TermOrder order) { return tag(f, n, q) + " " + to_string(order); }

Result finish(int id, std::string name, const Tally& t, Clock::time_point start, double limit,
              const std::string& extra = "") {
  Result r;
  r.id = id;
  r.name = std::move(name);
  r.seconds = seconds_since(start);
  const bool in_time = limit <= 0 || r.seconds < limit;
  r.passed = t.ok() && in_time;
  r.detail = t.summary(extra);
  if (!in_time) r.detail += "; over the time limit";
  return r;
}

std::vector<Monomial> sorted_in(std::vector<Monomial> ms, TermOrder order) {
  std::sort(ms.begin(), ms.end(), TermLess{order});
  return ms;
}

/// Monic members and no non-leading monomial divisible by another member's
/// leading monomial.
bool reduced_by_hand(const std::vector<Polynomial>& basis, TermOrder order) {
  for (const auto& g : basis)
    if (!g.leading_coefficient(order).is_one()) return false;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Monomial lm_i = basis[i].leading_monomial(order);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Monomial lm_j = basis[j].leading_monomial(order);
      for (const auto& [m, c] : basis[i].terms()) {
        if (i == j && m == lm_i) continue;
        if (lm_j.divides(m)) return false;
      }
    }
  }
  return true;
}

}  // namespace

Result groebner_correctness(const Options& opt) {
  const auto start = Clock::now();
  Tally t;
  for (int n = 1; n <= opt.max_n; ++n)
    for (int q = 1; q <= opt.max_q; ++q)
      for (const Field& field : {prime_field_for(q), rationals()})
        for (TermOrder order : {TermOrder::lex, TermOrder::deglex}) {
          const auto emb = Embedding::standard(field, q);
          const auto gb = gb_full(n, q, emb, order);
          const auto pts = embedded_points(n, q, emb);
          const auto basis = gb.polynomials();
          const std::string where = tag(field, n, q, order);
          for (const auto& g : basis)
            t.expect(oracle::membership(g, pts), [&] { return where + ": " + g.to_string(order) + " does not vanish"; });
          t.expect(reduced_by_hand(basis, order) && gb.is_reduced(), [&] { return where + ": basis not reduced"; });
          std::vector<Monomial> lms;
          for (const auto& g : basis) lms.push_back(g.leading_monomial(order));
          t.expect(sorted_in(lms, order) == monomials_of_degree(n, q, order),
                   [&] { return where + ": leading monomials are not the degree-q monomials"; });
          const auto& sm = gb.standard_monomials();
          t.expect(sm == monomials_up_to_degree(n, q - 1, order),
                   [&] { return where + ": standard monomials are not {deg <= q-1}"; });
          t.expect(sm.size() == binomial(static_cast<std::uint64_t>(n + q - 1), static_cast<std::uint64_t>(q - 1)) &&
                       sm.size() == pts.size(),
                   [&] { return where + ": |sm| = " + std::to_string(sm.size()); });
        }
  return finish(1, "groebner correctness", t, start, 5.0);
}

Result oracle_equivalence(const Options& opt) {
  const auto start = Clock::now();
  Tally t;
  for (int n = 1; n <= opt.max_n; ++n)
    for (int q = 1; q <= opt.max_q; ++q)
      for (const Field& field : {prime_field_for(q), rationals()})
        for (TermOrder order : {TermOrder::lex, TermOrder::deglex}) {
          const auto emb = Embedding::standard(field, q);
          const std::string where = tag(field, n, q, order);
          const auto full = oracle::standard_monomials(embedded_points(n, q, emb), order);
          t.expect(full == gb_full(n, q, emb, order).standard_monomials(), [&] { return where + ": J mismatch"; });
          if (q >= n) {
            const auto strict = oracle::standard_monomials(embedded_points(n, q, emb, true), order);
            t.expect(strict == gb_strict(n, q, emb, order).standard_monomials(),
                     [&] { return where + ": SJ mismatch"; });
            t.expect(strict == monomials_up_to_degree(n, q - n, order),
                     [&] { return where + ": SJ sm is not {deg <= q-n}"; });
          }
        }

  std::size_t downsets = 0;
  for (auto [n, q] : {std::pair{2, 3}, std::pair{3, 2}})
    for (const Field& field : {prime_field_for(q), rationals()})
      for (TermOrder order : {TermOrder::lex, TermOrder::deglex}) {
        const auto emb = Embedding::standard(field, q);
        for (const auto& f : enumerate_downsets(n, q)) {
          ++downsets;
          std::vector<Point> pts;
          std::vector<std::vector<int>> exps;
          std::vector<Monomial> images;
          for (const auto& g : f) {
            pts.push_back(emb.apply(g));
            exps.push_back(phi(g));
            images.emplace_back(phi(g));
          }
          const std::string where = tag(field, n, q, order) + " F=" + std::to_string(f.size()) + " points";
          t.expect(is_exponent_downset(exps), [&] { return where + ": phi-image is not a downset"; });
          const auto expected = sorted_in(images, order);
          t.expect(oracle::standard_monomials(pts, order) == expected, [&] { return where + ": oracle differs"; });
          t.expect(gb_downset(n, q, f, emb, order).standard_monomials() == expected,
                   [&] { return where + ": closed form differs"; });
        }
      }
  return finish(2, "oracle equivalence", t, start, 0, std::to_string(downsets) + " downset cases");
}

Result hilbert_function(const Options& opt) {
  const auto start = Clock::now();
  Tally t;
  const int max_n = std::max(opt.max_n, 5), max_q = std::max(opt.max_q, 5);
  for (int n = 1; n <= max_n; ++n)
    for (int q = 1; q <= max_q; ++q) {
      const Field field = prime_field_for(q);
      const auto emb = Embedding::standard(field, q);
      for (bool strict : {false, true}) {
        if (strict && q < n) continue;
        const auto kind = strict ? IdealKind::strict : IdealKind::full;
        const auto pts = embedded_points(n, q, emb, strict);
        const auto sm = oracle::standard_monomials(pts, TermOrder::deglex);
        const int top = strict ? q - n : q - 1;
        for (int s = 0; s <= top + 1; ++s) {
          const auto count = static_cast<std::uint64_t>(
              std::count_if(sm.begin(), sm.end(), [&](const Monomial& m) { return m.degree() <= s; }));
          const auto h = hilbert(kind, n, q, s);
          const std::string where = tag(field, n, q) + " " + to_string(kind) + " s=" + std::to_string(s);
          t.expect(h.value == count, [&] { return where + ": h = " + std::to_string(h.value) + ", oracle " + std::to_string(count); });
          if (s <= top)
            t.expect(h.in_range && h.value == binomial(static_cast<std::uint64_t>(n + s), static_cast<std::uint64_t>(s)),
                     [&] { return where + ": h != C(n+s,s)"; });
          else
            t.expect(!h.in_range && h.value == pts.size(), [&] { return where + ": saturation"; });
        }
      }
    }
  return finish(3, "hilbert function", t, start, 0);
}

Result interpolation(const Options& opt) {
  const auto start = Clock::now();
  Tally t;
  std::vector<std::pair<int, int>> cases;
  for (int n = 1; n <= opt.max_n; ++n)
    for (int q = 1; q <= opt.max_q; ++q) cases.emplace_back(n, q);
  if (opt.max_n < 5 || opt.max_q < 5) cases.emplace_back(5, 5);

  for (auto [n, q] : cases) {
    const Field rat = rationals();
    for (const auto& emb : {Embedding::standard(prime_field_for(q), q), Embedding::grid(rat, q, rat.zero())}) {
      const Interpolator interp(n, q, emb);
      const auto seqs = enumerate_incseq(n, q);
      std::vector<Point> pts;
      for (const auto& s : seqs) pts.push_back(emb.apply(s));
      const std::string base = tag(emb.field(), n, q) + " " + emb.to_string();
      for (std::size_t i = 0; i < seqs.size(); ++i) {
        const auto e = interp.basis_element(seqs[i]);
        const std::string where = base + " s=" + format_seq(seqs[i]);
        bool delta = true;
        for (std::size_t j = 0; j < pts.size(); ++j) {
          const Element v = e.expanded.eval(pts[j]);
          delta = delta && (i == j ? v.is_one() : v.is_zero());
        }
        t.expect(delta, [&] { return where + ": not a Kronecker delta"; });
        t.expect(e.expanded.degree() == q - 1, [&] { return where + ": degree " + std::to_string(e.expanded.degree()); });
        t.expect(e.factored.has_value(), [&] { return where + ": no factored form for a grid embedding"; });
        if (!e.factored) continue;
        t.expect(e.factored->factors.size() == static_cast<std::size_t>(q - 1),
                 [&] { return where + ": factor count"; });
        for (const auto& f : e.factored->factors)
          t.expect(f.polynomial().degree() == 1, [&] { return where + ": non-linear factor " + f.to_string(); });
        t.expect(e.factored->expand() == e.expanded, [&] { return where + ": factored and expanded forms differ"; });
      }
    }
  }

  // The worked example with the identity grid over Q.
  const Field rat = rationals();
  const auto emb = Embedding::grid(rat, 5, rat.zero());
  const IncSeq s{1, 2, 2, 4, 4};
  const auto e = interp_basis_element(s, 5, 5, emb);
  const std::string expected = "(x5 - 5)(x4 - x3)(x4 - x3 - 1)(x2 - x1)";
  t.expect(e.factored && e.factored->product_string() == expected, [&] {
    return "worked example printed as " + (e.factored ? e.factored->product_string() : std::string("<none>"));
  });
  Polynomial q_poly = Polynomial::constant(rat, 5, rat.one());
  for (const char* f : {"x5 - 5", "x4 - x3", "x4 - x3 - 1", "x2 - x1"}) q_poly = q_poly * Polynomial::parse(f, rat, 5);
  const Element q_at_s = q_poly.eval(emb.apply(s));
  t.expect(!q_at_s.is_zero() && e.expanded == q_poly.scale(q_at_s.inverse()),
           [&] { return "worked example: P_s != Q/Q(s)"; });
  return finish(4, "interpolation", t, start, 30.0, "Q(s) = " + q_at_s.to_string());
}

Result nullstellensatz(const Options& opt) {
  const auto start = Clock::now();
  Tally t;
  for (int n = 1; n <= opt.max_n; ++n)
    for (int q = 1; q <= opt.max_q; ++q)
      for (const Field& field : {prime_field_for(q), rationals()}) {
        const auto emb = Embedding::standard(field, q);
        const std::string where = tag(field, n, q);
        const auto pts = embedded_points(n, q, emb);
        const auto below = oracle::vanishing_polynomial(pts, q - 1, field, n);
        t.expect(!below, [&] { return where + ": J has a vanishing polynomial " + below->to_string(); });
        // Degree q is enough, so the check above is not vacuous.
        const auto at = oracle::vanishing_polynomial(pts, q, field, n);
        t.expect(at && oracle::membership(*at, pts), [&] { return where + ": no vanishing polynomial of degree q"; });
        if (q >= n) {
          const auto spts = embedded_points(n, q, emb, true);
          const auto sbelow = oracle::vanishing_polynomial(spts, q - n, field, n);
          t.expect(!sbelow, [&] { return where + ": SJ has a vanishing polynomial " + sbelow->to_string(); });
        }
      }
  return finish(5, "nullstellensatz", t, start, 0);
}

Result kakeya(const Options&) {
  const auto start = Clock::now();
  Tally t;
  const Field f3 = Field::from_string("gf:3");
  auto pt = [&](std::string_view text) { return parse_point(text, f3); };

  const PointSet k = paper_kakeya_f3();
  const auto emb3 = Embedding::standard(f3, 3);
  t.expect(k.size() == 10 && binomial(5, 3) == 10, [&] { return "example has " + std::to_string(k.size()) + " points"; });
  for (const char* p : {"0,0,0", "0,0,1", "0,0,2", "0,1,2", "0,2,0", "0,2,1"})
    t.expect(k.contains(pt(p)), [&] { return std::string("K0 point ") + p + " missing"; });
  const std::vector<std::pair<const char*, const char*>> lines{{"0,0,1", "1,1,1"}, {"0,0,0", "1,1,2"}, {"0,2,0", "1,2,2"}};
  for (auto [a, w] : lines) {
    const auto l = line_points(pt(a), pt(w));
    t.expect(std::all_of(l.begin(), l.end(), [&](const Point& x) { return k.contains(x); }),
             [&] { return std::string("line through ") + a + " missing"; });
    t.expect(std::find(l.begin(), l.end(), pt("1,1,2")) != l.end(),
             [&] { return std::string("line through ") + a + " misses (1,1,2)"; });
  }
  t.expect(verify_increasing_kakeya(k, emb3, 3).ok, [] { return "example fails verification"; });
  const auto lb = lower_bound_check(k, embedded_points(3, 3, emb3), 2);
  t.expect(lb.status == BoundStatus::bound_met && lb.bound == 10 && lb.kakeya,
           [&] { return "example bound check: " + to_string(lb.status); });

  const auto emb2 = Embedding::standard(f3, 3);
  const auto search = search_min_increasing_kakeya(2, 3, emb2);
  t.expect(search.minimum == 6 && search.minimum == binomial(4, 2),
           [&] { return "F3^2 search minimum " + std::to_string(search.minimum); });
  t.expect(search.witness.size() == search.minimum && verify_increasing_kakeya(search.witness, emb2, 3).ok,
           [] { return "F3^2 search witness fails"; });

  struct Case {
    int n, q;
    const char* field;
  };
  for (const Case& c : {Case{2, 3, "gf:3"}, Case{3, 3, "gf:3"}, Case{2, 4, "gf:2^2"}}) {
    const Field field = Field::from_string(c.field);
    const auto emb = Embedding::standard(field, c.q);
    const PointSet tset = build_T(c.n, c.q, emb);
    const std::string where = std::string(c.field) + " T(" + std::to_string(c.n) + "," + std::to_string(c.q) + ")";
    t.expect(verify_increasing_kakeya(tset, emb, c.q).ok, [&] { return where + " fails verification"; });
    t.expect(tset.size() <= t_size_bound(c.n, c.q), [&] { return where + " exceeds the size bound"; });
    const auto lower = binomial(static_cast<std::uint64_t>(c.q + c.n - 1), static_cast<std::uint64_t>(c.n));
    t.expect(tset.size() >= lower, [&] { return where + " is below the Kakeya bound"; });
    const auto tb = lower_bound_check(tset, embedded_points(c.n, c.q, emb), c.q - 1);
    t.expect(tb.status == BoundStatus::bound_met, [&] { return where + " bound check: " + to_string(tb.status); });
  }
  return finish(6, "kakeya", t, start, 0, "search nodes " + std::to_string(search.nodes));
}

Result nikodym(const Options&) {
  const auto start = Clock::now();
  Tally t;
  const Field f3 = Field::from_string("gf:3");
  const auto emb = Embedding::standard(f3, 3);
  for (int n : {2, 3}) {
    const PointSet b = build_T(n, 3, emb);
    const std::string where = "T(" + std::to_string(n) + ",3)";
    const auto rep = verify_nikodym(b, emb);
    t.expect(rep.ok, [&] { return where + " fails verification"; });
    if (!rep.ok) continue;
    const auto bound = nikodym_bound_check(b, emb);
    t.expect(bound.status == BoundStatus::bound_met &&
                 b.size() >= binomial(static_cast<std::uint64_t>(n + 1), static_cast<std::uint64_t>(n)),
             [&] { return where + " bound check: " + to_string(bound.status); });
  }
  return finish(7, "nikodym", t, start, 0);
}

Result covers(const Options&) {
  const auto start = Clock::now();
  Tally t;
  const Field f3 = Field::from_string("gf:3");
  const auto emb = Embedding::standard(f3, 3);

  const auto none = cover_search(2, 3, emb, {});
  t.expect(none.minimum == 3, [&] { return "minimum without exclusions " + std::to_string(none.minimum); });
  t.expect(cover_verify(none.witness, 2, 3, emb, {}).covered, [] { return "search witness does not cover"; });
  const std::vector<IncSeq> one{{1, 1}};
  const auto excl = cover_search(2, 3, emb, one);
  t.expect(excl.minimum == 2, [&] { return "minimum with one exclusion " + std::to_string(excl.minimum); });
  t.expect(cover_verify(excl.witness, 2, 3, emb, one).covered, [] { return "search witness does not cover"; });

  for (int n : {2, 3})
    for (int q : {2, 3}) {
      const Field field = prime_field_for(q);
      const auto e = Embedding::standard(field, q);
      std::vector<Hyperplane> first, last;
      for (int j = 1; j <= q; ++j) first.push_back(coordinate_hyperplane(n, 1, e(j)));
      for (int j = 2; j <= q; ++j) last.push_back(coordinate_hyperplane(n, n, e(j)));
      const std::string where = tag(field, n, q);
      const auto a = cover_verify(first, n, q, e, {});
      t.expect(a.covered && a.hyperplanes == static_cast<std::size_t>(q) && a.bound_respected,
               [&] { return where + ": x1 cover"; });
      const auto b = cover_verify(last, n, q, e, {IncSeq(static_cast<std::size_t>(n), 1)});
      t.expect(b.covered && b.hyperplanes == static_cast<std::size_t>(q - 1) && b.bound_respected,
               [&] { return where + ": xn cover"; });
    }

  const auto planes = canonical_hyperplanes(f3, 2);
  const auto pts = embedded_points(2, 3, emb);
  std::size_t pairs = 0, covering = 0;
  for (std::size_t i = 0; i < planes.size(); ++i)
    for (std::size_t j = i + 1; j < planes.size(); ++j) {
      ++pairs;
      if (std::all_of(pts.begin(), pts.end(),
                      [&](const Point& p) { return planes[i].contains(p) || planes[j].contains(p); }))
        ++covering;
    }
  t.expect(planes.size() == 12 && pairs == 66 && covering == 0,
           [&] { return std::to_string(covering) + " of " + std::to_string(pairs) + " pairs cover J(2,3)"; });
  return finish(8, "covers", t, start, 10.0, std::to_string(pairs) + " pairs checked");
}

Result property_suites(const Options& opt) {
  const auto start = Clock::now();
  Tally t;
  std::mt19937_64 rng(opt.seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  // Term orders.
  for (int i = 0; i < 10'000; ++i) {
    const int n = uniform(1, 4);
    auto random_monomial = [&] {
      std::vector<int> e(static_cast<std::size_t>(n));
      for (auto& x : e) x = uniform(0, 4);
      return Monomial(e);
    };
    const Monomial u = random_monomial(), v = random_monomial(), w = random_monomial();
    for (TermOrder order : {TermOrder::lex, TermOrder::deglex}) {
      const bool uv = term_less(u, v, order), vu = term_less(v, u, order);
      t.expect((uv + vu + (u == v)) == 1, [&] { return "trichotomy fails for " + u.to_string() + ", " + v.to_string(); });
      if (uv && term_less(v, w, order)) t.expect(term_less(u, w, order), [&] { return "transitivity"; });
      if (uv) t.expect(term_less(u * w, v * w, order), [&] { return "multiplicativity"; });
      t.expect(!term_less(u, Monomial::one(n), order), [&] { return "1 is not minimal"; });
    }
  }

  // Reduction modulo the closed-form bases.
  for (int i = 0; i < 1'000; ++i) {
    const int n = uniform(1, 3), q = uniform(1, 3);
    const Field field = uniform(0, 1) ? prime_field_for(q) : rationals();
    const TermOrder order = uniform(0, 1) ? TermOrder::lex : TermOrder::deglex;
    const auto emb = Embedding::standard(field, q);
    const auto basis = gb_full(n, q, emb, order).polynomials();
    auto random_poly = [&] {
      Polynomial p(field, n);
      const int terms = uniform(0, 6);
      for (int k = 0; k < terms; ++k) {
        std::vector<int> e(static_cast<std::size_t>(n));
        for (auto& x : e) x = uniform(0, q + 1);
        p.add_term(field.from_int(uniform(-3, 3)), Monomial(e));
      }
      return p;
    };
    const Polynomial f = random_poly(), g = random_poly();
    const Element alpha = field.from_int(uniform(-3, 3)), beta = field.from_int(uniform(-3, 3));
    const Polynomial rf = reduce(f, basis, order), rg = reduce(g, basis, order);
    const std::string where = tag(field, n, q, order) + " f=" + f.to_string(order);
    t.expect(reduce(rf, basis, order) == rf, [&] { return where + ": not idempotent"; });
    t.expect(reduce(f.scale(alpha) + g.scale(beta), basis, order) == rf.scale(alpha) + rg.scale(beta),
             [&] { return where + ": not linear"; });
    t.expect(rf.degree() <= q - 1, [&] { return where + ": remainder has degree " + std::to_string(rf.degree()); });
    const auto pts = embedded_points(n, q, emb);
    t.expect(oracle::membership(f - rf, pts), [&] { return where + ": remainder differs on J(n,q)"; });
  }

  // Field axioms.
  for (const char* spec : {"gf:2", "gf:3", "gf:2^2", "gf:5", "gf:2^3", "gf:3^2"}) {
    const Field field = Field::from_string(spec);
    const auto elems = field.elements();
    const std::set<std::uint32_t> codes = [&] {
      std::set<std::uint32_t> c;
      for (const auto& e : elems) c.insert(e.code());
      return c;
    }();
    t.expect(codes.size() == elems.size() && elems.size() == *field.size(), [&] { return std::string(spec) + ": enumeration"; });
    const Element zero = field.zero(), one = field.one();
    for (const auto& a : elems) {
      t.expect(a + zero == a && a * one == a && a + (-a) == zero, [&] { return std::string(spec) + ": identities"; });
      if (!a.is_zero()) t.expect(a * a.inverse() == one, [&] { return std::string(spec) + ": inverse of " + a.to_string(); });
      for (const auto& b : elems) {
        t.expect(a + b == b + a && a * b == b * a, [&] { return std::string(spec) + ": commutativity"; });
        for (const auto& c : elems)
          t.expect((a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c,
                   [&] { return std::string(spec) + ": associativity or distributivity"; });
      }
    }
  }

  // phi.
  for (int n = 1; n <= 6; ++n)
    for (int q = 1; q <= 6; ++q) {
      const auto seqs = enumerate_incseq(n, q);
      const auto targets = monomials_up_to_degree(n, q - 1, TermOrder::deglex);
      std::set<std::vector<int>> images;
      for (const auto& s : seqs) {
        const auto v = phi(s);
        images.insert(v);
        t.expect(Monomial(v).degree() <= q - 1 && std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; }) &&
                     phi_inv(v) == s,
                 [&] { return "phi fails at " + format_seq(s); });
      }
      t.expect(images.size() == seqs.size() && images.size() == targets.size(),
               [&] { return "phi is not a bijection for n=" + std::to_string(n) + " q=" + std::to_string(q); });
      for (const auto& m : targets) {
        const auto s = phi_inv(m.exponents());
        t.expect(is_nondecreasing(s, q) && phi(s) == m.exponents(), [&] { return "phi_inv fails at " + m.to_string(); });
      }
    }
  return finish(9, "property suites", t, start, 0, "seed " + std::to_string(opt.seed));
}

std::vector<Result> run_all(const Options& opt) {
  return {groebner_correctness(opt), oracle_equivalence(opt), hilbert_function(opt),
          interpolation(opt),        nullstellensatz(opt),    kakeya(opt),
          nikodym(opt),              covers(opt),             property_suites(opt)};
}

std::string format(const Result& r) {
  return std::string(r.passed ? "PASS" : "FAIL") + " " + std::to_string(r.id) + " " + r.name + ": " + r.detail;
}

}  // namespace incseq::acceptance
