#include <gtest/gtest.h>

#include <random>
#include <set>

#include "incseq/geometry.hpp"
#include "incseq/groebner.hpp"
#include "incseq/oracle.hpp"

using namespace incseq;

namespace {

Field rationals() { return Field::make(FieldSpec::rational()); }

Polynomial P(std::string_view text, Field f, int n) { return Polynomial::parse(text, f, n); }

std::set<std::string> as_strings(const std::vector<Polynomial>& ps) {
  std::set<std::string> out;
  for (const auto& p : ps) out.insert(p.to_string());
  return out;
}

}  // namespace

TEST(Groebner, UnivariateWholeLine) {
  const Field f3 = Field::from_string("gf:3");
  const auto gb = gb_full(1, 3, Embedding::standard(f3, 3));
  ASSERT_EQ(gb.polynomials().size(), 1u);
  EXPECT_EQ(gb.polynomials().front(), P("x1^3 - x1", f3, 1));
}

TEST(Groebner, TwoTwoOverGF2) {
  const Field f2 = Field::from_string("gf:2");
  const auto emb = Embedding::standard(f2, 2);
  const auto gb = gb_full(2, 2, emb);
  // x1(x1-1), x1(x2-1), x2(x2-1) with signs collapsed in characteristic 2.
  EXPECT_EQ(as_strings(gb.polynomials()), (std::set<std::string>{"x1^2 + x1", "x1*x2 + x1", "x2^2 + x2"}));
  const auto pts = embedded_points(2, 2, emb);
  EXPECT_EQ(format_point(pts[0]) + " " + format_point(pts[1]) + " " + format_point(pts[2]), "0,0 0,1 1,1");
  for (const auto& g : gb.polynomials())
    for (const auto& p : pts) EXPECT_TRUE(g.eval(p).is_zero());
}

TEST(Groebner, TwoThreeCounts) {
  const Field f3 = Field::from_string("gf:3");
  const auto emb = Embedding::standard(f3, 3);
  const auto gb = gb_full(2, 3, emb);
  EXPECT_EQ(gb.polynomials().size(), 4u);
  std::vector<Monomial> expected;
  for (const char* m : {"1", "x2", "x1", "x2^2", "x1*x2", "x1^2"}) expected.push_back(Monomial::parse(m, 2));
  EXPECT_EQ(gb.standard_monomials(), expected);
  EXPECT_EQ(oracle::standard_monomials(embedded_points(2, 3, emb), TermOrder::deglex), expected);
}

TEST(Groebner, VanishingAndCountsUpToFive) {
  for (int n = 1; n <= 5; ++n)
    for (int q = 1; q <= 5; ++q) {
      const Field f = Field::make(FieldSpec::prime(smallest_prime_at_least(static_cast<std::uint32_t>(q))));
      const auto emb = Embedding::standard(f, q);
      const auto gb = gb_full(n, q, emb, TermOrder::lex);
      const auto pts = embedded_points(n, q, emb);
      for (const auto& g : gb.polynomials())
        for (const auto& p : pts) ASSERT_TRUE(g.eval(p).is_zero());
      EXPECT_EQ(gb.standard_monomials().size(), pts.size());
      EXPECT_TRUE(gb.is_reduced());
    }
}

TEST(Groebner, OrderInvariance) {
  for (const char* spec : {"gf:5", "rational"}) {
    const Field f = Field::from_string(spec);
    for (int n = 1; n <= 3; ++n)
      for (int q = 1; q <= 4; ++q) {
        const auto emb = Embedding::standard(f, q);
        EXPECT_EQ(as_strings(gb_full(n, q, emb, TermOrder::lex).polynomials()),
                  as_strings(gb_full(n, q, emb, TermOrder::deglex).polynomials()));
        if (q < n) continue;
        EXPECT_EQ(as_strings(gb_strict(n, q, emb, TermOrder::lex).polynomials()),
                  as_strings(gb_strict(n, q, emb, TermOrder::deglex).polynomials()));
      }
  }
}

TEST(Groebner, LeadingMonomialOfBasisMember) {
  const Field q = rationals();
  const auto emb = Embedding::grid(q, 4, q.zero());
  for (TermOrder order : {TermOrder::lex, TermOrder::deglex}) {
    const auto gb = gb_full(3, 4, emb, order);
    for (const auto& e : gb.elements()) {
      std::vector<int> sizes;
      for (const auto& part : e.parts) sizes.push_back(part.size());
      EXPECT_EQ(e.polynomial.leading_monomial(order), Monomial(sizes));
    }
  }
}

TEST(Groebner, StrictTwoThreeOverQ) {
  const Field q = rationals();
  const auto emb = Embedding::standard(q, 3);
  const auto gb = gb_strict(2, 3, emb);
  const std::vector<Polynomial> expected{P("x2 - 1", q, 2) * P("x2 - 2", q, 2), P("x1", q, 2) * P("x2 - 2", q, 2),
                                         P("x1", q, 2) * P("x1 - 1", q, 2)};
  EXPECT_EQ(as_strings(gb.polynomials()), as_strings(expected));
  const auto pts = embedded_points(2, 3, emb, true);
  EXPECT_EQ(pts.size(), 3u);
  for (const auto& g : gb.polynomials())
    for (const auto& p : pts) EXPECT_TRUE(g.eval(p).is_zero());
  EXPECT_TRUE(gb.is_reduced());
}

TEST(Groebner, StrictEdgeCases) {
  const Field f = Field::from_string("gf:5");
  const auto gb = gb_strict(3, 3, Embedding::standard(f, 3));
  EXPECT_EQ(gb.standard_monomials(), std::vector<Monomial>{Monomial::one(3)});
  const auto gb24 = gb_strict(2, 4, Embedding::standard(f, 4));
  EXPECT_EQ(gb24.standard_monomials().size(), binomial(4, 2));
  EXPECT_EQ(gb24.standard_monomials().size(), monomials_up_to_degree(2, 2, TermOrder::deglex).size());
  EXPECT_THROW(gb_strict(4, 3, Embedding::standard(f, 3)), Error);
}

TEST(Groebner, DownsetWholeSet) {
  const Field f = Field::from_string("gf:3");
  const auto emb = Embedding::standard(f, 3);
  const auto gb = gb_downset(2, 3, enumerate_incseq(2, 3), emb);
  EXPECT_EQ(as_strings(gb.polynomials()), as_strings(gb_full(2, 3, emb).polynomials()));
  EXPECT_EQ(gb.standard_monomials(), gb_full(2, 3, emb).standard_monomials());
}

TEST(Groebner, DownsetSinglePoint) {
  const Field f = Field::from_string("gf:5");
  for (int n = 1; n <= 3; ++n) {
    const auto emb = Embedding::standard(f, 3);
    const auto gb = gb_downset(n, 3, {IncSeq(static_cast<std::size_t>(n), 1)}, emb);
    EXPECT_EQ(gb.standard_monomials(), std::vector<Monomial>{Monomial::one(n)});
    std::set<Monomial> lms;
    for (const auto& g : gb.polynomials()) lms.insert(g.leading_monomial(TermOrder::deglex));
    for (int j = 1; j <= n; ++j) EXPECT_TRUE(lms.count(Monomial::variable(n, j)));
  }
}

TEST(Groebner, DownsetThreePoints) {
  const Field f = Field::from_string("gf:3");
  const auto emb = Embedding::standard(f, 3);
  const std::vector<IncSeq> down{{1, 1}, {1, 2}, {2, 2}};
  // phi images (0,0), (0,1), (1,0).
  std::vector<Monomial> expected{Monomial::parse("1", 2), Monomial::parse("x2", 2), Monomial::parse("x1", 2)};
  const auto gb = gb_downset(2, 3, down, emb);
  EXPECT_EQ(gb.standard_monomials(), expected);
  std::vector<Point> pts;
  for (const auto& s : down) pts.push_back(emb.apply(s));
  EXPECT_EQ(oracle::standard_monomials(pts, TermOrder::deglex), expected);
  for (const auto& g : gb.polynomials()) EXPECT_TRUE(oracle::membership(g, pts));
}

TEST(Groebner, DownsetMembersVanishAndMinimalDrop) {
  const Field f = Field::from_string("gf:5");
  const auto emb = Embedding::standard(f, 3);
  for (const auto& down : enumerate_downsets(2, 3)) {
    std::vector<Point> pts;
    for (const auto& s : down) pts.push_back(emb.apply(s));
    const auto full = gb_downset(2, 3, down, emb);
    const auto minimal = gb_downset(2, 3, down, emb, TermOrder::deglex, true);
    EXPECT_LE(minimal.polynomials().size(), full.polynomials().size());
    EXPECT_EQ(minimal.standard_monomials(), full.standard_monomials());
    for (const auto& g : full.polynomials()) EXPECT_TRUE(oracle::membership(g, pts));
    // Every leading monomial of the full list is divisible by one of the minimal list.
    for (const auto& g : full.polynomials()) {
      const auto lm = g.leading_monomial(TermOrder::deglex);
      const auto ms = minimal.polynomials();
      EXPECT_TRUE(std::any_of(ms.begin(), ms.end(),
                              [&](const Polynomial& h) { return h.leading_monomial(TermOrder::deglex).divides(lm); }));
    }
  }
}

TEST(Groebner, DownsetErrors) {
  const Field f = Field::from_string("gf:3");
  const auto emb = Embedding::standard(f, 3);
  EXPECT_THROW(gb_downset(2, 3, {}, emb), Error);
  EXPECT_THROW(gb_downset(2, 3, {{1, 2}}, emb), Error);
}

TEST(Groebner, Hilbert) {
  EXPECT_EQ(hilbert(IdealKind::full, 2, 3, 1).value, 3u);
  EXPECT_EQ(hilbert(IdealKind::full, 3, 4, 3).value, 20u);
  EXPECT_EQ(hilbert(IdealKind::full, 3, 4, 3).value, enumerate_incseq(3, 4).size());
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(hilbert(IdealKind::full, n, 4, 0).value, 1u);
    EXPECT_EQ(hilbert(IdealKind::strict, n, 4, 0).value, 1u);
  }
  const auto beyond = hilbert(IdealKind::full, 2, 3, 5);
  EXPECT_FALSE(beyond.in_range);
  EXPECT_EQ(beyond.value, 6u);
  EXPECT_EQ(hilbert(IdealKind::strict, 2, 4, 3).value, 6u);
  EXPECT_FALSE(hilbert(IdealKind::strict, 2, 4, 3).in_range);
}

TEST(Groebner, Nonvanishing) {
  const Field f3 = Field::from_string("gf:3");
  const auto emb = Embedding::standard(f3, 3);
  const auto w = nonvanishing_point(P("x1 - x2", f3, 2), IdealKind::full, 2, 3, emb);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(format_point(*w), "0,1");
  EXPECT_FALSE(nonvanishing_point(Polynomial(f3, 2), IdealKind::full, 2, 3, emb).has_value());
  const auto f = P("x1 + x2 + 1", f3, 2);
  const auto w2 = nonvanishing_point(f, IdealKind::full, 2, 3, emb);
  ASSERT_TRUE(w2.has_value());
  EXPECT_FALSE(f.eval(*w2).is_zero());
  EXPECT_THROW(nonvanishing_point(P("x1^3", f3, 2), IdealKind::full, 2, 3, emb), Error);
  EXPECT_THROW(nonvanishing_point(P("x1^2", f3, 2), IdealKind::strict, 2, 3, emb), Error);
}

TEST(Groebner, NonvanishingAlwaysFindsAWitness) {
  std::mt19937_64 rng(21);
  const Field f = Field::from_string("gf:5");
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 3, q = 1 + (trial / 3) % 4;
    const bool strict = trial % 2 && q >= n;
    const int bound = strict ? q - n : q - 1;
    const auto emb = Embedding::standard(f, q);
    Polynomial p(f, n);
    const auto ms = monomials_up_to_degree(n, bound, TermOrder::deglex);
    for (const auto& m : ms) p.add_term(f.from_int(std::uniform_int_distribution<int>(0, 4)(rng)), m);
    const auto w = nonvanishing_point(p, strict ? IdealKind::strict : IdealKind::full, n, q, emb);
    EXPECT_EQ(w.has_value(), !p.is_zero());
    if (w) EXPECT_FALSE(p.eval(*w).is_zero());
  }
}

TEST(Groebner, NormalFormAgreesOnPoints) {
  std::mt19937_64 rng(4);
  auto rnd = [&](int hi) { return std::uniform_int_distribution<int>(0, hi)(rng); };
  for (const char* spec : {"gf:5", "rational"}) {
    const Field f = Field::from_string(spec);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 1 + rnd(2), q = 1 + rnd(3);
      const auto emb = Embedding::standard(f, q);
      const auto gb = gb_full(n, q, emb, trial % 2 ? TermOrder::lex : TermOrder::deglex);
      Polynomial p(f, n);
      for (int t = 0; t < 6; ++t) {
        std::vector<int> e(static_cast<std::size_t>(n));
        for (auto& x : e) x = rnd(q + 2);
        p.add_term(f.from_int(rnd(8) - 4), Monomial(e));
      }
      const auto r = reduce(p, gb.polynomials(), gb.order());
      EXPECT_LE(r.degree(), q - 1);
      for (const auto& pt : gb.points()) EXPECT_EQ(r.eval(pt), p.eval(pt));
    }
  }
}
