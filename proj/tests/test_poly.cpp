#include <gtest/gtest.h>

#include <random>

#include "incseq/groebner.hpp"
#include "incseq/poly.hpp"

using namespace incseq;

namespace {

Field rationals() { return Field::make(FieldSpec::rational()); }

Polynomial P(std::string_view text, Field f, int n) { return Polynomial::parse(text, f, n); }

}  // namespace

TEST(Poly, DifferenceOfSquares) {
  const Field q = rationals();
  EXPECT_EQ(P("x1 + 1", q, 1) * P("x1 - 1", q, 1), P("x1^2 - 1", q, 1));
}

TEST(Poly, AdditiveInverse) {
  const Field q = rationals();
  const auto f = P("3*x1^2*x2 - 1/2*x3 + 7", q, 3);
  EXPECT_TRUE((f + (-f)).is_zero());
  EXPECT_EQ((f - f).degree(), -1);
}

TEST(Poly, FrobeniusInCharacteristicTwo) {
  const Field f2 = Field::from_string("gf:2");
  const auto s = P("x1 + x2", f2, 2);
  EXPECT_EQ(s * s, P("x1^2 + x2^2", f2, 2));
}

TEST(Poly, Evaluation) {
  const Field q = rationals();
  const Point pt{q.from_int(2), q.from_int(3)};
  EXPECT_EQ(P("x1*x2", q, 2).eval(pt), q.from_int(6));
  EXPECT_THROW(P("x1*x2", q, 2).eval(Point{q.one()}), Error);
}

TEST(Poly, EvaluationIsAHomomorphism) {
  std::mt19937_64 rng(11);
  const Field f = Field::from_string("gf:7");
  auto rnd = [&](int hi) { return std::uniform_int_distribution<int>(0, hi)(rng); };
  for (int i = 0; i < 300; ++i) {
    Polynomial a(f, 3), b(f, 3);
    for (int t = 0; t < 5; ++t) {
      a.add_term(f.from_int(rnd(6)), Monomial({rnd(3), rnd(3), rnd(3)}));
      b.add_term(f.from_int(rnd(6)), Monomial({rnd(3), rnd(3), rnd(3)}));
    }
    const Point pt{f.from_int(rnd(6)), f.from_int(rnd(6)), f.from_int(rnd(6))};
    EXPECT_EQ((a * b).eval(pt), a.eval(pt) * b.eval(pt));
    EXPECT_EQ((a + b).eval(pt), a.eval(pt) + b.eval(pt));
  }
}

TEST(Poly, LeadingMonomial) {
  const Field q = rationals();
  const auto f = P("x1 + x2^2", q, 2);
  EXPECT_EQ(f.leading_monomial(TermOrder::lex), Monomial::variable(2, 1));
  EXPECT_EQ(f.leading_monomial(TermOrder::deglex), Monomial::variable(2, 2, 2));
  EXPECT_THROW(Polynomial(q, 2).leading_monomial(TermOrder::lex), Error);
}

TEST(Poly, TextFormat) {
  const Field q = rationals();
  const auto f = P("1 - 2*x3 + x1^2*x2", q, 3);
  EXPECT_EQ(f.to_string(), "x1^2*x2 - 2*x3 + 1");
  EXPECT_EQ(P(f.to_string(), q, 3), f);
  EXPECT_EQ(Polynomial(q, 3).to_string(), "0");
  EXPECT_EQ(P("x2 + x1^2", q, 2).to_string(TermOrder::lex), "x1^2 + x2");
  EXPECT_EQ(P("x2^3 + x1^2", q, 2).to_string(TermOrder::lex), "x1^2 + x2^3");
  EXPECT_EQ(P("x2^3 + x1^2", q, 2).to_string(TermOrder::deglex), "x2^3 + x1^2");
  const Field f3 = Field::from_string("gf:3");
  EXPECT_EQ(P("x1 - x2", f3, 2).to_string(), "x1 + 2*x2");
  EXPECT_THROW(P("x3", q, 2), Error);
  EXPECT_THROW(P("x1 +", q, 2), Error);
}

TEST(Poly, MismatchedOperandsRejected) {
  const Field q = rationals();
  EXPECT_THROW(P("x1", q, 1) + P("x1", q, 2), Error);
  EXPECT_THROW(P("x1", q, 1) * P("x1", Field::from_string("gf:3"), 1), Error);
}

TEST(Poly, MonomialBasics) {
  const Monomial m({2, 0, 1});
  EXPECT_EQ(m.degree(), 3);
  EXPECT_EQ(m.to_string(), "x1^2*x3");
  EXPECT_EQ(Monomial::parse("x1^2*x3", 3), m);
  EXPECT_TRUE(Monomial({1, 0, 1}).divides(m));
  EXPECT_FALSE(Monomial({0, 1, 0}).divides(m));
  EXPECT_EQ(m / Monomial({1, 0, 1}), Monomial({1, 0, 0}));
  EXPECT_EQ(Monomial::one(3).to_string(), "1");
}

TEST(Poly, TermOrderAxiomsExhaustiveSmall) {
  const auto ms = monomials_up_to_degree(3, 3, TermOrder::lex);
  for (TermOrder order : {TermOrder::lex, TermOrder::deglex})
    for (const auto& u : ms) {
      EXPECT_FALSE(term_less(u, Monomial::one(3), order));
      for (const auto& v : ms) {
        EXPECT_EQ(term_less(u, v, order) + term_less(v, u, order) + (u == v), 1);
        for (const auto& w : ms)
          if (term_less(u, v, order)) {
            EXPECT_TRUE(term_less(u * w, v * w, order));
            if (term_less(v, w, order)) EXPECT_TRUE(term_less(u, w, order));
          }
      }
    }
}

TEST(Poly, LexComparesFirstDifferingExponent) {
  // i_k < j_k at the smallest differing index k.
  EXPECT_TRUE(term_less(Monomial({0, 5}), Monomial({1, 0}), TermOrder::lex));
  EXPECT_TRUE(term_less(Monomial({1, 0}), Monomial({0, 5}), TermOrder::deglex));
  EXPECT_TRUE(term_less(Monomial({0, 2}), Monomial({1, 1}), TermOrder::deglex));
}

TEST(Poly, MonomialListings) {
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 4; ++d) {
      const auto all = monomials_up_to_degree(n, d, TermOrder::deglex);
      EXPECT_EQ(all.size(), binomial(static_cast<std::uint64_t>(n + d), static_cast<std::uint64_t>(d)));
      EXPECT_TRUE(std::is_sorted(all.begin(), all.end(), TermLess{TermOrder::deglex}));
      const auto lex = monomials_up_to_degree(n, d, TermOrder::lex);
      EXPECT_TRUE(std::is_sorted(lex.begin(), lex.end(), TermLess{TermOrder::lex}));
      EXPECT_EQ(monomials_of_degree(n, d, TermOrder::lex).size(),
                binomial(static_cast<std::uint64_t>(n + d - 1), static_cast<std::uint64_t>(d)));
    }
}

TEST(Poly, ReduceLeavesNormalFormsAlone) {
  const Field f = Field::from_string("gf:5");
  const auto gb = gb_full(2, 3, Embedding::standard(f, 3), TermOrder::deglex);
  const auto basis = gb.polynomials();
  const auto g = P("x1^2 + 3*x1*x2 + x2 + 4", f, 2);
  EXPECT_EQ(reduce(g, basis, TermOrder::deglex), g);
}

TEST(Poly, ReducePowerOfX1) {
  for (int n = 1; n <= 3; ++n)
    for (int q = 1; q <= 4; ++q) {
      const Field f = Field::from_string("gf:5");
      const auto basis = gb_full(n, q, Embedding::standard(f, q), TermOrder::lex).polynomials();
      const auto r = reduce(Polynomial::term(f.one(), Monomial::variable(n, 1, q)), basis, TermOrder::lex);
      EXPECT_LE(r.degree(), q - 1);
    }
}

TEST(Poly, ReduceMatchesBruteForceInterpolation) {
  // GF(3), n=2, q=2: the only a + b x1 + c x2 agreeing with x1 x2 on J(2,2).
  const Field f = Field::from_string("gf:3");
  const auto emb = Embedding::standard(f, 2);
  const auto basis = gb_full(2, 2, emb, TermOrder::deglex).polynomials();
  const auto pts = embedded_points(2, 2, emb);
  const auto target = P("x1*x2", f, 2);
  std::vector<Polynomial> matches;
  for (const auto& a : f.elements())
    for (const auto& b : f.elements())
      for (const auto& c : f.elements()) {
        Polynomial cand(f, 2);
        cand.add_term(a, Monomial::one(2));
        cand.add_term(b, Monomial::variable(2, 1));
        cand.add_term(c, Monomial::variable(2, 2));
        if (std::all_of(pts.begin(), pts.end(), [&](const Point& p) { return cand.eval(p) == target.eval(p); }))
          matches.push_back(cand);
      }
  ASSERT_EQ(matches.size(), 1u);
  EXPECT_EQ(reduce(target, basis, TermOrder::deglex), matches.front());
}

TEST(Poly, HomogeneousPart) {
  const Field q = rationals();
  EXPECT_EQ(P("x1^2 + 3*x1*x2 + x2 + 4", q, 2).homogeneous_part(2), P("x1^2 + 3*x1*x2", q, 2));
}
