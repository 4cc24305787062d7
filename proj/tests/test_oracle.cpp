#include <gtest/gtest.h>

#include <random>
#include <set>

#include "incseq/groebner.hpp"
#include "incseq/linalg.hpp"
#include "incseq/oracle.hpp"

using namespace incseq;

namespace {

std::vector<Monomial> parse_monos(std::initializer_list<const char*> names, int n) {
  std::vector<Monomial> out;
  for (const char* s : names) out.push_back(Monomial::parse(s, n));
  return out;
}

}  // namespace

TEST(Oracle, StandardMonomialsOfJ22OverGF2) {
  const Field f2 = Field::from_string("gf:2");
  const auto pts = embedded_points(2, 2, Embedding::standard(f2, 2));
  EXPECT_EQ(oracle::standard_monomials(pts, TermOrder::deglex), parse_monos({"1", "x2", "x1"}, 2));
}

TEST(Oracle, SinglePoint) {
  const Field f = Field::from_string("gf:7");
  const std::vector<Point> pts{{f.from_int(3), f.from_int(5)}};
  EXPECT_EQ(oracle::standard_monomials(pts, TermOrder::lex), parse_monos({"1"}, 2));
}

TEST(Oracle, DivisionClosedAndSized) {
  std::mt19937_64 rng(3);
  const Field f = Field::from_string("gf:5");
  const auto all = [&] {
    std::vector<Point> out;
    for (const auto& a : f.elements())
      for (const auto& b : f.elements()) out.push_back({a, b});
    return out;
  }();
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Point> pts = all;
    std::shuffle(pts.begin(), pts.end(), rng);
    pts.resize(static_cast<std::size_t>(1 + trial % 20));
    for (TermOrder order : {TermOrder::lex, TermOrder::deglex}) {
      const auto sm = oracle::standard_monomials(pts, order);
      EXPECT_EQ(sm.size(), pts.size());
      const std::set<Monomial> set(sm.begin(), sm.end());
      for (const auto& m : sm)
        for (int j = 0; j < 2; ++j)
          if (m[static_cast<std::size_t>(j)] > 0)
            EXPECT_TRUE(set.count(m / Monomial::variable(2, j + 1)));
    }
  }
}

TEST(Oracle, VanishingPolynomials) {
  std::mt19937_64 rng(5);
  const Field f3 = Field::from_string("gf:3");
  std::vector<Point> grid;
  for (const auto& a : f3.elements())
    for (const auto& b : f3.elements()) grid.push_back({a, b});
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(grid.begin(), grid.end(), rng);
    const std::vector<Point> five(grid.begin(), grid.begin() + 5);
    const auto p = oracle::vanishing_polynomial(five, 2, f3, 2);
    ASSERT_TRUE(p.has_value());
    EXPECT_FALSE(p->is_zero());
    EXPECT_LE(p->degree(), 2);
    EXPECT_TRUE(oracle::membership(*p, five));
  }
  const auto j23 = embedded_points(2, 3, Embedding::standard(f3, 3));
  EXPECT_FALSE(oracle::vanishing_polynomial(j23, 2, f3, 2).has_value());
  const auto one = oracle::vanishing_polynomial({}, 3, f3, 2);
  ASSERT_TRUE(one.has_value());
  EXPECT_EQ(*one, Polynomial::constant(f3, 2, f3.one()));
}

TEST(Oracle, Membership) {
  const Field f = Field::from_string("gf:5");
  for (int n = 1; n <= 4; ++n)
    for (int q = 1; q <= 4; ++q) {
      const auto emb = Embedding::standard(f, q);
      const auto pts = embedded_points(n, q, emb);
      for (const auto& g : gb_full(n, q, emb).polynomials()) EXPECT_TRUE(oracle::membership(g, pts));
      EXPECT_FALSE(oracle::membership(Polynomial::constant(f, n, f.one()), pts));
    }
  const auto emb = Embedding::standard(f, 4);
  const auto spts = embedded_points(2, 4, emb, true);
  EXPECT_EQ(spts.size(), 6u);
  for (const auto& g : gb_strict(2, 4, emb).polynomials()) EXPECT_TRUE(oracle::membership(g, spts));
}

TEST(Linalg, InverseAndNullspace) {
  std::mt19937_64 rng(9);
  for (const char* spec : {"gf:5", "rational", "gf:2^3"}) {
    const Field f = Field::from_string(spec);
    std::vector<Element> pool;
    if (f.is_finite())
      pool = f.elements();
    else
      for (int v = -4; v <= 4; ++v) pool.push_back(f.from_int(v));
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t d = 1 + static_cast<std::size_t>(trial % 5);
      Matrix m(f, d, d + 1);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c <= d; ++c) m(r, c) = pool[pick(rng)];
      const auto x = nullspace_vector(m);
      ASSERT_TRUE(x.has_value());  // more columns than rows
      for (std::size_t r = 0; r < d; ++r) {
        Element acc = f.zero();
        for (std::size_t c = 0; c <= d; ++c) acc += m(r, c) * (*x)[c];
        EXPECT_TRUE(acc.is_zero());
      }
      Matrix sq(f, d, d);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) sq(r, c) = m(r, c);
      const auto inv = inverse(sq);
      EXPECT_EQ(inv.has_value(), rank(sq) == d);
      if (!inv) continue;
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
          Element acc = f.zero();
          for (std::size_t k = 0; k < d; ++k) acc += sq(r, k) * (*inv)(k, c);
          EXPECT_EQ(acc, r == c ? f.one() : f.zero());
        }
    }
  }
}

TEST(Linalg, EchelonBasis) {
  const Field f = Field::from_string("gf:3");
  EchelonBasis basis(f, 3);
  auto v = [&](int a, int b, int c) { return std::vector<Element>{f.from_int(a), f.from_int(b), f.from_int(c)}; };
  EXPECT_TRUE(basis.insert(v(1, 1, 0)));
  EXPECT_TRUE(basis.insert(v(0, 1, 1)));
  EXPECT_FALSE(basis.insert(v(1, 2, 1)));
  EXPECT_FALSE(basis.insert(v(0, 0, 0)));
  EXPECT_TRUE(basis.insert(v(0, 0, 1)));
  EXPECT_EQ(basis.size(), 3u);
}
