#include <gtest/gtest.h>

#include <random>

#include "incseq/field.hpp"

using namespace incseq;

namespace {

// Schoolbook product of two base-p digit vectors reduced by a monic modulus.
std::uint32_t reference_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p, const std::vector<std::uint32_t>& mod) {
  const std::size_t k = mod.size() - 1;
  auto digits = [&](std::uint32_t x) {
    std::vector<std::uint64_t> d(k, 0);
    for (std::size_t i = 0; i < k; ++i, x /= p) d[i] = x % p;
    return d;
  };
  const auto da = digits(a), db = digits(b);
  std::vector<std::uint64_t> prod(2 * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  for (std::size_t top = 2 * k - 1; top >= k; --top) {
    const std::uint64_t c = prod[top];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= k; ++i) prod[top - k + i] = (prod[top - k + i] + p * p - c * mod[i] % p) % p;
  }
  std::uint32_t code = 0;
  for (std::size_t i = k; i-- > 0;) code = code * p + static_cast<std::uint32_t>(prod[i]);
  return code;
}

// Degree 2 and 3 polynomials are irreducible iff they have no root.
bool has_root(std::uint32_t p, const std::vector<std::uint32_t>& mod) {
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t v = 0;
    for (std::size_t i = mod.size(); i-- > 0;) v = (v * x + mod[i]) % p;
    if (v == 0) return true;
  }
  return false;
}

}  // namespace

TEST(Field, PrimeFieldArithmetic) {
  const Field f = Field::from_string("gf:3");
  const auto elems = f.elements();
  ASSERT_EQ(elems.size(), 3u);
  EXPECT_EQ(elems[0].to_string(), "0");
  EXPECT_EQ(elems[1].to_string(), "1");
  EXPECT_EQ(elems[2].to_string(), "2");
  EXPECT_TRUE((f.from_int(1) + f.from_int(2)).is_zero());
  EXPECT_EQ(f.from_int(-1), f.from_int(2));
  EXPECT_EQ(f.from_int(2).inverse(), f.from_int(2));
}

TEST(Field, GF2Enumeration) {
  const auto elems = Field::from_string("gf:2").elements();
  ASSERT_EQ(elems.size(), 2u);
  EXPECT_TRUE(elems[0].is_zero());
  EXPECT_TRUE(elems[1].is_one());
}

TEST(Field, RationalArithmetic) {
  const Field q = Field::make(FieldSpec::rational());
  EXPECT_EQ(q.parse("1/2") + q.parse("1/3"), q.parse("5/6"));
  EXPECT_EQ(q.parse("-6/8").to_string(), "-3/4");
  EXPECT_EQ(q.characteristic(), 0u);
  EXPECT_FALSE(q.size().has_value());
  EXPECT_THROW(q.elements(), Error);
  EXPECT_THROW(q.zero().inverse(), Error);
}

TEST(Field, RationalAddSubRoundTrip) {
  const Field q = Field::make(FieldSpec::rational());
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> num(-1'000'000'000'000LL, 1'000'000'000'000LL);
  std::uniform_int_distribution<long long> den(1, 1'000'000'000LL);
  for (int i = 0; i < 1000; ++i) {
    const Element a = q.from_int(num(rng)) / q.from_int(den(rng));
    const Element b = q.from_int(num(rng)) / q.from_int(den(rng));
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ(a * b * b * b * b / (b * b * b * b), b.is_zero() ? q.zero() : a);
  }
}

TEST(Field, GF4GeneratorSquare) {
  const Field f = Field::make(FieldSpec::extension(2, 2, {1, 1, 1}));
  const Element g = f.from_code(2);
  EXPECT_EQ(g * g, g + f.one());
  EXPECT_EQ(Field::from_string("gf:2^2"), f);
}

TEST(Field, ExtensionMultiplicationMatchesSchoolbook) {
  for (auto [p, k] : {std::pair{2u, 2u}, std::pair{2u, 3u}, std::pair{3u, 2u}, std::pair{5u, 2u}, std::pair{2u, 4u}}) {
    const Field f = Field::make(FieldSpec::extension(p, k));
    const auto mod = lowest_irreducible(p, k);
    const auto elems = f.elements();
    ASSERT_EQ(elems.size(), *f.size());
    for (const auto& a : elems)
      for (const auto& b : elems) ASSERT_EQ((a * b).code(), reference_mul(a.code(), b.code(), p, mod));
  }
}

TEST(Field, DefaultModuli) {
  EXPECT_EQ(lowest_irreducible(2, 2), (std::vector<std::uint32_t>{1, 1, 1}));
  EXPECT_EQ(lowest_irreducible(2, 3), (std::vector<std::uint32_t>{1, 1, 0, 1}));
  EXPECT_EQ(lowest_irreducible(3, 2), (std::vector<std::uint32_t>{1, 0, 1}));
  for (auto [p, k] : {std::pair{2u, 2u}, std::pair{2u, 3u}, std::pair{3u, 2u}, std::pair{3u, 3u}, std::pair{5u, 2u}})
    EXPECT_FALSE(has_root(p, lowest_irreducible(p, k)));
}

TEST(Field, IrreducibilityAgreesWithRootTest) {
  for (std::uint32_t p : {2u, 3u, 5u})
    for (std::uint32_t k : {2u, 3u}) {
      std::uint32_t count = 1;
      for (std::uint32_t i = 0; i < k; ++i) count *= p;
      for (std::uint32_t c = 0; c < count; ++c) {
        std::vector<std::uint32_t> mod(k + 1, 0);
        for (std::uint32_t i = 0, x = c; i < k; ++i, x /= p) mod[i] = x % p;
        mod[k] = 1;
        EXPECT_EQ(is_irreducible(p, mod), !has_root(p, mod));
      }
    }
}

TEST(Field, FieldAxiomsExhaustive) {
  for (const char* spec : {"gf:2", "gf:3", "gf:2^2", "gf:5", "gf:7", "gf:2^3", "gf:3^2", "gf:2^4"}) {
    const Field f = Field::from_string(spec);
    const auto elems = f.elements();
    for (const auto& a : elems) {
      EXPECT_EQ(a + f.zero(), a);
      EXPECT_EQ(a * f.one(), a);
      EXPECT_TRUE((a + (-a)).is_zero());
      if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
      for (const auto& b : elems) {
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a - b, a + (-b));
        for (const auto& c : elems) {
          EXPECT_EQ((a + b) + c, a + (b + c));
          EXPECT_EQ((a * b) * c, a * (b * c));
          EXPECT_EQ(a * (b + c), a * b + a * c);
        }
      }
    }
  }
}

TEST(Field, PrimitiveElementGeneratesTheGroup) {
  for (const char* spec : {"gf:2", "gf:7", "gf:2^2", "gf:3^2", "gf:2^5"}) {
    const Field f = Field::from_string(spec);
    const Element g = f.primitive_element();
    const std::uint32_t order = *f.size() - 1;
    Element x = f.one();
    for (std::uint32_t i = 1; i < order; ++i) {
      x *= g;
      EXPECT_FALSE(x.is_one()) << spec << " order divides " << i;
    }
    EXPECT_TRUE(g.pow(order).is_one());
  }
}

TEST(Field, SpecErrors) {
  EXPECT_THROW(Field::make(FieldSpec::prime(4)), Error);
  EXPECT_THROW(Field::make(FieldSpec::prime(1)), Error);
  EXPECT_THROW(Field::make(FieldSpec::extension(2, 2, {1, 0, 1})), Error);
  EXPECT_THROW(Field::from_string("gf:2^17"), Error);
  EXPECT_THROW(Field::from_string("gf:6^2"), Error);
  EXPECT_THROW(Field::from_string("reals"), Error);
  EXPECT_NO_THROW(Field::from_string("gf:2^16"));
}

TEST(Field, SpecStrings) {
  EXPECT_EQ(FieldSpec::parse("gf:7").to_string(), "gf:7");
  EXPECT_EQ(FieldSpec::parse("rational").to_string(), "rational");
  EXPECT_EQ(FieldSpec::parse("gf:2^2").to_string(), "gf:2^2");
  const Field custom = Field::from_string("gf:3^2:2,2,1");
  EXPECT_EQ(Field::from_string(custom.spec().to_string()), custom);
  EXPECT_FALSE(custom == Field::from_string("gf:3^2"));
}

TEST(Field, ElementStrings) {
  const Field f4 = Field::from_string("gf:2^2");
  EXPECT_EQ(f4.from_code(2).to_string(), "[0,1]");
  EXPECT_EQ(f4.parse("[1,1]").code(), 3u);
  EXPECT_EQ(f4.parse("1"), f4.one());
  const Field f5 = Field::from_string("gf:5");
  EXPECT_EQ(f5.parse("-1").to_string(), "4");
  EXPECT_EQ(f5.parse("7"), f5.from_int(2));
  EXPECT_THROW(f5.parse("1/2x"), Error);
  EXPECT_THROW(f4.parse("[1,2]"), Error);
  for (const auto& e : f4.elements()) EXPECT_EQ(f4.parse(e.to_string()), e);
}

TEST(Field, MixedFieldsRejected) {
  EXPECT_THROW(Field::from_string("gf:3").one() + Field::from_string("gf:5").one(), Error);
}
