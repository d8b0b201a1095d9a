#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cbalg/field.hpp"
#include "test_util.hpp"

namespace {

using namespace cbalg;

TEST(Characteristic, Values) {
  EXPECT_EQ(characteristic(FieldDescriptor::rationals()), 0u);
  EXPECT_EQ(characteristic(FieldDescriptor::prime(3)), 3u);
  EXPECT_EQ(characteristic(FieldDescriptor::prime(2)), 2u);
  EXPECT_EQ(RationalField{}.characteristic(), 0u);
  EXPECT_EQ(PrimeField(7).characteristic(), 7u);
}

TEST(Descriptor, RejectsComposites) {
  for (std::uint64_t p : {0, 1, 4, 6, 9, 15, 91}) {
    try {
      FieldDescriptor::prime(p);
      ADD_FAILURE() << p;
    } catch (const error& e) {
      EXPECT_EQ(e.code(), errc::invalid_field);
    }
  }
  EXPECT_THROW(PrimeField(4), error);
}

TEST(Descriptor, ParsesNames) {
  EXPECT_EQ(FieldDescriptor::parse("Q"), FieldDescriptor::rationals());
  EXPECT_EQ(FieldDescriptor::parse("F5"), FieldDescriptor::prime(5));
  EXPECT_EQ(FieldDescriptor::parse("Fp:97"), FieldDescriptor::prime(97));
  EXPECT_EQ(FieldDescriptor::parse("GF(3)"), FieldDescriptor::prime(3));
  EXPECT_THROW(FieldDescriptor::parse("F4"), error);
  EXPECT_THROW(FieldDescriptor::parse("R"), error);
  EXPECT_EQ(FieldDescriptor::prime(5).name(), "F5");
}

TEST(Rational, CanonicalText) {
  const RationalField q;
  EXPECT_EQ(q.parse("2/4").str(), "1/2");
  EXPECT_EQ(q.parse("-6/3").str(), "-2");
  EXPECT_EQ(q.parse("+0/7").str(), "0");
  EXPECT_EQ(q.parse("123456789012345678901234567890").str(), "123456789012345678901234567890");
  EXPECT_EQ(q.parse(q.parse("-10/4").str()), q.parse("-5/2"));
}

TEST(Rational, BadScalars) {
  const RationalField q;
  for (const char* s : {"", "1/0", "a", "1.5", "1//2", "--1", "3/-6"}) {
    try {
      q.parse(s);
      ADD_FAILURE() << s;
    } catch (const error& e) {
      EXPECT_EQ(e.code(), errc::bad_scalar) << s;
    }
  }
}

TEST(Residue, CanonicalText) {
  const PrimeField f(5);
  EXPECT_EQ(f.parse("7").str(), "2");
  EXPECT_EQ(f.parse("-1").str(), "4");
  EXPECT_EQ(f.parse("1/2").str(), "3");  // 2 * 3 = 6 = 1
  EXPECT_EQ(f.from_int(-12).str(), "3");
  try {
    f.parse("1/5");
    ADD_FAILURE();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::bad_scalar);
  }
}

TEST(Residue, InverseTable) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 97u}) {
    const PrimeField f(p);
    for (std::uint32_t v = 1; v < p; ++v) {
      // independent check: search for the inverse
      std::uint32_t w = 1;
      while ((std::uint64_t{v} * w) % p != 1) ++w;
      EXPECT_EQ(f.element(v).inv().value(), w);
    }
    EXPECT_THROW(f.zero().inv(), error);
  }
}

TEST(Rational, InverseProperty) {
  std::mt19937_64 rng(11);
  const RationalField q;
  std::uniform_int_distribution<int> d(-50, 50);
  for (int t = 0; t < 500; ++t) {
    const int a = d(rng), b = d(rng);
    if (a == 0 || b == 0) continue;
    const auto x = q.from_int(a) / q.from_int(b);
    EXPECT_EQ(x * x.inv(), q.one());
  }
  EXPECT_THROW(q.zero().inv(), error);
}

TEST(FieldAxioms, RandomTriples) {
  std::mt19937_64 rng(3);
  auto check = [&](const auto& f) {
    for (int t = 0; t < 300; ++t) {
      const auto a = cbtest::random_scalar(f, rng, 0.9), b = cbtest::random_scalar(f, rng, 0.9),
                 c = cbtest::random_scalar(f, rng, 0.9);
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a + (-a), f.zero());
      EXPECT_EQ(f.parse(a.str()), a);  // canonical text round-trips
    }
  };
  check(RationalField{});
  check(PrimeField(7));
}

TEST(Enumerate, SmallCases) {
  const PrimeField f2(2), f3(3);
  const auto v = enumerate_vectors(f2, 2, 100);
  ASSERT_EQ(v.size(), 4u);
  const std::vector<std::vector<int>> want{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(v[i][0].value(), static_cast<std::uint32_t>(want[i][0]));
    EXPECT_EQ(v[i][1].value(), static_cast<std::uint32_t>(want[i][1]));
  }
  const auto w = enumerate_vectors(f3, 1, 100);
  ASSERT_EQ(w.size(), 3u);
  for (std::uint32_t i = 0; i < 3; ++i) EXPECT_EQ(w[i][0].value(), i);
}

TEST(Enumerate, Errors) {
  try {
    enumerate_vectors(PrimeField(5), 10, 100000);
    ADD_FAILURE();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::cap_exceeded);
  }
  try {
    enumerate_vectors(FieldDescriptor::rationals(), 2, 100);
    ADD_FAILURE();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::infinite_field);
  }
}

TEST(Enumerate, DistinctAndLexicographic) {
  for (std::uint32_t p : {2u, 3u, 5u})
    for (std::size_t n = 0; n <= 4; ++n) {
      const PrimeField f(p);
      const auto v = enumerate_vectors(f, n, 100000);
      EXPECT_EQ(v, cbtest::all_vectors(f, n));
      EXPECT_EQ(std::set<Element<PrimeField>>(v.begin(), v.end()).size(), v.size());
    }
}

TEST(Enumerate, LinesAreOnePerLine) {
  const PrimeField f(3);
  std::vector<Element<PrimeField>> lines;
  for_each_line(f, 3, 1000, [&](const Element<PrimeField>& x) {
    lines.push_back(x);
    return true;
  });
  EXPECT_EQ(lines.size(), 13u);  // (27 - 1) / 2
  std::set<Element<PrimeField>> covered;
  for (const auto& x : lines)
    for (std::uint32_t s = 1; s < 3; ++s) covered.insert(scaled(f.element(s), x));
  EXPECT_EQ(covered.size(), 26u);
}

}  // namespace
