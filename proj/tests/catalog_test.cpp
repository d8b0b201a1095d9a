#include <gtest/gtest.h>

#include <map>
#include <set>
#include <string>

#include "cbalg/catalog.hpp"
#include "test_util.hpp"

namespace {

using namespace cbalg;
using cbtest::vec;

const RationalField Q;
const PrimeField F2(2), F3(3), F5(5), F7(7);

// Written out independently of the entries' expected flags.
const std::set<std::string> kCb{"L1,1", "L2,1", "L3,1", "L3,2", "L4,1", "L4,2", "L5,1", "L5,2", "L5,4",
                                "L5,8", "L6,1", "L6,2", "L6,4", "L6,8", "L6,22", "L6,26"};

errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const error& e) {
    return e.code();
  }
  return errc::parse_error;
}

template <Field F>
std::vector<std::optional<Scalar<F>>> samples(const CatalogEntry& e, const F& f) {
  if (!e.parametric) return {std::nullopt};
  std::vector<std::optional<Scalar<F>>> out;
  for (const auto& s : default_epsilons(f)) out.emplace_back(s);
  return out;
}

TEST(Catalog, Counts) {
  std::map<std::size_t, int> by_dim;
  for (const auto& e : catalog()) ++by_dim[e.dim];
  EXPECT_EQ(by_dim[1] + by_dim[2], 2);
  EXPECT_EQ(by_dim[3], 2);
  EXPECT_EQ(by_dim[4], 3);
  EXPECT_EQ(by_dim[5], 9);
  EXPECT_EQ(by_dim[6], 26);
  EXPECT_EQ(catalog().size(), 42u);
  std::set<std::string> params;
  for (const auto& e : catalog())
    if (e.parametric) params.insert(e.name);
  EXPECT_EQ(params, (std::set<std::string>{"L6,19", "L6,21", "L6,22", "L6,24"}));
}

TEST(Catalog, GetEntryExamples) {
  const auto h = get_entry("L3,2", Q);
  EXPECT_EQ(h, Algebra<RationalField>::from_products(Q, 3, {{0, 1, {{2, Q.one()}}}}, Convention::anticommutative));
  const auto l619 = get_entry("L6,19", Q, Q.from_int(1));
  EXPECT_EQ(l619.product(2, 4), vec(Q, {0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(get_entry("L6,19", Q, Q.from_int(-3)).product(2, 4), vec(Q, {0, 0, 0, 0, 0, -3}));
  EXPECT_EQ(get_entry("L4,1", F5), Algebra<PrimeField>(F5, 4));
  EXPECT_EQ(get_entry("L4,2", Q), direct_sum(h, Algebra<RationalField>(Q, 1)));
  EXPECT_EQ(get_entry("L_{6,26}", Q), get_entry("L6,26", Q));
  EXPECT_EQ(get_entry("L6_26", Q), get_entry("L6,26", Q));
}

TEST(Catalog, Errors) {
  EXPECT_EQ(code_of([] { get_entry("L7,1", Q); }), errc::unknown_name);
  EXPECT_EQ(code_of([] { get_entry("L6,22", Q); }), errc::missing_epsilon);
  EXPECT_EQ(code_of([] { get_entry("L3,2", Q, Q.one()); }), errc::unexpected_epsilon);
  EXPECT_EQ(code_of([] { get_entry("L3,2", F2); }), errc::char_two);
  EXPECT_EQ(code_of([] { check_catalog(F2); }), errc::char_two);
}

TEST(Catalog, AllLieOverSeveralFields) {
  for (const auto& e : catalog()) {
    for (const auto& s : samples(e, Q)) EXPECT_TRUE(is_lie(instantiate(e, Q, s))) << e.name;
    for (const auto& s : samples(e, F3)) EXPECT_TRUE(is_lie(instantiate(e, F3, s))) << e.name;
    for (const auto& s : samples(e, F5)) EXPECT_TRUE(is_lie(instantiate(e, F5, s))) << e.name;
  }
}

TEST(Catalog, CheckMatchesOverQAndF5) {
  const auto q = check_catalog(Q, {Q.from_int(0), Q.from_int(1), Q.from_int(-1), Q.from_int(2)});
  ASSERT_EQ(q.size(), 42u);
  for (const auto& row : q) {
    EXPECT_TRUE(row.match) << row.entry->name;
    EXPECT_EQ(row.computed_cb, kCb.count(row.entry->name) == 1) << row.entry->name;
  }
  for (const auto& row : check_catalog(F5)) {
    EXPECT_TRUE(row.match) << row.entry->name;
    EXPECT_EQ(row.computed_cb, kCb.count(row.entry->name) == 1) << row.entry->name;
  }
}

// char not 2 or 3: CB exactly when L^3 = 0
TEST(Catalog, CbIffCubeZero) {
  for (const auto& f : {F5, F7}) {
    for (const auto& row : check_catalog(f)) {
      for (const auto& s : row.samples) EXPECT_EQ(s.computed_cb, s.l3_zero) << row.entry->name;
    }
  }
  for (const auto& row : check_catalog(Q)) EXPECT_EQ(row.computed_cb, row.l3_zero) << row.entry->name;
}

// Over F3 the verdict is reported; brute force must agree with the theorem route.
TEST(Catalog, F3BruteForceAgrees) {
  for (const auto& e : catalog()) {
    for (const auto& s : samples(e, F3)) {
      const auto a = instantiate(e, F3, s);
      EXPECT_EQ(brute_force_cb(a).holds, static_cast<bool>(is_anti_associative(a))) << e.name;
    }
  }
  for (const auto& row : check_catalog(F3)) EXPECT_TRUE(row.match) << row.entry->name;
}

TEST(Catalog, NonCbWitnessShapes) {
  for (const auto& e : catalog()) {
    if (kCb.count(e.name)) continue;
    for (const auto& s : samples(e, Q)) {
      const auto a = instantiate(e, Q, s);
      const auto e1 = a.basis(0), e2 = a.basis(1);
      const auto e12 = multiply(a, e1, e2);
      if (e.name == "L6,19" || e.name == "L6,20") {
        EXPECT_FALSE(is_zero(multiply(a, e12, e2))) << e.name;
      } else {
        EXPECT_FALSE(is_zero(multiply(a, e1, e12))) << e.name;
      }
    }
  }
  const auto row = check_entry(find_entry("L6,14"), Q, {});
  EXPECT_FALSE(row.computed_cb);
  ASSERT_TRUE(row.samples[0].witness);
  EXPECT_FALSE(is_zero(row.samples[0].witness->defect));
}

TEST(Catalog, SummandsAreDirectSums) {
  for (const auto& e : catalog()) {
    if (e.summand_of.empty()) continue;
    const auto& base = find_entry(e.summand_of);
    for (const auto& s : samples(e, Q))
      EXPECT_EQ(instantiate(e, Q, s), direct_sum(instantiate(base, Q, s), Algebra<RationalField>(Q, 1))) << e.name;
  }
}

}  // namespace
