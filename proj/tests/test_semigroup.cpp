// Copyright (c) 2026 The semibound authors.
// SPDX-License-Identifier: Apache-2.0

#include <numeric>
#include <set>

#include <catch_amalgamated.hpp>

#include "semibound/enumerate.hpp"
#include "semibound/semigroup.hpp"

using namespace semibound;

namespace {

// independent oracle: the interval-generated semigroup as the literal union
// of blocks {ki..kj}, truncated at its conductor
NumericalSemigroup interval_by_union(Int i, Int j) {
  Int bound = i * j + i + j + 2;
  std::vector<bool> member(static_cast<std::size_t>(bound), false);
  for (Int k = 0; k * i < bound; ++k)
    for (Int x = k * i; x <= k * j && x < bound; ++x)
      member[static_cast<std::size_t>(x)] = true;
  std::vector<Int> gaps;
  for (Int x = 1; x < bound; ++x)
    if (!member[static_cast<std::size_t>(x)]) gaps.push_back(x);
  return NumericalSemigroup::from_gaps(gaps);
}

std::vector<Int> members_upto(const NumericalSemigroup& s, Int hi) {
  std::vector<Int> out;
  for (Int x = 0; x <= hi; ++x)
    if (s.contains(x)) out.push_back(x);
  return out;
}

const NumericalSemigroup klein = NumericalSemigroup::from_gaps({1, 2, 4});
const NumericalSemigroup hermitian = NumericalSemigroup::from_generators({4, 5});

}  // namespace

TEST_CASE("from_generators") {
  CHECK(members_upto(hermitian, 12) == std::vector<Int>{0, 4, 5, 8, 9, 10, 12});
  CHECK(hermitian.conductor() == 12);
  CHECK(hermitian.genus() == 6);

  CHECK(NumericalSemigroup::from_generators({1}) == NumericalSemigroup::trivial());

  auto s23 = NumericalSemigroup::from_generators({2, 3});
  CHECK(s23.gaps() == std::vector<Int>{1});
  CHECK(s23.conductor() == 2);

  CHECK_THROWS_AS(NumericalSemigroup::from_generators({}), EmptyGenerators);
  try {
    NumericalSemigroup::from_generators({4, 6});
    FAIL("expected GcdNotOne");
  } catch (const GcdNotOne& e) {
    CHECK(e.gcd == 2);
  }
  CHECK_THROWS_AS(NumericalSemigroup::from_generators({0, 3}), InvalidArgument);

  SECTION("order and multiplicity of generators do not matter") {
    CHECK(NumericalSemigroup::from_generators({5, 4, 4}) == hermitian);
  }
}

TEST_CASE("two-generator conductor and genus laws") {
  for (Int a = 2; a <= 30; ++a)
    for (Int b = a + 1; b <= 30; ++b) {
      if (std::gcd(a, b) != 1) continue;
      auto s = NumericalSemigroup::from_generators({a, b});
      CAPTURE(a, b);
      CHECK(s.conductor() == (a - 1) * (b - 1));
      CHECK(s.genus() == s.conductor() / 2);
    }
}

TEST_CASE("from_gaps") {
  CHECK(members_upto(klein, 6) == std::vector<Int>{0, 3, 5, 6});
  CHECK(klein.conductor() == 5);
  CHECK(klein.genus() == 3);

  CHECK(NumericalSemigroup::from_gaps({}) == NumericalSemigroup::trivial());

  try {
    NumericalSemigroup::from_gaps({2});
    FAIL("expected NotClosed");
  } catch (const NotClosed& e) {
    CHECK(e.a == 1);
    CHECK(e.b == 1);
  }
  CHECK_THROWS_AS(NumericalSemigroup::from_gaps({0, 1}), InvalidArgument);
}

TEST_CASE("from_interval") {
  CHECK(NumericalSemigroup::from_interval(4, 5) == hermitian);
  CHECK(NumericalSemigroup::from_interval(1, 1) == NumericalSemigroup::trivial());
  CHECK_THROWS_AS(NumericalSemigroup::from_interval(3, 3), DegenerateInterval);
  CHECK_THROWS_AS(NumericalSemigroup::from_interval(5, 4), InvalidArgument);
  CHECK_THROWS_AS(NumericalSemigroup::from_interval(0, 2), InvalidArgument);

  SECTION("equals the union of blocks {ki..kj} for all 1 <= i < j <= 12") {
    for (Int i = 1; i < 12; ++i)
      for (Int j = i + 1; j <= 12; ++j) {
        CAPTURE(i, j);
        CHECK(NumericalSemigroup::from_interval(i, j) == interval_by_union(i, j));
      }
  }
}

TEST_CASE("ordinary") {
  auto s5 = NumericalSemigroup::ordinary(5);
  CHECK(members_upto(s5, 7) == std::vector<Int>{0, 5, 6, 7});
  CHECK(s5.genus() == 4);
  CHECK(NumericalSemigroup::ordinary(0) == NumericalSemigroup::trivial());
  CHECK(NumericalSemigroup::ordinary(1) == NumericalSemigroup::trivial());
  CHECK(NumericalSemigroup::ordinary(3).gaps() == std::vector<Int>{1, 2});
  CHECK_THROWS_AS(NumericalSemigroup::ordinary(-1), InvalidArgument);
}

TEST_CASE("inductive") {
  CHECK(NumericalSemigroup::inductive({1}, {1}) == NumericalSemigroup::trivial());

  // single step with a=2, b=2: 2*N0 u {m >= 4} = {0,2} u {m >= 4}
  auto h = NumericalSemigroup::inductive({2}, {2});
  CHECK(h.gaps() == std::vector<Int>{1, 3});

  // the Garcia-Stichtenoth recursion is one particular inductive sequence
  CHECK(NumericalSemigroup::inductive({2, 2}, {1, 2}) ==
        NumericalSemigroup::garcia_stichtenoth(2, 3));
  CHECK(NumericalSemigroup::inductive({2, 2, 2, 2}, {1, 2, 6, 12}) ==
        NumericalSemigroup::garcia_stichtenoth(2, 5));

  CHECK_THROWS_AS(NumericalSemigroup::inductive({}, {}), EmptyCoefficients);
  CHECK_THROWS_AS(NumericalSemigroup::inductive({2}, {2, 3}), InvalidArgument);
  CHECK_THROWS_AS(NumericalSemigroup::inductive({0}, {1}), InvalidArgument);
}

TEST_CASE("garcia_stichtenoth") {
  auto gs5 = NumericalSemigroup::garcia_stichtenoth(2, 5);
  CHECK(gs5.conductor() == 24);
  CHECK(gs5.lambda(1) == 16);
  CHECK(gs5.lambda(2) == 20);
  CHECK(gs5.members_below_conductor() == std::vector<Int>{0, 16, 20});

  CHECK(NumericalSemigroup::garcia_stichtenoth(2, 1) == NumericalSemigroup::trivial());
  // evaluated by hand through the recursion: L2 = {0} u {>=2},
  // L3 = 2*L2 u {>=4} = {0} u {>=4}
  CHECK(NumericalSemigroup::garcia_stichtenoth(2, 3) == NumericalSemigroup::ordinary(4));
  CHECK_THROWS_AS(NumericalSemigroup::garcia_stichtenoth(1, 3), InvalidArgument);
}

TEST_CASE("contains") {
  CHECK_FALSE(klein.contains(4));
  CHECK(klein.contains(0));
  CHECK(klein.contains(1000));
  CHECK_FALSE(klein.contains(-3));
}

TEST_CASE("enumeration lambda and its inverse") {
  CHECK(hermitian.lambda(6) == 12);  // row 6 of the Hermitian table
  CHECK(hermitian.lambda(0) == 0);
  CHECK(klein.lambda_inv(8) == 5);
  CHECK_THROWS_AS(klein.lambda_inv(4), NotAMember);
  CHECK_THROWS_AS(klein.lambda_inv(-1), NotAMember);

  SECTION("mutually inverse below 2c for every semigroup of genus <= 12") {
    Int checked = 0;
    for_each_semigroup_up_to_genus(12, [&](const NumericalSemigroup& s) {
      for (Int x = 0; x < 2 * s.conductor() + 2; ++x) {
        if (!s.contains(x)) continue;
        Int i = s.lambda_inv(x);
        if (s.lambda(i) != x) ++checked;
      }
    });
    CHECK(checked == 0);
  }
}

TEST_CASE("landmarks") {
  auto lm = hermitian.landmarks();
  CHECK(lm.conductor == 12);
  CHECK(lm.dominant == 10);
  CHECK(lm.subconductor == 8);
  CHECK(lm.subdominant == 5);

  lm = klein.landmarks();
  CHECK(lm.conductor == 5);
  CHECK(lm.dominant == 3);
  CHECK(lm.subconductor == 3);
  CHECK(lm.subdominant == 0);

  lm = NumericalSemigroup::from_gaps({1, 2, 3, 4, 5, 7, 10, 11}).landmarks();
  CHECK(lm.conductor == 12);
  CHECK(lm.dominant == 9);
  CHECK(lm.subconductor == 8);
  CHECK(lm.subdominant == 6);

  lm = NumericalSemigroup::trivial().landmarks();
  CHECK(lm.multiplicity == 1);
  CHECK_FALSE(lm.dominant.has_value());
  CHECK_FALSE(lm.subconductor.has_value());
  CHECK_FALSE(lm.subdominant.has_value());

  // ordinary semigroups have dominant = subconductor = 0 but no subdominant
  lm = NumericalSemigroup::ordinary(5).landmarks();
  CHECK(lm.dominant == 0);
  CHECK(lm.subconductor == 0);
  CHECK_FALSE(lm.subdominant.has_value());
}

TEST_CASE("apery set") {
  CHECK(klein.apery_set() == std::vector<Int>{0, 5, 7});
  CHECK(NumericalSemigroup::trivial().apery_set() == std::vector<Int>{0});
  CHECK(NumericalSemigroup::from_generators({2, 3}).apery_set() ==
        std::vector<Int>{0, 3});

  SECTION("has exactly lambda_1 elements, genus <= 12") {
    for_each_semigroup_up_to_genus(12, [&](const NumericalSemigroup& s) {
      auto ap = s.apery_set();
      CHECK(static_cast<Int>(ap.size()) == s.multiplicity());
      for (Int l : ap) CHECK(l < s.conductor() + s.multiplicity());
    });
  }
}

TEST_CASE("minimal generators") {
  CHECK(hermitian.minimal_generators() == std::vector<Int>{4, 5});
  CHECK(NumericalSemigroup::trivial().minimal_generators() == std::vector<Int>{1});
  CHECK(klein.minimal_generators() == std::vector<Int>{3, 5, 7});

  SECTION("regenerate the semigroup, genus <= 10") {
    for_each_semigroup_up_to_genus(10, [&](const NumericalSemigroup& s) {
      CHECK(NumericalSemigroup::from_generators(s.minimal_generators()) == s);
    });
  }
}

TEST_CASE("gap round trip and canonical equality, genus <= 12") {
  std::set<std::size_t> hashes;
  Int total = 0;
  for_each_semigroup_up_to_genus(12, [&](const NumericalSemigroup& s) {
    ++total;
    CHECK(NumericalSemigroup::from_gaps(s.gaps()) == s);
    CHECK(static_cast<Int>(s.gaps().size()) == s.genus());
    hashes.insert(s.hash());
  });
  // hashing is not required to be perfect, but should mostly separate
  CHECK(static_cast<Int>(hashes.size()) > total / 2);
}
