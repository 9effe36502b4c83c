// Copyright (c) 2026 The semibound authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>

#include "semibound/semigroup.hpp"

namespace semibound {

/// Classification record for one semigroup (the inclusion lattice:
/// symmetric, pseudo-symmetric, Arf and interval-generated semigroups are
/// all acute; irreducible = symmetric u pseudo-symmetric).
struct ClassFlags {
  bool trivial = false;
  bool ordinary = false;
  bool symmetric = false;
  bool pseudo_symmetric = false;
  bool irreducible = false;
  bool arf = false;
  bool interval_generated = false;
  bool acute = false;
  bool hyperelliptic = false;
};

/// True iff there is no member strictly between 0 and the conductor.
inline bool is_ordinary(const NumericalSemigroup& s) {
  return s.members_below_conductor().size() <= 1;
}

/// True iff c = 2g. Also evaluates the gap-reflection characterization
/// (i gap => c-1-i member) and insists the two agree.
inline bool is_symmetric(const NumericalSemigroup& s) {
  Int c = s.conductor();
  bool by_count = c == 2 * s.genus();
  bool by_reflection = true;
  for (Int i = 1; i < c && by_reflection; ++i)
    if (!s.contains(i) && !s.contains(c - 1 - i)) by_reflection = false;
  if (by_count != by_reflection)
    throw LatticeViolation("symmetric characterizations disagree at conductor " +
                           std::to_string(c));
  return by_count;
}

/// True iff c = 2g - 1. For odd conductors the gap characterization
/// (i gap, i != (c-1)/2 => c-1-i member) is cross-checked.
inline bool is_pseudo_symmetric(const NumericalSemigroup& s) {
  Int c = s.conductor();
  bool by_count = c == 2 * s.genus() - 1;
  if (c % 2 == 0) return false;  // c = 2g-1 is odd
  bool by_reflection = true;
  for (Int i = 1; i < c && by_reflection; ++i) {
    if (2 * i == c - 1) continue;
    if (!s.contains(i) && !s.contains(c - 1 - i)) by_reflection = false;
  }
  if (by_count != by_reflection)
    throw LatticeViolation(
        "pseudo-symmetric characterizations disagree at conductor " +
        std::to_string(c));
  return by_count;
}

/// True iff 2*lambda_i - lambda_j is a member for all i >= j. Only pairs
/// with lambda_i below the conductor need checking; larger ones are members
/// automatically.
inline bool is_arf(const NumericalSemigroup& s) {
  const auto& members = s.members_below_conductor();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (!s.contains(2 * members[i] - members[j])) return false;
  return true;
}

/// A witness pair (x, y) of members with 2x - y a gap, when one exists.
inline std::optional<std::pair<Int, Int>> arf_counterexample(
    const NumericalSemigroup& s) {
  const auto& members = s.members_below_conductor();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (!s.contains(2 * members[i] - members[j]))
        return std::make_pair(members[i], members[j]);
  return std::nullopt;
}

/// True iff s is generated by an interval {i, ..., j}. Any such interval
/// must start at the multiplicity, and widening it inside s only grows the
/// generated semigroup, so it suffices to test the maximal run of
/// consecutive members starting at lambda_1.
inline bool is_interval_generated(const NumericalSemigroup& s) {
  if (s.is_trivial()) return true;  // interval {1}
  if (is_ordinary(s)) return true;  // {c, ..., 2c}
  Int lo = s.multiplicity();
  Int hi = lo;
  while (s.contains(hi + 1)) ++hi;  // run stays below c-1 for non-ordinary s
  if (hi == lo) return false;       // a degenerate interval generates nothing cofinite
  return NumericalSemigroup::from_interval(lo, hi) == s;
}

/// True iff s is ordinary, or non-ordinary with c - d <= c' - d' (the gap
/// run before the conductor is no longer than the one before the
/// subconductor).
inline bool is_acute(const NumericalSemigroup& s) {
  if (is_ordinary(s)) return true;
  Landmarks lm = s.landmarks();
  return lm.conductor - *lm.dominant <= *lm.subconductor - *lm.subdominant;
}

/// True iff s is generated by 2 and an odd integer.
inline bool is_hyperelliptic(const NumericalSemigroup& s) {
  return !s.is_trivial() && s.multiplicity() == 2;
}

namespace detail {

inline void check_lattice(const NumericalSemigroup& s, const ClassFlags& f) {
  auto fail = [&](const std::string& what) {
    throw LatticeViolation("class lattice violated: " + what);
  };
  if (f.symmetric && !f.acute) fail("symmetric but not acute");
  if (f.pseudo_symmetric && !f.acute) fail("pseudo-symmetric but not acute");
  if (f.arf && !f.acute) fail("Arf but not acute");
  if (f.interval_generated && !f.acute) fail("interval-generated but not acute");
  if (f.symmetric && f.pseudo_symmetric) fail("symmetric and pseudo-symmetric");
  // N0 is exempt below: we report it symmetric (c = 2g = 0 holds) yet it is
  // not irreducible and not hyperelliptic.
  if (!f.trivial) {
    if (f.irreducible != (f.symmetric || f.pseudo_symmetric))
      fail("irreducible differs from symmetric-or-pseudo-symmetric");
    if (f.arf && f.symmetric && !f.hyperelliptic)
      fail("Arf and symmetric but not hyperelliptic");
  }
  if (f.arf && f.pseudo_symmetric) {
    bool k3 = s == NumericalSemigroup::from_gaps({1, 2});
    bool k5 = s == NumericalSemigroup::from_gaps({1, 2, 4});
    if (!k3 && !k5) fail("Arf and pseudo-symmetric but not one of the two known semigroups");
  }
  if (f.arf && f.interval_generated && !f.ordinary)
    fail("Arf and interval-generated but not ordinary");
  if (f.pseudo_symmetric && f.interval_generated &&
      s != NumericalSemigroup::from_gaps({1, 2}))
    fail("pseudo-symmetric and interval-generated but not {0,3,4,...}");
  if (f.ordinary && !(f.arf && f.interval_generated && f.acute))
    fail("ordinary must be Arf, interval-generated and acute");
  if (f.hyperelliptic && !(f.arf && f.symmetric))
    fail("hyperelliptic must be Arf and symmetric");
  if (f.trivial && !f.ordinary) fail("trivial must be ordinary");
}

}  // namespace detail

/// Evaluate every predicate and assert the inclusion lattice before
/// returning. A LatticeViolation signals an implementation bug, never bad
/// input.
inline ClassFlags classify(const NumericalSemigroup& s) {
  ClassFlags f;
  f.trivial = s.is_trivial();
  f.ordinary = is_ordinary(s);
  f.symmetric = is_symmetric(s);
  f.pseudo_symmetric = is_pseudo_symmetric(s);
  f.irreducible = !f.trivial && (f.symmetric || f.pseudo_symmetric);
  f.arf = is_arf(s);
  f.interval_generated = is_interval_generated(s);
  f.acute = is_acute(s);
  f.hyperelliptic = is_hyperelliptic(s);
  detail::check_lattice(s, f);
  return f;
}

}  // namespace semibound
