// Copyright (c) 2026 The semibound authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "semibound/nu.hpp"
#include "semibound/semigroup.hpp"

namespace semibound {

/// A finite prefix nu_0..nu_L of a nu-sequence, declared complete through L.
struct NuPrefix {
  std::vector<Int> values;

  Int complete_through() const { return static_cast<Int>(values.size()) - 1; }
};

/// The prefix nu_0..nu_upto of s, materialized.
inline NuPrefix nu_prefix(const NumericalSemigroup& s, Int upto) {
  NuProfile p(s);
  NuPrefix out;
  out.values.reserve(static_cast<std::size_t>(upto + 1));
  for (Int i = 0; i <= upto; ++i) out.values.push_back(p.value(i));
  return out;
}

/// Smallest prefix length this implementation guarantees to invert:
/// 2c - g - 1, one index past the last equality nu_k = nu_{k+1}.
inline Int required_prefix_len(const NumericalSemigroup& s) {
  return std::max<Int>(2 * s.conductor() - s.genus() - 1, 0);
}

/// Result of a reconstruction together with the recovered determining data.
/// k = -1 marks the trivial semigroup (its nu-sequence has no equal
/// neighbours).
struct Reconstruction {
  NumericalSemigroup semigroup = NumericalSemigroup::trivial();
  Int k = -1;
  Int genus = 0;
  Int conductor = 0;
};

/// Recover the unique semigroup whose nu-sequence extends the prefix.
///
/// A strictly increasing prefix yields the trivial semigroup. Otherwise
/// k = max{ i | nu_i = nu_{i+1} } determines g = k + 2 - nu_k and
/// c = (k + g + 2) / 2, membership of each i in {2, ..., c-2} is decided
/// downwards by testing nu_{c-1+i-g} = c + i - 2g + #D~(i) with
/// D~(i) = { l gap | i < l < c-1, c-1+i-l gap }, and the answer is
/// validated by recomputing its nu-prefix.
///
/// Throws PrefixTooShort when the prefix cannot expose k (a decrease after
/// the last equality, or fewer than 2c-g-1 values once solved) and
/// InconsistentSequence when no semigroup fits.
inline Reconstruction reconstruct_detailed(const NuPrefix& p) {
  const std::vector<Int>& v = p.values;
  if (v.empty()) throw PrefixTooShort("prefix is empty");
  if (v[0] != 1) throw InconsistentSequence("nu_0 must be 1");
  for (Int x : v)
    if (x < 1) throw InconsistentSequence("nu values must be positive");
  const Int L = p.complete_through();

  auto validate = [&](const NumericalSemigroup& s) {
    NuProfile prof(s);
    for (Int i = 0; i <= L; ++i)
      if (prof.value(i) != v[static_cast<std::size_t>(i)])
        throw InconsistentSequence(
            "no numerical semigroup has this nu-sequence (mismatch at index " +
            std::to_string(i) + ")");
  };

  Int k = -1;
  for (Int i = 0; i < L; ++i)
    if (v[static_cast<std::size_t>(i)] == v[static_cast<std::size_t>(i + 1)])
      k = i;

  if (k < 0) {
    // no equality visible: either strictly increasing (the trivial
    // semigroup, if anything) or a decrease whose matching equality lies
    // beyond the prefix
    for (Int i = 0; i < L; ++i)
      if (v[static_cast<std::size_t>(i)] > v[static_cast<std::size_t>(i + 1)])
        throw PrefixTooShort(
            "sequence decreases but shows no equality nu_k = nu_{k+1}");
    Reconstruction r;
    validate(r.semigroup);
    return r;
  }

  // the prefix must end in a strictly increasing run after k
  for (Int i = k + 1; i < L; ++i)
    if (v[static_cast<std::size_t>(i)] >= v[static_cast<std::size_t>(i + 1)])
      throw PrefixTooShort(
          "sequence still decreases after the last visible equality");

  Int g = k + 2 - v[static_cast<std::size_t>(k)];
  if (g < 1) throw InconsistentSequence("recovered genus is not positive");
  if ((k + g + 2) % 2 != 0)
    throw InconsistentSequence("recovered conductor is not an integer");
  Int c = (k + g + 2) / 2;
  if (c < 2 || g > c)
    throw InconsistentSequence("recovered invariants are impossible");
  if (L < 2 * c - g - 1)
    throw PrefixTooShort("need nu through index " +
                         std::to_string(2 * c - g - 1) + ", have " +
                         std::to_string(L));

  // gap[i] for i in [0, c): seeded with the forced values, the rest decided
  // downwards from c-2
  std::vector<bool> gap(static_cast<std::size_t>(c), false);
  gap[static_cast<std::size_t>(1)] = true;
  gap[static_cast<std::size_t>(c - 1)] = true;
  for (Int i = c - 2; i >= 2; --i) {
    Int dtilde = 0;
    for (Int l = i + 1; l < c - 1; ++l)
      if (gap[static_cast<std::size_t>(l)] &&
          gap[static_cast<std::size_t>(c - 1 + i - l)])
        ++dtilde;
    Int member_nu = c + i - 2 * g + dtilde;
    gap[static_cast<std::size_t>(i)] =
        v[static_cast<std::size_t>(c - 1 + i - g)] != member_nu;
  }

  std::vector<Int> gap_list;
  for (Int i = 1; i < c; ++i)
    if (gap[static_cast<std::size_t>(i)]) gap_list.push_back(i);

  Reconstruction r;
  try {
    r.semigroup = NumericalSemigroup::from_gaps(gap_list);
  } catch (const NotClosed& e) {
    throw InconsistentSequence(
        std::string("decided membership is not additively closed: ") +
        e.what());
  }
  r.k = k;
  r.genus = g;
  r.conductor = c;
  if (r.semigroup.genus() != g || r.semigroup.conductor() != c)
    throw InconsistentSequence("recovered invariants do not match the result");
  validate(r.semigroup);
  return r;
}

inline NumericalSemigroup reconstruct(const NuPrefix& p) {
  return reconstruct_detailed(p).semigroup;
}

}  // namespace semibound
