// Copyright (c) 2026 The semibound authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "semibound/classify.hpp"
#include "semibound/semigroup.hpp"

namespace semibound {

/// nu_i = #{ j | lambda_i - lambda_j is a member }, counted directly.
inline Int nu(const NumericalSemigroup& s, Int i) {
  if (i < 0) throw InvalidArgument("nu index must be non-negative");
  Int li = s.lambda(i);
  Int count = 0;
  for (Int j = 0; j <= i; ++j)
    if (s.contains(li - s.lambda(j))) ++count;
  return count;
}

/// The same value through the gap identity nu_i = i - g(i) + #D(i) + 1 with
/// D(i) = { l gap | lambda_i - l is a gap }. Serves as an independent route
/// for cross-checking nu().
inline Int nu_via_gaps(const NumericalSemigroup& s, Int i) {
  if (i < 0) throw InvalidArgument("nu index must be non-negative");
  Int li = s.lambda(i);
  Int d = 0;
  for (Int l = 1; l < s.conductor(); ++l)
    if (!s.contains(l) && li - l >= 0 && !s.contains(li - l)) ++d;
  return i - s.gaps_below_lambda(i) + d + 1;
}

/// The nu-sequence of one semigroup. Values are materialized through
/// index 2c-g-1; from there on nu_i = i - g + 1 exactly, so queries past the
/// stored range use the closed form. Immutable after construction.
class NuProfile {
 public:
  explicit NuProfile(NumericalSemigroup s) : owner_(std::move(s)) {
    Int upto = 2 * owner_.conductor() - owner_.genus() - 1;
    values_.reserve(static_cast<std::size_t>(std::max<Int>(upto + 1, 0)));
    for (Int i = 0; i <= upto; ++i) values_.push_back(nu(owner_, i));
  }

  const NumericalSemigroup& owner() const { return owner_; }

  /// First index governed by the tail law nu_i = i - g + 1.
  Int tail_start() const { return static_cast<Int>(values_.size()); }

  Int value(Int i) const {
    if (i < 0) throw InvalidArgument("nu index must be non-negative");
    if (i < static_cast<Int>(values_.size()))
      return values_[static_cast<std::size_t>(i)];
    return i - owner_.genus() + 1;
  }

  const std::vector<Int>& materialized() const { return values_; }

 private:
  NumericalSemigroup owner_;
  std::vector<Int> values_;  // nu_0 .. nu_{2c-g-1}
};

/// Order bound on the minimum distance of the code of order m:
/// d_ORD(C_m) = min{ nu_i | i > m }. Past index 2c-g-1 the sequence is
/// strictly increasing, so the minimum is taken over a finite window.
inline Int d_ord(const NuProfile& p, Int m) {
  if (m < 0) throw InvalidArgument("code order must be non-negative");
  const NumericalSemigroup& s = p.owner();
  Int hi = std::max(m + 1, 2 * s.conductor() - s.genus() - 1);
  Int best = p.value(m + 1);
  for (Int i = m + 2; i <= hi; ++i) best = std::min(best, p.value(i));
  return best;
}

inline Int d_ord(const NumericalSemigroup& s, Int m) {
  return d_ord(NuProfile(s), m);
}

/// Largest i with nu_i > nu_{i+1}; absent exactly for ordinary semigroups.
inline std::optional<Int> last_nu_decrease(const NuProfile& p) {
  for (Int i = p.tail_start() - 1; i >= 0; --i)
    if (p.value(i) > p.value(i + 1)) return i;
  return std::nullopt;
}

inline std::optional<Int> last_nu_decrease(const NumericalSemigroup& s) {
  return last_nu_decrease(NuProfile(s));
}

/// Which argument of min{ c+c'-2, 2d } attains the minimum.
enum class MinCase { ViaCPlusCPrime, Via2D, Tie };

struct AcuteM {
  Int index = 0;            // m = min{ lambda^{-1}(c+c'-2), lambda^{-1}(2d) }
  MinCase attained = MinCase::Tie;
};

/// For an acute non-ordinary semigroup, the largest index at which the
/// nu-sequence decreases, by the closed formula
/// m = min{ lambda^{-1}(c+c'-2), lambda^{-1}(2d) }.
///
/// Throws OrdinaryInput for ordinary semigroups (their nu-sequence never
/// decreases) and NotAcute outside the acute class.
inline AcuteM acute_m(const NumericalSemigroup& s) {
  if (is_ordinary(s)) throw OrdinaryInput();
  if (!is_acute(s)) throw NotAcute();
  Landmarks lm = s.landmarks();
  Int t1 = lm.conductor + *lm.subconductor - 2;
  Int t2 = 2 * *lm.dominant;
  // both candidates are members >= c (c'+d >= c for non-ordinary semigroups)
  AcuteM result;
  result.index = s.lambda_inv(std::min(t1, t2));
  result.attained = t1 < t2   ? MinCase::ViaCPlusCPrime
                    : t2 < t1 ? MinCase::Via2D
                              : MinCase::Tie;
  return result;
}

inline MinCase min_attained_case(const NumericalSemigroup& s) {
  return acute_m(s).attained;
}

namespace detail {

// designed distances are tied to code lengths in practice; anything huge is
// a caller error and would only inflate the index scans
inline void check_delta(Int delta) {
  if (delta <= 1)
    throw EmptySet("no nu value lies below " + std::to_string(delta));
  if (delta > (Int(1) << 20))
    throw InvalidArgument("designed distance " + std::to_string(delta) +
                          " is out of the supported range");
}

}  // namespace detail

/// m(delta) = max{ i | nu_i < delta }: C_{m(delta)} is the largest-dimension
/// code among the C_i with order bound >= delta. Defined for delta >= 2
/// (nu_0 = 1 is always below); throws EmptySet otherwise. Since
/// nu_i >= i - g + 1 no index from delta + g - 1 on qualifies.
inline Int m_of_delta(const NuProfile& p, Int delta) {
  detail::check_delta(delta);
  Int g = p.owner().genus();
  Int best = -1;
  for (Int i = 0; i < std::min<Int>(p.tail_start(), delta + g - 1); ++i)
    if (p.value(i) < delta) best = i;
  // past the stored block nu_i = i - g + 1, so the last index below delta
  // is delta + g - 2
  if (delta + g - 2 >= p.tail_start()) best = std::max(best, delta + g - 2);
  return best;
}

inline Int m_of_delta(const NumericalSemigroup& s, Int delta) {
  return m_of_delta(NuProfile(s), delta);
}

/// Indices of the parity checks kept by the improved code:
/// { i | nu_i < delta }, sorted.
inline std::vector<Int> improved_indices(const NuProfile& p, Int delta) {
  detail::check_delta(delta);
  std::vector<Int> out;
  for (Int i = 0; i < delta + p.owner().genus() - 1; ++i)
    if (p.value(i) < delta) out.push_back(i);
  return out;
}

inline std::vector<Int> improved_indices(const NumericalSemigroup& s, Int delta) {
  return improved_indices(NuProfile(s), delta);
}

/// Number of parity checks the improved code drops relative to C(delta):
/// #{ i <= m(delta) } - #{ i | nu_i < delta }. Positive for some delta iff
/// the semigroup is non-ordinary.
inline Int feng_rao_gain(const NuProfile& p, Int delta) {
  return m_of_delta(p, delta) + 1 -
         static_cast<Int>(improved_indices(p, delta).size());
}

inline Int feng_rao_gain(const NumericalSemigroup& s, Int delta) {
  return feng_rao_gain(NuProfile(s), delta);
}

}  // namespace semibound
