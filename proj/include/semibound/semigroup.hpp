// Copyright (c) 2026 The semibound authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "semibound/errors.hpp"

namespace semibound {

using Int = long long;

/// The named structural invariants of one numerical semigroup.
///
/// dominant      d  = largest member below the conductor
/// subconductor  c' = first member of the run of consecutive members ending at d
/// subdominant   d' = largest member below c'
///
/// d and c' are absent for the trivial semigroup; d' is additionally absent
/// for every ordinary semigroup (there is no member below the subconductor).
struct Landmarks {
  Int genus = 0;
  Int conductor = 0;
  Int multiplicity = 1;
  std::optional<Int> dominant;
  std::optional<Int> subconductor;
  std::optional<Int> subdominant;
};

/// A numerical semigroup: a subset of the non-negative integers containing 0,
/// closed under addition, with finite complement.
///
/// Canonical form is (conductor, membership bitmap below the conductor).
/// Equality, hashing and serialization all use it. Values are immutable after
/// construction; the member table is precomputed, so instances are safe to
/// share across threads.
class NumericalSemigroup {
 public:
  /// The trivial semigroup, all non-negative integers.
  static NumericalSemigroup trivial() { return ordinary(0); }

  /// Smallest semigroup containing all of `gens`.
  ///
  /// Throws EmptyGenerators, GcdNotOne, InvalidArgument (non-positive input).
  static NumericalSemigroup from_generators(const std::vector<Int>& gens) {
    if (gens.empty()) throw EmptyGenerators();
    for (Int g : gens) {
      if (g <= 0) throw InvalidArgument("generators must be positive");
      check_size(g);
    }
    Int g = 0;
    for (Int x : gens) g = std::gcd(g, x);
    if (g != 1) throw GcdNotOne(g);
    Int lo = *std::min_element(gens.begin(), gens.end());
    Int hi = *std::max_element(gens.begin(), gens.end());
    // Schur: the Frobenius number is < (lo-1)(hi-1), so the conductor is
    // at most (lo-1)(hi-1).
    Int bound = check_size((lo - 1) * (hi - 1) + 1);
    std::vector<bool> member(static_cast<std::size_t>(bound), false);
    member[0] = true;
    for (Int x = 1; x < bound; ++x)
      for (Int gen : gens)
        if (gen <= x && member[static_cast<std::size_t>(x - gen)]) {
          member[static_cast<std::size_t>(x)] = true;
          break;
        }
    return make(std::move(member));
  }

  /// Semigroup whose gap set is exactly `gaps`.
  ///
  /// Throws NotClosed with a witness pair when the complement is not a
  /// semigroup, InvalidArgument on non-positive input.
  static NumericalSemigroup from_gaps(const std::vector<Int>& gaps) {
    if (gaps.empty()) return trivial();
    for (Int x : gaps) {
      if (x <= 0) throw InvalidArgument("gaps must be positive");
      check_size(x);
    }
    Int c = check_size(*std::max_element(gaps.begin(), gaps.end()) + 1);
    std::vector<bool> member(static_cast<std::size_t>(c), true);
    for (Int x : gaps) member[static_cast<std::size_t>(x)] = false;
    return make(std::move(member));
  }

  /// Semigroup generated by the interval {i, i+1, ..., j}, which equals the
  /// union of the blocks {ki, ..., kj} over k >= 0.
  ///
  /// Throws DegenerateInterval when i = j >= 2 (multiples of i only),
  /// InvalidArgument when i < 1 or j < i.
  static NumericalSemigroup from_interval(Int i, Int j) {
    if (i < 1 || j < i) throw InvalidArgument("need 1 <= i <= j");
    check_size(j);
    if (i == 1) return trivial();
    if (i == j) throw DegenerateInterval(i, j);
    // Blocks merge from k* = ceil((i-1)/(j-i)) on; the conductor is k*·i.
    Int kstar = (i - 2) / (j - i) + 1;
    Int c = check_size(kstar * i);
    std::vector<bool> member(static_cast<std::size_t>(c), false);
    for (Int k = 0; k * i < c; ++k)
      for (Int x = k * i; x <= k * j && x < c; ++x)
        member[static_cast<std::size_t>(x)] = true;
    return make(std::move(member));
  }

  /// The ordinary semigroup {0} u {i >= c}. c = 1 is normalized to the
  /// trivial semigroup since {0} u {i >= 1} is all of N0.
  static NumericalSemigroup ordinary(Int c) {
    if (c < 0) throw InvalidArgument("conductor must be non-negative");
    if (c <= 1) c = 0;
    std::vector<bool> member(static_cast<std::size_t>(c), false);
    if (c > 0) member[0] = true;
    return make(std::move(member));
  }

  /// Member H_{n+1} of an inductive sequence: starting from H_1 = N0, each
  /// step applies H -> a·H u {m >= a·b}. The lists are consumed
  /// positionally, step t using (a[t], b[t]); with the usual indexing the
  /// inputs are (a_2..a_n) and (b_1..b_{n-1}).
  ///
  /// Throws EmptyCoefficients, InvalidArgument (length mismatch or
  /// non-positive coefficients).
  static NumericalSemigroup inductive(const std::vector<Int>& a,
                                      const std::vector<Int>& b) {
    if (a.empty() || b.empty()) throw EmptyCoefficients();
    if (a.size() != b.size())
      throw InvalidArgument("coefficient lists must have equal length");
    NumericalSemigroup h = trivial();
    for (std::size_t t = 0; t < a.size(); ++t) {
      if (a[t] <= 0 || b[t] <= 0)
        throw InvalidArgument("inductive coefficients must be positive");
      check_size(a[t]);
      check_size(b[t]);
      h = scale_union(h, a[t], check_size(a[t] * b[t]));
    }
    return h;
  }

  /// The Weierstrass semigroup of the m-th function field in the second
  /// Garcia-Stichtenoth tower over GF(q^2): L_1 = N0 and
  /// L_k = q·L_{k-1} u {i >= q^k - q^floor((k+1)/2)}.
  static NumericalSemigroup garcia_stichtenoth(Int q, Int m) {
    if (q < 2) throw InvalidArgument("need q >= 2");
    if (m < 1) throw InvalidArgument("need m >= 1");
    check_size(q);
    NumericalSemigroup h = trivial();
    for (Int k = 2; k <= m; ++k) {
      Int threshold = check_size(ipow(q, k) - ipow(q, (k + 1) / 2));
      h = scale_union(h, q, threshold);
    }
    return h;
  }

  // -- queries ------------------------------------------------------------

  bool contains(Int x) const {
    if (x < 0) return false;
    if (x >= conductor_) return true;
    return member_[static_cast<std::size_t>(x)];
  }

  Int conductor() const { return conductor_; }
  Int genus() const { return genus_; }
  bool is_trivial() const { return conductor_ == 0; }

  /// The smallest positive member (lambda_1).
  Int multiplicity() const {
    if (is_trivial()) return 1;
    return members_below_.size() > 1 ? members_below_[1] : conductor_;
  }

  /// i-th member under the increasing enumeration, lambda_0 = 0.
  Int lambda(Int i) const {
    if (i < 0) throw InvalidArgument("enumeration index must be non-negative");
    if (i < static_cast<Int>(members_below_.size()))
      return members_below_[static_cast<std::size_t>(i)];
    return i + genus_;  // lambda_i = i + g once lambda_i >= c
  }

  /// Inverse enumeration; throws NotAMember on gaps.
  Int lambda_inv(Int x) const {
    if (!contains(x)) throw NotAMember(x);
    if (x >= conductor_) return x - genus_;
    auto it = std::lower_bound(members_below_.begin(), members_below_.end(), x);
    return static_cast<Int>(it - members_below_.begin());
  }

  /// Number of gaps smaller than lambda_i.
  Int gaps_below_lambda(Int i) const { return lambda(i) - i; }

  Landmarks landmarks() const {
    Landmarks lm;
    lm.genus = genus_;
    lm.conductor = conductor_;
    lm.multiplicity = multiplicity();
    if (is_trivial()) return lm;
    Int d = members_below_.back();
    lm.dominant = d;
    // walk the run of consecutive members ending at the dominant
    std::size_t pos = members_below_.size() - 1;
    while (pos > 0 && members_below_[pos - 1] == members_below_[pos] - 1) --pos;
    lm.subconductor = members_below_[pos];
    if (d > 0) lm.subdominant = members_below_[pos - 1];
    return lm;
  }

  /// Ap(L) = {l in L | l - lambda_1 not in L}; has exactly lambda_1 elements.
  std::vector<Int> apery_set() const {
    if (is_trivial()) return {0};
    Int m = multiplicity();
    std::vector<Int> ap;
    for (Int l = 0; l < conductor_ + m; ++l)
      if (contains(l) && !contains(l - m)) ap.push_back(l);
    return ap;
  }

  /// The unique minimal generating set: positive members not expressible as
  /// a sum of two positive members. Every generator is < c + lambda_1.
  std::vector<Int> minimal_generators() const {
    if (is_trivial()) return {1};
    std::vector<Int> gens;
    for (Int m = 1; m < conductor_ + multiplicity(); ++m) {
      if (!contains(m)) continue;
      bool is_sum = false;
      for (std::size_t k = 1; k < members_below_.size(); ++k) {
        Int a = members_below_[k];
        if (2 * a > m) break;
        if (contains(m - a)) {
          is_sum = true;
          break;
        }
      }
      if (!is_sum) gens.push_back(m);
    }
    return gens;
  }

  /// All gaps, increasing. Size equals the genus.
  std::vector<Int> gaps() const {
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(genus_));
    for (Int x = 1; x < conductor_; ++x)
      if (!member_[static_cast<std::size_t>(x)]) out.push_back(x);
    return out;
  }

  /// Members strictly below the conductor, increasing (the enumeration
  /// prefix lambda_0..lambda_{c-g-1}).
  const std::vector<Int>& members_below_conductor() const {
    return members_below_;
  }

  friend bool operator==(const NumericalSemigroup& a,
                         const NumericalSemigroup& b) {
    return a.conductor_ == b.conductor_ && a.member_ == b.member_;
  }
  friend bool operator!=(const NumericalSemigroup& a,
                         const NumericalSemigroup& b) {
    return !(a == b);
  }

  std::size_t hash() const {
    std::size_t h = std::hash<Int>()(conductor_);
    for (Int m : members_below_)
      h = h * 1000003u + static_cast<std::size_t>(m);
    return h;
  }

 private:
  NumericalSemigroup() = default;

  static constexpr Int kMaxConductor = 1 << 24;

  static Int check_size(Int bound) {
    if (bound > kMaxConductor)
      throw InvalidArgument("conductor would exceed " +
                            std::to_string(kMaxConductor));
    return bound;
  }

  static Int ipow(Int base, Int exp) {
    Int r = 1;
    while (exp-- > 0) {
      if (r > kMaxConductor) return kMaxConductor + 1;
      r *= base;
    }
    return r;
  }

  /// Canonicalize a membership bitmap whose true conductor is at most
  /// `member.size()`, verify the type invariants, and build the value.
  static NumericalSemigroup make(std::vector<bool> member) {
    if (!member.empty() && !member[0])
      throw InvalidArgument("0 must be a member");
    Int c = 0;
    for (Int x = static_cast<Int>(member.size()) - 1; x >= 1; --x)
      if (!member[static_cast<std::size_t>(x)]) {
        c = x + 1;
        break;
      }
    member.resize(static_cast<std::size_t>(c));
    NumericalSemigroup s;
    s.conductor_ = c;
    s.member_ = std::move(member);
    if (c > 0) s.member_[0] = true;
    for (Int x = 0; x < c; ++x)
      if (s.member_[static_cast<std::size_t>(x)]) s.members_below_.push_back(x);
    s.genus_ = c - static_cast<Int>(s.members_below_.size());
    s.check_closed();
    return s;
  }

  /// H -> factor·H u {m >= threshold}. Closed for any factor, threshold >= 1.
  static NumericalSemigroup scale_union(const NumericalSemigroup& h, Int factor,
                                        Int threshold) {
    Int bound = std::max(h.conductor() * factor, threshold) + 1;
    std::vector<bool> member(static_cast<std::size_t>(bound), false);
    for (Int x = 0; x < bound; ++x)
      member[static_cast<std::size_t>(x)] =
          x >= threshold || (x % factor == 0 && h.contains(x / factor));
    return make(std::move(member));
  }

  void check_closed() const {
    for (std::size_t i = 1; i < members_below_.size(); ++i) {
      Int a = members_below_[i];
      if (2 * a >= conductor_) break;
      for (std::size_t j = i; j < members_below_.size(); ++j) {
        Int b = members_below_[j];
        if (a + b >= conductor_) break;
        if (!member_[static_cast<std::size_t>(a + b)]) throw NotClosed(a, b);
      }
    }
  }

  Int conductor_ = 0;
  Int genus_ = 0;
  std::vector<bool> member_;        // membership on [0, c)
  std::vector<Int> members_below_;  // sorted members < c
};

}  // namespace semibound

template <>
struct std::hash<semibound::NumericalSemigroup> {
  std::size_t operator()(const semibound::NumericalSemigroup& s) const {
    return s.hash();
  }
};
