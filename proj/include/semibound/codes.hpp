// Copyright (c) 2026 The semibound authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "semibound/gf2m.hpp"
#include "semibound/nu.hpp"
#include "semibound/semigroup.hpp"

namespace semibound {

struct AffinePoint {
  Gf2m::Elem x = 0, y = 0;
};

/// Monomial x^a y^b together with its pole order at the point at infinity.
/// Sorted by pole order these monomials realize the function-field basis
/// f_0, f_1, ... whose pole orders enumerate the Weierstrass semigroup.
struct PoleBasisElement {
  Int x_exp = 0, y_exp = 0;
  Int pole_order = 0;
};

namespace detail {

inline int log2_exact(Int q) {
  int s = 0;
  while ((Int(1) << s) < q) ++s;
  return (Int(1) << s) == q ? s : -1;
}

// First `count` monomials x^a y^b with 0 <= b < y_cap, ordered by pole
// order a*x_pole + b*y_pole. Pole orders are distinct because
// gcd(x_pole, y_pole) = 1 and b < x_pole.
inline std::vector<PoleBasisElement> monomial_basis(Int x_pole, Int y_pole,
                                                    Int y_cap, Int count) {
  if (count < 1) throw InvalidArgument("basis size must be positive");
  std::vector<PoleBasisElement> out;
  out.reserve(static_cast<std::size_t>(count));
  for (Int order = 0; static_cast<Int>(out.size()) < count; ++order) {
    for (Int b = 0; b < y_cap && b * y_pole <= order; ++b) {
      Int rest = order - b * y_pole;
      if (rest % x_pole == 0) {
        out.push_back({rest / x_pole, b, order});
        break;  // the representation with b < y_cap is unique
      }
    }
  }
  return out;
}

}  // namespace detail

/// The Hermitian curve x^{q+1} = y^q + y over GF(q^2), q in {2, 4}. Its
/// q^3 affine rational points are listed in lexicographic (x, y) order
/// under the fixed field representation, and the Weierstrass semigroup at
/// the point at infinity is generated by q and q+1.
class HermitianCurve {
 public:
  explicit HermitianCurve(Int q) : q_(q), field_(make_field(q)) {
    for (std::uint32_t x = 0; x < field_.order(); ++x)
      for (std::uint32_t y = 0; y < field_.order(); ++y) {
        auto fx = static_cast<Gf2m::Elem>(x);
        auto fy = static_cast<Gf2m::Elem>(y);
        Gf2m::Elem lhs = field_.pow(fx, static_cast<unsigned long long>(q + 1));
        Gf2m::Elem rhs = Gf2m::add(
            field_.pow(fy, static_cast<unsigned long long>(q)), fy);
        if (lhs == rhs) points_.push_back({fx, fy});
      }
  }

  Int q() const { return q_; }
  const Gf2m& field() const { return field_; }
  const std::vector<AffinePoint>& points() const { return points_; }

  NumericalSemigroup semigroup() const {
    return NumericalSemigroup::from_generators({q_, q_ + 1});
  }

  /// First `count` monomials x^a y^b, b <= q-1, by pole order aq + b(q+1).
  std::vector<PoleBasisElement> pole_basis(Int count) const {
    return detail::monomial_basis(q_, q_ + 1, q_, count);
  }

 private:
  static Gf2m make_field(Int q) {
    int s = detail::log2_exact(q);
    if ((q != 2 && q != 4) || s < 0) throw UnsupportedQ(q);
    return Gf2m(2 * s);  // GF(q^2)
  }

  Int q_;
  Gf2m field_;
  std::vector<AffinePoint> points_;
};

/// The norm-trace curve x^{(q^r-1)/(q-1)} = y^{q^{r-1}} + ... + y^q + y over
/// GF(q^r), (q, r) in {(2,2), (2,3), (4,2)}. The Weierstrass semigroup at
/// infinity is generated by (q^r-1)/(q-1) and q^{r-1}. For r = 2 this is
/// the Hermitian curve.
class NormTraceCurve {
 public:
  NormTraceCurve(Int q, Int r) : q_(q), r_(r), field_(make_field(q, r)) {
    Int norm_exp = x_pole_order();
    for (std::uint32_t x = 0; x < field_.order(); ++x)
      for (std::uint32_t y = 0; y < field_.order(); ++y) {
        auto fx = static_cast<Gf2m::Elem>(x);
        auto fy = static_cast<Gf2m::Elem>(y);
        Gf2m::Elem lhs =
            field_.pow(fx, static_cast<unsigned long long>(norm_exp));
        Gf2m::Elem rhs = 0;
        for (Int k = 0; k < r; ++k)
          rhs = Gf2m::add(rhs, field_.pow(fy, ipow(q, k)));
        if (lhs == rhs) points_.push_back({fx, fy});
      }
  }

  Int q() const { return q_; }
  Int r() const { return r_; }
  const Gf2m& field() const { return field_; }
  const std::vector<AffinePoint>& points() const { return points_; }

  Int x_pole_order() const { return (ipow(q_, r_) - 1) / (q_ - 1); }
  Int y_pole_order() const { return ipow(q_, r_ - 1); }

  NumericalSemigroup semigroup() const {
    return NumericalSemigroup::from_generators({x_pole_order(), y_pole_order()});
  }

  /// First `count` monomials x^a y^b, b < q^{r-1}, by pole order
  /// a q^{r-1} + b (q^r-1)/(q-1).
  std::vector<PoleBasisElement> pole_basis(Int count) const {
    return detail::monomial_basis(y_pole_order(), x_pole_order(),
                                  y_pole_order(), count);
  }

 private:
  static Gf2m make_field(Int q, Int r) {
    bool ok = (q == 2 && r == 2) || (q == 2 && r == 3) || (q == 4 && r == 2);
    if (!ok) throw UnsupportedParams(q, r);
    return Gf2m(detail::log2_exact(q) * static_cast<int>(r));  // GF(q^r)
  }

  static unsigned long long ipow(Int b, Int e) {
    unsigned long long out = 1;
    while (e-- > 0) out *= static_cast<unsigned long long>(b);
    return out;
  }

  Int q_, r_;
  Gf2m field_;
  std::vector<AffinePoint> points_;
};

/// Evaluation matrix of a monomial basis at a point set, with the row rank
/// profile: row i is marked independent when it enlarges the span of rows
/// 0..i-1 (the parity-check reading of C_i != C_{i-1}).
class EvaluationCode {
 public:
  EvaluationCode(const Gf2m& field, const std::vector<AffinePoint>& points,
                 const std::vector<PoleBasisElement>& basis)
      : field_(field) {
    rows_.reserve(basis.size());
    for (const auto& mono : basis) {
      std::vector<Gf2m::Elem> row;
      row.reserve(points.size());
      for (const auto& p : points)
        row.push_back(field.mul(
            field.pow(p.x, static_cast<unsigned long long>(mono.x_exp)),
            field.pow(p.y, static_cast<unsigned long long>(mono.y_exp))));
      rows_.push_back(std::move(row));
    }
    eliminate();
  }

  std::size_t length() const { return rows_.empty() ? 0 : rows_[0].size(); }
  std::size_t row_count() const { return rows_.size(); }
  const std::vector<std::vector<Gf2m::Elem>>& rows() const { return rows_; }

  /// independent[i] == true iff row i is independent of rows 0..i-1.
  const std::vector<bool>& rank_profile() const { return independent_; }
  std::size_t rank() const { return rank_; }

  /// Index of the first dependent row, or -1 if all rows are independent.
  Int first_dependent_row() const {
    for (std::size_t i = 0; i < independent_.size(); ++i)
      if (!independent_[i]) return static_cast<Int>(i);
    return -1;
  }

  /// Rank of an arbitrary subset of rows (fresh elimination; dependence
  /// within a subset differs from the prefix profile).
  std::size_t rank_of_rows(const std::vector<Int>& indices) const {
    std::vector<std::vector<Gf2m::Elem>> pivots;
    std::size_t r = 0;
    for (Int idx : indices) {
      if (idx < 0 || idx >= static_cast<Int>(rows_.size()))
        throw IndexBeyondProfile("row " + std::to_string(idx) +
                                 " is not materialized");
      auto row = rows_[static_cast<std::size_t>(idx)];
      if (reduce(pivots, row)) ++r;
    }
    return r;
  }

 private:
  void eliminate() {
    std::vector<std::vector<Gf2m::Elem>> pivots;
    for (const auto& r : rows_) {
      auto row = r;
      bool indep = reduce(pivots, row);
      independent_.push_back(indep);
      if (indep) ++rank_;
    }
  }

  // Reduce `row` against the pivot rows; if a nonzero remainder is left,
  // normalize it, store it as a new pivot and return true.
  bool reduce(std::vector<std::vector<Gf2m::Elem>>& pivots,
              std::vector<Gf2m::Elem>& row) const {
    for (const auto& p : pivots) {
      std::size_t col = pivot_col(p);
      if (row[col] == 0) continue;
      Gf2m::Elem factor = row[col];  // pivots are normalized to 1
      for (std::size_t c = 0; c < row.size(); ++c)
        row[c] = Gf2m::add(row[c], field_.mul(factor, p[c]));
    }
    std::size_t col = pivot_col(row);
    if (col == row.size()) return false;
    Gf2m::Elem scale = field_.inv(row[col]);
    for (std::size_t c = 0; c < row.size(); ++c)
      row[c] = field_.mul(scale, row[c]);
    pivots.push_back(std::move(row));
    return true;
  }

  static std::size_t pivot_col(const std::vector<Gf2m::Elem>& row) {
    std::size_t c = 0;
    while (c < row.size() && row[c] == 0) ++c;
    return c;
  }

  Gf2m field_;
  std::vector<std::vector<Gf2m::Elem>> rows_;
  std::vector<bool> independent_;
  std::size_t rank_ = 0;
};

/// Refined order bound d^phi_ORD(C_m) = min{ nu_i | i > m, C_i != C_{i-1} }.
/// The candidate set is finite: once the row space is exhausted every later
/// row is dependent. Throws IndexBeyondProfile when no independent row lies
/// beyond m.
inline Int refined_order_bound(const EvaluationCode& code, const NuProfile& p,
                               Int m) {
  if (m < 0) throw InvalidArgument("code order must be non-negative");
  const auto& indep = code.rank_profile();
  Int best = -1;
  for (std::size_t i = static_cast<std::size_t>(m + 1); i < indep.size(); ++i)
    if (indep[i]) {
      Int v = p.value(static_cast<Int>(i));
      if (best < 0 || v < best) best = v;
    }
  if (best < 0)
    throw IndexBeyondProfile("no independent row beyond index " +
                             std::to_string(m));
  return best;
}

inline Int refined_order_bound(const EvaluationCode& code,
                               const NumericalSemigroup& s, Int m) {
  return refined_order_bound(code, NuProfile(s), m);
}

/// Dimensions of the three codes with designed distance delta:
/// C(delta) checks rows 0..m(delta), the improved code checks only rows
/// with nu_i < delta, and its phi-refined variant drops the rows that were
/// already dependent.
struct CodeDimensions {
  Int dim_C = 0;
  Int dim_Ctilde = 0;
  Int dim_Ctilde_phi = 0;
};

inline CodeDimensions code_dimensions(const EvaluationCode& code,
                                      const NuProfile& p, Int delta) {
  Int m = m_of_delta(p, delta);
  if (m >= static_cast<Int>(code.row_count()))
    throw IndexBeyondProfile("m(delta) = " + std::to_string(m) +
                             " exceeds the materialized rows");
  Int n = static_cast<Int>(code.length());

  Int prefix_rank = 0;
  for (Int i = 0; i <= m; ++i)
    if (code.rank_profile()[static_cast<std::size_t>(i)]) ++prefix_rank;

  std::vector<Int> improved = improved_indices(p, delta);
  Int improved_rank = static_cast<Int>(code.rank_of_rows(improved));
  Int improved_indep = 0;
  for (Int i : improved)
    if (code.rank_profile()[static_cast<std::size_t>(i)]) ++improved_indep;

  // prefix-independent rows are mutually independent, so the phi-code rank
  // is just the count
  return {n - prefix_rank, n - improved_rank, n - improved_indep};
}

inline CodeDimensions code_dimensions(const EvaluationCode& code,
                                      const NumericalSemigroup& s, Int delta) {
  return code_dimensions(code, NuProfile(s), delta);
}

}  // namespace semibound
