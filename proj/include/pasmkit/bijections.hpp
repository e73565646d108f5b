#pragma once

// Explicit bijections between the seven families, all routed through the
// partial height function.
//
// Every map assumes a valid input; convert() validates before routing.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pasmkit/core.hpp"
#include "pasmkit/loops.hpp"
#include "pasmkit/nest.hpp"
#include "pasmkit/poset.hpp"

namespace pasmkit {

/// C(i,j) = sum of M(k,j) over k <= i, 1-based; 0/1-valued for a partial ASM.
struct ColumnSumMatrix {
  Dims dims;
  std::vector<std::int8_t> entries;

  [[nodiscard]] int at(int i, int j) const {
    return entries[static_cast<std::size_t>(i - 1) * dims.n + (j - 1)];
  }
};

[[nodiscard]] ColumnSumMatrix column_sums(const Pasm& matrix);

[[nodiscard]] PartialMonotoneTriangle pasm_to_triangle(const Pasm& matrix);
[[nodiscard]] Pasm triangle_to_pasm(const PartialMonotoneTriangle& triangle);

[[nodiscard]] CornerSumMatrix pasm_to_corner_sum(const Pasm& matrix);
/// M(i,j) = c(i,j-1) - c(i-1,j-1) - c(i,j) + c(i-1,j).
[[nodiscard]] Pasm corner_sum_to_pasm(const CornerSumMatrix& corner_sum);

/// h(i,j) = i + j - 2 c(i, n-j).
[[nodiscard]] PartialHeightFunction corner_sum_to_height(const CornerSumMatrix& corner_sum);
[[nodiscard]] CornerSumMatrix height_to_corner_sum(const PartialHeightFunction& height);

[[nodiscard]] PartialHeightFunction pasm_to_height(const Pasm& matrix);
[[nodiscard]] Pasm height_to_pasm(const PartialHeightFunction& height);

/// Faces (i,j) and (i,j+1) are separated by V(i,j+1) when their heights are
/// {2k, 2k+1}; faces (i,j) and (i+1,j) by H(i+1,j) when {2k-1, 2k}.
[[nodiscard]] PartialFpl height_to_fpl(const PartialHeightFunction& height);
/// Rebuilds heights row by row from the separation rule. Throws
/// std::logic_error if the edge set admits no consistent height function.
[[nodiscard]] PartialHeightFunction fpl_to_height(const PartialFpl& fpl);

/// Loop edges point even -> odd, all other edges odd -> even.
[[nodiscard]] RectIce fpl_to_ice(const PartialFpl& fpl);
/// Keeps the edges directed from an even vertex to an odd one.
[[nodiscard]] PartialFpl ice_to_fpl(const RectIce& ice);

/// Reads the matrix off the ice vertex types. Entry M(i,j) sits at vertex
/// v(i, n+1-j): the ice picture is the mirror image of the matrix.
[[nodiscard]] Pasm pasm_from_ice_vertices(const RectIce& ice);

/// Fiber (i-1, j-1) holds (i + j - h(i,j)) / 2 elements.
[[nodiscard]] OrderIdeal height_to_ideal(const PartialHeightFunction& height);
/// Throws InvariantError if the ideal is not down-closed.
[[nodiscard]] PartialHeightFunction ideal_to_height(const OrderIdeal& ideal);

/// Direct row scan: a path enters every row whose first nonzero entry is 1,
/// runs right until it turns down, and at a shared point the path arriving
/// from the left turns down while the one arriving from above turns right.
[[nodiscard]] OsculatingNest pasm_to_nest(const Pasm& matrix);
/// Throws InvariantError if the nest is invalid.
[[nodiscard]] Pasm nest_to_pasm(const OsculatingNest& nest);

enum class Family { kPasm, kTriangle, kCornerSum, kHeight, kFpl, kIce, kIdeal, kNest };

inline constexpr Family kAllFamilies[] = {Family::kPasm,   Family::kTriangle, Family::kCornerSum,
                                          Family::kHeight, Family::kFpl,      Family::kIce,
                                          Family::kIdeal,  Family::kNest};

using AnyObject = std::variant<Pasm, PartialMonotoneTriangle, CornerSumMatrix, PartialHeightFunction,
                               PartialFpl, RectIce, OrderIdeal, OsculatingNest>;

[[nodiscard]] Family family_of(const AnyObject& object) noexcept;
[[nodiscard]] Dims dims_of(const AnyObject& object) noexcept;
[[nodiscard]] Verdict validate(const AnyObject& object);

/// Validates the source, then routes through the height function (through
/// the matrix for triangle and nest endpoints). Throws InvariantError on an
/// invalid source.
[[nodiscard]] AnyObject convert(const AnyObject& object, Family target);

}  // namespace pasmkit
