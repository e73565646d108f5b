#pragma once

// Local moves on the squares of a partial fully-packed loop configuration,
// gyration, partial link patterns and the partial-rotation check.

#include <utility>
#include <vector>

#include "pasmkit/core.hpp"
#include "pasmkit/grid.hpp"
#include "pasmkit/loops.hpp"
#include "pasmkit/nest.hpp"

namespace pasmkit {

enum class SquareMoveKind : std::uint8_t {
  kInteriorSwap,
  kRightExteriorSwap,
  kBottomExteriorSwap,
  kCornerExteriorSwap,
  kNoop,
};

[[nodiscard]] const char* to_string(SquareMoveKind kind) noexcept;

struct SquareMove {
  Face face;
  SquareMoveKind kind = SquareMoveKind::kNoop;
};

/// What local_move would do at this face. Throws std::out_of_range for a
/// face outside 0..m x 0..n.
[[nodiscard]] SquareMove classify_move(const PartialFpl& fpl, Face face);

/// Interior: two horizontal sides <-> two vertical sides.
/// Right side (i,n): left side alone <-> top and bottom.
/// Bottom side (m,j): top side alone <-> left and right.
/// Corner (m,n): left side alone <-> top side alone.
/// Any other content, and every boundary face, is left as is.
[[nodiscard]] PartialFpl local_move(const PartialFpl& fpl, Face face);

/// Local moves on every face (i,j), 1 <= i <= m, 1 <= j <= n, with i+j of
/// the given parity, row-major.
[[nodiscard]] PartialFpl sweep_parity(const PartialFpl& fpl, bool even);

/// Even faces, then odd faces.
[[nodiscard]] PartialFpl gyrate(const PartialFpl& fpl);
/// Odd faces, then even faces.
[[nodiscard]] PartialFpl gyrate_inverse(const PartialFpl& fpl);

/// Boundary exits carrying the forced edges, in label order: left exits
/// v(i,0) for even i bottom to top, then top exits v(0,j) for odd j left to
/// right.
[[nodiscard]] std::vector<Vertex> labeled_exits(Dims dims);

/// Follows the path leaving each labeled exit. Paths ending at another
/// labeled exit become arcs; paths leaving through the right or bottom side
/// leave their label unmatched. Closed loops are ignored.
[[nodiscard]] PartialLinkPattern link_pattern(const PartialFpl& fpl);

struct RotationReport {
  struct Violation {
    std::pair<int, int> arc;     // arc (a,b) before gyration
    int partner_of_a_minus_1 = 0;  // after gyration, 0 if unmatched
    int partner_of_b_minus_1 = 0;
  };
  struct Excluded {
    std::pair<int, int> arc;  // arc touching label 1
    int partner_after = 0;    // partner of the other endpoint minus one, after gyration
  };

  std::vector<Violation> violations;
  std::vector<Excluded> excluded;

  [[nodiscard]] bool ok() const noexcept { return violations.empty(); }
};

/// For every arc (a,b) with a,b >= 2, the pattern after gyration must join
/// a-1 with b-1 or leave both unmatched.
[[nodiscard]] RotationReport check_partial_rotation(const PartialFpl& fpl);

/// Full alternating sign matrix check: square, every row and column sums to
/// 1, and partial sums along every row and column stay in {0,1}.
[[nodiscard]] Verdict validate_asm(const Pasm& matrix);

/// Embeds M in a square alternating sign matrix of order m + n - t. Rows of
/// sum 0 start with -1, so the padding goes on the left: M is the upper-right
/// block, with one new column per zero-sum row and one new row per zero-sum
/// column.
[[nodiscard]] Pasm complete_to_asm(const Pasm& matrix);

}  // namespace pasmkit
