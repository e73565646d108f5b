#include "pasmkit/gyration.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pasmkit {

const char* to_string(SquareMoveKind kind) noexcept {
  switch (kind) {
    case SquareMoveKind::kInteriorSwap: return "interior-swap";
    case SquareMoveKind::kRightExteriorSwap: return "right-exterior-swap";
    case SquareMoveKind::kBottomExteriorSwap: return "bottom-exterior-swap";
    case SquareMoveKind::kCornerExteriorSwap: return "corner-exterior-swap";
    case SquareMoveKind::kNoop: return "noop";
  }
  return "?";
}

namespace {

bool present(const PartialFpl& fpl, const std::optional<Edge>& e) { return e && fpl.has(*e); }

// The two alternative side sets a face toggles between, as edge lists.
struct SwapPair {
  std::vector<Edge> first;
  std::vector<Edge> second;
  SquareMoveKind kind = SquareMoveKind::kNoop;
};

SwapPair swap_pair(const Grid& grid, Face face) {
  const FaceSides s = grid.sides(face);
  switch (grid.classify(face)) {
    case FaceKind::kInterior:
      return {{*s.top, *s.bottom}, {*s.left, *s.right}, SquareMoveKind::kInteriorSwap};
    case FaceKind::kRightExterior:
      return {{*s.left}, {*s.top, *s.bottom}, SquareMoveKind::kRightExteriorSwap};
    case FaceKind::kBottomExterior:
      return {{*s.top}, {*s.left, *s.right}, SquareMoveKind::kBottomExteriorSwap};
    case FaceKind::kCornerExterior:
      return {{*s.left}, {*s.top}, SquareMoveKind::kCornerExteriorSwap};
    case FaceKind::kBoundary:
      break;
  }
  return {};
}

std::vector<Edge> existing_sides(const Grid& grid, Face face) {
  const FaceSides s = grid.sides(face);
  std::vector<Edge> out;
  for (const auto& e : {s.top, s.bottom, s.left, s.right})
    if (e) out.push_back(*e);
  return out;
}

// True when exactly the listed sides of the face are present.
bool content_is(const PartialFpl& fpl, const std::vector<Edge>& sides, const std::vector<Edge>& wanted) {
  for (const auto& e : sides) {
    const bool want = std::find(wanted.begin(), wanted.end(), e) != wanted.end();
    if (present(fpl, e) != want) return false;
  }
  return true;
}

}  // namespace

SquareMove classify_move(const PartialFpl& fpl, Face face) {
  const Grid grid(fpl.dims());
  if (!grid.contains(face)) {
    throw std::out_of_range("face (" + std::to_string(face.i) + "," + std::to_string(face.j) + ") out of range");
  }
  const SwapPair pair = swap_pair(grid, face);
  if (pair.kind == SquareMoveKind::kNoop) return {face, SquareMoveKind::kNoop};
  const auto sides = existing_sides(grid, face);
  if (content_is(fpl, sides, pair.first) || content_is(fpl, sides, pair.second)) return {face, pair.kind};
  return {face, SquareMoveKind::kNoop};
}

PartialFpl local_move(const PartialFpl& fpl, Face face) {
  if (classify_move(fpl, face).kind == SquareMoveKind::kNoop) return fpl;
  const Grid grid(fpl.dims());
  const SwapPair pair = swap_pair(grid, face);
  const bool first_now = content_is(fpl, existing_sides(grid, face), pair.first);
  PartialFpl out = fpl;
  for (const auto& e : pair.first) out = out.with(e, !first_now);
  for (const auto& e : pair.second) out = out.with(e, first_now);
  return out;
}

PartialFpl sweep_parity(const PartialFpl& fpl, bool even) {
  const auto [m, n] = fpl.dims();
  PartialFpl out = fpl;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j)
      if (((i + j) % 2 == 0) == even) out = local_move(out, {i, j});
  return out;
}

PartialFpl gyrate(const PartialFpl& fpl) { return sweep_parity(sweep_parity(fpl, true), false); }

PartialFpl gyrate_inverse(const PartialFpl& fpl) { return sweep_parity(sweep_parity(fpl, false), true); }

// ---------------------------------------------------------------------------

std::vector<Vertex> labeled_exits(Dims dims) {
  std::vector<Vertex> out;
  for (int i = 2 * (dims.m / 2); i >= 2; i -= 2) out.push_back({i, 0});
  for (int j = 1; j <= dims.n; j += 2) out.push_back({0, j});
  return out;
}

PartialLinkPattern link_pattern(const PartialFpl& fpl) {
  const Grid grid(fpl.dims());
  const auto exits = labeled_exits(fpl.dims());
  const int labels = static_cast<int>(exits.size());
  std::vector<std::pair<int, int>> arcs;
  for (int label = 1; label <= labels; ++label) {
    Vertex at = exits[label - 1];
    Edge came = at.j == 0 ? Edge::H(at.i, 0) : Edge::V(0, at.j);
    at = came.low() == at ? came.high() : came.low();
    while (grid.is_interior(at)) {
      Edge next = came;
      for (const auto& e : grid.incident(at)) {
        if (e != came && fpl.has(e)) next = e;
      }
      if (next == came) break;  // unreachable for a valid configuration
      came = next;
      at = came.low() == at ? came.high() : came.low();
    }
    for (int other = label + 1; other <= labels; ++other) {
      if (exits[other - 1] == at) arcs.emplace_back(label, other);
    }
  }
  return PartialLinkPattern(labels, std::move(arcs));
}

RotationReport check_partial_rotation(const PartialFpl& fpl) {
  const PartialLinkPattern before = link_pattern(fpl);
  const PartialLinkPattern after = link_pattern(gyrate(fpl));
  RotationReport report;
  for (const auto& [a, b] : before.arcs()) {
    if (a == 1) {
      report.excluded.push_back({{a, b}, after.partner(b - 1)});
      continue;
    }
    const int pa = after.partner(a - 1);
    const int pb = after.partner(b - 1);
    const bool joined = pa == b - 1;
    const bool both_free = pa == 0 && pb == 0;
    if (!joined && !both_free) report.violations.push_back({{a, b}, pa, pb});
  }
  return report;
}

// ---------------------------------------------------------------------------

Verdict validate_asm(const Pasm& matrix) {
  Verdict verdict;
  const auto [m, n] = matrix.dims();
  if (m != n) {
    verdict.add("matrix is not square", std::to_string(m) + "x" + std::to_string(n));
    return verdict;
  }
  for (int line = 1; line <= n; ++line) {
    int row = 0;
    int column = 0;
    for (int k = 1; k <= n; ++k) {
      row += matrix.at(line, k);
      column += matrix.at(k, line);
      if (row < 0 || row > 1) verdict.add("row partial sum leaves {0,1}", "row " + std::to_string(line));
      if (column < 0 || column > 1) verdict.add("column partial sum leaves {0,1}", "column " + std::to_string(line));
    }
    if (row != 1) verdict.add("row sum is not 1", "row " + std::to_string(line));
    if (column != 1) verdict.add("column sum is not 1", "column " + std::to_string(line));
  }
  return verdict;
}

Pasm complete_to_asm(const Pasm& matrix) {
  require(validate(matrix));
  const auto [m, n] = matrix.dims();
  std::vector<int> zero_rows;
  std::vector<int> zero_columns;
  for (int i = 1; i <= m; ++i) {
    int sum = 0;
    for (int j = 1; j <= n; ++j) sum += matrix.at(i, j);
    if (sum == 0) zero_rows.push_back(i);
  }
  for (int j = 1; j <= n; ++j) {
    int sum = 0;
    for (int i = 1; i <= m; ++i) sum += matrix.at(i, j);
    if (sum == 0) zero_columns.push_back(j);
  }
  const int pad_left = static_cast<int>(zero_rows.size());
  const int pad_below = static_cast<int>(zero_columns.size());
  const int order = m + pad_below;
  if (n + pad_left != order) throw std::logic_error("padding does not produce a square matrix");

  std::vector<std::vector<int>> rows(order, std::vector<int>(order, 0));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) rows[i - 1][pad_left + j - 1] = matrix.at(i, j);
  for (int k = 0; k < pad_left; ++k) rows[zero_rows[k] - 1][k] = 1;
  for (int k = 0; k < pad_below; ++k) rows[m + k][pad_left + zero_columns[k] - 1] = 1;

  Pasm out = Pasm::from_rows(rows);
  require(validate_asm(out));
  return out;
}

}  // namespace pasmkit
