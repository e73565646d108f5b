#pragma once

// Nests of osculating lattice paths and partial link patterns.

#include <string>
#include <utility>
#include <vector>

#include "pasmkit/core.hpp"

namespace pasmkit {

/// A south/east lattice path on the m x n grid of points (row, column),
/// 1-based, starting at (start_row, 1). The entry edge from the left and the
/// exit edge out of the bottom are implicit.
struct LatticePath {
  int start_row = 1;
  std::string steps;

  [[nodiscard]] std::vector<std::pair<int, int>> points() const;
  [[nodiscard]] int end_row() const;
  [[nodiscard]] int end_column() const;

  auto operator<=>(const LatticePath&) const = default;
};

class OsculatingNest {
 public:
  /// Paths are kept sorted by starting row, top to bottom.
  OsculatingNest(Dims dims, std::vector<LatticePath> paths);

  [[nodiscard]] Dims dims() const noexcept { return dims_; }
  [[nodiscard]] const std::vector<LatticePath>& paths() const noexcept { return paths_; }
  [[nodiscard]] int size() const noexcept { return static_cast<int>(paths_.size()); }

  auto operator<=>(const OsculatingNest&) const = default;

 private:
  Dims dims_;
  std::vector<LatticePath> paths_;
};

[[nodiscard]] Verdict validate(const OsculatingNest& nest);

/// Partial matching on labels 1..label_count. Left boundary exits are
/// labelled bottom-to-top first, then top exits left-to-right.
class PartialLinkPattern {
 public:
  PartialLinkPattern(int label_count, std::vector<std::pair<int, int>> arcs);

  static int label_count_for(Dims dims) noexcept { return dims.m / 2 + (dims.n + 1) / 2; }

  [[nodiscard]] int label_count() const noexcept { return label_count_; }
  /// Partner of a label, or 0 when unmatched.
  [[nodiscard]] int partner(int label) const;
  /// Arcs (a, b) with a < b, sorted.
  [[nodiscard]] const std::vector<std::pair<int, int>>& arcs() const noexcept { return arcs_; }

  auto operator<=>(const PartialLinkPattern&) const = default;

 private:
  int label_count_;
  std::vector<std::pair<int, int>> arcs_;
};

/// Checks the matching is irreflexive, uses every label at most once and
/// that no two arcs cross on the circle.
[[nodiscard]] Verdict validate(const PartialLinkPattern& pattern);

}  // namespace pasmkit
