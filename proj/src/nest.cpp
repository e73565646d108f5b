#include "pasmkit/nest.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pasmkit {

namespace {

enum class Side : char { kLeft = 'L', kTop = 'T', kRight = 'R', kBottom = 'B' };

struct Passage {
  Side in;
  Side out;
};

std::string point_label(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

std::vector<std::pair<int, int>> LatticePath::points() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(steps.size() + 1);
  int i = start_row;
  int j = 1;
  out.emplace_back(i, j);
  for (char step : steps) {
    if (step == 'S') {
      ++i;
    } else if (step == 'E') {
      ++j;
    } else {
      throw StructuralError(std::string("path step '") + step + "' is not S or E");
    }
    out.emplace_back(i, j);
  }
  return out;
}

int LatticePath::end_row() const {
  return start_row + static_cast<int>(std::count(steps.begin(), steps.end(), 'S'));
}

int LatticePath::end_column() const {
  return 1 + static_cast<int>(std::count(steps.begin(), steps.end(), 'E'));
}

OsculatingNest::OsculatingNest(Dims dims, std::vector<LatticePath> paths)
    : dims_(Dims::checked(dims.m, dims.n)), paths_(std::move(paths)) {
  for (const auto& path : paths_) {
    for (char step : path.steps) {
      if (step != 'S' && step != 'E') throw StructuralError("path steps must be S or E");
    }
  }
  std::stable_sort(paths_.begin(), paths_.end(),
                   [](const LatticePath& a, const LatticePath& b) { return a.start_row < b.start_row; });
}

Verdict validate(const OsculatingNest& nest) {
  Verdict verdict;
  const auto [m, n] = nest.dims();
  std::map<std::pair<int, int>, std::vector<Passage>> visits;
  for (std::size_t k = 0; k < nest.paths().size(); ++k) {
    const auto& path = nest.paths()[k];
    const std::string where = "path " + std::to_string(k + 1);
    if (path.start_row < 1 || path.start_row > m) {
      verdict.add("path does not start on the left side", where);
      continue;
    }
    const auto points = path.points();
    bool inside = true;
    for (auto [i, j] : points) inside = inside && i >= 1 && i <= m && j >= 1 && j <= n;
    if (!inside) {
      verdict.add("path leaves the grid", where);
      continue;
    }
    if (path.end_row() != m) {
      verdict.add("path does not end on the bottom side", where);
      continue;
    }
    // The implicit entry from the left and exit out of the bottom take part
    // in the osculation rule like any other step.
    for (std::size_t p = 0; p < points.size(); ++p) {
      const Side in = p == 0 ? Side::kLeft : (path.steps[p - 1] == 'S' ? Side::kTop : Side::kLeft);
      const Side out =
          p + 1 == points.size() ? Side::kBottom : (path.steps[p] == 'S' ? Side::kBottom : Side::kRight);
      visits[points[p]].push_back({in, out});
    }
  }
  for (const auto& [point, passages] : visits) {
    const std::string where = point_label(point.first, point.second);
    if (passages.size() == 1) continue;
    if (passages.size() > 2) {
      verdict.add("more than two paths meet at a point", where);
      continue;
    }
    const auto& a = passages[0];
    const auto& b = passages[1];
    if (a.in == b.in || a.out == b.out) {
      verdict.add("paths share an edge", where);
      continue;
    }
    const bool osculation = (a.in == Side::kLeft && a.out == Side::kBottom && b.in == Side::kTop &&
                             b.out == Side::kRight) ||
                            (b.in == Side::kLeft && b.out == Side::kBottom && a.in == Side::kTop &&
                             a.out == Side::kRight);
    if (!osculation) verdict.add("paths cross", where);
  }
  return verdict;
}

// ---------------------------------------------------------------------------

PartialLinkPattern::PartialLinkPattern(int label_count, std::vector<std::pair<int, int>> arcs)
    : label_count_(label_count), arcs_(std::move(arcs)) {
  if (label_count_ < 0) throw StructuralError("negative label count");
  for (auto& [a, b] : arcs_) {
    if (a < 1 || a > label_count_ || b < 1 || b > label_count_) {
      throw StructuralError("arc label outside 1.." + std::to_string(label_count_));
    }
    if (a > b) std::swap(a, b);
  }
  std::sort(arcs_.begin(), arcs_.end());
}

int PartialLinkPattern::partner(int label) const {
  if (label < 1 || label > label_count_) throw std::out_of_range("label out of range");
  for (auto [a, b] : arcs_) {
    if (a == label) return b;
    if (b == label) return a;
  }
  return 0;
}

Verdict validate(const PartialLinkPattern& pattern) {
  Verdict verdict;
  std::vector<int> uses(pattern.label_count() + 1, 0);
  for (auto [a, b] : pattern.arcs()) {
    const std::string where = std::to_string(a) + "-" + std::to_string(b);
    if (a == b) verdict.add("label matched to itself", where);
    ++uses[a];
    if (a != b) ++uses[b];
  }
  for (int label = 1; label <= pattern.label_count(); ++label) {
    if (uses[label] > 1) verdict.add("label matched more than once", std::to_string(label));
  }
  const auto& arcs = pattern.arcs();
  for (std::size_t x = 0; x < arcs.size(); ++x) {
    for (std::size_t y = x + 1; y < arcs.size(); ++y) {
      const auto [a, b] = arcs[x];
      const auto [c, d] = arcs[y];
      if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) {
        verdict.add("arcs cross", std::to_string(a) + "-" + std::to_string(b) + " and " +
                                      std::to_string(c) + "-" + std::to_string(d));
      }
    }
  }
  return verdict;
}

}  // namespace pasmkit
