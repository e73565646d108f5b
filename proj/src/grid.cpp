#include "pasmkit/grid.hpp"

#include <stdexcept>

namespace pasmkit {

std::string Edge::to_string() const {
  return std::string(axis == Axis::kHorizontal ? "H(" : "V(") + std::to_string(i) + "," +
         std::to_string(j) + ")";
}

const char* to_string(FaceKind kind) noexcept {
  switch (kind) {
    case FaceKind::kBoundary: return "boundary";
    case FaceKind::kInterior: return "interior";
    case FaceKind::kRightExterior: return "right-exterior";
    case FaceKind::kBottomExterior: return "bottom-exterior";
    case FaceKind::kCornerExterior: return "corner-exterior";
  }
  return "?";
}

bool Grid::contains(Vertex v) const noexcept {
  const auto [m, n] = dims_;
  if (v.i < 0 || v.i > m + 1 || v.j < 0 || v.j > n + 1) return false;
  const bool corner_row = v.i == 0 || v.i == m + 1;
  const bool corner_col = v.j == 0 || v.j == n + 1;
  return !(corner_row && corner_col);
}

bool Grid::contains(Edge e) const noexcept {
  const auto [m, n] = dims_;
  if (e.axis == Axis::kHorizontal) return e.i >= 1 && e.i <= m && e.j >= 0 && e.j <= n;
  return e.i >= 0 && e.i <= m && e.j >= 1 && e.j <= n;
}

int Grid::index_of(Edge e) const {
  if (!contains(e)) throw std::out_of_range("edge " + e.to_string() + " not in grid");
  const auto [m, n] = dims_;
  if (e.axis == Axis::kHorizontal) return (e.i - 1) * (n + 1) + e.j;
  return m * (n + 1) + e.i * n + (e.j - 1);
}

Edge Grid::edge_at(int index) const {
  const auto [m, n] = dims_;
  if (index < 0 || index >= edge_count()) throw std::out_of_range("edge index out of range");
  const int horizontal = m * (n + 1);
  if (index < horizontal) return Edge::H(index / (n + 1) + 1, index % (n + 1));
  index -= horizontal;
  return Edge::V(index / n, index % n + 1);
}

std::vector<Edge> Grid::incident(Vertex v) const {
  std::vector<Edge> out;
  out.reserve(4);
  for (Edge e : {Edge::H(v.i, v.j - 1), Edge::H(v.i, v.j), Edge::V(v.i - 1, v.j), Edge::V(v.i, v.j)}) {
    if (contains(e)) out.push_back(e);
  }
  return out;
}

FaceKind Grid::classify(Face f) const {
  if (!contains(f)) throw std::out_of_range("face out of range");
  const auto [m, n] = dims_;
  if (f.i == 0 || f.j == 0) return FaceKind::kBoundary;
  if (f.i == m && f.j == n) return FaceKind::kCornerExterior;
  if (f.j == n) return FaceKind::kRightExterior;
  if (f.i == m) return FaceKind::kBottomExterior;
  return FaceKind::kInterior;
}

FaceSides Grid::sides(Face f) const {
  if (!contains(f)) throw std::out_of_range("face out of range");
  FaceSides s;
  auto keep = [&](Edge e) -> std::optional<Edge> {
    return contains(e) ? std::optional<Edge>(e) : std::nullopt;
  };
  s.top = keep(Edge::H(f.i, f.j));
  s.bottom = keep(Edge::H(f.i + 1, f.j));
  s.left = keep(Edge::V(f.i, f.j));
  s.right = keep(Edge::V(f.i, f.j + 1));
  return s;
}

std::vector<Edge> Grid::forced_boundary() const {
  std::vector<Edge> out;
  for (int j = 1; j <= dims_.n; j += 2) out.push_back(Edge::V(0, j));
  for (int i = 2; i <= dims_.m; i += 2) out.push_back(Edge::H(i, 0));
  return out;
}

}  // namespace pasmkit
