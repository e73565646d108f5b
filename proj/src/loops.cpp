#include "pasmkit/loops.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pasmkit {

namespace {

std::string vertex_label(Vertex v) {
  return "v(" + std::to_string(v.i) + "," + std::to_string(v.j) + ")";
}

}  // namespace

PartialFpl::PartialFpl(Dims dims, std::vector<std::uint8_t> presence)
    : dims_(Dims::checked(dims.m, dims.n)), presence_(std::move(presence)) {
  if (static_cast<int>(presence_.size()) != Grid(dims_).edge_count()) {
    throw StructuralError("edge presence vector has wrong length");
  }
  for (auto& bit : presence_) bit = bit ? 1 : 0;
}

PartialFpl PartialFpl::from_edges(Dims dims, const std::vector<Edge>& edges) {
  const Grid grid(dims);
  std::vector<std::uint8_t> presence(grid.edge_count(), 0);
  for (const Edge& e : edges) {
    if (!grid.contains(e)) throw StructuralError("edge " + e.to_string() + " is not in the grid");
    presence[grid.index_of(e)] = 1;
  }
  return PartialFpl(dims, std::move(presence));
}

bool PartialFpl::has(Edge e) const { return presence_[Grid(dims_).index_of(e)] != 0; }

std::vector<Edge> PartialFpl::edges() const {
  const Grid grid(dims_);
  std::vector<Edge> out;
  for (int k = 0; k < grid.edge_count(); ++k)
    if (presence_[k]) out.push_back(grid.edge_at(k));
  std::sort(out.begin(), out.end());
  return out;
}

PartialFpl PartialFpl::with(Edge e, bool present) const {
  PartialFpl copy = *this;
  copy.presence_[Grid(dims_).index_of(e)] = present ? 1 : 0;
  return copy;
}

RectIce::RectIce(Dims dims, std::vector<std::uint8_t> head_high)
    : dims_(Dims::checked(dims.m, dims.n)), head_high_(std::move(head_high)) {
  if (static_cast<int>(head_high_.size()) != Grid(dims_).edge_count()) {
    throw StructuralError("orientation vector has wrong length");
  }
  for (auto& bit : head_high_) bit = bit ? 1 : 0;
}

bool RectIce::points_high(Edge e) const { return head_high_[Grid(dims_).index_of(e)] != 0; }

const char* to_string(VertexType type) noexcept {
  switch (type) {
    case VertexType::kPlusOne: return "+1";
    case VertexType::kMinusOne: return "-1";
    case VertexType::kZeroEastSouth: return "0:east-south";
    case VertexType::kZeroEastNorth: return "0:east-north";
    case VertexType::kZeroWestSouth: return "0:west-south";
    case VertexType::kZeroWestNorth: return "0:west-north";
  }
  return "?";
}

int matrix_value(VertexType type) noexcept {
  switch (type) {
    case VertexType::kPlusOne: return 1;
    case VertexType::kMinusOne: return -1;
    default: return 0;
  }
}

Verdict validate(const PartialFpl& fpl) {
  Verdict verdict;
  const Grid grid(fpl.dims());
  const auto [m, n] = fpl.dims();
  for (int j = 1; j <= n; ++j) {
    const bool want = (j % 2) == 1;
    if (fpl.has(Edge::V(0, j)) != want) {
      verdict.add(want ? "forced top boundary edge missing" : "unforced top boundary edge present",
                  Edge::V(0, j).to_string());
    }
  }
  for (int i = 1; i <= m; ++i) {
    const bool want = (i % 2) == 0;
    if (fpl.has(Edge::H(i, 0)) != want) {
      verdict.add(want ? "forced left boundary edge missing" : "unforced left boundary edge present",
                  Edge::H(i, 0).to_string());
    }
  }
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      int degree = 0;
      for (const Edge& e : grid.incident({i, j})) degree += fpl.has(e) ? 1 : 0;
      if (degree != 2) verdict.add("interior vertex degree is not 2", vertex_label({i, j}));
    }
  }
  return verdict;
}

Verdict validate(const RectIce& ice) {
  Verdict verdict;
  const Grid grid(ice.dims());
  const auto [m, n] = ice.dims();
  for (int i = 1; i <= m; ++i) {
    // Left boundary edges point inward: head is v(i,1).
    if (!ice.points_high(Edge::H(i, 0))) {
      verdict.add("left boundary edge does not point inward", Edge::H(i, 0).to_string());
    }
  }
  for (int j = 1; j <= n; ++j) {
    // Top boundary edges point outward: head is v(0,j).
    if (ice.points_high(Edge::V(0, j))) {
      verdict.add("top boundary edge does not point outward", Edge::V(0, j).to_string());
    }
  }
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      int in = 0;
      for (const Edge& e : grid.incident({i, j})) in += ice.head(e) == Vertex{i, j} ? 1 : 0;
      if (in != 2) verdict.add("interior vertex in-degree is not 2", vertex_label({i, j}));
    }
  }
  return verdict;
}

VertexType ice_vertex_type(const RectIce& ice, Vertex v) {
  const Grid grid(ice.dims());
  if (!grid.is_interior(v)) throw std::out_of_range(vertex_label(v) + " is not interior");
  // Arrow directions: east means toward larger j, south toward larger i.
  const bool west_arm_east = ice.points_high(Edge::H(v.i, v.j - 1));
  const bool east_arm_east = ice.points_high(Edge::H(v.i, v.j));
  const bool north_arm_south = ice.points_high(Edge::V(v.i - 1, v.j));
  const bool south_arm_south = ice.points_high(Edge::V(v.i, v.j));
  const bool horizontal_in = west_arm_east && !east_arm_east;
  const bool horizontal_out = !west_arm_east && east_arm_east;
  const bool vertical_in = north_arm_south && !south_arm_south;
  const bool vertical_out = !north_arm_south && south_arm_south;
  if (horizontal_in && vertical_out) return VertexType::kPlusOne;
  if (horizontal_out && vertical_in) return VertexType::kMinusOne;
  if (west_arm_east && east_arm_east) {
    return north_arm_south ? VertexType::kZeroEastSouth : VertexType::kZeroEastNorth;
  }
  if (!west_arm_east && !east_arm_east) {
    return north_arm_south ? VertexType::kZeroWestSouth : VertexType::kZeroWestNorth;
  }
  throw InvariantError([&] {
    Verdict verdict;
    verdict.add("interior vertex in-degree is not 2", vertex_label(v));
    return verdict;
  }());
}

}  // namespace pasmkit
