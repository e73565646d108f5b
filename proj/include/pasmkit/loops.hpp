#pragma once

// Edge-set objects on G(m,n): partial fully-packed loop configurations and
// rectangular ice (six-vertex) orientations.

#include <cstdint>
#include <vector>

#include "pasmkit/grid.hpp"

namespace pasmkit {

/// A subgraph of G(m,n), stored as one presence byte per edge in
/// Grid::index_of order.
class PartialFpl {
 public:
  PartialFpl(Dims dims, std::vector<std::uint8_t> presence);
  static PartialFpl from_edges(Dims dims, const std::vector<Edge>& edges);

  [[nodiscard]] Dims dims() const noexcept { return dims_; }
  [[nodiscard]] Grid grid() const { return Grid(dims_); }
  [[nodiscard]] bool has(Edge e) const;
  /// Present edges, sorted.
  [[nodiscard]] std::vector<Edge> edges() const;
  [[nodiscard]] const std::vector<std::uint8_t>& key() const noexcept { return presence_; }

  [[nodiscard]] PartialFpl with(Edge e, bool present) const;

  auto operator<=>(const PartialFpl&) const = default;

 private:
  Dims dims_;
  std::vector<std::uint8_t> presence_;
};

/// Orientation of every edge of G(m,n). Bit set means the head is the
/// endpoint with the larger coordinate sum.
class RectIce {
 public:
  RectIce(Dims dims, std::vector<std::uint8_t> head_high);

  [[nodiscard]] Dims dims() const noexcept { return dims_; }
  [[nodiscard]] bool points_high(Edge e) const;
  [[nodiscard]] Vertex head(Edge e) const { return points_high(e) ? e.high() : e.low(); }
  [[nodiscard]] Vertex tail(Edge e) const { return points_high(e) ? e.low() : e.high(); }
  [[nodiscard]] const std::vector<std::uint8_t>& key() const noexcept { return head_high_; }

  auto operator<=>(const RectIce&) const = default;

 private:
  Dims dims_;
  std::vector<std::uint8_t> head_high_;
};

/// Six-vertex configuration at an interior vertex. The zero variants name
/// the direction the horizontal and vertical arrows flow through the vertex.
enum class VertexType : std::uint8_t {
  kPlusOne,
  kMinusOne,
  kZeroEastSouth,
  kZeroEastNorth,
  kZeroWestSouth,
  kZeroWestNorth,
};

[[nodiscard]] const char* to_string(VertexType type) noexcept;
[[nodiscard]] int matrix_value(VertexType type) noexcept;

[[nodiscard]] Verdict validate(const PartialFpl& fpl);
[[nodiscard]] Verdict validate(const RectIce& ice);

/// Classifies an interior vertex of a valid ice configuration: both
/// horizontal arrows in and both vertical arrows out is +1; the reverse is -1.
[[nodiscard]] VertexType ice_vertex_type(const RectIce& ice, Vertex v);

}  // namespace pasmkit
