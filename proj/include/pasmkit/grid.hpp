#pragma once

// Addressing for the grid graph G(m,n): vertices v(i,j) with 0 <= i <= m+1,
// 0 <= j <= n+1 minus the four corners; horizontal edges H(i,j) = v(i,j)v(i,j+1)
// and vertical edges V(i,j) = v(i,j)v(i+1,j); faces (i,j) with upper-left
// corner v(i,j).

#include <array>
#include <compare>
#include <optional>
#include <cstdint>
#include <string>
#include <vector>

#include "pasmkit/core.hpp"

namespace pasmkit {

struct Vertex {
  int i = 0;
  int j = 0;

  [[nodiscard]] bool is_even() const noexcept { return ((i + j) & 1) == 0; }
  auto operator<=>(const Vertex&) const = default;
};

enum class Axis : std::uint8_t { kHorizontal, kVertical };

struct Edge {
  Axis axis = Axis::kHorizontal;
  int i = 0;
  int j = 0;

  static constexpr Edge H(int i, int j) noexcept { return {Axis::kHorizontal, i, j}; }
  static constexpr Edge V(int i, int j) noexcept { return {Axis::kVertical, i, j}; }

  /// Endpoint with the smaller coordinate sum.
  [[nodiscard]] Vertex low() const noexcept { return {i, j}; }
  /// Endpoint with the larger coordinate sum.
  [[nodiscard]] Vertex high() const noexcept {
    return axis == Axis::kHorizontal ? Vertex{i, j + 1} : Vertex{i + 1, j};
  }
  [[nodiscard]] std::string to_string() const;

  auto operator<=>(const Edge&) const = default;
};

enum class FaceKind : std::uint8_t {
  kBoundary,
  kInterior,
  kRightExterior,
  kBottomExterior,
  kCornerExterior,
};

[[nodiscard]] const char* to_string(FaceKind kind) noexcept;

struct Face {
  int i = 0;
  int j = 0;

  [[nodiscard]] bool is_even() const noexcept { return ((i + j) & 1) == 0; }
  auto operator<=>(const Face&) const = default;
};

/// The sides of a face that exist as edges of G(m,n).
struct FaceSides {
  std::optional<Edge> top;
  std::optional<Edge> bottom;
  std::optional<Edge> left;
  std::optional<Edge> right;
};

class Grid {
 public:
  explicit Grid(Dims dims) : dims_(Dims::checked(dims.m, dims.n)) {}

  [[nodiscard]] Dims dims() const noexcept { return dims_; }

  [[nodiscard]] bool contains(Vertex v) const noexcept;
  [[nodiscard]] bool is_interior(Vertex v) const noexcept {
    return v.i >= 1 && v.i <= dims_.m && v.j >= 1 && v.j <= dims_.n;
  }

  [[nodiscard]] bool contains(Edge e) const noexcept;
  [[nodiscard]] int edge_count() const noexcept {
    return dims_.m * (dims_.n + 1) + (dims_.m + 1) * dims_.n;
  }
  /// Dense index: horizontal edges row-major first, then vertical edges.
  [[nodiscard]] int index_of(Edge e) const;
  [[nodiscard]] Edge edge_at(int index) const;

  /// Edges of G(m,n) incident to v (between one and four).
  [[nodiscard]] std::vector<Edge> incident(Vertex v) const;

  [[nodiscard]] bool contains(Face f) const noexcept {
    return f.i >= 0 && f.i <= dims_.m && f.j >= 0 && f.j <= dims_.n;
  }
  [[nodiscard]] FaceKind classify(Face f) const;
  [[nodiscard]] FaceSides sides(Face f) const;

  /// Forced boundary edges of a partial fully-packed loop: V(0,j) for odd j
  /// and H(i,0) for even i.
  [[nodiscard]] std::vector<Edge> forced_boundary() const;

 private:
  Dims dims_;
};

}  // namespace pasmkit
