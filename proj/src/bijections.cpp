#include "pasmkit/bijections.hpp"

#include <stdexcept>

namespace pasmkit {

ColumnSumMatrix column_sums(const Pasm& matrix) {
  const auto [m, n] = matrix.dims();
  ColumnSumMatrix out{matrix.dims(), std::vector<std::int8_t>(static_cast<std::size_t>(m) * n, 0)};
  for (int j = 1; j <= n; ++j) {
    int running = 0;
    for (int i = 1; i <= m; ++i) {
      running += matrix.at(i, j);
      out.entries[static_cast<std::size_t>(i - 1) * n + (j - 1)] = static_cast<std::int8_t>(running);
    }
  }
  return out;
}

PartialMonotoneTriangle pasm_to_triangle(const Pasm& matrix) {
  const auto [m, n] = matrix.dims();
  const ColumnSumMatrix sums = column_sums(matrix);
  std::vector<std::vector<int>> rows;
  rows.reserve(m);
  for (int i = 1; i <= m; ++i) {
    std::vector<int> ones;
    for (int j = 1; j <= n; ++j)
      if (sums.at(i, j) == 1) ones.push_back(j);
    std::vector<int> row(i - std::min<int>(i, static_cast<int>(ones.size())), 0);
    row.insert(row.end(), ones.begin(), ones.end());
    rows.push_back(std::move(row));
  }
  return PartialMonotoneTriangle(matrix.dims(), std::move(rows));
}

Pasm triangle_to_pasm(const PartialMonotoneTriangle& triangle) {
  const auto [m, n] = triangle.dims();
  std::vector<std::int8_t> sums(static_cast<std::size_t>(m) * n, 0);
  for (int i = 1; i <= m; ++i)
    for (int value : triangle.rows()[i - 1])
      if (value > 0) sums[static_cast<std::size_t>(i - 1) * n + (value - 1)] = 1;
  std::vector<std::int8_t> entries(sums.size());
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      const std::size_t here = static_cast<std::size_t>(i - 1) * n + (j - 1);
      const int above = i == 1 ? 0 : sums[here - n];
      entries[here] = static_cast<std::int8_t>(sums[here] - above);
    }
  }
  return Pasm(triangle.dims(), std::move(entries));
}

CornerSumMatrix pasm_to_corner_sum(const Pasm& matrix) {
  const auto [m, n] = matrix.dims();
  std::vector<int> c(static_cast<std::size_t>(m + 1) * (n + 1), 0);
  auto at = [&](int i, int j) -> int& { return c[static_cast<std::size_t>(i) * (n + 1) + j]; };
  // c(i,j) = c(i-1,j) + sum_{j' > j} M(i,j'), filled right to left.
  for (int i = 1; i <= m; ++i) {
    int row_tail = 0;
    for (int j = n; j >= 0; --j) {
      at(i, j) = at(i - 1, j) + row_tail;
      if (j >= 1) row_tail += matrix.at(i, j);
    }
  }
  return CornerSumMatrix(matrix.dims(), std::move(c));
}

Pasm corner_sum_to_pasm(const CornerSumMatrix& c) {
  const auto [m, n] = c.dims();
  std::vector<std::int8_t> entries;
  entries.reserve(static_cast<std::size_t>(m) * n);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j)
      entries.push_back(static_cast<std::int8_t>(c.at(i, j - 1) - c.at(i - 1, j - 1) - c.at(i, j) + c.at(i - 1, j)));
  return Pasm(c.dims(), std::move(entries));
}

PartialHeightFunction corner_sum_to_height(const CornerSumMatrix& c) {
  const auto [m, n] = c.dims();
  std::vector<int> h;
  h.reserve(static_cast<std::size_t>(m + 1) * (n + 1));
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= n; ++j) h.push_back(i + j - 2 * c.at(i, n - j));
  return PartialHeightFunction(c.dims(), std::move(h));
}

CornerSumMatrix height_to_corner_sum(const PartialHeightFunction& h) {
  const auto [m, n] = h.dims();
  std::vector<int> c(static_cast<std::size_t>(m + 1) * (n + 1), 0);
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= n; ++j) c[static_cast<std::size_t>(i) * (n + 1) + (n - j)] = (i + j - h.at(i, j)) / 2;
  return CornerSumMatrix(h.dims(), std::move(c));
}

PartialHeightFunction pasm_to_height(const Pasm& matrix) {
  return corner_sum_to_height(pasm_to_corner_sum(matrix));
}

Pasm height_to_pasm(const PartialHeightFunction& height) {
  return corner_sum_to_pasm(height_to_corner_sum(height));
}

// ---------------------------------------------------------------------------

namespace {

// Horizontal neighbours {2k, 2k+1}: the smaller value is even.
bool separated_across_column(int left, int right) { return (std::min(left, right) & 1) == 0; }
// Vertical neighbours {2k-1, 2k}: the smaller value is odd.
bool separated_across_row(int upper, int lower) { return (std::min(upper, lower) & 1) == 1; }

}  // namespace

PartialFpl height_to_fpl(const PartialHeightFunction& h) {
  const auto [m, n] = h.dims();
  const Grid grid(h.dims());
  std::vector<std::uint8_t> presence(grid.edge_count(), 0);
  for (int i = 0; i <= m; ++i)
    for (int j = 1; j <= n; ++j)
      presence[grid.index_of(Edge::V(i, j))] = separated_across_column(h.at(i, j - 1), h.at(i, j));
  for (int i = 1; i <= m; ++i)
    for (int j = 0; j <= n; ++j)
      presence[grid.index_of(Edge::H(i, j))] = separated_across_row(h.at(i - 1, j), h.at(i, j));
  return PartialFpl(h.dims(), std::move(presence));
}

PartialHeightFunction fpl_to_height(const PartialFpl& fpl) {
  const auto [m, n] = fpl.dims();
  std::vector<int> h(static_cast<std::size_t>(m + 1) * (n + 1), 0);
  auto at = [&](int i, int j) -> int& { return h[static_cast<std::size_t>(i) * (n + 1) + j]; };
  for (int i = 0; i <= m; ++i) {
    at(i, 0) = i;
    for (int j = 1; j <= n; ++j) {
      const int left = at(i, j - 1);
      // Of left+1 and left-1, exactly one matches the presence of V(i,j).
      const bool edge = fpl.has(Edge::V(i, j));
      at(i, j) = separated_across_column(left, left + 1) == edge ? left + 1 : left - 1;
    }
  }
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= n; ++j) {
      const bool bad_top = i == 0 && at(i, j) != j;
      const bool bad_sign = at(i, j) < 0;
      const bool bad_row =
          i > 0 && (std::abs(at(i, j) - at(i - 1, j)) != 1 ||
                    separated_across_row(at(i - 1, j), at(i, j)) != fpl.has(Edge::H(i, j)));
      if (bad_top || bad_sign || bad_row) {
        throw std::logic_error("internal contradiction: loop configuration has no height function at (" +
                               std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
  return PartialHeightFunction(fpl.dims(), std::move(h));
}

RectIce fpl_to_ice(const PartialFpl& fpl) {
  const Grid grid(fpl.dims());
  std::vector<std::uint8_t> head_high(grid.edge_count(), 0);
  for (int k = 0; k < grid.edge_count(); ++k) {
    const Edge e = grid.edge_at(k);
    const bool low_even = e.low().is_even();
    // Present: even -> odd. Absent: odd -> even. Either way the head is the
    // high endpoint exactly when the low endpoint is the tail.
    const bool tail_even = fpl.key()[k] != 0;
    head_high[k] = low_even == tail_even;
  }
  return RectIce(fpl.dims(), std::move(head_high));
}

PartialFpl ice_to_fpl(const RectIce& ice) {
  const Grid grid(ice.dims());
  std::vector<std::uint8_t> presence(grid.edge_count(), 0);
  for (int k = 0; k < grid.edge_count(); ++k) {
    const Edge e = grid.edge_at(k);
    presence[k] = ice.tail(e).is_even();
  }
  return PartialFpl(ice.dims(), std::move(presence));
}

Pasm pasm_from_ice_vertices(const RectIce& ice) {
  const auto [m, n] = ice.dims();
  std::vector<std::int8_t> entries;
  entries.reserve(static_cast<std::size_t>(m) * n);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j)
      entries.push_back(static_cast<std::int8_t>(matrix_value(ice_vertex_type(ice, {i, n + 1 - j}))));
  return Pasm(ice.dims(), std::move(entries));
}

OrderIdeal height_to_ideal(const PartialHeightFunction& h) {
  const auto [m, n] = h.dims();
  std::vector<std::uint8_t> heights;
  heights.reserve(static_cast<std::size_t>(m) * n);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) heights.push_back(static_cast<std::uint8_t>((i + j - h.at(i, j)) / 2));
  return OrderIdeal(h.dims(), std::move(heights));
}

PartialHeightFunction ideal_to_height(const OrderIdeal& ideal) {
  require(validate(ideal));
  const auto [m, n] = ideal.dims();
  std::vector<int> h;
  h.reserve(static_cast<std::size_t>(m + 1) * (n + 1));
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= n; ++j) {
      const int k = (i == 0 || j == 0) ? 0 : ideal.height(i - 1, j - 1);
      h.push_back(i + j - 2 * k);
    }
  }
  return PartialHeightFunction(ideal.dims(), std::move(h));
}

// ---------------------------------------------------------------------------

OsculatingNest pasm_to_nest(const Pasm& matrix) {
  const auto [m, n] = matrix.dims();
  // tail(i,j) = sum_{j' >= j} M(i,j'): 1 iff a path crosses into (i,j) from the left.
  std::vector<int> tail(static_cast<std::size_t>(m + 1) * (n + 2), 0);
  auto row_tail = [&](int i, int j) -> int& { return tail[static_cast<std::size_t>(i) * (n + 2) + j]; };
  for (int i = 1; i <= m; ++i)
    for (int j = n; j >= 1; --j) row_tail(i, j) = row_tail(i, j + 1) + matrix.at(i, j);
  const ColumnSumMatrix down = column_sums(matrix);  // 1 iff a path leaves (i,j) downward

  std::vector<LatticePath> paths;
  for (int start = 1; start <= m; ++start) {
    if (row_tail(start, 1) != 1) continue;
    LatticePath path{start, {}};
    int i = start;
    int j = 1;
    bool from_left = true;
    for (;;) {
      const bool go_down = from_left ? down.at(i, j) == 1 : row_tail(i, j + 1) != 1;
      if (go_down) {
        if (i == m) break;
        path.steps.push_back('S');
        ++i;
        from_left = false;
      } else {
        if (j == n) throw InvariantError([&] {
            Verdict v;
            v.add("path runs off the right side", "row " + std::to_string(i));
            return v;
          }());
        path.steps.push_back('E');
        ++j;
        from_left = true;
      }
    }
    paths.push_back(std::move(path));
  }
  return OsculatingNest(matrix.dims(), std::move(paths));
}

Pasm nest_to_pasm(const OsculatingNest& nest) {
  require(validate(nest));
  const auto [m, n] = nest.dims();
  // M(i,j) = (enters from the left) - (leaves to the right).
  std::vector<int> entries(static_cast<std::size_t>(m) * n, 0);
  auto cell = [&](int i, int j) -> int& { return entries[static_cast<std::size_t>(i - 1) * n + (j - 1)]; };
  for (const auto& path : nest.paths()) {
    int i = path.start_row;
    int j = 1;
    cell(i, j) += 1;
    for (char step : path.steps) {
      if (step == 'E') {
        cell(i, j) -= 1;
        ++j;
        cell(i, j) += 1;
      } else {
        ++i;
      }
    }
  }
  std::vector<std::int8_t> narrow(entries.begin(), entries.end());
  Pasm matrix(nest.dims(), std::move(narrow));
  Verdict verdict = validate(matrix);
  if (!verdict.ok()) {
    Verdict outside;
    outside.add("nest is outside the image of the matrix map", verdict.to_string());
    throw InvariantError(outside);
  }
  return matrix;
}

// ---------------------------------------------------------------------------

Family family_of(const AnyObject& object) noexcept { return static_cast<Family>(object.index()); }

Dims dims_of(const AnyObject& object) noexcept {
  return std::visit([](const auto& o) { return o.dims(); }, object);
}

Verdict validate(const AnyObject& object) {
  return std::visit([](const auto& o) { return validate(o); }, object);
}

namespace {

PartialHeightFunction to_height(const AnyObject& object) {
  switch (family_of(object)) {
    case Family::kPasm: return pasm_to_height(std::get<Pasm>(object));
    case Family::kTriangle: return pasm_to_height(triangle_to_pasm(std::get<PartialMonotoneTriangle>(object)));
    case Family::kCornerSum: return corner_sum_to_height(std::get<CornerSumMatrix>(object));
    case Family::kHeight: return std::get<PartialHeightFunction>(object);
    case Family::kFpl: return fpl_to_height(std::get<PartialFpl>(object));
    case Family::kIce: return fpl_to_height(ice_to_fpl(std::get<RectIce>(object)));
    case Family::kIdeal: return ideal_to_height(std::get<OrderIdeal>(object));
    case Family::kNest: return pasm_to_height(nest_to_pasm(std::get<OsculatingNest>(object)));
  }
  throw std::logic_error("unknown family");
}

AnyObject from_height(const PartialHeightFunction& h, Family target) {
  switch (target) {
    case Family::kPasm: return height_to_pasm(h);
    case Family::kTriangle: return pasm_to_triangle(height_to_pasm(h));
    case Family::kCornerSum: return height_to_corner_sum(h);
    case Family::kHeight: return h;
    case Family::kFpl: return height_to_fpl(h);
    case Family::kIce: return fpl_to_ice(height_to_fpl(h));
    case Family::kIdeal: return height_to_ideal(h);
    case Family::kNest: return pasm_to_nest(height_to_pasm(h));
  }
  throw std::logic_error("unknown family");
}

}  // namespace

AnyObject convert(const AnyObject& object, Family target) {
  require(validate(object));
  if (family_of(object) == target) return object;
  return from_height(to_height(object), target);
}

}  // namespace pasmkit
