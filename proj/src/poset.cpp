#include "pasmkit/poset.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace pasmkit {

namespace {

std::string element_label(PosetElement e) {
  return "(" + std::to_string(e.i) + "," + std::to_string(e.j) + "," + std::to_string(e.k) + ")";
}

}  // namespace

PasmPoset::PasmPoset(Dims dims) : dims_(Dims::checked(dims.m, dims.n)) {
  const auto [m, n] = dims_;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k <= std::min(i, j); ++k) elements_.push_back({i, j, k});
  by_rank_.resize(max_rank() + 1);
  for (const auto& e : elements_) by_rank_[rank(e)].push_back(e);
}

bool PasmPoset::contains(PosetElement e) const noexcept {
  return e.k >= 0 && e.k <= dims_.m - 1 && e.j >= e.k && e.j <= dims_.n - 1 && e.i >= e.k &&
         e.i <= dims_.m - 1;
}

std::vector<PosetElement> PasmPoset::lower_covers(PosetElement e) const {
  std::vector<PosetElement> out;
  for (PosetElement c : {PosetElement{e.i + 1, e.j, e.k}, PosetElement{e.i, e.j + 1, e.k},
                         PosetElement{e.i - 1, e.j, e.k - 1}, PosetElement{e.i, e.j - 1, e.k - 1}}) {
    if (contains(c)) out.push_back(c);
  }
  return out;
}

std::vector<PosetElement> PasmPoset::upper_covers(PosetElement e) const {
  std::vector<PosetElement> out;
  for (PosetElement c : {PosetElement{e.i - 1, e.j, e.k}, PosetElement{e.i, e.j - 1, e.k},
                         PosetElement{e.i + 1, e.j, e.k + 1}, PosetElement{e.i, e.j + 1, e.k + 1}}) {
    if (contains(c)) out.push_back(c);
  }
  return out;
}

std::vector<PosetElement> PasmPoset::minimal_elements() const {
  std::vector<PosetElement> out;
  for (const auto& e : elements_)
    if (lower_covers(e).empty()) out.push_back(e);
  return out;
}

std::vector<PosetElement> PasmPoset::maximal_elements() const {
  std::vector<PosetElement> out;
  for (const auto& e : elements_)
    if (upper_covers(e).empty()) out.push_back(e);
  return out;
}

PasmPoset build_poset(Dims dims) { return PasmPoset(dims); }

// ---------------------------------------------------------------------------

OrderIdeal::OrderIdeal(Dims dims, std::vector<std::uint8_t> heights)
    : dims_(Dims::checked(dims.m, dims.n)), heights_(std::move(heights)) {
  if (heights_.size() != static_cast<std::size_t>(dims_.m) * dims_.n) {
    throw StructuralError("height array has " + std::to_string(heights_.size()) +
                          " entries, expected " + std::to_string(dims_.m * dims_.n));
  }
}

OrderIdeal OrderIdeal::empty(Dims dims) {
  return OrderIdeal(dims, std::vector<std::uint8_t>(static_cast<std::size_t>(dims.m) * dims.n, 0));
}

OrderIdeal OrderIdeal::full(Dims dims) {
  std::vector<std::uint8_t> heights;
  for (int a = 0; a < dims.m; ++a)
    for (int b = 0; b < dims.n; ++b) heights.push_back(static_cast<std::uint8_t>(PasmPoset::fiber_size(a, b)));
  return OrderIdeal(dims, std::move(heights));
}

OrderIdeal OrderIdeal::from_elements(const PasmPoset& poset, const std::vector<PosetElement>& members) {
  const std::set<PosetElement> set(members.begin(), members.end());
  Verdict verdict;
  for (const auto& e : set) {
    if (!poset.contains(e)) {
      verdict.add("not a poset element", element_label(e));
      continue;
    }
    for (const auto& below : poset.lower_covers(e)) {
      if (!set.contains(below)) verdict.add("set is not down-closed", element_label(e));
    }
  }
  require(verdict);
  const auto [m, n] = poset.dims();
  std::vector<std::uint8_t> heights(static_cast<std::size_t>(m) * n, 0);
  for (const auto& e : set) ++heights[static_cast<std::size_t>(e.i) * n + e.j];
  return OrderIdeal(poset.dims(), std::move(heights));
}

std::size_t OrderIdeal::index(int a, int b) const {
  if (a < 0 || a >= dims_.m || b < 0 || b >= dims_.n) throw std::out_of_range("fiber index out of range");
  return static_cast<std::size_t>(a) * dims_.n + b;
}

int OrderIdeal::size() const noexcept { return std::accumulate(heights_.begin(), heights_.end(), 0); }

std::vector<PosetElement> OrderIdeal::members() const {
  std::vector<PosetElement> out;
  for (int a = 0; a < dims_.m; ++a)
    for (int b = 0; b < dims_.n; ++b)
      for (int t = 0; t < height(a, b); ++t) out.push_back({a, b, t});
  return out;
}

std::vector<std::vector<int>> OrderIdeal::rows() const {
  std::vector<std::vector<int>> out(dims_.m, std::vector<int>(dims_.n));
  for (int a = 0; a < dims_.m; ++a)
    for (int b = 0; b < dims_.n; ++b) out[a][b] = height(a, b);
  return out;
}

OrderIdeal OrderIdeal::with_height(int a, int b, int value) const {
  OrderIdeal copy = *this;
  copy.heights_[index(a, b)] = static_cast<std::uint8_t>(value);
  return copy;
}

Verdict validate(const OrderIdeal& ideal) {
  Verdict verdict;
  const auto [m, n] = ideal.dims();
  auto where = [](int a, int b) { return "fiber (" + std::to_string(a) + "," + std::to_string(b) + ")"; };
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < n; ++b) {
      const int h = ideal.height(a, b);
      if (h > PasmPoset::fiber_size(a, b)) verdict.add("height exceeds fiber size", where(a, b));
      const int above = a == 0 ? 0 : ideal.height(a - 1, b);
      const int left = b == 0 ? 0 : ideal.height(a, b - 1);
      if (h - above != 0 && h - above != 1) verdict.add("set is not down-closed", where(a, b));
      if (h - left != 0 && h - left != 1) verdict.add("set is not down-closed", where(a, b));
    }
  }
  return verdict;
}

// ---------------------------------------------------------------------------

OrderIdeal toggle(const PasmPoset& poset, const OrderIdeal& ideal, PosetElement q) {
  if (!poset.contains(q)) throw std::out_of_range(element_label(q) + " is not in the poset");
  if (!ideal.contains(q)) {
    for (const auto& below : poset.lower_covers(q))
      if (!ideal.contains(below)) return ideal;
    // Every element under q is present, so q sits directly on top of its fiber.
    return ideal.with_height(q.i, q.j, q.k + 1);
  }
  for (const auto& above : poset.upper_covers(q))
    if (ideal.contains(above)) return ideal;
  return ideal.with_height(q.i, q.j, q.k);
}

OrderIdeal toggle_sequence(const PasmPoset& poset, OrderIdeal ideal, std::span<const PosetElement> order) {
  for (const auto& q : order) ideal = toggle(poset, ideal, q);
  return ideal;
}

OrderIdeal toggle_fiber(const PasmPoset& poset, const OrderIdeal& ideal, int a, int b) {
  OrderIdeal out = ideal;
  for (int t = 0; t < PasmPoset::fiber_size(a, b); ++t) out = toggle(poset, out, {a, b, t});
  return out;
}

OrderIdeal rowmotion(const PasmPoset& poset, const OrderIdeal& ideal) {
  OrderIdeal out = ideal;
  for (int r = poset.max_rank(); r >= 0; --r) out = toggle_sequence(poset, std::move(out), poset.rank_level(r));
  return out;
}

OrderIdeal rowmotion_by_complement(const PasmPoset& poset, const OrderIdeal& ideal) {
  std::vector<PosetElement> frontier;
  for (const auto& e : poset.elements()) {
    if (ideal.contains(e)) continue;
    const auto below = poset.lower_covers(e);
    if (std::all_of(below.begin(), below.end(), [&](const PosetElement& c) { return ideal.contains(c); })) {
      frontier.push_back(e);
    }
  }
  std::set<PosetElement> generated(frontier.begin(), frontier.end());
  while (!frontier.empty()) {
    const PosetElement e = frontier.back();
    frontier.pop_back();
    for (const auto& below : poset.lower_covers(e)) {
      if (generated.insert(below).second) frontier.push_back(below);
    }
  }
  return OrderIdeal::from_elements(poset, {generated.begin(), generated.end()});
}

namespace {

OrderIdeal toggle_parity(const PasmPoset& poset, OrderIdeal ideal, int parity) {
  for (int r = parity; r <= poset.max_rank(); r += 2) ideal = toggle_sequence(poset, std::move(ideal), poset.rank_level(r));
  return ideal;
}

}  // namespace

OrderIdeal gyr(const PasmPoset& poset, const OrderIdeal& ideal) {
  return toggle_parity(poset, toggle_parity(poset, ideal, 0), 1);
}

OrderIdeal gyr_inverse(const PasmPoset& poset, const OrderIdeal& ideal) {
  return toggle_parity(poset, toggle_parity(poset, ideal, 1), 0);
}

// ---------------------------------------------------------------------------

void enumerate_ideals(Dims dims, const std::function<void(const OrderIdeal&)>& visit) {
  const auto [m, n] = Dims::checked(dims.m, dims.n);
  std::vector<std::uint8_t> heights(static_cast<std::size_t>(m) * n, 0);
  const int cells = m * n;
  // Row-major depth-first assignment; each cell is constrained by the cell
  // above and the cell to its left (both step by 0 or 1).
  std::function<void(int)> place = [&](int cell) {
    if (cell == cells) {
      visit(OrderIdeal({m, n}, heights));
      return;
    }
    const int a = cell / n;
    const int b = cell % n;
    const int above = a == 0 ? 0 : heights[cell - n];
    const int left = b == 0 ? 0 : heights[cell - 1];
    const int lo = std::max(above, left);
    const int hi = std::min(above, left) + 1;
    for (int h = lo; h <= hi; ++h) {
      heights[cell] = static_cast<std::uint8_t>(h);
      place(cell + 1);
    }
  };
  place(0);
}

std::vector<OrderIdeal> all_ideals(Dims dims) {
  std::vector<OrderIdeal> out;
  enumerate_ideals(dims, [&](const OrderIdeal& x) { out.push_back(x); });
  return out;
}

long long lattice_rank_of_J(Dims dims) {
  const long long a = dims.min();
  const long long b = dims.max();
  return (-a * a * a + 3 * a * a * b + 3 * a * b + a) / 6;
}

}  // namespace pasmkit
