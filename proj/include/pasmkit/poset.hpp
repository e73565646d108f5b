#pragma once

// The pyramid poset P(m,n), its order ideals and toggle-group actions.

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "pasmkit/core.hpp"

namespace pasmkit {

struct PosetElement {
  int i = 0;
  int j = 0;
  int k = 0;

  auto operator<=>(const PosetElement&) const = default;
};

/// Elements (i,j,k) with 0 <= k <= m-1, k <= i <= m-1, k <= j <= n-1.
/// (i,j,k) covers (i+1,j,k), (i,j+1,k), (i-1,j,k-1) and (i,j-1,k-1).
class PasmPoset {
 public:
  explicit PasmPoset(Dims dims);

  [[nodiscard]] Dims dims() const noexcept { return dims_; }
  [[nodiscard]] int size() const noexcept { return static_cast<int>(elements_.size()); }
  /// All elements in lexicographic (i,j,k) order.
  [[nodiscard]] const std::vector<PosetElement>& elements() const noexcept { return elements_; }
  [[nodiscard]] bool contains(PosetElement e) const noexcept;
  [[nodiscard]] int rank(PosetElement e) const noexcept { return dims_.m + dims_.n - 2 - e.i - e.j + 2 * e.k; }
  [[nodiscard]] int max_rank() const noexcept { return dims_.m + dims_.n - 2; }
  /// Elements of one rank in lexicographic order.
  [[nodiscard]] const std::vector<PosetElement>& rank_level(int r) const { return by_rank_.at(r); }

  [[nodiscard]] std::vector<PosetElement> lower_covers(PosetElement e) const;
  [[nodiscard]] std::vector<PosetElement> upper_covers(PosetElement e) const;
  [[nodiscard]] std::vector<PosetElement> minimal_elements() const;
  [[nodiscard]] std::vector<PosetElement> maximal_elements() const;

  /// Number of elements in the fiber over base point (a,b): min(a,b) + 1.
  [[nodiscard]] static int fiber_size(int a, int b) noexcept { return (a < b ? a : b) + 1; }

 private:
  Dims dims_;
  std::vector<PosetElement> elements_;
  std::vector<std::vector<PosetElement>> by_rank_;
};

/// A down-set of P(m,n), stored as the m x n array of fiber heights:
/// height(a,b) = #{t : (a,b,t) in the ideal}. Fibers are chains, so the
/// heights determine the set.
class OrderIdeal {
 public:
  OrderIdeal(Dims dims, std::vector<std::uint8_t> heights);

  static OrderIdeal empty(Dims dims);
  static OrderIdeal full(Dims dims);
  /// Throws InvariantError if the set is not down-closed or names a
  /// non-element.
  static OrderIdeal from_elements(const PasmPoset& poset, const std::vector<PosetElement>& members);

  [[nodiscard]] Dims dims() const noexcept { return dims_; }
  [[nodiscard]] int height(int a, int b) const { return heights_[index(a, b)]; }
  [[nodiscard]] bool contains(PosetElement e) const { return e.k < height(e.i, e.j); }
  [[nodiscard]] int size() const noexcept;
  [[nodiscard]] std::vector<PosetElement> members() const;
  [[nodiscard]] const std::vector<std::uint8_t>& key() const noexcept { return heights_; }
  [[nodiscard]] std::vector<std::vector<int>> rows() const;

  [[nodiscard]] OrderIdeal with_height(int a, int b, int value) const;

  auto operator<=>(const OrderIdeal&) const = default;

 private:
  [[nodiscard]] std::size_t index(int a, int b) const;

  Dims dims_;
  std::vector<std::uint8_t> heights_;
};

/// Down-closure expressed on heights: heights step by 0 or 1 going down or
/// right, and the first row and column are at most 1.
[[nodiscard]] Verdict validate(const OrderIdeal& ideal);

[[nodiscard]] PasmPoset build_poset(Dims dims);

/// Adds q when q is outside X and X + q is an ideal, removes q when q is in X
/// and X - q is an ideal, otherwise returns X. Throws std::out_of_range if q
/// is not an element.
[[nodiscard]] OrderIdeal toggle(const PasmPoset& poset, const OrderIdeal& ideal, PosetElement q);

/// Applies toggles in the given order.
[[nodiscard]] OrderIdeal toggle_sequence(const PasmPoset& poset, OrderIdeal ideal,
                                         std::span<const PosetElement> order);

/// Toggles every element of the fiber over (a,b), bottom to top.
[[nodiscard]] OrderIdeal toggle_fiber(const PasmPoset& poset, const OrderIdeal& ideal, int a, int b);

/// Rowmotion as toggles from the top rank down to rank 0.
[[nodiscard]] OrderIdeal rowmotion(const PasmPoset& poset, const OrderIdeal& ideal);

/// Rowmotion as the ideal generated by the minimal elements of the complement.
[[nodiscard]] OrderIdeal rowmotion_by_complement(const PasmPoset& poset, const OrderIdeal& ideal);

/// Toggles all even ranks, then all odd ranks.
[[nodiscard]] OrderIdeal gyr(const PasmPoset& poset, const OrderIdeal& ideal);
/// Toggles all odd ranks, then all even ranks.
[[nodiscard]] OrderIdeal gyr_inverse(const PasmPoset& poset, const OrderIdeal& ideal);

/// Visits every order ideal of P(m,n) once, in lexicographic order of the
/// row-major height array.
void enumerate_ideals(Dims dims, const std::function<void(const OrderIdeal&)>& visit);
[[nodiscard]] std::vector<OrderIdeal> all_ideals(Dims dims);

/// (-a^3 + 3a^2 b + 3ab + a) / 6 with a = min(m,n), b = max(m,n).
[[nodiscard]] long long lattice_rank_of_J(Dims dims);

}  // namespace pasmkit
