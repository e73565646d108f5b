#pragma once

// Enumeration of partial alternating sign matrices, count tables and the
// closed formulas that go with them.

#include <cstdint>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pasmkit/core.hpp"

namespace pasmkit {

using BigInt = boost::multiprecision::cpp_int;

enum class Execution { kSerial, kParallel };

/// Visits every partial height function of the given shape once, in
/// lexicographic order of the row-major interior entries.
void for_each_height(Dims dims, const std::function<void(const PartialHeightFunction&)>& visit);

/// Visits every partial ASM once, in the order of for_each_height.
void for_each_pasm(Dims dims, const std::function<void(const Pasm&)>& visit);

/// The same set reached through the order ideals of P(m,n).
void for_each_pasm_via_ideals(Dims dims, const std::function<void(const Pasm&)>& visit);

[[nodiscard]] std::vector<Pasm> enumerate_pasm(Dims dims);

/// counts[t] = number of partial ASMs with total sum t, 0 <= t <= min(m,n),
/// by exhaustive enumeration. The parallel kernel splits the search by the
/// first row of the height function.
[[nodiscard]] std::vector<std::uint64_t> count_by_sum(Dims dims, Execution execution = Execution::kParallel);

[[nodiscard]] std::uint64_t count_pasm(Dims dims, Execution execution = Execution::kParallel);

/// Row-to-row transfer over height rows; no objects are built.
[[nodiscard]] std::vector<BigInt> count_by_sum_transfer(Dims dims);

/// binom(m+n, m) - 1.
[[nodiscard]] BigInt sum_one_count(Dims dims);

/// Product over j < n of (3j+1)! / (n+j)!.
[[nodiscard]] BigInt asm_count(int n);

[[nodiscard]] BigInt binomial(int n, int k);

struct CountTable {
  int max_m = 0;
  int max_n = 0;
  std::vector<std::vector<std::uint64_t>> cells;  // cells[m-1][n-1]

  [[nodiscard]] std::uint64_t at(int m, int n) const { return cells.at(m - 1).at(n - 1); }
};

struct CountTables {
  CountTable totals;
  /// by_sum[n-1][t] for square n x n, n <= min(max_m, max_n).
  std::vector<std::vector<std::uint64_t>> by_sum;
};

[[nodiscard]] CountTables make_tables(int max_m, int max_n, Execution execution = Execution::kParallel);

}  // namespace pasmkit
