#pragma once

// Independent reference implementations. None of these call the code they
// are used to check; they work from the definitions directly, usually by
// brute force.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pasmkit/bijections.hpp"
#include "pasmkit/gyration.hpp"
#include "pasmkit/poset.hpp"

namespace oracle {

using Rows = std::vector<std::vector<int>>;

/// Partial sums: top-down column sums and right-to-left row sums stay in {0,1}.
bool is_pasm(const Rows& rows);

/// All m x n partial ASMs, built row by row from the candidate row set.
std::set<Rows> all_pasms(int m, int n);

/// h(0,j) = j, h(i,0) = i, neighbours differ by exactly 1, entries >= 0.
bool is_height_function(const Rows& h);

/// Every element of P(m,n) and the reflexive-transitive order, by closure
/// over the four cover rules.
struct NaivePoset {
  int m = 0;
  int n = 0;
  std::vector<pasmkit::PosetElement> elements;
  std::vector<std::vector<bool>> leq;  // leq[x][y]: elements[x] <= elements[y]

  explicit NaivePoset(int m_, int n_);
  [[nodiscard]] int index(pasmkit::PosetElement e) const;
  [[nodiscard]] bool is_ideal(const std::set<int>& members) const;
  [[nodiscard]] std::set<int> members(const pasmkit::OrderIdeal& ideal) const;
  [[nodiscard]] std::set<int> toggle(const std::set<int>& members, int q) const;
  [[nodiscard]] std::set<int> rowmotion(const std::set<int>& members) const;
  /// Every subset that is down-closed (only for tiny posets).
  [[nodiscard]] std::vector<std::set<int>> all_ideals() const;
};

/// Orbit sizes of a permutation given as successor function over a finite
/// list of keys, by repeated application.
template <class T, class Key, class Step>
std::multiset<std::size_t> naive_orbit_sizes(const std::vector<T>& carrier, Key key, Step step) {
  std::set<std::string> seen;
  std::multiset<std::size_t> sizes;
  for (const auto& x : carrier) {
    if (seen.count(key(x))) continue;
    std::size_t size = 0;
    T y = x;
    do {
      seen.insert(key(y));
      y = step(y);
      ++size;
    } while (key(y) != key(x));
    sizes.insert(size);
  }
  return sizes;
}

/// Candidate nests: every choice of start rows and south/east paths that
/// stay in the grid and end on the bottom row, filtered by edge-disjointness
/// and the no-crossing rule, checked independently.
std::vector<pasmkit::OsculatingNest> all_nests(int m, int n);

/// Reads the path system off the ice arrows and traces it.
pasmkit::OsculatingNest nest_from_ice(const pasmkit::RectIce& ice);

/// Failures of the three-way equivalence (square move, h +- 2, fiber
/// toggle) over every object and square of the shape.
struct EquivalenceTally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> examples;
};
EquivalenceTally check_square_equivalence(pasmkit::Dims dims);

/// gyrate vs Gyr / Gyr^-1 on ideals according to the parity of m + n.
EquivalenceTally check_parity_transport(pasmkit::Dims dims);

/// Every candidate partial ASM as a library object.
std::vector<pasmkit::Pasm> all_pasm_objects(pasmkit::Dims dims);

std::uint64_t binomial(int n, int k);

/// counts[t] by a row-to-row transfer over column-sum states, matrices never built.
std::vector<std::uint64_t> count_by_sum_rows(int m, int n);

}  // namespace oracle
