#include "pasmkit/enumeration.hpp"

#include <map>

#include "pasmkit/bijections.hpp"
#include "pasmkit/poset.hpp"

namespace pasmkit {

namespace {

// Depth-first search over the interior entries h(i,j), 1 <= i <= m,
// 1 <= j <= n, in row-major order. h(i,j-1) and h(i-1,j) always have the
// same parity; the new entry must differ from both by exactly 1.
class HeightSearch {
 public:
  explicit HeightSearch(Dims dims) : m_(dims.m), n_(dims.n), h_(PartialHeightFunction::ramp(dims).rows()) {}

  [[nodiscard]] int cells() const noexcept { return m_ * n_; }
  [[nodiscard]] const std::vector<std::vector<int>>& rows() const noexcept { return h_; }
  [[nodiscard]] int last() const noexcept { return h_[m_][n_]; }

  template <class Visit>
  void run(int cell, int stop, Visit&& visit) {
    if (cell == stop) {
      visit(*this);
      return;
    }
    const int i = cell / n_ + 1;
    const int j = cell % n_ + 1;
    const int left = h_[i][j - 1];
    const int up = h_[i - 1][j];
    if (left == up) {
      if (left >= 1) {
        h_[i][j] = left - 1;
        run(cell + 1, stop, visit);
      }
      h_[i][j] = left + 1;
      run(cell + 1, stop, visit);
    } else {
      h_[i][j] = (left + up) / 2;
      run(cell + 1, stop, visit);
    }
  }

  void load_row(int i, const std::vector<int>& row) { h_[i] = row; }

 private:
  int m_;
  int n_;
  std::vector<std::vector<int>> h_;
};

PartialHeightFunction to_height(Dims dims, const std::vector<std::vector<int>>& rows) {
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(dims.m + 1) * (dims.n + 1));
  for (const auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
  return PartialHeightFunction(dims, std::move(flat));
}

int sum_from_corner(Dims dims, int h_corner) { return (dims.m + dims.n - h_corner) / 2; }

}  // namespace

void for_each_height(Dims dims, const std::function<void(const PartialHeightFunction&)>& visit) {
  dims = Dims::checked(dims.m, dims.n);
  HeightSearch search(dims);
  search.run(0, search.cells(), [&](const HeightSearch& s) { visit(to_height(dims, s.rows())); });
}

void for_each_pasm(Dims dims, const std::function<void(const Pasm&)>& visit) {
  for_each_height(dims, [&](const PartialHeightFunction& h) { visit(height_to_pasm(h)); });
}

void for_each_pasm_via_ideals(Dims dims, const std::function<void(const Pasm&)>& visit) {
  enumerate_ideals(dims, [&](const OrderIdeal& ideal) { visit(height_to_pasm(ideal_to_height(ideal))); });
}

std::vector<Pasm> enumerate_pasm(Dims dims) {
  std::vector<Pasm> out;
  for_each_pasm(dims, [&](const Pasm& p) { out.push_back(p); });
  return out;
}

std::vector<std::uint64_t> count_by_sum(Dims dims, Execution execution) {
  dims = Dims::checked(dims.m, dims.n);
  const int buckets = dims.min() + 1;
  std::vector<std::uint64_t> totals(buckets, 0);

  if (execution == Execution::kSerial) {
    HeightSearch search(dims);
    search.run(0, search.cells(), [&](const HeightSearch& s) { ++totals[sum_from_corner(dims, s.last())]; });
    return totals;
  }

  std::vector<std::vector<int>> first_rows;
  {
    HeightSearch search(dims);
    search.run(0, dims.n, [&](const HeightSearch& s) { first_rows.push_back(s.rows()[1]); });
  }
  const auto tasks = static_cast<std::int64_t>(first_rows.size());
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(buckets, 0);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t task = 0; task < tasks; ++task) {
      HeightSearch search(dims);
      search.load_row(1, first_rows[task]);
      search.run(dims.n, search.cells(), [&](const HeightSearch& s) { ++local[sum_from_corner(dims, s.last())]; });
    }
#pragma omp critical
    for (int t = 0; t < buckets; ++t) totals[t] += local[t];
  }
  return totals;
}

std::uint64_t count_pasm(Dims dims, Execution execution) {
  std::uint64_t total = 0;
  for (auto c : count_by_sum(dims, execution)) total += c;
  return total;
}

std::vector<BigInt> count_by_sum_transfer(Dims dims) {
  dims = Dims::checked(dims.m, dims.n);
  const auto [m, n] = dims;
  std::map<std::vector<int>, BigInt> layer;
  layer[PartialHeightFunction::ramp(dims).rows()[0]] = 1;
  for (int i = 1; i <= m; ++i) {
    std::map<std::vector<int>, BigInt> next;
    for (const auto& [above, ways] : layer) {
      std::vector<int> row(n + 1);
      row[0] = i;
      std::function<void(int)> extend = [&](int j) {
        if (j > n) {
          next[row] += ways;
          return;
        }
        for (int v : {row[j - 1] - 1, row[j - 1] + 1}) {
          if (v < 0 || (v - above[j] != 1 && above[j] - v != 1)) continue;
          row[j] = v;
          extend(j + 1);
        }
      };
      extend(1);
    }
    layer = std::move(next);
  }
  std::vector<BigInt> out(dims.min() + 1, 0);
  for (const auto& [row, ways] : layer) out[sum_from_corner(dims, row[n])] += ways;
  return out;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt out = 1;
  for (int r = 1; r <= k; ++r) out = out * (n - k + r) / r;
  return out;
}

BigInt sum_one_count(Dims dims) { return binomial(dims.m + dims.n, dims.m) - 1; }

BigInt asm_count(int n) {
  if (n < 1) throw std::invalid_argument("asm_count needs n >= 1");
  auto factorial = [](int k) {
    BigInt f = 1;
    for (int r = 2; r <= k; ++r) f *= r;
    return f;
  };
  BigInt numerator = 1;
  BigInt denominator = 1;
  for (int j = 0; j < n; ++j) {
    numerator *= factorial(3 * j + 1);
    denominator *= factorial(n + j);
  }
  return numerator / denominator;
}

CountTables make_tables(int max_m, int max_n, Execution execution) {
  if (max_m < 1 || max_n < 1) throw std::invalid_argument("table bounds must be at least 1");
  CountTables tables;
  tables.totals.max_m = max_m;
  tables.totals.max_n = max_n;
  tables.totals.cells.assign(max_m, std::vector<std::uint64_t>(max_n, 0));
  for (int m = 1; m <= max_m; ++m) {
    for (int n = 1; n <= max_n; ++n) {
      const auto by_sum = count_by_sum({m, n}, execution);
      std::uint64_t total = 0;
      for (auto c : by_sum) total += c;
      tables.totals.cells[m - 1][n - 1] = total;
      if (m == n) tables.by_sum.push_back(by_sum);
    }
  }
  return tables;
}

}  // namespace pasmkit
