#include "pasmkit/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace pasmkit {

namespace {

std::string cell(int i, int j) {
  std::ostringstream out;
  out << '(' << i << ',' << j << ')';
  return out.str();
}

std::string row_label(int i) { return "row " + std::to_string(i); }
std::string column_label(int j) { return "column " + std::to_string(j); }

// Checks the partial-ASM line rules on one row or column read in order.
// `leading_plus` selects which end must carry the +1.
void check_line(const std::vector<int>& line, bool leading_plus, const std::string& where,
                const std::string& kind, Verdict& verdict) {
  int sum = 0;
  int last = 0;
  int first = 0;
  bool alternates = true;
  for (int value : line) {
    sum += value;
    if (value == 0) continue;
    if (first == 0) first = value;
    if (last != 0 && last == value) alternates = false;
    last = value;
  }
  if (sum != 0 && sum != 1) verdict.add(kind + " sum is not 0 or 1", where);
  if (!alternates) verdict.add("nonzero entries do not alternate in " + kind, where);
  if (leading_plus && first == -1) verdict.add("first nonzero entry in column is not 1", where);
  if (!leading_plus && last == -1) verdict.add("last nonzero entry in row is not 1", where);
}

}  // namespace

void Verdict::add(std::string invariant, std::string where) {
  violations_.push_back({std::move(invariant), std::move(where)});
}

bool Verdict::mentions(std::string_view invariant) const {
  return std::any_of(violations_.begin(), violations_.end(),
                     [&](const Violation& v) { return v.invariant == invariant; });
}

std::string Verdict::to_string() const {
  if (ok()) return "ok";
  std::ostringstream out;
  for (std::size_t k = 0; k < violations_.size(); ++k) {
    if (k) out << "; ";
    out << violations_[k].invariant << " at " << violations_[k].where;
  }
  return out.str();
}

InvariantError::InvariantError(Verdict verdict)
    : std::runtime_error("invariant violated: " + verdict.to_string()), verdict_(std::move(verdict)) {}

void require(const Verdict& verdict) {
  if (!verdict.ok()) throw InvariantError(verdict);
}

Dims Dims::checked(int m, int n) {
  if (m < 1 || n < 1) {
    throw StructuralError("dimensions must be positive, got " + std::to_string(m) + "x" +
                          std::to_string(n));
  }
  return {m, n};
}

// ---------------------------------------------------------------------------

Pasm::Pasm(Dims dims, std::vector<std::int8_t> row_major)
    : dims_(Dims::checked(dims.m, dims.n)), entries_(std::move(row_major)) {
  if (entries_.size() != static_cast<std::size_t>(dims_.m) * dims_.n) {
    throw StructuralError("matrix has " + std::to_string(entries_.size()) + " entries, expected " +
                          std::to_string(dims_.m * dims_.n));
  }
  for (auto value : entries_) {
    if (value < -1 || value > 1) throw StructuralError("matrix entry outside {-1,0,1}");
  }
}

Pasm Pasm::from_rows(const std::vector<std::vector<int>>& rows) {
  if (rows.empty() || rows.front().empty()) throw StructuralError("matrix has no entries");
  const int m = static_cast<int>(rows.size());
  const int n = static_cast<int>(rows.front().size());
  std::vector<std::int8_t> flat;
  flat.reserve(static_cast<std::size_t>(m) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw StructuralError("ragged matrix rows");
    for (int value : row) {
      if (value < -1 || value > 1) throw StructuralError("matrix entry outside {-1,0,1}");
      flat.push_back(static_cast<std::int8_t>(value));
    }
  }
  return Pasm({m, n}, std::move(flat));
}

Pasm Pasm::zero(Dims dims) {
  return Pasm(dims, std::vector<std::int8_t>(static_cast<std::size_t>(dims.m) * dims.n, 0));
}

std::size_t Pasm::index(int i, int j) const {
  if (i < 1 || i > dims_.m || j < 1 || j > dims_.n) {
    throw std::out_of_range("matrix index " + cell(i, j) + " out of range");
  }
  return static_cast<std::size_t>(i - 1) * dims_.n + (j - 1);
}

std::vector<std::vector<int>> Pasm::rows() const {
  std::vector<std::vector<int>> out(dims_.m, std::vector<int>(dims_.n));
  for (int i = 1; i <= dims_.m; ++i)
    for (int j = 1; j <= dims_.n; ++j) out[i - 1][j - 1] = at(i, j);
  return out;
}

PartialMonotoneTriangle::PartialMonotoneTriangle(Dims dims, std::vector<std::vector<int>> rows)
    : dims_(Dims::checked(dims.m, dims.n)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != dims_.m) {
    throw StructuralError("triangle has " + std::to_string(rows_.size()) + " rows, expected " +
                          std::to_string(dims_.m));
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].size() != i + 1) {
      throw StructuralError("triangle row " + std::to_string(i + 1) + " has wrong length");
    }
  }
}

BorderedMatrix::BorderedMatrix(Dims dims, std::vector<int> row_major)
    : dims_(Dims::checked(dims.m, dims.n)), values_(std::move(row_major)) {
  if (values_.size() != static_cast<std::size_t>(dims_.m + 1) * (dims_.n + 1)) {
    throw StructuralError("bordered matrix has " + std::to_string(values_.size()) +
                          " entries, expected " + std::to_string((dims_.m + 1) * (dims_.n + 1)));
  }
}

BorderedMatrix::BorderedMatrix(Dims dims, const std::vector<std::vector<int>>& rows)
    : dims_(Dims::checked(dims.m, dims.n)) {
  if (static_cast<int>(rows.size()) != dims_.m + 1) {
    throw StructuralError("bordered matrix needs m+1 rows");
  }
  values_.reserve(static_cast<std::size_t>(dims_.m + 1) * (dims_.n + 1));
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != dims_.n + 1) {
      throw StructuralError("bordered matrix needs n+1 columns");
    }
    values_.insert(values_.end(), row.begin(), row.end());
  }
}

std::size_t BorderedMatrix::index(int i, int j) const {
  if (i < 0 || i > dims_.m || j < 0 || j > dims_.n) {
    throw std::out_of_range("bordered index " + cell(i, j) + " out of range");
  }
  return static_cast<std::size_t>(i) * (dims_.n + 1) + j;
}

std::vector<std::vector<int>> BorderedMatrix::rows() const {
  std::vector<std::vector<int>> out(dims_.m + 1, std::vector<int>(dims_.n + 1));
  for (int i = 0; i <= dims_.m; ++i)
    for (int j = 0; j <= dims_.n; ++j) out[i][j] = at(i, j);
  return out;
}

PartialHeightFunction PartialHeightFunction::ramp(Dims dims) {
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(dims.m + 1) * (dims.n + 1));
  for (int i = 0; i <= dims.m; ++i)
    for (int j = 0; j <= dims.n; ++j) values.push_back(i + j);
  return PartialHeightFunction(dims, std::move(values));
}

// ---------------------------------------------------------------------------

Verdict validate(const Pasm& matrix) {
  Verdict verdict;
  const auto [m, n] = matrix.dims();
  for (int i = 1; i <= m; ++i) {
    std::vector<int> line;
    for (int j = 1; j <= n; ++j) line.push_back(matrix.at(i, j));
    check_line(line, false, row_label(i), "row", verdict);
  }
  for (int j = 1; j <= n; ++j) {
    std::vector<int> line;
    for (int i = 1; i <= m; ++i) line.push_back(matrix.at(i, j));
    check_line(line, true, column_label(j), "column", verdict);
  }
  return verdict;
}

Verdict validate(const PartialMonotoneTriangle& triangle) {
  Verdict verdict;
  const auto [m, n] = triangle.dims();
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= i; ++j) {
      const int a = triangle.at(i, j);
      if (a < 0 || a > n) verdict.add("entry outside 0..n", cell(i, j));
      if (j < i) {
        const int b = triangle.at(i, j + 1);
        if (a > b) verdict.add("row not weakly increasing", cell(i, j));
        if (a != 0 && a >= b) verdict.add("nonzero row entries not strictly increasing", cell(i, j));
      }
      if (j < i && a > triangle.at(i - 1, j)) {
        verdict.add("diagonal a(i,j) <= a(i-1,j) fails", cell(i, j));
      }
      if (i < m && a > triangle.at(i + 1, j + 1)) {
        verdict.add("diagonal a(i,j) <= a(i+1,j+1) fails", cell(i, j));
      }
    }
  }
  return verdict;
}

Verdict validate(const CornerSumMatrix& c) {
  Verdict verdict;
  const auto [m, n] = c.dims();
  for (int j = 0; j <= n; ++j)
    if (c.at(0, j) != 0) verdict.add("first row not zero", cell(0, j));
  for (int i = 0; i <= m; ++i)
    if (c.at(i, n) != 0) verdict.add("last column not zero", cell(i, n));
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (c.at(i, j) < 0) verdict.add("negative entry", cell(i, j));
      if (i < m) {
        const int step = c.at(i + 1, j) - c.at(i, j);
        if (step != 0 && step != 1) verdict.add("downward step not in {0,1}", cell(i, j));
      }
      if (j > 0) {
        const int step = c.at(i, j - 1) - c.at(i, j);
        if (step != 0 && step != 1) verdict.add("leftward step not in {0,1}", cell(i, j));
      }
    }
  }
  return verdict;
}

Verdict validate(const PartialHeightFunction& h) {
  Verdict verdict;
  const auto [m, n] = h.dims();
  for (int k = 0; k <= n; ++k)
    if (h.at(0, k) != k) verdict.add("first row is not 0..n", cell(0, k));
  for (int l = 0; l <= m; ++l)
    if (h.at(l, 0) != l) verdict.add("first column is not 0..m", cell(l, 0));
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (h.at(i, j) < 0) verdict.add("negative entry", cell(i, j));
      if (j < n && std::abs(h.at(i, j + 1) - h.at(i, j)) != 1) {
        verdict.add("row-adjacent entries do not differ by 1", cell(i, j));
      }
      if (i < m && std::abs(h.at(i + 1, j) - h.at(i, j)) != 1) {
        verdict.add("column-adjacent entries do not differ by 1", cell(i, j));
      }
    }
  }
  return verdict;
}

int total_sum(const Pasm& matrix) {
  int sum = 0;
  for (auto value : matrix.entries()) sum += value;
  return sum;
}

Pasm transpose_map(const Pasm& matrix) {
  const auto [m, n] = matrix.dims();
  std::vector<std::int8_t> out(static_cast<std::size_t>(n) * m);
  // out(r, c) = M(m + 1 - c, n + 1 - r)
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= m; ++c)
      out[static_cast<std::size_t>(r - 1) * m + (c - 1)] =
          static_cast<std::int8_t>(matrix.at(m + 1 - c, n + 1 - r));
  return Pasm({n, m}, std::move(out));
}

}  // namespace pasmkit
