#pragma once

// Matrix-shaped object families: partial alternating sign matrices, partial
// monotone triangles, corner-sum matrices and partial height functions.

#include <compare>
#include <cstdint>
#include <span>
#include <string_view>
#include <stdexcept>
#include <string>
#include <vector>

namespace pasmkit {

/// Raised when an object is built from data whose shape does not match its
/// declared dimensions. Distinct from invariant violations, which are
/// reported through Verdict.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Violation {
  std::string invariant;
  std::string where;

  auto operator<=>(const Violation&) const = default;
};

/// Outcome of validating an object against the invariants of its family.
class Verdict {
 public:
  [[nodiscard]] bool ok() const noexcept { return violations_.empty(); }
  [[nodiscard]] const std::vector<Violation>& violations() const noexcept { return violations_; }

  void add(std::string invariant, std::string where);
  [[nodiscard]] bool mentions(std::string_view invariant) const;
  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<Violation> violations_;
};

/// Raised by operations that require valid input and were handed an object
/// whose verdict is not ok.
class InvariantError : public std::runtime_error {
 public:
  explicit InvariantError(Verdict verdict);
  [[nodiscard]] const Verdict& verdict() const noexcept { return verdict_; }

 private:
  Verdict verdict_;
};

void require(const Verdict& verdict);

struct Dims {
  int m = 1;
  int n = 1;

  /// Throws StructuralError unless m, n >= 1.
  static Dims checked(int m, int n);

  [[nodiscard]] Dims transposed() const noexcept { return {n, m}; }
  [[nodiscard]] int min() const noexcept { return m < n ? m : n; }
  [[nodiscard]] int max() const noexcept { return m < n ? n : m; }

  auto operator<=>(const Dims&) const = default;
};

/// m x n matrix over {-1, 0, 1}. Entries are addressed 1-based: at(1, 1) is
/// the top-left entry.
class Pasm {
 public:
  Pasm(Dims dims, std::vector<std::int8_t> row_major);

  static Pasm from_rows(const std::vector<std::vector<int>>& rows);
  static Pasm zero(Dims dims);

  [[nodiscard]] Dims dims() const noexcept { return dims_; }
  [[nodiscard]] int at(int i, int j) const { return entries_[index(i, j)]; }
  [[nodiscard]] std::span<const std::int8_t> entries() const noexcept { return entries_; }
  [[nodiscard]] std::vector<std::vector<int>> rows() const;

  auto operator<=>(const Pasm&) const = default;

 private:
  [[nodiscard]] std::size_t index(int i, int j) const;

  Dims dims_;
  std::vector<std::int8_t> entries_;
};

/// Triangular array a(i, j), 1 <= j <= i <= m, with entries in {0..n}.
class PartialMonotoneTriangle {
 public:
  PartialMonotoneTriangle(Dims dims, std::vector<std::vector<int>> rows);

  [[nodiscard]] Dims dims() const noexcept { return dims_; }
  [[nodiscard]] int at(int i, int j) const { return rows_.at(i - 1).at(j - 1); }
  [[nodiscard]] const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }

  auto operator<=>(const PartialMonotoneTriangle&) const = default;

 private:
  Dims dims_;
  std::vector<std::vector<int>> rows_;
};

/// Common storage for the (m+1) x (n+1) integer matrices indexed from 0.
class BorderedMatrix {
 public:
  BorderedMatrix(Dims dims, std::vector<int> row_major);
  BorderedMatrix(Dims dims, const std::vector<std::vector<int>>& rows);

  [[nodiscard]] Dims dims() const noexcept { return dims_; }
  [[nodiscard]] int at(int i, int j) const { return values_[index(i, j)]; }
  [[nodiscard]] std::span<const int> values() const noexcept { return values_; }
  [[nodiscard]] std::vector<std::vector<int>> rows() const;

  auto operator<=>(const BorderedMatrix&) const = default;

 protected:
  [[nodiscard]] std::size_t index(int i, int j) const;

  Dims dims_;
  std::vector<int> values_;
};

/// c(i, j) = sum of M(i', j') over i' <= i, j' > j.
class CornerSumMatrix : public BorderedMatrix {
 public:
  using BorderedMatrix::BorderedMatrix;
  auto operator<=>(const CornerSumMatrix&) const = default;
};

class PartialHeightFunction : public BorderedMatrix {
 public:
  using BorderedMatrix::BorderedMatrix;

  /// The height function of the zero matrix, h(i, j) = i + j.
  static PartialHeightFunction ramp(Dims dims);

  auto operator<=>(const PartialHeightFunction&) const = default;
};

[[nodiscard]] Verdict validate(const Pasm& matrix);
[[nodiscard]] Verdict validate(const PartialMonotoneTriangle& triangle);
[[nodiscard]] Verdict validate(const CornerSumMatrix& corner_sum);
[[nodiscard]] Verdict validate(const PartialHeightFunction& height);

/// Sum of all entries.
[[nodiscard]] int total_sum(const Pasm& matrix);

/// Row i, reversed, becomes column m - i + 1 of an n x m matrix.
[[nodiscard]] Pasm transpose_map(const Pasm& matrix);

}  // namespace pasmkit
