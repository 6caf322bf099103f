#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kwsym/integer.hpp"
#include "kwsym/partition.hpp"
#include "kwsym/permutation.hpp"

namespace kwsym {

/// A bijective filling of the Ferrers diagram of `shape` with 1..n.
class Tableau {
 public:
  /// Throws InvalidArgument unless row lengths match the shape and the
  /// entries are exactly 1..n.
  Tableau(Partition shape, std::vector<std::vector<int>> rows);

  const Partition& shape() const noexcept { return shape_; }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }

  /// Entry t_{i,j}, 1-based row and column.
  int at(std::size_t row, std::size_t column) const { return rows_.at(row - 1).at(column - 1); }

  bool operator==(const Tableau&) const = default;

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

/// Row-equivalence class of a tableau. Rows are stored ascending.
class Tabloid {
 public:
  /// Sorts each row. Same validation as Tableau.
  Tabloid(Partition shape, std::vector<std::vector<int>> rows);

  const Partition& shape() const noexcept { return shape_; }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }

  bool operator==(const Tabloid&) const = default;

  // Row-by-row lexicographic; for a fixed shape this equals the order of the
  // concatenated rows, which is the basis order of the permutation module.
  auto operator<=>(const Tabloid& other) const { return rows_ <=> other.rows_; }

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

/// `1,2,3/4,5`.
std::string to_string(const Tabloid& tabloid);

/// n!.
BigInt tableau_count(const Partition& shape);

/// Throws InvalidArgument on shape mismatch.
bool row_equivalent(const Tableau& t1, const Tableau& t2);

Tabloid tabloid_of(const Tableau& t);

/// n! / (lambda_1! lambda_2! ... lambda_l!).
BigInt tabloid_count(const Partition& shape);

/// Same number; the dimension of the permutation module on this shape.
BigInt module_dimension(const Partition& shape);

/// Every tabloid of the shape in lexicographic order of the concatenated
/// rows. Throws CapExceeded when the count exceeds cap.
std::vector<Tabloid> enumerate_tabloids(const Partition& shape,
                                        std::uint64_t cap = kDefaultEnumerationCap);

/// Position of a tabloid in enumerate_tabloids(shape), 0-based, computed
/// without enumerating.
std::uint64_t tabloid_rank(const Tabloid& tabloid);

/// Entrywise relabelling pi t = (pi(t_{i,j})). Throws InvalidArgument on
/// degree mismatch.
Tableau act_on_tableau(const Permutation& pi, const Tableau& t);

Tabloid act_on_tabloid(const Permutation& pi, const Tabloid& tabloid);

/// Dense d x d 0/1 matrix.
class RepresentationMatrix {
 public:
  explicit RepresentationMatrix(std::size_t dimension)
      : dimension_(dimension), entries_(dimension * dimension, 0) {}

  std::size_t dimension() const noexcept { return dimension_; }

  /// 0-based (row, column).
  std::uint8_t at(std::size_t row, std::size_t column) const {
    return entries_[row * dimension_ + column];
  }
  void set(std::size_t row, std::size_t column, std::uint8_t value) {
    entries_[row * dimension_ + column] = value;
  }

  /// Exactly one 1 in every row and every column, zeros elsewhere.
  bool is_permutation_matrix() const;

  bool operator==(const RepresentationMatrix&) const = default;

 private:
  std::size_t dimension_;
  std::vector<std::uint8_t> entries_;
};

/// Integer matrix product. Throws InvalidArgument on dimension mismatch or
/// when an entry leaves {0, 1}.
RepresentationMatrix operator*(const RepresentationMatrix& a, const RepresentationMatrix& b);

/// d lines of space-separated 0/1 entries.
std::string to_string(const RepresentationMatrix& matrix);

/// Matrix of pi acting on the tabloid basis of `shape` (enumerate_tabloids
/// order). Column c holds the image of basis element c: entry (r, c) is 1 iff
/// pi {t_c} = {t_r}. Throws CapExceeded when d*d exceeds cap.
RepresentationMatrix representation_matrix(const Permutation& pi, const Partition& shape,
                                           std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace kwsym
