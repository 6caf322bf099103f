#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kwsym/partition.hpp"

namespace kwsym {

/// A bijection of {1..n}. Points and images are 1-based everywhere in the
/// public interface.
class Permutation {
 public:
  /// Throws InvalidArgument unless images is a bijection of {1..size}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(std::size_t n);

  std::size_t degree() const noexcept { return images_.size(); }

  /// pi(point), 1-based.
  int operator()(int point) const noexcept { return images_[static_cast<std::size_t>(point - 1)]; }

  std::span<const int> images() const noexcept { return images_; }

  bool is_identity() const noexcept;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// Right-to-left product: result(i) = pi(sigma(i)).
Permutation compose(const Permutation& pi, const Permutation& sigma);

Permutation inverse(const Permutation& pi);

/// k * pi * k^-1.
Permutation conjugate(const Permutation& pi, const Permutation& k);

bool are_conjugate(const Permutation& pi, const Permutation& sigma);

/// Cycles in canonical form: each starts at its smallest point, ordered by
/// length descending and then by smallest point. Fixed points are included.
struct CycleDecomposition {
  std::size_t degree = 0;
  std::vector<std::vector<int>> cycles;

  bool operator==(const CycleDecomposition&) const = default;
};

CycleDecomposition cycle_decomposition(const Permutation& pi);

/// Rebuilds the permutation. Cycles need not be canonical, and points that
/// appear in no cycle are fixed. Throws InvalidArgument on repeated or
/// out-of-range points.
Permutation from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles);

/// `(3,6,5)(1,4)(2,7)(8)`.
std::string to_string(const CycleDecomposition& cycles);

/// Parses cycle notation such as `(1,3,5)(2)(4)` into an element of S_degree.
/// Omitted points are fixed. Throws InvalidArgument on malformed input.
Permutation parse_cycles(std::string_view text, std::size_t degree);

/// Multiplicities m_k of k-cycles, 1 <= k <= degree.
class CycleType {
 public:
  explicit CycleType(std::size_t degree) : counts_(degree + 1, 0) {}

  std::size_t degree() const noexcept { return counts_.size() - 1; }

  /// m_k; zero for k outside 1..degree.
  std::size_t multiplicity(std::size_t k) const noexcept {
    return k >= 1 && k < counts_.size() ? counts_[k] : 0;
  }

  void add_cycle(std::size_t length) { ++counts_.at(length); }

  bool operator==(const CycleType&) const = default;

 private:
  std::vector<std::size_t> counts_;
};

CycleType cycle_type(const Permutation& pi);

/// Lists k repeated m_k times, largest k first.
Partition type_to_partition(const CycleType& type);

}  // namespace kwsym
