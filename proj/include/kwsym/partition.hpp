#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kwsym/integer.hpp"

namespace kwsym {

/// A weakly decreasing sequence of positive integers. Names both a conjugacy
/// class of S_n (through cycle types) and the shape of a Young tableau.
class Partition {
 public:
  /// The empty partition of 0.
  Partition() = default;

  /// Throws InvalidArgument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  int n() const noexcept { return n_; }

  /// Part i (0-based); zero past the end, as the orderings require.
  int part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  bool operator==(const Partition&) const = default;

  // Lexicographic on the parts; for equal n this is the total order on
  // partitions. Lets Partition key ordered containers.
  std::strong_ordering operator<=>(const Partition& other) const {
    return parts_ <=> other.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// `(4,1,1,1,1)`; the empty partition prints as `()`.
std::string to_string(const Partition& lambda);

/// Accepts `(3,2)`, `3,2` and tolerates spaces. Throws InvalidArgument.
Partition parse_partition(std::string_view text);

/// Every partition of n exactly once, in descending lexicographic order.
/// n = 0 yields the single empty partition.
std::vector<Partition> partitions_of(int n);

/// Size of the conjugacy class of S_n whose cycle type is lambda:
/// n! / prod_k (k^{m_k} m_k!).
BigInt class_size(const Partition& lambda);

enum class Dominance { dominates, dominated_by, equal, incomparable };

std::string_view to_string(Dominance relation);

/// Prefix-sum comparison; missing parts count as zero. Throws
/// InvalidArgument when |lambda| != |mu|.
Dominance dominance_compare(const Partition& lambda, const Partition& mu);

/// First differing part decides. Throws InvalidArgument when |lambda| != |mu|.
std::strong_ordering lex_compare(const Partition& lambda, const Partition& mu);

/// Cycle types a configuration of n_keywords keywords over a vocabulary of
/// vocab_size terms can have: partitions of vocab_size with every part at
/// most n_keywords + 1 and at least vocab_size - n_keywords parts.
/// Descending lexicographic order. Throws InvalidArgument if N > V or N < 0.
std::vector<Partition> admissible_partitions(int n_keywords, int vocab_size);

/// The filter behind admissible_partitions, for a single partition.
bool is_admissible(const Partition& lambda, int n_keywords, int vocab_size);

}  // namespace kwsym
