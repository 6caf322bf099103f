#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kwsym/integer.hpp"
#include "kwsym/partition.hpp"
#include "kwsym/permutation.hpp"

namespace kwsym {

/// Ordered keywords k_1..k_N. Positions matter; duplicate text is allowed.
struct KeywordQuery {
  std::vector<std::string> keywords;

  std::size_t size() const noexcept { return keywords.size(); }
  bool operator==(const KeywordQuery&) const = default;
};

/// An injective assignment of N keywords to vocabulary indices 1..V.
class ConfigurationMap {
 public:
  /// Throws InvalidArgument if a target is out of range, targets repeat, or
  /// there are more targets than vocabulary terms.
  ConfigurationMap(int vocab_size, std::vector<int> targets);

  int n_keywords() const noexcept { return static_cast<int>(targets_.size()); }
  int vocab_size() const noexcept { return vocab_size_; }

  /// targets()[i] is the 1-based term assigned to keyword i+1.
  std::span<const int> targets() const noexcept { return targets_; }

  bool operator==(const ConfigurationMap&) const = default;

 private:
  int vocab_size_;
  std::vector<int> targets_;
};

/// `N=5 V=8 map=4,7,6,1,3`.
std::string to_string(const ConfigurationMap& config);

/// Inverse of to_string. Throws InvalidArgument.
ConfigurationMap parse_configuration(std::string_view text);

/// Targets as `4,7,6,1,3` (empty string for N = 0).
std::string join_targets(std::span<const int> targets);

/// Parses `4,7,6,1,3`; an empty string yields no targets.
std::vector<int> parse_targets(std::string_view text);

/// A configuration seen as an element of S_V whose every cycle holds at most
/// one point greater than N.
class ExtendedConfiguration {
 public:
  /// Throws InvalidArgument if pi violates the one-large-point-per-cycle rule.
  ExtendedConfiguration(Permutation pi, int n_keywords);

  const Permutation& permutation() const noexcept { return permutation_; }
  int n_keywords() const noexcept { return n_keywords_; }

  bool operator==(const ExtendedConfiguration&) const = default;

 private:
  Permutation permutation_;
  int n_keywords_;
};

/// V! / (V-N)!. Throws InvalidArgument when N > V or either is negative.
BigInt count_configurations(int n_keywords, int vocab_size);

/// Extends the keyword assignment to a permutation of {1..V}: keyword i
/// goes to its target; each chain that starts at an unmatched keyword
/// position and leaves {1..N} is closed back onto its start; all other large
/// points are fixed. Throws InvalidArgument when V = 0.
ExtendedConfiguration extend(const ConfigurationMap& config);

/// Keeps only the images of 1..N.
ConfigurationMap restrict_to_keywords(const ExtendedConfiguration& ext);

/// True iff every cycle of pi contains at most one point > n_keywords.
bool is_valid_configuration(const Permutation& pi, int n_keywords);

/// Walks injections {1..N} -> {1..V} in lexicographic order of the target
/// tuple. Single consumer.
class ConfigurationCursor {
 public:
  ConfigurationCursor(int n_keywords, int vocab_size);

  /// Positions the cursor on the rank-th injection (0-based, lexicographic).
  ConfigurationCursor(int n_keywords, int vocab_size, std::uint64_t rank);

  /// Current targets; valid until the next advance().
  std::span<const int> targets() const noexcept { return targets_; }
  ConfigurationMap current() const { return ConfigurationMap(vocab_size_, targets_); }

  bool done() const noexcept { return done_; }

  /// Steps to the next injection; returns false once exhausted.
  bool advance();

 private:
  int n_keywords_;
  int vocab_size_;
  std::vector<int> targets_;
  std::vector<bool> used_;
  bool done_ = false;
};

/// Throws CapExceeded if V!/(V-N)! > cap, before any enumeration work.
std::uint64_t checked_configuration_count(int n_keywords, int vocab_size, std::uint64_t cap);

/// Returns a cursor over all configurations after checking the cap.
ConfigurationCursor enumerate_configurations(int n_keywords, int vocab_size,
                                             std::uint64_t cap = kDefaultEnumerationCap);

/// Calls visit on every configuration in enumeration order.
void for_each_configuration(int n_keywords, int vocab_size,
                            const std::function<void(const ConfigurationMap&)>& visit,
                            std::uint64_t cap = kDefaultEnumerationCap);

/// Class tally, keyed in descending lexicographic order.
using Census = std::map<Partition, std::uint64_t, std::greater<>>;

/// Extends every configuration and tallies the cycle-type partition. The
/// enumeration space is split across OpenMP threads by rank; the tally does
/// not depend on the schedule.
Census class_census(int n_keywords, int vocab_size, std::uint64_t cap = kDefaultEnumerationCap);

/// Single-threaded reference for class_census.
Census class_census_serial(int n_keywords, int vocab_size,
                           std::uint64_t cap = kDefaultEnumerationCap);

/// Cycle-type partition of extend(config).
Partition configuration_class(const ConfigurationMap& config);

}  // namespace kwsym
