#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace kwsym {

class ScoreMatrix;

/// Forced and forbidden (keyword, term) pairs restricting the assignment
/// space. Keywords and terms are 1-based.
class AssignmentConstraints {
 public:
  AssignmentConstraints(int n_keywords, int vocab_size);

  void force(int keyword, int term) { forced_[static_cast<std::size_t>(keyword - 1)] = term; }
  void forbid(int keyword, int term) { forbidden_[slot(keyword, term)] = 1; }

  /// Term forced for keyword, or 0 when the keyword is free.
  int forced(int keyword) const { return forced_[static_cast<std::size_t>(keyword - 1)]; }
  bool forbidden(int keyword, int term) const { return forbidden_[slot(keyword, term)] != 0; }

  int n_keywords() const noexcept { return static_cast<int>(forced_.size()); }
  int vocab_size() const noexcept { return vocab_size_; }

 private:
  std::size_t slot(int keyword, int term) const {
    return static_cast<std::size_t>((keyword - 1) * vocab_size_ + (term - 1));
  }

  int vocab_size_;
  std::vector<int> forced_;
  std::vector<std::uint8_t> forbidden_;
};

/// Hungarian algorithm: assigns each of `keywords` to a distinct term from
/// `terms` maximizing total weight, skipping forbidden pairs. Returns the
/// term chosen for each keyword (parallel to `keywords`), or nullopt when no
/// assignment avoids the forbidden pairs. Requires |keywords| <= |terms|.
std::optional<std::vector<int>> max_weight_assignment(const ScoreMatrix& weights,
                                                      std::span<const int> keywords,
                                                      std::span<const int> terms,
                                                      const AssignmentConstraints& constraints);

/// Best full target tuple honoring the constraints: maximum score, and among
/// (near-)optimal tuples the lexicographically smallest. nullopt when the
/// constraints admit no injection.
std::optional<std::vector<int>> best_completion(const ScoreMatrix& weights,
                                                const AssignmentConstraints& constraints);

}  // namespace kwsym
