#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kwsym/configuration.hpp"
#include "kwsym/partition.hpp"
#include "kwsym/schema.hpp"

namespace kwsym {

/// Keyword-to-term affinities: N rows, V columns, entries in [0, 1].
class ScoreMatrix {
 public:
  /// weights is row-major N x V. Throws InvalidArgument on a size mismatch,
  /// N > V, or an entry that is not a finite number in [0, 1].
  ScoreMatrix(int n_keywords, int vocab_size, std::vector<double> weights);

  int n_keywords() const noexcept { return n_keywords_; }
  int vocab_size() const noexcept { return vocab_size_; }

  /// Weight of keyword -> term, both 1-based.
  double at(int keyword, int term) const {
    return weights_[static_cast<std::size_t>((keyword - 1) * vocab_size_ + (term - 1))];
  }

  std::span<const double> weights() const noexcept { return weights_; }

 private:
  int n_keywords_;
  int vocab_size_;
  std::vector<double> weights_;
};

/// Must be safe to call concurrently; score_matrix evaluates entries in
/// parallel.
using Scorer = std::function<double(std::string_view keyword, std::string_view term)>;

/// Unit-cost Levenshtein distance.
std::size_t edit_distance(std::string_view a, std::string_view b);

/// 1 - edit_distance / max(|a|, |b|) after ASCII lowercasing; 1 for two
/// empty strings.
double edit_similarity(std::string_view keyword, std::string_view term);

/// Scores every (keyword, term) pair in parallel.
ScoreMatrix score_matrix(const KeywordQuery& query, const Vocabulary& vocabulary,
                         const Scorer& scorer = edit_similarity);

/// Single-threaded reference for score_matrix.
ScoreMatrix score_matrix_serial(const KeywordQuery& query, const Vocabulary& vocabulary,
                                const Scorer& scorer = edit_similarity);

/// Sum of weights[i][j_i] accumulated in keyword order.
double configuration_score(const ScoreMatrix& weights, std::span<const int> targets);

struct RankedConfiguration {
  ConfigurationMap config;
  double score = 0.0;
  Partition cycle_class;  // cycle type of extend(config)

  bool operator==(const RankedConfiguration&) const = default;
};

/// Scores closer than this are treated as tied when the assignment solver
/// picks the lexicographically smallest optimal target tuple.
inline constexpr double kScoreTieTolerance = 1e-12;

/// Maximum-weight injective assignment (Hungarian algorithm on the
/// rectangular N x V matrix). Among optimal assignments the
/// lexicographically smallest target tuple wins.
RankedConfiguration best_configuration(const ScoreMatrix& weights);

/// The k best configurations by score descending, then target tuple
/// ascending, via Murty's partitioning of the assignment space. Returns
/// fewer when fewer than k configurations exist. Throws InvalidArgument when
/// k == 0.
std::vector<RankedConfiguration> top_k_configurations(const ScoreMatrix& weights, std::size_t k);

struct ClassGroup {
  Partition cycle_class;
  std::vector<RankedConfiguration> members;  // in the input's order
  // Dominance of this class over the next group's class; empty for the last.
  std::optional<Dominance> relation_to_next;
};

/// Groups by cycle class, groups in descending lexicographic order of their
/// partitions. Throws InvalidArgument when results mix (N, V).
std::vector<ClassGroup> rank_by_class(std::span<const RankedConfiguration> results);

/// `<rank>\t<score, 6 decimals>\t<targets>\t<partition>`.
std::string format_ranked(std::size_t rank, const RankedConfiguration& result);

}  // namespace kwsym
