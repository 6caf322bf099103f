#include "kwsym/matcher.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <queue>

#include "kwsym/assignment.hpp"
#include "kwsym/error.hpp"

namespace kwsym {

ScoreMatrix::ScoreMatrix(int n_keywords, int vocab_size, std::vector<double> weights)
    : n_keywords_(n_keywords), vocab_size_(vocab_size), weights_(std::move(weights)) {
  if (n_keywords_ < 0 || vocab_size_ < 0) throw InvalidArgument("N and V must be nonnegative");
  if (n_keywords_ > vocab_size_) {
    throw InvalidArgument(std::to_string(n_keywords_) + " keywords cannot map injectively into " +
                          std::to_string(vocab_size_) + " terms");
  }
  if (weights_.size() != static_cast<std::size_t>(n_keywords_) * static_cast<std::size_t>(vocab_size_)) {
    throw InvalidArgument("score matrix needs N*V weights");
  }
  for (double w : weights_) {
    if (!std::isfinite(w) || w < 0.0 || w > 1.0) {
      throw InvalidArgument("score " + std::to_string(w) + " is not a finite number in [0, 1]");
    }
  }
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> previous(b.size() + 1), current(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) previous[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    current[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t substitution = previous[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      current[j] = std::min({previous[j] + 1, current[j - 1] + 1, substitution});
    }
    std::swap(previous, current);
  }
  return previous[b.size()];
}

double edit_similarity(std::string_view keyword, std::string_view term) {
  const auto longest = std::max(keyword.size(), term.size());
  if (longest == 0) return 1.0;
  auto lower = [](std::string_view text) {
    std::string out(text);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
  };
  const auto distance = edit_distance(lower(keyword), lower(term));
  return 1.0 - static_cast<double>(distance) / static_cast<double>(longest);
}

ScoreMatrix score_matrix(const KeywordQuery& query, const Vocabulary& vocabulary,
                         const Scorer& scorer) {
  const auto n = static_cast<int>(query.size());
  const auto v = static_cast<int>(vocabulary.size());
  std::vector<double> weights(static_cast<std::size_t>(n) * static_cast<std::size_t>(v));
#pragma omp parallel for collapse(2) schedule(dynamic, 16)
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < v; ++j) {
      weights[static_cast<std::size_t>(i * v + j)] =
          scorer(query.keywords[static_cast<std::size_t>(i)],
                 vocabulary.terms[static_cast<std::size_t>(j)].text);
    }
  }
  return ScoreMatrix(n, v, std::move(weights));
}

ScoreMatrix score_matrix_serial(const KeywordQuery& query, const Vocabulary& vocabulary,
                                const Scorer& scorer) {
  std::vector<double> weights;
  weights.reserve(query.size() * vocabulary.size());
  for (const auto& keyword : query.keywords) {
    for (const auto& term : vocabulary.terms) weights.push_back(scorer(keyword, term.text));
  }
  return ScoreMatrix(static_cast<int>(query.size()), static_cast<int>(vocabulary.size()),
                     std::move(weights));
}

double configuration_score(const ScoreMatrix& weights, std::span<const int> targets) {
  double score = 0.0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    score += weights.at(static_cast<int>(i + 1), targets[i]);
  }
  return score;
}

namespace {

RankedConfiguration make_ranked(const ScoreMatrix& weights, std::vector<int> targets) {
  const double score = configuration_score(weights, targets);
  ConfigurationMap config(weights.vocab_size(), std::move(targets));
  auto cycle_class = configuration_class(config);
  return RankedConfiguration{std::move(config), score, std::move(cycle_class)};
}

// One cell of Murty's partition: the constraints carving out a subspace and
// that subspace's best tuple.
struct Cell {
  AssignmentConstraints constraints;
  std::vector<int> targets;
  double score;
};

// Heap order: the top is the highest score, ties to the smaller tuple.
struct CellAfter {
  bool operator()(const Cell& a, const Cell& b) const {
    if (a.score != b.score) return a.score < b.score;
    return a.targets > b.targets;
  }
};

}  // namespace

RankedConfiguration best_configuration(const ScoreMatrix& weights) {
  const AssignmentConstraints open(weights.n_keywords(), weights.vocab_size());
  auto targets = best_completion(weights, open);
  // An unconstrained problem with N <= V always has a solution.
  if (!targets) throw Error("assignment solver found no configuration");
  return make_ranked(weights, std::move(*targets));
}

std::vector<RankedConfiguration> top_k_configurations(const ScoreMatrix& weights, std::size_t k) {
  if (k == 0) throw InvalidArgument("k must be at least 1");
  std::vector<RankedConfiguration> results;
  std::priority_queue<Cell, std::vector<Cell>, CellAfter> frontier;

  AssignmentConstraints open(weights.n_keywords(), weights.vocab_size());
  if (auto targets = best_completion(weights, open)) {
    const double score = configuration_score(weights, *targets);
    frontier.push(Cell{std::move(open), std::move(*targets), score});
  }

  while (!frontier.empty() && results.size() < k) {
    Cell cell = frontier.top();
    frontier.pop();

    // Children partition the cell minus its best tuple: child t keeps the
    // earlier free keywords on their current terms and bans keyword t's term.
    AssignmentConstraints prefix = cell.constraints;
    for (int keyword = 1; keyword <= weights.n_keywords(); ++keyword) {
      if (cell.constraints.forced(keyword) != 0) continue;
      const int term = cell.targets[static_cast<std::size_t>(keyword - 1)];
      AssignmentConstraints child = prefix;
      child.forbid(keyword, term);
      if (auto targets = best_completion(weights, child)) {
        const double score = configuration_score(weights, *targets);
        frontier.push(Cell{std::move(child), std::move(*targets), score});
      }
      prefix.force(keyword, term);
    }
    results.push_back(make_ranked(weights, std::move(cell.targets)));
  }
  return results;
}

std::vector<ClassGroup> rank_by_class(std::span<const RankedConfiguration> results) {
  std::vector<ClassGroup> groups;
  if (results.empty()) return groups;
  const int n = results.front().config.n_keywords();
  const int v = results.front().config.vocab_size();
  std::map<Partition, std::vector<RankedConfiguration>, std::greater<>> by_class;
  for (const auto& result : results) {
    if (result.config.n_keywords() != n || result.config.vocab_size() != v) {
      throw InvalidArgument("cannot rank configurations with different (N, V) together");
    }
    by_class[result.cycle_class].push_back(result);
  }
  for (auto& [cycle_class, members] : by_class) {
    groups.push_back(ClassGroup{cycle_class, std::move(members), std::nullopt});
  }
  for (std::size_t i = 0; i + 1 < groups.size(); ++i) {
    groups[i].relation_to_next = dominance_compare(groups[i].cycle_class, groups[i + 1].cycle_class);
  }
  return groups;
}

std::string format_ranked(std::size_t rank, const RankedConfiguration& result) {
  char score[64];
  std::snprintf(score, sizeof score, "%.6f", result.score);
  return std::to_string(rank) + '\t' + score + '\t' + join_targets(result.config.targets()) +
         '\t' + to_string(result.cycle_class);
}

}  // namespace kwsym
