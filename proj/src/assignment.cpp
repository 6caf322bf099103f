#include "kwsym/assignment.hpp"

#include <limits>

#include "kwsym/matcher.hpp"

namespace kwsym {

AssignmentConstraints::AssignmentConstraints(int n_keywords, int vocab_size)
    : vocab_size_(vocab_size),
      forced_(static_cast<std::size_t>(n_keywords), 0),
      forbidden_(static_cast<std::size_t>(n_keywords) * static_cast<std::size_t>(vocab_size), 0) {}

std::optional<std::vector<int>> max_weight_assignment(const ScoreMatrix& weights,
                                                      std::span<const int> keywords,
                                                      std::span<const int> terms,
                                                      const AssignmentConstraints& constraints) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const auto n = keywords.size();
  const auto m = terms.size();
  if (n == 0) return std::vector<int>{};
  if (n > m) return std::nullopt;

  // Minimizes cost = -weight with 1-based potentials; column 0 is the
  // virtual column that seeds each augmenting search.
  auto cost = [&](std::size_t row, std::size_t column) {
    const int keyword = keywords[row - 1];
    const int term = terms[column - 1];
    return constraints.forbidden(keyword, term) ? kInf : -weights.at(keyword, term);
  };
  std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
  std::vector<std::size_t> match(m + 1, 0), way(m + 1, 0);
  for (std::size_t row = 1; row <= n; ++row) {
    match[0] = row;
    std::size_t j0 = 0;
    std::vector<double> min_slack(m + 1, kInf);
    std::vector<bool> used(m + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = match[j0];
      double delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const double slack = cost(i0, j) - u[i0] - v[j];
        if (slack < min_slack[j]) {
          min_slack[j] = slack;
          way[j] = j0;
        }
        if (min_slack[j] < delta) {
          delta = min_slack[j];
          j1 = j;
        }
      }
      // No augmenting path: this row cannot be matched alongside the others.
      if (j1 == 0) return std::nullopt;
      for (std::size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          min_slack[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<int> chosen(n, 0);
  for (std::size_t j = 1; j <= m; ++j) {
    if (match[j] != 0) chosen[match[j] - 1] = terms[j - 1];
  }
  return chosen;
}

namespace {

struct Split {
  std::vector<int> targets;    // forced terms, 0 for free keywords
  std::vector<int> free_rows;  // free keywords, ascending
  std::vector<bool> taken;     // terms used by forced keywords
};

Split split_constraints(const AssignmentConstraints& constraints) {
  Split split;
  split.targets.assign(static_cast<std::size_t>(constraints.n_keywords()), 0);
  split.taken.assign(static_cast<std::size_t>(constraints.vocab_size()) + 1, false);
  for (int keyword = 1; keyword <= constraints.n_keywords(); ++keyword) {
    if (const int term = constraints.forced(keyword); term != 0) {
      split.targets[static_cast<std::size_t>(keyword - 1)] = term;
      split.taken[static_cast<std::size_t>(term)] = true;
    } else {
      split.free_rows.push_back(keyword);
    }
  }
  return split;
}

std::vector<int> open_terms(const std::vector<bool>& taken) {
  std::vector<int> terms;
  for (std::size_t term = 1; term < taken.size(); ++term) {
    if (!taken[term]) terms.push_back(static_cast<int>(term));
  }
  return terms;
}

double partial_score(const ScoreMatrix& weights, std::span<const int> keywords,
                     std::span<const int> terms) {
  double score = 0.0;
  for (std::size_t i = 0; i < keywords.size(); ++i) score += weights.at(keywords[i], terms[i]);
  return score;
}

}  // namespace

std::optional<std::vector<int>> best_completion(const ScoreMatrix& weights,
                                                const AssignmentConstraints& constraints) {
  auto split = split_constraints(constraints);
  for (int keyword = 1; keyword <= constraints.n_keywords(); ++keyword) {
    const int term = constraints.forced(keyword);
    if (term != 0 && constraints.forbidden(keyword, term)) return std::nullopt;
  }
  const auto optimum = max_weight_assignment(weights, split.free_rows,
                                             open_terms(split.taken), constraints);
  if (!optimum) return std::nullopt;
  const double target = partial_score(weights, split.free_rows, *optimum);

  // Fix free keywords one at a time to the smallest term that still admits
  // a completion within tolerance of the optimum.
  double fixed_score = 0.0;
  for (std::size_t r = 0; r < split.free_rows.size(); ++r) {
    const int keyword = split.free_rows[r];
    const std::span<const int> later(split.free_rows.data() + r + 1, split.free_rows.size() - r - 1);
    bool placed = false;
    for (int term = 1; term <= constraints.vocab_size() && !placed; ++term) {
      if (split.taken[static_cast<std::size_t>(term)] || constraints.forbidden(keyword, term)) {
        continue;
      }
      split.taken[static_cast<std::size_t>(term)] = true;
      const auto rest = max_weight_assignment(weights, later, open_terms(split.taken), constraints);
      const double with_term = fixed_score + weights.at(keyword, term);
      if (rest && with_term + partial_score(weights, later, *rest) >=
                      target - kScoreTieTolerance) {
        split.targets[static_cast<std::size_t>(keyword - 1)] = term;
        fixed_score = with_term;
        placed = true;
      } else {
        split.taken[static_cast<std::size_t>(term)] = false;
      }
    }
    // The optimum's own term always qualifies, so this cannot trigger short
    // of floating-point breakdown.
    if (!placed) return std::nullopt;
  }
  return split.targets;
}

}  // namespace kwsym
