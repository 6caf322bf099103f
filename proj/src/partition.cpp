#include "kwsym/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "kwsym/error.hpp"

namespace kwsym {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw InvalidArgument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw InvalidArgument("partition parts must be weakly decreasing");
    }
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string to_string(const Partition& lambda) {
  std::string out = "(";
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(lambda.part(i));
  }
  out += ')';
  return out;
}

Partition parse_partition(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  std::string_view body = compact;
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') throw InvalidArgument("unbalanced parenthesis in partition");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> parts;
  while (!body.empty()) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
    if (ec != std::errc{}) throw InvalidArgument("bad partition '" + std::string(text) + "'");
    parts.push_back(value);
    body.remove_prefix(static_cast<std::size_t>(ptr - body.data()));
    if (body.empty()) break;
    if (body.front() != ',' || body.size() == 1) {
      throw InvalidArgument("bad partition '" + std::string(text) + "'");
    }
    body.remove_prefix(1);
  }
  return Partition(std::move(parts));
}

namespace {

// Emits partitions of `remaining` with parts <= max_part in descending
// lexicographic order, appended to prefix. min_length prunes branches that
// cannot reach the required number of parts.
void generate(int remaining, int max_part, std::size_t min_length, std::vector<int>& prefix,
              std::vector<Partition>& out) {
  if (remaining == 0) {
    if (prefix.size() >= min_length) out.emplace_back(prefix);
    return;
  }
  // The longest completion uses only 1s.
  if (prefix.size() + static_cast<std::size_t>(remaining) < min_length) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    generate(remaining - part, part, min_length, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw InvalidArgument("partitions_of needs n >= 0");
  std::vector<Partition> out;
  std::vector<int> prefix;
  generate(n, n, 0, prefix, out);
  return out;
}

BigInt class_size(const Partition& lambda) {
  BigInt denominator = 1;
  std::size_t i = 0;
  while (i < lambda.length()) {
    const int k = lambda.part(i);
    std::size_t j = i;
    while (j < lambda.length() && lambda.part(j) == k) ++j;
    const auto m = static_cast<int>(j - i);
    BigInt k_power = 1;
    for (int r = 0; r < m; ++r) k_power *= k;
    denominator *= k_power * factorial(m);
    i = j;
  }
  return factorial(lambda.n()) / denominator;
}

std::string_view to_string(Dominance relation) {
  switch (relation) {
    case Dominance::dominates: return "dominates";
    case Dominance::dominated_by: return "dominated-by";
    case Dominance::equal: return "equal";
    case Dominance::incomparable: return "incomparable";
  }
  return "?";
}

Dominance dominance_compare(const Partition& lambda, const Partition& mu) {
  if (lambda.n() != mu.n()) {
    throw InvalidArgument("cannot compare partitions of " + std::to_string(lambda.n()) + " and " +
                          std::to_string(mu.n()));
  }
  if (lambda == mu) return Dominance::equal;
  bool lambda_ahead = false;
  bool mu_ahead = false;
  int lambda_sum = 0;
  int mu_sum = 0;
  const std::size_t length = std::max(lambda.length(), mu.length());
  for (std::size_t i = 0; i < length; ++i) {
    lambda_sum += lambda.part(i);
    mu_sum += mu.part(i);
    if (lambda_sum > mu_sum) lambda_ahead = true;
    if (mu_sum > lambda_sum) mu_ahead = true;
  }
  if (lambda_ahead && mu_ahead) return Dominance::incomparable;
  return lambda_ahead ? Dominance::dominates : Dominance::dominated_by;
}

std::strong_ordering lex_compare(const Partition& lambda, const Partition& mu) {
  if (lambda.n() != mu.n()) {
    throw InvalidArgument("cannot compare partitions of " + std::to_string(lambda.n()) + " and " +
                          std::to_string(mu.n()));
  }
  const std::size_t length = std::max(lambda.length(), mu.length());
  for (std::size_t i = 0; i < length; ++i) {
    if (auto c = lambda.part(i) <=> mu.part(i); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::vector<Partition> admissible_partitions(int n_keywords, int vocab_size) {
  if (n_keywords < 0 || vocab_size < 0) throw InvalidArgument("N and V must be nonnegative");
  if (n_keywords > vocab_size) {
    throw InvalidArgument("N = " + std::to_string(n_keywords) + " exceeds V = " +
                          std::to_string(vocab_size));
  }
  std::vector<Partition> out;
  std::vector<int> prefix;
  generate(vocab_size, n_keywords + 1, static_cast<std::size_t>(vocab_size - n_keywords), prefix,
           out);
  return out;
}

bool is_admissible(const Partition& lambda, int n_keywords, int vocab_size) {
  if (lambda.n() != vocab_size || n_keywords < 0 || n_keywords > vocab_size) return false;
  if (lambda.length() > 0 && lambda.part(0) > n_keywords + 1) return false;
  return lambda.length() >= static_cast<std::size_t>(vocab_size - n_keywords);
}

}  // namespace kwsym
