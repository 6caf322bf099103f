#include "kwsym/configuration.hpp"

#include <algorithm>
#include <charconv>

#include <omp.h>

#include "kwsym/error.hpp"

namespace kwsym {

namespace {

void require_keyword_range(int n_keywords, int vocab_size) {
  if (n_keywords < 0 || vocab_size < 0) throw InvalidArgument("N and V must be nonnegative");
  if (n_keywords > vocab_size) {
    throw InvalidArgument("N = " + std::to_string(n_keywords) + " exceeds V = " +
                          std::to_string(vocab_size));
  }
}

// Writes the extension of `targets` into images (1-based values, 0-based
// slots). `images` must have vocab_size slots.
void extension_images(std::span<const int> targets, std::span<int> images,
                      std::vector<bool>& hit) {
  const auto n = static_cast<int>(targets.size());
  const auto v = static_cast<int>(images.size());
  std::fill(images.begin(), images.end(), 0);
  hit.assign(static_cast<std::size_t>(n) + 1, false);
  for (int i = 1; i <= n; ++i) {
    const int j = targets[static_cast<std::size_t>(i - 1)];
    images[static_cast<std::size_t>(i - 1)] = j;
    if (j <= n) hit[static_cast<std::size_t>(j)] = true;
  }
  // An unmatched keyword position starts a chain through {1..N}. Injectivity
  // keeps the chain from revisiting a point, so it must exit above N.
  for (int start = 1; start <= n; ++start) {
    if (hit[static_cast<std::size_t>(start)]) continue;
    int x = images[static_cast<std::size_t>(start - 1)];
    while (x <= n) x = images[static_cast<std::size_t>(x - 1)];
    images[static_cast<std::size_t>(x - 1)] = start;
  }
  for (int i = n + 1; i <= v; ++i) {
    if (images[static_cast<std::size_t>(i - 1)] == 0) images[static_cast<std::size_t>(i - 1)] = i;
  }
}

// Cycle-type partition of a permutation given by 1-based images, written as
// descending parts into `parts`.
void cycle_parts(std::span<const int> images, std::vector<bool>& visited,
                 std::vector<int>& parts) {
  visited.assign(images.size() + 1, false);
  parts.clear();
  for (std::size_t start = 1; start <= images.size(); ++start) {
    if (visited[start]) continue;
    int length = 0;
    for (auto x = start; !visited[x]; x = static_cast<std::size_t>(images[x - 1])) {
      visited[x] = true;
      ++length;
    }
    parts.push_back(length);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
}

std::uint64_t falling_u64(int v, int k) {
  std::uint64_t result = 1;
  for (int i = 0; i < k; ++i) result *= static_cast<std::uint64_t>(v - i);
  return result;
}

using LocalTally = std::map<std::vector<int>, std::uint64_t, std::less<>>;

// Census over ranks [begin, end).
void census_range(int n_keywords, int vocab_size, std::uint64_t begin, std::uint64_t end,
                  LocalTally& tally) {
  if (begin >= end) return;
  ConfigurationCursor cursor(n_keywords, vocab_size, begin);
  std::vector<int> images(static_cast<std::size_t>(vocab_size));
  std::vector<bool> hit;
  std::vector<bool> visited;
  std::vector<int> parts;
  for (std::uint64_t rank = begin; rank < end; ++rank) {
    extension_images(cursor.targets(), images, hit);
    cycle_parts(images, visited, parts);
    if (auto it = tally.find(parts); it != tally.end()) {
      ++it->second;
    } else {
      tally.emplace(parts, 1);
    }
    cursor.advance();
  }
}

Census to_census(const LocalTally& tally) {
  Census census;
  for (const auto& [parts, count] : tally) census[Partition(parts)] += count;
  return census;
}

}  // namespace

ConfigurationMap::ConfigurationMap(int vocab_size, std::vector<int> targets)
    : vocab_size_(vocab_size), targets_(std::move(targets)) {
  require_keyword_range(static_cast<int>(targets_.size()), vocab_size_);
  std::vector<bool> used(static_cast<std::size_t>(vocab_size_) + 1, false);
  for (int j : targets_) {
    if (j < 1 || j > vocab_size_) {
      throw InvalidArgument("target " + std::to_string(j) + " outside 1.." +
                            std::to_string(vocab_size_));
    }
    if (used[static_cast<std::size_t>(j)]) {
      throw InvalidArgument("target " + std::to_string(j) + " assigned twice");
    }
    used[static_cast<std::size_t>(j)] = true;
  }
}

std::string join_targets(std::span<const int> targets) {
  std::string out;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(targets[i]);
  }
  return out;
}

std::vector<int> parse_targets(std::string_view text) {
  std::vector<int> targets;
  while (!text.empty()) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{}) throw InvalidArgument("bad target list '" + std::string(text) + "'");
    targets.push_back(value);
    text.remove_prefix(static_cast<std::size_t>(ptr - text.data()));
    if (text.empty()) break;
    if (text.front() != ',' || text.size() == 1) {
      throw InvalidArgument("bad target list near '" + std::string(text) + "'");
    }
    text.remove_prefix(1);
  }
  return targets;
}

std::string to_string(const ConfigurationMap& config) {
  return "N=" + std::to_string(config.n_keywords()) + " V=" + std::to_string(config.vocab_size()) +
         " map=" + join_targets(config.targets());
}

ConfigurationMap parse_configuration(std::string_view text) {
  auto field = [&](std::string_view key) -> std::string_view {
    if (text.substr(0, key.size()) != key) {
      throw InvalidArgument("configuration must contain '" + std::string(key) + "'");
    }
    text.remove_prefix(key.size());
    const auto end = text.find(' ');
    auto value = text.substr(0, end);
    text.remove_prefix(end == std::string_view::npos ? text.size() : end + 1);
    return value;
  };
  const auto n_text = field("N=");
  const auto v_text = field("V=");
  const auto map_text = field("map=");
  if (!text.empty()) throw InvalidArgument("trailing text after configuration");
  int n = 0;
  int v = 0;
  if (std::from_chars(n_text.data(), n_text.data() + n_text.size(), n).ptr !=
          n_text.data() + n_text.size() ||
      std::from_chars(v_text.data(), v_text.data() + v_text.size(), v).ptr !=
          v_text.data() + v_text.size()) {
    throw InvalidArgument("bad N or V in configuration");
  }
  ConfigurationMap config(v, parse_targets(map_text));
  if (config.n_keywords() != n) throw InvalidArgument("N disagrees with the map length");
  return config;
}

ExtendedConfiguration::ExtendedConfiguration(Permutation pi, int n_keywords)
    : permutation_(std::move(pi)), n_keywords_(n_keywords) {
  if (n_keywords_ < 0 || n_keywords_ > static_cast<int>(permutation_.degree())) {
    throw InvalidArgument("N must lie in 0..degree");
  }
  if (!is_valid_configuration(permutation_, n_keywords_)) {
    throw InvalidArgument("a cycle contains more than one point above N");
  }
}

BigInt count_configurations(int n_keywords, int vocab_size) {
  require_keyword_range(n_keywords, vocab_size);
  return falling_factorial(vocab_size, n_keywords);
}

ExtendedConfiguration extend(const ConfigurationMap& config) {
  if (config.vocab_size() == 0) throw InvalidArgument("cannot extend over an empty vocabulary");
  std::vector<int> images(static_cast<std::size_t>(config.vocab_size()));
  std::vector<bool> hit;
  extension_images(config.targets(), images, hit);
  return ExtendedConfiguration(Permutation(std::move(images)), config.n_keywords());
}

ConfigurationMap restrict_to_keywords(const ExtendedConfiguration& ext) {
  const auto images = ext.permutation().images();
  return ConfigurationMap(static_cast<int>(images.size()),
                          std::vector<int>(images.begin(), images.begin() + ext.n_keywords()));
}

bool is_valid_configuration(const Permutation& pi, int n_keywords) {
  std::vector<bool> visited(pi.degree() + 1, false);
  for (int start = 1; start <= static_cast<int>(pi.degree()); ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    int large = 0;
    for (int x = start; !visited[static_cast<std::size_t>(x)]; x = pi(x)) {
      visited[static_cast<std::size_t>(x)] = true;
      if (x > n_keywords) ++large;
    }
    if (large > 1) return false;
  }
  return true;
}

ConfigurationCursor::ConfigurationCursor(int n_keywords, int vocab_size)
    : ConfigurationCursor(n_keywords, vocab_size, 0) {}

ConfigurationCursor::ConfigurationCursor(int n_keywords, int vocab_size, std::uint64_t rank)
    : n_keywords_(n_keywords), vocab_size_(vocab_size) {
  require_keyword_range(n_keywords, vocab_size);
  used_.assign(static_cast<std::size_t>(vocab_size) + 1, false);
  targets_.reserve(static_cast<std::size_t>(n_keywords));
  if (BigInt(rank) >= count_configurations(n_keywords, vocab_size)) {
    done_ = true;
    return;
  }
  // Unranking: position i has (V-i-1)!/(V-N)! completions per choice.
  for (int i = 0; i < n_keywords; ++i) {
    const std::uint64_t block = falling_u64(vocab_size - i - 1, n_keywords - i - 1);
    auto skip = rank / block;
    rank %= block;
    for (int j = 1; j <= vocab_size; ++j) {
      if (used_[static_cast<std::size_t>(j)]) continue;
      if (skip-- == 0) {
        targets_.push_back(j);
        used_[static_cast<std::size_t>(j)] = true;
        break;
      }
    }
  }
}

bool ConfigurationCursor::advance() {
  if (done_) return false;
  for (int pos = n_keywords_ - 1; pos >= 0; --pos) {
    const auto slot = static_cast<std::size_t>(pos);
    used_[static_cast<std::size_t>(targets_[slot])] = false;
    int next = targets_[slot] + 1;
    while (next <= vocab_size_ && used_[static_cast<std::size_t>(next)]) ++next;
    if (next > vocab_size_) {
      targets_.pop_back();
      continue;
    }
    targets_[slot] = next;
    used_[static_cast<std::size_t>(next)] = true;
    for (int j = 1; static_cast<int>(targets_.size()) < n_keywords_; ++j) {
      if (!used_[static_cast<std::size_t>(j)]) {
        targets_.push_back(j);
        used_[static_cast<std::size_t>(j)] = true;
      }
    }
    return true;
  }
  done_ = true;
  return false;
}

std::uint64_t checked_configuration_count(int n_keywords, int vocab_size, std::uint64_t cap) {
  const BigInt count = count_configurations(n_keywords, vocab_size);
  if (count > cap) {
    throw CapExceeded(count.str() + " configurations exceed the enumeration cap of " +
                      std::to_string(cap));
  }
  return count.convert_to<std::uint64_t>();
}

ConfigurationCursor enumerate_configurations(int n_keywords, int vocab_size, std::uint64_t cap) {
  checked_configuration_count(n_keywords, vocab_size, cap);
  return ConfigurationCursor(n_keywords, vocab_size);
}

void for_each_configuration(int n_keywords, int vocab_size,
                            const std::function<void(const ConfigurationMap&)>& visit,
                            std::uint64_t cap) {
  for (auto cursor = enumerate_configurations(n_keywords, vocab_size, cap); !cursor.done();
       cursor.advance()) {
    visit(cursor.current());
  }
}

Census class_census_serial(int n_keywords, int vocab_size, std::uint64_t cap) {
  const auto total = checked_configuration_count(n_keywords, vocab_size, cap);
  if (vocab_size == 0) return Census{{Partition(), 1}};
  LocalTally tally;
  census_range(n_keywords, vocab_size, 0, total, tally);
  return to_census(tally);
}

Census class_census(int n_keywords, int vocab_size, std::uint64_t cap) {
  const auto total = checked_configuration_count(n_keywords, vocab_size, cap);
  if (vocab_size == 0) return Census{{Partition(), 1}};
  const int workers = std::max(1, omp_get_max_threads());
  std::vector<LocalTally> tallies(static_cast<std::size_t>(workers));
#pragma omp parallel for schedule(static, 1) num_threads(workers)
  for (int w = 0; w < workers; ++w) {
    const auto share = [&](int i) {
      const auto u = static_cast<std::uint64_t>(i);
      const auto parts = static_cast<std::uint64_t>(workers);
      return total / parts * u + std::min(u, total % parts);
    };
    const auto begin = share(w);
    const auto end = share(w + 1);
    census_range(n_keywords, vocab_size, begin, end, tallies[static_cast<std::size_t>(w)]);
  }
  LocalTally merged;
  for (const auto& tally : tallies) {
    for (const auto& [parts, count] : tally) merged[parts] += count;
  }
  return to_census(merged);
}

Partition configuration_class(const ConfigurationMap& config) {
  if (config.vocab_size() == 0) return Partition();
  std::vector<int> images(static_cast<std::size_t>(config.vocab_size()));
  std::vector<bool> scratch;
  std::vector<int> parts;
  extension_images(config.targets(), images, scratch);
  cycle_parts(images, scratch, parts);
  return Partition(std::move(parts));
}

}  // namespace kwsym
