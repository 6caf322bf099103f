#include "kwsym/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "kwsym/error.hpp"

namespace kwsym {

namespace {

void require_same_degree(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw InvalidArgument("degree mismatch: " + std::to_string(a.degree()) + " vs " +
                          std::to_string(b.degree()));
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw InvalidArgument("permutation degree must be at least 1");
  const auto n = static_cast<int>(images_.size());
  std::vector<bool> seen(images_.size() + 1, false);
  for (int image : images_) {
    if (image < 1 || image > n) {
      throw InvalidArgument("image " + std::to_string(image) + " outside 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(image)]) {
      throw InvalidArgument("image " + std::to_string(image) + " repeated");
    }
    seen[static_cast<std::size_t>(image)] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  if (n == 0) throw InvalidArgument("permutation degree must be at least 1");
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i + 1)) return false;
  }
  return true;
}

Permutation compose(const Permutation& pi, const Permutation& sigma) {
  require_same_degree(pi, sigma);
  std::vector<int> images(pi.degree());
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[i] = pi(sigma(static_cast<int>(i + 1)));
  }
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& pi) {
  std::vector<int> images(pi.degree());
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[static_cast<std::size_t>(pi.images()[i] - 1)] = static_cast<int>(i + 1);
  }
  return Permutation(std::move(images));
}

Permutation conjugate(const Permutation& pi, const Permutation& k) {
  require_same_degree(pi, k);
  return compose(compose(k, pi), inverse(k));
}

bool are_conjugate(const Permutation& pi, const Permutation& sigma) {
  require_same_degree(pi, sigma);
  return cycle_type(pi) == cycle_type(sigma);
}

CycleDecomposition cycle_decomposition(const Permutation& pi) {
  CycleDecomposition result{pi.degree(), {}};
  std::vector<bool> visited(pi.degree() + 1, false);
  // Scanning starts in ascending order, so each cycle begins at its minimum.
  for (int start = 1; start <= static_cast<int>(pi.degree()); ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    for (int x = start; !visited[static_cast<std::size_t>(x)]; x = pi(x)) {
      visited[static_cast<std::size_t>(x)] = true;
      cycle.push_back(x);
    }
    result.cycles.push_back(std::move(cycle));
  }
  std::stable_sort(result.cycles.begin(), result.cycles.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return result;
}

Permutation from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles) {
  if (degree == 0) throw InvalidArgument("permutation degree must be at least 1");
  std::vector<int> images(degree, 0);
  for (const auto& cycle : cycles) {
    if (cycle.empty()) throw InvalidArgument("empty cycle");
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int point = cycle[i];
      if (point < 1 || point > static_cast<int>(degree)) {
        throw InvalidArgument("point " + std::to_string(point) + " outside 1.." +
                              std::to_string(degree));
      }
      auto& slot = images[static_cast<std::size_t>(point - 1)];
      if (slot != 0) throw InvalidArgument("point " + std::to_string(point) + " repeated");
      slot = cycle[(i + 1) % cycle.size()];
    }
  }
  for (std::size_t i = 0; i < degree; ++i) {
    if (images[i] == 0) images[i] = static_cast<int>(i + 1);
  }
  return Permutation(std::move(images));
}

std::string to_string(const CycleDecomposition& cycles) {
  std::string out;
  for (const auto& cycle : cycles.cycles) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i != 0) out += ',';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out;
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> void {
    throw InvalidArgument("bad cycle notation '" + std::string(text) + "': " + what);
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip_space();
      int value = 0;
      const auto* first = text.data() + pos;
      const auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), value);
      if (ec != std::errc{}) fail("expected a point");
      pos += static_cast<std::size_t>(ptr - first);
      cycle.push_back(value);
      skip_space();
      if (pos >= text.size()) fail("unterminated cycle");
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      fail("expected ',' or ')'");
    }
    cycles.push_back(std::move(cycle));
    skip_space();
  }
  return from_cycles(degree, cycles);
}

CycleType cycle_type(const Permutation& pi) {
  CycleType type(pi.degree());
  std::vector<bool> visited(pi.degree() + 1, false);
  for (int start = 1; start <= static_cast<int>(pi.degree()); ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    std::size_t length = 0;
    for (int x = start; !visited[static_cast<std::size_t>(x)]; x = pi(x)) {
      visited[static_cast<std::size_t>(x)] = true;
      ++length;
    }
    type.add_cycle(length);
  }
  return type;
}

Partition type_to_partition(const CycleType& type) {
  std::vector<int> parts;
  for (std::size_t k = type.degree(); k >= 1; --k) {
    parts.insert(parts.end(), type.multiplicity(k), static_cast<int>(k));
  }
  return Partition(std::move(parts));
}

}  // namespace kwsym
