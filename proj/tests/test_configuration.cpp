#include "kwsym/configuration.hpp"

#include <random>
#include <set>

#include "doctest.h"
#include "kwsym/error.hpp"
#include "oracles.hpp"

using namespace kwsym;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

std::vector<int> as_vector(std::span<const int> s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_SUITE_BEGIN("configuration");

TEST_CASE("counting") {
  CHECK(count_configurations(5, 8) == 6720);
  CHECK(count_configurations(0, 7) == 1);
  CHECK(count_configurations(3, 6) == 120);
  CHECK_THROWS_AS(count_configurations(4, 3), InvalidArgument);
}

TEST_CASE("configuration maps validate injectivity") {
  CHECK_NOTHROW(ConfigurationMap(8, {4, 7, 6, 1, 3}));
  CHECK_THROWS_AS(ConfigurationMap(8, {4, 4}), InvalidArgument);
  CHECK_THROWS_AS(ConfigurationMap(3, {4}), InvalidArgument);
  CHECK_THROWS_AS(ConfigurationMap(2, {1, 2, 3}), InvalidArgument);
}

TEST_CASE("text form") {
  const ConfigurationMap config(8, {4, 7, 6, 1, 3});
  CHECK(to_string(config) == "N=5 V=8 map=4,7,6,1,3");
  CHECK(parse_configuration("N=5 V=8 map=4,7,6,1,3") == config);
  CHECK(parse_configuration("N=0 V=4 map=") == ConfigurationMap(4, {}));
  CHECK_THROWS_AS(parse_configuration("N=2 V=8 map=4,7,6"), InvalidArgument);
  CHECK_THROWS_AS(parse_configuration("V=8 N=1 map=4"), InvalidArgument);
}

TEST_CASE("extension of the worked example") {
  const auto ext = extend(ConfigurationMap(8, {4, 7, 6, 1, 3}));
  CHECK(ext.permutation() == Permutation({4, 7, 6, 1, 3, 5, 2, 8}));
  CHECK(to_string(cycle_decomposition(ext.permutation())) == "(3,6,5)(1,4)(2,7)(8)");
  CHECK(as_vector(restrict_to_keywords(ext).targets()) == std::vector<int>{4, 7, 6, 1, 3});
  CHECK(is_valid_configuration(ext.permutation(), 5));
}

TEST_CASE("extension edge cases") {
  CHECK(extend(ConfigurationMap(5, {1, 2, 3})).permutation().is_identity());
  CHECK(to_string(cycle_decomposition(extend(ConfigurationMap(6, {5, 6})).permutation())) ==
        "(1,5)(2,6)(3)(4)");
  CHECK(extend(ConfigurationMap(4, {})).permutation().is_identity());
  CHECK_THROWS_AS(extend(ConfigurationMap(0, {})), InvalidArgument);
  const auto id = ExtendedConfiguration(Permutation::identity(5), 3);
  CHECK(as_vector(restrict_to_keywords(id).targets()) == std::vector<int>{1, 2, 3});
}

TEST_CASE("validity check") {
  CHECK(is_valid_configuration(Permutation::identity(8), 0));
  CHECK_FALSE(is_valid_configuration(parse_cycles("(6,7)", 8), 5));
  CHECK(is_valid_configuration(parse_cycles("(5,6)", 8), 5));
  CHECK_THROWS_AS(ExtendedConfiguration(parse_cycles("(6,7)", 8), 5), InvalidArgument);
}

TEST_CASE("enumeration order and cap") {
  std::vector<std::vector<int>> seen;
  for_each_configuration(1, 3, [&](const ConfigurationMap& c) { seen.push_back(as_vector(c.targets())); });
  CHECK(seen == std::vector<std::vector<int>>{{1}, {2}, {3}});

  for (int v = 0; v <= 6; ++v) {
    for (int n = 0; n <= v; ++n) {
      std::vector<std::vector<int>> got;
      for_each_configuration(n, v, [&](const ConfigurationMap& c) { got.push_back(as_vector(c.targets())); });
      CAPTURE(n);
      CAPTURE(v);
      CHECK(got == oracle::injections(n, v));
    }
  }
  std::size_t count = 0;
  for_each_configuration(5, 8, [&](const ConfigurationMap&) { ++count; });
  CHECK(count == 6720);

  CHECK_THROWS_AS(enumerate_configurations(5, 8, 6719), CapExceeded);
  CHECK_NOTHROW(enumerate_configurations(5, 8, 6720));
  CHECK_THROWS_AS(enumerate_configurations(10, 20), CapExceeded);
}

TEST_CASE("cursor unranking agrees with sequential order") {
  const auto all = oracle::injections(3, 6);
  for (std::uint64_t rank = 0; rank < all.size(); rank += 7) {
    ConfigurationCursor cursor(3, 6, rank);
    CHECK(as_vector(cursor.targets()) == all[rank]);
  }
  CHECK(ConfigurationCursor(3, 6, all.size()).done());
}

TEST_CASE("census examples") {
  CHECK(class_census(0, 4) == Census{{P({1, 1, 1, 1}), 1}});
  // Target 1 extends to the identity, target 2 to the transposition (1,2).
  CHECK(class_census(1, 2) == Census{{P({2}), 1}, {P({1, 1}), 1}});

  const auto census = class_census(3, 8);
  std::vector<Partition> keys;
  std::uint64_t total = 0;
  for (const auto& [lambda, count] : census) {
    keys.push_back(lambda);
    total += count;
  }
  CHECK(keys == admissible_partitions(3, 8));
  CHECK(total == 336);
  CHECK_THROWS_AS(class_census(5, 8, 100), CapExceeded);
}

TEST_CASE("parallel census equals the serial reference") {
  for (int v = 0; v <= 8; ++v) {
    for (int n = 0; n <= v; ++n) CHECK(class_census(n, v) == class_census_serial(n, v));
  }
}

TEST_CASE("property: extensions against the backward-walk oracle") {
  for (int v = 1; v <= 7; ++v) {
    for (int n = 0; n <= v; ++n) {
      std::set<std::vector<int>> images_seen;
      for (const auto& targets : oracle::injections(n, v)) {
        const ConfigurationMap config(v, targets);
        const auto ext = extend(config);
        const auto images = as_vector(ext.permutation().images());
        REQUIRE(images == oracle::extension(targets, v));
        CHECK(is_valid_configuration(ext.permutation(), n));
        CHECK(restrict_to_keywords(ext) == config);
        images_seen.insert(images);

        const auto cycles = cycle_decomposition(ext.permutation()).cycles;
        CHECK(cycles.size() >= static_cast<std::size_t>(v - n));
        if (v >= 2 * n) {
          const auto fixed = std::count_if(cycles.begin(), cycles.end(),
                                           [](const auto& c) { return c.size() == 1; });
          CHECK(fixed >= v - 2 * n);
        }
        for (const auto& cycle : cycles) CHECK(cycle.size() <= static_cast<std::size_t>(n + 1));
      }
      // Distinct configurations extend to distinct permutations.
      CHECK(images_seen.size() == oracle::injections(n, v).size());
    }
  }
}

TEST_CASE("property: random larger configurations") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int v = 9 + trial % 30;
    const int n = static_cast<int>(rng() % static_cast<unsigned>(v + 1));
    auto images = oracle::random_images(static_cast<std::size_t>(v), rng);
    images.resize(static_cast<std::size_t>(n));
    const ConfigurationMap config(v, images);
    const auto ext = extend(config);
    CHECK(is_valid_configuration(ext.permutation(), n));
    CHECK(restrict_to_keywords(ext) == config);
    CHECK(as_vector(ext.permutation().images()) == oracle::extension(images, v));
    CHECK(is_admissible(configuration_class(config), n, v));
  }
}

TEST_SUITE_END();
