#include "kwsym/tableaux.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "kwsym/error.hpp"
#include "oracles.hpp"

using namespace kwsym;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

const Partition kShape32 = Partition({3, 2});
const Tableau kT(kShape32, {{1, 3, 2}, {5, 4}});
const Tableau kT1(kShape32, {{1, 2, 3}, {4, 5}});
const Tableau kT2(kShape32, {{1, 2, 4}, {3, 5}});

// Every filling of the shape, one per permutation of 1..n read row by row.
std::vector<Tableau> all_tableaux(const Partition& shape) {
  std::vector<int> entries(static_cast<std::size_t>(shape.n()));
  for (std::size_t i = 0; i < entries.size(); ++i) entries[i] = static_cast<int>(i + 1);
  std::vector<Tableau> out;
  do {
    std::vector<std::vector<int>> rows;
    std::size_t pos = 0;
    for (int part : shape.parts()) {
      rows.emplace_back(entries.begin() + static_cast<long>(pos),
                        entries.begin() + static_cast<long>(pos) + part);
      pos += static_cast<std::size_t>(part);
    }
    out.emplace_back(shape, std::move(rows));
  } while (std::next_permutation(entries.begin(), entries.end()));
  return out;
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<int> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<int>(i + 1);
  std::vector<Permutation> out;
  do out.emplace_back(images);
  while (std::next_permutation(images.begin(), images.end()));
  return out;
}

// Plain integer product, independent of RepresentationMatrix::operator*.
std::vector<int> multiply(const RepresentationMatrix& a, const RepresentationMatrix& b) {
  const auto d = a.dimension();
  std::vector<int> out(d * d, 0);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t k = 0; k < d; ++k)
      if (a.at(r, k))
        for (std::size_t c = 0; c < d; ++c) out[r * d + c] += a.at(r, k) * b.at(k, c);
  return out;
}

std::vector<int> entries(const RepresentationMatrix& m) {
  std::vector<int> out;
  for (std::size_t r = 0; r < m.dimension(); ++r)
    for (std::size_t c = 0; c < m.dimension(); ++c) out.push_back(m.at(r, c));
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("tableaux");

TEST_CASE("tableau validation") {
  CHECK_THROWS_AS(Tableau(kShape32, {{1, 2}, {3, 4, 5}}), InvalidArgument);
  CHECK_THROWS_AS(Tableau(kShape32, {{1, 2, 2}, {4, 5}}), InvalidArgument);
  CHECK_THROWS_AS(Tableau(kShape32, {{1, 2, 3}}), InvalidArgument);
  CHECK(kT.at(2, 1) == 5);
}

TEST_CASE("counts") {
  CHECK(tableau_count(kShape32) == 120);
  CHECK(tableau_count(P({1})) == 1);
  CHECK(tableau_count(P({2, 2})) == 24);
  CHECK(tabloid_count(kShape32) == 10);
  CHECK(tabloid_count(P({6})) == 1);
  CHECK(tabloid_count(P({1, 1, 1, 1, 1})) == 120);
  CHECK(module_dimension(kShape32) == 10);
  CHECK(module_dimension(P({4})) == 1);
  CHECK(module_dimension(P({1, 1, 1, 1})) == 24);
}

TEST_CASE("row equivalence and tabloids") {
  CHECK(row_equivalent(kT, kT1));
  CHECK_FALSE(row_equivalent(kT1, kT2));
  CHECK(row_equivalent(kT, kT));
  CHECK(to_string(tabloid_of(kT)) == "1,2,3/4,5");
  CHECK(tabloid_of(kT1).rows() == kT1.rows());
  CHECK_THROWS_AS(row_equivalent(kT1, Tableau(P({4, 1}), {{1, 2, 3, 4}, {5}})), InvalidArgument);

  std::size_t in_class = 0;
  for (const auto& t : all_tableaux(kShape32)) in_class += row_equivalent(t, kT1);
  CHECK(in_class == 12);
}

TEST_CASE("tabloid basis of shape (3,2)") {
  const auto basis = enumerate_tabloids(kShape32);
  std::vector<std::string> text;
  for (const auto& b : basis) text.push_back(to_string(b));
  CHECK(text == std::vector<std::string>{"1,2,3/4,5", "1,2,4/3,5", "1,2,5/3,4", "1,3,4/2,5",
                                         "1,3,5/2,4", "1,4,5/2,3", "2,3,4/1,5", "2,3,5/1,4",
                                         "2,4,5/1,3", "3,4,5/1,2"});
  CHECK(enumerate_tabloids(P({2})).size() == 1);
  CHECK(enumerate_tabloids(P({1, 1})).size() == 2);
  CHECK_THROWS_AS(enumerate_tabloids(P({1, 1, 1, 1}), 23), CapExceeded);
}

TEST_CASE("actions") {
  const auto pi = parse_cycles("(1,3,5)(2)(4)", 5);
  CHECK(act_on_tableau(pi, kT1).rows() == std::vector<std::vector<int>>{{3, 2, 5}, {4, 1}});
  CHECK(act_on_tableau(Permutation::identity(5), kT) == kT);
  const auto image = act_on_tabloid(pi, tabloid_of(kT1));
  CHECK(to_string(image) == "2,3,5/1,4");
  CHECK(tabloid_rank(image) == 7);  // {t_8}
  CHECK(act_on_tabloid(Permutation::identity(5), tabloid_of(kT2)) == tabloid_of(kT2));
  CHECK_THROWS_AS(act_on_tableau(Permutation::identity(4), kT), InvalidArgument);
}

TEST_CASE("representation matrices") {
  const auto x = representation_matrix(parse_cycles("(1,3,5)(2)(4)", 5), kShape32);
  REQUIRE(x.dimension() == 10);
  CHECK(x.is_permutation_matrix());
  CHECK(x.at(7, 0) == 1);

  const auto id = representation_matrix(Permutation::identity(5), P({2, 2, 1}));
  for (std::size_t r = 0; r < id.dimension(); ++r)
    for (std::size_t c = 0; c < id.dimension(); ++c) CHECK(id.at(r, c) == (r == c ? 1 : 0));

  CHECK(to_string(representation_matrix(parse_cycles("(1,2)", 2), P({1, 1}))) == "0 1\n1 0\n");
  CHECK_THROWS_AS(representation_matrix(Permutation::identity(4), P({1, 1, 1, 1}), 500),
                  CapExceeded);
}

TEST_CASE("property: homomorphism on shape (2,2,1)") {
  std::mt19937 rng(31);
  const auto shape = P({2, 2, 1});
  for (int trial = 0; trial < 30; ++trial) {
    const Permutation pi(oracle::random_images(5, rng));
    const Permutation sigma(oracle::random_images(5, rng));
    const auto x_pi = representation_matrix(pi, shape);
    const auto x_sigma = representation_matrix(sigma, shape);
    const auto x_product = representation_matrix(compose(pi, sigma), shape);
    CHECK(x_product.dimension() == 30);
    CHECK(entries(x_product) == multiply(x_pi, x_sigma));
    CHECK(x_product == x_pi * x_sigma);
  }
}

TEST_CASE("property: counts, ranks and well-definedness") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& shape : partitions_of(n)) {
      const auto basis = enumerate_tabloids(shape);
      CHECK(BigInt(basis.size()) == tabloid_count(shape));
      CHECK(BigInt(basis.size()) == module_dimension(shape));
      CHECK(std::is_sorted(basis.begin(), basis.end()));
      for (std::size_t i = 0; i < basis.size(); i += 1 + basis.size() / 50) {
        CHECK(tabloid_rank(basis[i]) == i);
      }
    }
  }
  for (int n = 1; n <= 5; ++n) {
    const auto perms = all_permutations(static_cast<std::size_t>(n));
    for (const auto& shape : partitions_of(n)) {
      const auto tableaux = all_tableaux(shape);
      std::map<std::string, std::vector<const Tableau*>> classes;
      for (const auto& t : tableaux) classes[to_string(tabloid_of(t))].push_back(&t);
      BigInt row_orders = 1;
      for (int part : shape.parts()) row_orders *= factorial(part);
      for (const auto& [key, members] : classes) {
        CHECK(BigInt(members.size()) == row_orders);
        for (std::size_t p = 0; p < perms.size(); p += 7) {
          const auto expected = act_on_tabloid(perms[p], tabloid_of(*members.front()));
          for (const auto* t : members) CHECK(tabloid_of(act_on_tableau(perms[p], *t)) == expected);
        }
      }
      // Cyclicity: the orbit of any tabloid is the whole basis.
      const auto basis = enumerate_tabloids(shape);
      for (const auto& b : basis) {
        std::set<Tabloid> orbit;
        for (const auto& pi : perms) orbit.insert(act_on_tabloid(pi, b));
        CHECK(orbit.size() == basis.size());
      }
    }
  }
}

TEST_SUITE_END();
