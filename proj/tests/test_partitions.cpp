#include <doctest.h>

#include "oracle.hpp"
#include "pathabs/errors.hpp"
#include "pathabs/generators.hpp"
#include "pathabs/partitions.hpp"

using namespace pathabs;

namespace {

PartialPartition pp(std::size_t n, std::vector<std::vector<Vertex>> blocks) { return PartialPartition(n, std::move(blocks)); }

}  // namespace

TEST_CASE("canonicalize examples") {
  CHECK(canonicalize(Coloring{{4, 2, 0, 2, 0}}) == Coloring{{1, 2, 3, 2, 3}});
  CHECK(canonicalize(Coloring{{1, 1, 1}}) == Coloring{{1, 1, 1}});
  CHECK(canonicalize(Coloring{{9, 9, 7}}) == Coloring{{1, 1, 2}});
  CHECK(canonicalize(Coloring{}) == Coloring{});
}

TEST_CASE("canonical form is a restricted growth string") {
  Rng rng(2);
  for (int k = 0; k < 500; ++k) {
    const auto c = canonicalize(gen::coloring(static_cast<std::size_t>(rng.uniform_int(1, 9)), 6, rng));
    Color top = 0;
    for (Color x : c.labels) {
      CHECK(x >= 1);
      CHECK(x <= top + 1);
      top = std::max(top, x);
    }
  }
}

TEST_CASE("partition_from_labels examples") {
  const Coloring c{{1, 2, 1, 3}};
  CHECK(partition_from_labels(c, {1, 3}).blocks() == std::vector<std::vector<Vertex>>{{1, 3}, {4}});
  CHECK(partition_from_labels(c, {}).block_count() == 0);
  const auto full = partition_from_labels(c, {1, 2, 3});
  CHECK(full.blocks() == std::vector<std::vector<Vertex>>{{1, 3}, {2}, {4}});
  CHECK(full.support() == std::set<Vertex>{1, 2, 3, 4});
  CHECK(full.is_full());
  CHECK(partition_from_labels(c, {7}).block_count() == 0);
}

TEST_CASE("partial partition validation and printing") {
  CHECK_THROWS_AS(pp(3, {{1, 2}, {2, 3}}), ValidationError);
  CHECK_THROWS_AS(pp(3, {{4}}), ValidationError);
  CHECK_THROWS_AS(pp(3, {{}}), ValidationError);
  CHECK(pp(3, {{2}, {3, 1}}).to_string() == "13|2");
  CHECK(pp(3, {}).to_string() == "∅");
}

TEST_CASE("refines") {
  CHECK(refines(pp(3, {{1}, {3}}), pp(3, {{1, 3}})));
  CHECK_FALSE(refines(pp(3, {{1, 3}}), pp(3, {{1}, {3}})));
  CHECK_THROWS_AS(refines(pp(3, {}), pp(4, {})), ValidationError);
  const Coloring c{{1, 2, 1, 3}};
  const std::vector<ColorSet> subsets{{}, {1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
  for (const auto& L : subsets)
    for (const auto& Lp : subsets)
      if (std::includes(Lp.begin(), Lp.end(), L.begin(), L.end()))
        CHECK(refines(partition_from_labels(c, L), partition_from_labels(c, Lp)));
}

TEST_CASE("complete_partial and drop_element") {
  CHECK(complete_partial(pp(3, {{1, 2}})) == pp(4, {{1, 2}, {3}, {4}}));
  CHECK(complete_partial(pp(2, {})) == pp(3, {{1}, {2}, {3}}));
  CHECK(drop_element(pp(3, {{1, 2}, {3}})) == pp(2, {{1, 2}}));
  CHECK(drop_element(pp(3, {{1, 3}, {2}})) == pp(2, {{1}, {2}}));
  CHECK_THROWS_AS(drop_element(pp(3, {{1, 2}})), ValidationError);
}

TEST_CASE("enumeration counts match Bell numbers") {
  for (std::size_t n = 0; n <= 7; ++n) {
    CHECK(all_set_partitions(n).size() == oracle::bell(n));
    // Partial partitions of [n] correspond to partitions of [n+1].
    CHECK(all_partial_partitions(n).size() == oracle::bell(n + 1));
  }
}

TEST_CASE("set partitions agree with brute force over all maps") {
  for (std::size_t n = 0; n <= 6; ++n) {
    std::set<std::vector<std::vector<Vertex>>> mine;
    for (const auto& p : all_set_partitions(n)) {
      auto blocks = p.blocks();
      std::sort(blocks.begin(), blocks.end());
      mine.insert(blocks);
    }
    CHECK(mine == oracle::set_partitions(n));
  }
}

TEST_CASE("Galois connection, exhaustive for n <= 5") {
  for (std::size_t n = 0; n <= 5; ++n) {
    const auto full = all_set_partitions(n + 1);
    for (const auto& sigma : all_partial_partitions(n))
      for (const auto& tau : full)
        REQUIRE(refines(sigma, drop_element(tau)) == refines(complete_partial(sigma), tau));
  }
}

TEST_CASE("canonicalize is idempotent and invariant under injective relabeling") {
  Rng rng(17);
  for (int k = 0; k < 500; ++k) {
    const auto c = gen::coloring(static_cast<std::size_t>(rng.uniform_int(1, 9)), 5, rng);
    const auto canon = canonicalize(c);
    CHECK(canonicalize(canon) == canon);
    Coloring moved = c;
    for (auto& x : moved.labels) x = x * x * 31 + 5;
    CHECK(canonicalize(moved) == canon);
  }
}
