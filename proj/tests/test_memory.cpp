#include <doctest.h>

#include <stdexcept>

#include <sstream>

#include "hologn/pattern_memory.hpp"

using namespace hologn;

namespace {

PatternStore random_store(std::size_t l, std::size_t d, std::uint64_t master) {
  PatternStore store(d);
  for (std::size_t i = 0; i < l; ++i)
    store.insert("row" + std::to_string(i), HDVector::random(d, Seed{master, i}));
  return store;
}

}  // namespace

TEST_CASE("insert appends in order") {
  PatternStore store(10000);
  const auto a = HDVector::random(10000, Seed{1, 0});
  const auto b = HDVector::random(10000, Seed{2, 0});
  CHECK(store.insert("a", a) == 0);
  CHECK(store.insert("b", b) == 1);
  CHECK(store.size() == 2);
  CHECK(store.label(0) == "a");
  CHECK_THROWS_AS(store.insert("bad", HDVector(64)), std::invalid_argument);
  CHECK_THROWS_AS(store.insert("tab\tlabel", a), std::invalid_argument);
}

TEST_CASE("xor engine agrees with pairwise hamming distance") {
  const auto store = random_store(50, 10000, 77);
  const auto q = HDVector::random(10000, Seed{78, 0});
  const auto distances = store.batch_distances_xor(q);
  REQUIRE(distances.size() == 50);
  for (std::size_t i = 0; i < 50; ++i) {
    CHECK(distances[i] == hamming_distance(store.vector(i), q));
    CHECK(distances[i] > 0.48);
    CHECK(distances[i] < 0.52);
  }
}

TEST_CASE("a stored copy of the query reports distance zero") {
  auto store = random_store(10, 10000, 5);
  const auto q = HDVector::random(10000, Seed{99, 0});
  store.insert("copy", q);
  const auto distances = store.batch_distances_xor(q);
  CHECK(distances[10] == 0.0);
}

TEST_CASE("complex engine realizes the hand-checkable 4-bit case") {
  // row = 1010, query = 1001 (position 0 leftmost): mismatches at two positions
  PatternStore store(4);
  HDVector row(4), q(4);
  row.set_bit(0, true);
  row.set_bit(2, true);
  q.set_bit(0, true);
  q.set_bit(3, true);
  store.insert("row", row);
  CHECK(store.batch_distances_complex(q) == std::vector<double>{0.5});
  CHECK(store.batch_distances_xor(q) == std::vector<double>{0.5});
}

TEST_CASE("engines agree exactly on random stores") {
  const auto store = random_store(200, 10000, 12);
  for (std::uint64_t s = 0; s < 3; ++s) {
    const auto q = HDVector::random(10000, Seed{1000 + s, 0});
    CHECK(store.batch_mismatches(q, DistanceEngine::xor_popcount) ==
          store.batch_mismatches(q, DistanceEngine::complex_matrix));
  }
}

TEST_CASE("query results are independent of the thread count") {
  const auto store = random_store(333, 10000, 13);
  const auto q = HDVector::random(10000, Seed{14, 0});
  const auto serial = store.batch_mismatches(q, DistanceEngine::xor_popcount, 1);
  CHECK(store.batch_mismatches(q, DistanceEngine::xor_popcount, 4) == serial);
  CHECK(store.batch_mismatches(q, DistanceEngine::xor_popcount, 7) == serial);
}

TEST_CASE("best_match returns the minimal row, ties to the first") {
  PatternStore store(10000);
  const auto v = HDVector::random(10000, Seed{21, 0});
  store.insert("first", v);
  store.insert("second", v);
  store.insert("other", HDVector::random(10000, Seed{22, 0}));
  const auto result = store.best_match(v);
  REQUIRE(result.hits.size() == 1);
  CHECK(result.hits[0].row == 0);
  CHECK(result.hits[0].label == "first");
  CHECK(result.hits[0].distance == 0.0);
  CHECK_THROWS_AS(PatternStore(64).best_match(HDVector(64)), std::invalid_argument);
}

TEST_CASE("recall_xi returns rows within the radius, sorted") {
  PatternStore store(10000);
  const auto q = HDVector::random(10000, Seed{31, 0});
  auto near = q;
  for (std::size_t pos = 0; pos < 100; ++pos) near.set_bit(pos, !near.bit(pos));
  store.insert("far", HDVector::random(10000, Seed{32, 0}));
  store.insert("near", near);  // distance 0.01
  store.insert("exact", q);

  const auto exact_only = store.recall_xi(q, 0.0);
  REQUIRE(exact_only.hits.size() == 1);
  CHECK(exact_only.hits[0].label == "exact");

  const auto within = store.recall_xi(q, 0.01);
  REQUIRE(within.hits.size() == 2);
  CHECK(within.hits[0].label == "exact");
  CHECK(within.hits[1].label == "near");
  CHECK(store.recall_xi(q, 0.009).hits.size() == 1);

  CHECK_THROWS_AS(store.recall_xi(q, 0.5), std::domain_error);
  CHECK_THROWS_AS(store.recall_xi(q, -0.1), std::domain_error);
}

TEST_CASE("recall near 0.5 over a random store is typically empty") {
  const auto store = random_store(500, 10000, 41);
  const auto q = HDVector::random(10000, Seed{42, 0});
  CHECK(store.recall_xi(q, 0.45).hits.empty());
}

TEST_CASE("store files round-trip") {
  const auto store = random_store(7, 10000, 55);
  std::stringstream buffer;
  store.save(buffer);
  const std::string text = buffer.str();
  CHECK(text.rfind("HOLOGN-STORE v1 d=10000 l=7\n", 0) == 0);
  std::istringstream in(text);
  const auto loaded = PatternStore::load(in);
  REQUIRE(loaded.size() == 7);
  for (std::size_t i = 0; i < 7; ++i) {
    CHECK(loaded.label(i) == store.label(i));
    CHECK(loaded.vector(i) == store.vector(i));
  }
  std::istringstream bad("NOT-A-STORE\n");
  CHECK_THROWS(PatternStore::load(bad));
  std::istringstream truncated("HOLOGN-STORE v1 d=64 l=2\nrow\t0000000000000000\n");
  CHECK_THROWS(PatternStore::load(truncated));
}
