#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "hologn/analysis.hpp"
#include "hologn/encoder.hpp"

using namespace hologn;

namespace {

GNArraySpec letter_spec() {
  return GNArraySpec{35, 2, 10000, Seed{0x11223344ull, 0}};
}

SymbolPattern random_pattern(const GNArraySpec& spec, std::mt19937_64& rng) {
  SymbolPattern p;
  p.symbols.reserve(spec.neuron_count);
  for (std::size_t j = 0; j < spec.neuron_count; ++j)
    p.symbols.push_back(static_cast<std::uint32_t>(rng() % spec.alphabet_size));
  return p;
}

}  // namespace

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(Codebook(GNArraySpec{0, 2, 10000, {}}), std::invalid_argument);
  CHECK_THROWS_AS(Codebook(GNArraySpec{3, 1, 10000, {}}), std::invalid_argument);
  CHECK_THROWS_AS(Codebook(GNArraySpec{3, 200, 128, {}}), std::invalid_argument);
}

TEST_CASE("element codes are shifted initialization vectors") {
  const Codebook cb(letter_spec());
  CHECK(cb.element_code(0, 0) == cb.iv(0));
  CHECK(cb.element_code(2, 1) == cyclic_shift(cb.iv(2), 1));
  const double dist = hamming_distance(cb.element_code(2, 0), cb.element_code(2, 1));
  CHECK(dist > 0.48);
  CHECK(dist < 0.52);
  CHECK_THROWS_AS(cb.element_code(35, 0), std::out_of_range);
  CHECK_THROWS_AS(cb.element_code(0, 2), std::out_of_range);
}

TEST_CASE("codebooks built from the same spec are bit-identical") {
  const Codebook a(letter_spec());
  const Codebook b(letter_spec());
  for (std::size_t j = 0; j < 35; ++j) {
    CHECK(a.iv(j) == b.iv(j));
    CHECK(a.element_code(j, 1) == b.element_code(j, 1));
  }
  // distinct IVs are mutually quasi-orthogonal
  for (std::size_t j = 1; j < 35; ++j) {
    const double dist = hamming_distance(a.iv(0), a.iv(j));
    CHECK(dist > 0.48);
    CHECK(dist < 0.52);
  }
}

TEST_CASE("single-neuron encoding is the element code itself") {
  const Codebook cb(GNArraySpec{1, 4, 10000, Seed{5, 0}});
  SymbolPattern p;
  p.symbols = {2};
  CHECK(encode_pattern(cb, p) == cb.element_code(0, 2));
}

TEST_CASE("encoding stays similar to every activated element code") {
  const Codebook cb(letter_spec());
  std::mt19937_64 rng(99);
  const double limit = 0.5 - 3.0 * std::sqrt(0.25 / 10000.0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto pattern = random_pattern(cb.spec(), rng);
    const auto encoding = encode_pattern(cb, pattern);
    for (std::size_t j = 0; j < 35; ++j)
      REQUIRE(hamming_distance(encoding, cb.element_code(j, pattern.symbols[j])) < limit);
  }
}

TEST_CASE("one differing symbol matches the overlap-distance prediction") {
  const Codebook cb(letter_spec());
  const double predicted = analysis::overlap_distance(34, 35, 35);
  std::mt19937_64 rng(123);
  double sum = 0.0;
  const int trials = 50;
  for (int trial = 0; trial < trials; ++trial) {
    auto p = random_pattern(cb.spec(), rng);
    auto q = p;
    const std::size_t j = rng() % 35;
    q.symbols[j] ^= 1u;
    sum += hamming_distance(encode_pattern(cb, p), encode_pattern(cb, q));
  }
  CHECK(std::abs(sum / trials - predicted) < 0.02);
}

TEST_CASE("positional information is preserved") {
  const Codebook cb(letter_spec());
  std::mt19937_64 rng(7);
  auto p = random_pattern(cb.spec(), rng);
  p.symbols[3] = 0;
  p.symbols[17] = 1;
  auto q = p;
  std::swap(q.symbols[3], q.symbols[17]);
  CHECK(hamming_distance(encode_pattern(cb, p), encode_pattern(cb, q)) > 0.0);
}

TEST_CASE("encoding density stays within the random-vector bounds for odd n") {
  const Codebook cb(letter_spec());
  const auto bounds = analysis::density_bounds(10000, 0.5, 1e-6);
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const auto density = encode_pattern(cb, random_pattern(cb.spec(), rng)).density();
    CHECK(density >= bounds.k_minus);
    CHECK(density <= bounds.k_plus);
  }
}

TEST_CASE("encode_pattern rejects malformed patterns") {
  const Codebook cb(letter_spec());
  SymbolPattern wrong_length;
  wrong_length.symbols.assign(34, 0);
  CHECK_THROWS_AS(encode_pattern(cb, wrong_length), std::invalid_argument);
  SymbolPattern bad_symbol;
  bad_symbol.symbols.assign(35, 0);
  bad_symbol.symbols[4] = 2;
  CHECK_THROWS_AS(encode_pattern(cb, bad_symbol), std::invalid_argument);
}

TEST_CASE("bundle_class basics") {
  const Codebook cb(letter_spec());
  std::mt19937_64 rng(17);
  const auto e = encode_pattern(cb, random_pattern(cb.spec(), rng));
  const std::vector<HDVector> one{e};
  CHECK(bundle_class(std::span<const HDVector>(one), Seed{1, 1}) == e);
  const std::vector<HDVector> copies{e, e, e, e, e};
  CHECK(bundle_class(std::span<const HDVector>(copies), Seed{1, 1}) == e);
  CHECK_THROWS_AS(bundle_class(std::span<const HDVector>(), Seed{1, 1}), std::invalid_argument);
}
