#include <algorithm>
#include <doctest.h>

#include <stdexcept>

#include <fstream>
#include <sstream>

#include "hologn/experiments.hpp"

using namespace hologn;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig cfg;
  cfg.dimension = 2048;
  cfg.master_seed = Seed{0xabc123ull, 0};
  cfg.trials = 20;
  cfg.max_flip_bits = 3;
  cfg.supervised_flip_bits = {0, 3};
  cfg.learn_examples = 5;
  cfg.example_grid = {1, 5};
  cfg.test_patterns = 10;
  cfg.timing_ladder = {100, 200};
  cfg.timing_repetitions = 3;
  cfg.capacity_dimensions = {1000};
  cfg.overlap_pattern_size = 5;
  cfg.overlap_trials = 10;
  cfg.sensitivity_sizes = {15};
  return cfg;
}

}  // namespace

TEST_CASE("builtin glyphs are the shipped data file") {
  const GlyphSet& set = builtin_glyphs();
  REQUIRE(set.glyphs.size() == 26);
  for (std::size_t i = 0; i < 26; ++i) CHECK(set.glyphs[i].label == char('A' + i));

  std::ifstream file(std::string(HOLOGN_DATA_DIR) + "/glyphs5x7.txt");
  REQUIRE(file.good());
  std::ostringstream buf;
  buf << file.rdbuf();
  CHECK(buf.str() == format_glyphs(set));

  std::istringstream again(format_glyphs(set));
  const GlyphSet reparsed = parse_glyphs(again, "round-trip");
  CHECK(format_glyphs(reparsed) == format_glyphs(set));
}

TEST_CASE("glyph parser rejects malformed input") {
  std::istringstream missing(":A\n#####\n");
  CHECK_THROWS(parse_glyphs(missing, "t"));
  std::istringstream bad_cell(":A\n#####\n#####\n#####\n#####\n#####\n#####\n##x##\n");
  CHECK_THROWS(parse_glyphs(bad_cell, "t"));
}

TEST_CASE("distort flips exactly the requested cells") {
  const Glyph& a = builtin_glyphs().glyphs[0];
  CHECK(distort(a, 0, Seed{1, 0}).cells == a.cells);

  const Glyph full = distort(a, 35, Seed{1, 0});
  for (std::size_t i = 0; i < kGlyphCells; ++i) CHECK(full.cells[i] == (a.cells[i] ^ 1));

  for (std::uint64_t s = 0; s < 50; ++s) {
    const Glyph noisy = distort(a, 5, Seed{2, s});
    std::size_t diff = 0;
    for (std::size_t i = 0; i < kGlyphCells; ++i) diff += noisy.cells[i] != a.cells[i];
    REQUIRE(diff == 5);
  }
  CHECK(distort(a, 5, Seed{3, 3}).cells == distort(a, 5, Seed{3, 3}).cells);
  CHECK_THROWS_AS(distort(a, 36, Seed{1, 0}), std::invalid_argument);
}

TEST_CASE("sequential distortions compose like independent flips") {
  const Glyph& a = builtin_glyphs().glyphs[0];
  const std::size_t b1 = 4, b2 = 6;
  // E[diff] = b1 + b2 - 2*b1*b2/35 for independent flip sets
  const double expected = b1 + b2 - 2.0 * b1 * b2 / kGlyphCells;
  double sum = 0.0;
  const int trials = 2000;
  for (int t = 0; t < trials; ++t) {
    const Glyph once = distort(a, b1, Seed{10, std::uint64_t(t)});
    const Glyph twice = distort(once, b2, Seed{11, std::uint64_t(t)});
    for (std::size_t i = 0; i < kGlyphCells; ++i) sum += twice.cells[i] != a.cells[i];
  }
  CHECK(sum / trials == doctest::Approx(expected).epsilon(0.03));
}

TEST_CASE("one-shot recall is perfect without distortion") {
  auto cfg = small_config();
  const auto result = run_oneshot(cfg);
  REQUIRE(result.rows.size() == 26 * 4);  // flip levels 0..3
  CHECK(result.mean_accuracy(0) == 1.0);
  for (const auto& row : result.rows)
    if (row.flip_bits == 0) REQUIRE(row.correct == row.trials);
}

TEST_CASE("experiment CSVs are byte-identical across reruns and thread counts") {
  auto cfg = small_config();
  cfg.threads = 1;
  const auto oneshot_serial = run_oneshot(cfg).to_csv();
  const auto supervised_serial = run_supervised(cfg);
  const auto curves_serial = run_analysis_curves(cfg);
  cfg.threads = 4;
  CHECK(run_oneshot(cfg).to_csv() == oneshot_serial);
  const auto supervised_parallel = run_supervised(cfg);
  CHECK(supervised_parallel.accuracy_csv() == supervised_serial.accuracy_csv());
  CHECK(supervised_parallel.convergence_csv() == supervised_serial.convergence_csv());
  const auto curves_parallel = run_analysis_curves(cfg);
  CHECK(curves_parallel.capacity_csv() == curves_serial.capacity_csv());
  CHECK(curves_parallel.overlap_csv() == curves_serial.overlap_csv());
  CHECK(curves_parallel.sensitivity_csv() == curves_serial.sensitivity_csv());
}

TEST_CASE("supervised recall is perfect without distortion") {
  auto cfg = small_config();
  const auto result = run_supervised(cfg);
  REQUIRE(result.accuracy_by_distortion.size() == 2);
  CHECK(result.accuracy_by_distortion[0].first == 0);
  CHECK(result.accuracy_by_distortion[0].second == 1.0);
  REQUIRE(result.accuracy_by_examples.size() == 2);
}

TEST_CASE("timing run checks the engine-equivalence contract") {
  auto cfg = small_config();
  const auto result = run_timing(cfg);  // throws if the engines ever disagree
  REQUIRE(result.rows.size() == 4);     // two ladder sizes x two engines
  CHECK(result.rows[0].engine == "xor");
  CHECK(result.rows[0].patterns == 100);
  const auto csv = result.to_csv();
  CHECK(csv.rfind("engine,patterns,median_ms\n", 0) == 0);
}

TEST_CASE("analysis curve tables have the expected shape") {
  auto cfg = small_config();
  cfg.dimension = 10000;
  const auto result = run_analysis_curves(cfg);
  REQUIRE(result.capacity_by_dimension.size() == 1);
  CHECK(result.capacity_by_dimension[0].first == 1000);
  REQUIRE(result.overlap.size() == 6);  // c = 0..5
  CHECK(result.overlap[5].predicted == doctest::Approx(0.0));
  CHECK(result.overlap[5].empirical == doctest::Approx(0.0));
  CHECK(result.overlap[0].empirical == doctest::Approx(0.5).epsilon(0.05));
  REQUIRE(result.sensitivity_by_size.size() == 1);
  CHECK(result.sensitivity_by_size[0].second == 3);
}

TEST_CASE("one-shot accuracy is invariant to clean-pattern insertion order") {
  // the prediction only depends on argmin over distances, not row order,
  // except for exact ties, where the lowest-row rule is order-dependent
  GNArraySpec spec{kGlyphCells, 2, 2048, Seed{0xabc123ull, 0}.derive(0x636f6465ull)};
  const Codebook cb(spec);
  const GlyphSet& glyphs = builtin_glyphs();
  PatternStore forward(2048), backward(2048);
  for (std::size_t i = 0; i < 26; ++i)
    forward.insert(std::string(1, glyphs.glyphs[i].label),
                   encode_pattern(cb, glyph_pattern(glyphs.glyphs[i])));
  for (std::size_t i = 26; i-- > 0;)
    backward.insert(std::string(1, glyphs.glyphs[i].label),
                    encode_pattern(cb, glyph_pattern(glyphs.glyphs[i])));
  for (std::uint64_t t = 0; t < 100; ++t) {
    const Glyph noisy = distort(glyphs.glyphs[t % 26], 3, Seed{500, t});
    const auto q = encode_pattern(cb, glyph_pattern(noisy));
    const auto fwd = forward.best_match(q);
    const auto bwd = backward.best_match(q);
    CHECK(fwd.hits[0].distance == bwd.hits[0].distance);
    // label comparison is only meaningful when the minimum is unique: on an
    // exact distance tie the lowest-row rule picks differently by design
    const auto dists = forward.batch_distances_xor(q);
    const double best = *std::min_element(dists.begin(), dists.end());
    if (std::count(dists.begin(), dists.end(), best) == 1)
      CHECK(fwd.hits[0].label == bwd.hits[0].label);
  }
}
