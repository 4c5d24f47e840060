#pragma once

// Desk-scale experiment drivers: one-shot letter recall under distortion,
// supervised class bundles, query timing, and the analytic-vs-empirical
// capacity/overlap/sensitivity tables. All runs are reproducible bit-for-bit
// from (config, master_seed), independent of the thread count.

#include <cstddef>
#include <string>
#include <vector>

#include "hologn/glyphs.hpp"
#include "hologn/pattern_memory.hpp"
#include "hologn/seed.hpp"

namespace hologn {

struct ExperimentConfig {
  std::size_t dimension = 10000;
  Seed master_seed{0x484f4c4f474e31ull, 0};
  unsigned threads = 1;

  // one-shot recall
  std::size_t trials = 1000;                 // per (letter, distortion level)
  std::size_t min_flip_bits = 0;
  std::size_t max_flip_bits = 5;

  // supervised learning
  std::vector<std::size_t> supervised_flip_bits = {1, 2, 3, 4, 5, 6, 7, 8,
                                                   9, 10, 11, 12, 13, 14, 15};
  std::size_t learn_examples = 501;          // e; bundled per letter
  std::vector<std::size_t> example_grid = {1, 5, 25, 101, 251, 501};
  std::size_t convergence_flip_bits = 5;     // 14.3 % distortion
  std::size_t test_patterns = 500;           // fresh queries per letter

  // timing
  std::vector<std::size_t> timing_ladder = {1250, 2500, 5000, 10000, 20000};
  std::size_t timing_repetitions = 9;
  bool time_complex_engine = true;

  // analysis curves
  double tail_threshold = 1e-6;
  std::vector<std::size_t> capacity_dimensions = {1000, 2000, 3000, 4000, 5000,
                                                  6000, 7000, 8000, 9000, 10000};
  std::size_t overlap_pattern_size = 15;     // m = n
  std::size_t overlap_trials = 200;
  std::vector<std::size_t> sensitivity_sizes = {15, 55, 105, 205, 305, 405, 505};

  GlyphSet glyphs;  // empty -> builtin
  DistanceEngine engine = DistanceEngine::xor_popcount;

  [[nodiscard]] const GlyphSet& glyph_set() const {
    return glyphs.glyphs.empty() ? builtin_glyphs() : glyphs;
  }
};

struct OneshotRow {
  char letter;
  std::size_t flip_bits;
  std::size_t correct;
  std::size_t trials;
};

struct OneshotResult {
  std::vector<OneshotRow> rows;  // letter-major within flip level
  [[nodiscard]] std::string to_csv() const;
  [[nodiscard]] double mean_accuracy(std::size_t flip_bits) const;
};

struct SupervisedResult {
  std::vector<std::pair<std::size_t, double>> accuracy_by_distortion;  // (flip_bits, accuracy)
  std::vector<std::pair<std::size_t, double>> accuracy_by_examples;    // (e, accuracy)
  [[nodiscard]] std::string accuracy_csv() const;
  [[nodiscard]] std::string convergence_csv() const;
};

struct TimingRow {
  std::string engine;
  std::size_t patterns;
  double median_ms;
};

struct TimingResult {
  std::vector<TimingRow> rows;
  [[nodiscard]] std::string to_csv() const;
};

struct CurvesResult {
  std::vector<std::pair<std::size_t, std::size_t>> capacity_by_dimension;
  struct OverlapRow {
    std::size_t common;
    double predicted;
    double empirical;
  };
  std::vector<OverlapRow> overlap;
  std::vector<std::pair<std::size_t, std::size_t>> sensitivity_by_size;
  [[nodiscard]] std::string capacity_csv() const;
  [[nodiscard]] std::string overlap_csv() const;
  [[nodiscard]] std::string sensitivity_csv() const;
};

OneshotResult run_oneshot(const ExperimentConfig& cfg);
SupervisedResult run_supervised(const ExperimentConfig& cfg);
TimingResult run_timing(const ExperimentConfig& cfg);
CurvesResult run_analysis_curves(const ExperimentConfig& cfg);

}  // namespace hologn
