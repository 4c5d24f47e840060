#include "hologn/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <stdexcept>

#include "hologn/analysis.hpp"
#include "hologn/parallel.hpp"

namespace hologn {

namespace {

constexpr std::uint64_t kCodebookTag = 0x636f6465ull;   // "code"
constexpr std::uint64_t kOneshotTag = 0x6f6e6531ull;    // "one1"
constexpr std::uint64_t kTrainTag = 0x7472616eull;      // "tran"
constexpr std::uint64_t kTestTag = 0x74657374ull;       // "test"
constexpr std::uint64_t kTimingTag = 0x74696d65ull;     // "time"
constexpr std::uint64_t kCurvesTag = 0x63757276ull;     // "curv"

std::string format_fixed(double value, int digits = 6) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
  return buf;
}

Codebook make_letter_codebook(const ExperimentConfig& cfg) {
  GNArraySpec spec;
  spec.neuron_count = kGlyphCells;
  spec.alphabet_size = 2;
  spec.dimension = cfg.dimension;
  spec.master_seed = cfg.master_seed.derive(kCodebookTag);
  return Codebook(spec);
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

}  // namespace

std::string OneshotResult::to_csv() const {
  std::string out = "letter,flip_bits,distortion_rate,accuracy\n";
  for (const auto& row : rows) {
    out += row.letter;
    out += ',' + std::to_string(row.flip_bits) + ',' +
           format_fixed(static_cast<double>(row.flip_bits) / kGlyphCells) + ',' +
           format_fixed(static_cast<double>(row.correct) / static_cast<double>(row.trials)) +
           '\n';
  }
  return out;
}

double OneshotResult::mean_accuracy(std::size_t flip_bits) const {
  std::size_t correct = 0, total = 0;
  for (const auto& row : rows) {
    if (row.flip_bits != flip_bits) continue;
    correct += row.correct;
    total += row.trials;
  }
  if (total == 0) throw std::invalid_argument("mean_accuracy: no rows at that flip level");
  return static_cast<double>(correct) / static_cast<double>(total);
}

OneshotResult run_oneshot(const ExperimentConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("run_oneshot: trials must be >= 1");
  if (cfg.max_flip_bits > kGlyphCells || cfg.min_flip_bits > cfg.max_flip_bits)
    throw std::invalid_argument("run_oneshot: bad flip range");
  const GlyphSet& glyphs = cfg.glyph_set();
  const Codebook cb = make_letter_codebook(cfg);

  PatternStore store(cfg.dimension);
  for (const auto& glyph : glyphs.glyphs)
    store.insert(std::string(1, glyph.label), encode_pattern(cb, glyph_pattern(glyph)));

  const Seed distort_base = cfg.master_seed.derive(kOneshotTag);
  const std::size_t levels = cfg.max_flip_bits - cfg.min_flip_bits + 1;
  std::vector<OneshotRow> rows(levels * 26);
  parallel_for(levels * 26, cfg.threads, [&](std::size_t task) {
    const std::size_t level = task / 26;
    const std::size_t letter = task % 26;
    const std::size_t flip_bits = cfg.min_flip_bits + level;
    std::size_t correct = 0;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      const Seed seed = distort_base.derive((flip_bits * 26 + letter) * cfg.trials + t);
      const Glyph noisy = distort(glyphs.glyphs[letter], flip_bits, seed);
      const auto hit = store.best_match(encode_pattern(cb, glyph_pattern(noisy)), cfg.engine);
      if (hit.hits[0].row == letter) ++correct;
    }
    rows[task] = OneshotRow{glyphs.glyphs[letter].label, flip_bits, correct, cfg.trials};
  });

  OneshotResult result;
  result.rows = std::move(rows);
  return result;
}

std::string SupervisedResult::accuracy_csv() const {
  std::string out = "flip_bits,distortion_rate,accuracy\n";
  for (const auto& [bits, accuracy] : accuracy_by_distortion)
    out += std::to_string(bits) + ',' +
           format_fixed(static_cast<double>(bits) / kGlyphCells) + ',' +
           format_fixed(accuracy) + '\n';
  return out;
}

std::string SupervisedResult::convergence_csv() const {
  std::string out = "examples,accuracy\n";
  for (const auto& [examples, accuracy] : accuracy_by_examples)
    out += std::to_string(examples) + ',' + format_fixed(accuracy) + '\n';
  return out;
}

SupervisedResult run_supervised(const ExperimentConfig& cfg) {
  if (cfg.learn_examples < 1) throw std::invalid_argument("run_supervised: learn_examples >= 1");
  if (cfg.test_patterns < 1) throw std::invalid_argument("run_supervised: test_patterns >= 1");
  const GlyphSet& glyphs = cfg.glyph_set();
  const Codebook cb = make_letter_codebook(cfg);

  // An even example count would put every tie on the tie-break vector; use
  // the next odd count instead, as the convergence grid does.
  const std::size_t examples =
      cfg.learn_examples % 2 == 0 ? cfg.learn_examples + 1 : cfg.learn_examples;
  std::size_t max_examples = examples;
  for (const std::size_t e : cfg.example_grid) max_examples = std::max(max_examples, e);

  const Seed train_base = cfg.master_seed.derive(kTrainTag);
  const Seed test_base = cfg.master_seed.derive(kTestTag);
  const Seed class_tie = cfg.master_seed.derive(kClassTieTag);

  auto train_encodings = [&](std::size_t flip_bits, std::size_t letter, std::size_t count) {
    std::vector<HDVector> encodings;
    encodings.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      const Seed seed = train_base.derive((flip_bits * 26 + letter) * max_examples + i);
      encodings.push_back(
          encode_pattern(cb, glyph_pattern(distort(glyphs.glyphs[letter], flip_bits, seed))));
    }
    return encodings;
  };
  auto test_correct = [&](std::size_t flip_bits, std::size_t letter,
                          const PatternStore& classes) {
    std::size_t correct = 0;
    for (std::size_t t = 0; t < cfg.test_patterns; ++t) {
      const Seed seed = test_base.derive((flip_bits * 26 + letter) * cfg.test_patterns + t);
      const Glyph noisy = distort(glyphs.glyphs[letter], flip_bits, seed);
      const auto hit = classes.best_match(encode_pattern(cb, glyph_pattern(noisy)), cfg.engine);
      if (hit.hits[0].row == letter) ++correct;
    }
    return correct;
  };

  SupervisedResult result;

  // accuracy vs distortion at fixed e
  for (const std::size_t flip_bits : cfg.supervised_flip_bits) {
    std::vector<HDVector> classes_by_letter(26, HDVector(cfg.dimension));
    parallel_for(26, cfg.threads, [&](std::size_t letter) {
      const auto encodings = train_encodings(flip_bits, letter, examples);
      classes_by_letter[letter] =
          bundle_class(encodings, class_tie.derive(flip_bits * 26 + letter));
    });
    PatternStore classes(cfg.dimension);
    for (std::size_t letter = 0; letter < 26; ++letter)
      classes.insert(std::string(1, glyphs.glyphs[letter].label),
                     std::move(classes_by_letter[letter]));
    std::vector<std::size_t> correct(26);
    parallel_for(26, cfg.threads,
                 [&](std::size_t letter) { correct[letter] = test_correct(flip_bits, letter, classes); });
    std::size_t total = 0;
    for (const auto c : correct) total += c;
    result.accuracy_by_distortion.emplace_back(
        flip_bits, static_cast<double>(total) / static_cast<double>(26 * cfg.test_patterns));
  }

  // accuracy vs e at the convergence distortion level; nested training sets
  // share the stream prefix, and the test set is encoded once
  {
    const std::size_t flip_bits = cfg.convergence_flip_bits;
    std::vector<std::vector<HDVector>> pool(26);
    std::vector<std::vector<HDVector>> test_encodings(26);
    parallel_for(26, cfg.threads, [&](std::size_t letter) {
      pool[letter] = train_encodings(flip_bits, letter, max_examples);
      test_encodings[letter].reserve(cfg.test_patterns);
      for (std::size_t t = 0; t < cfg.test_patterns; ++t) {
        const Seed seed = test_base.derive((flip_bits * 26 + letter) * cfg.test_patterns + t);
        test_encodings[letter].push_back(
            encode_pattern(cb, glyph_pattern(distort(glyphs.glyphs[letter], flip_bits, seed))));
      }
    });
    for (const std::size_t e : cfg.example_grid) {
      if (e < 1 || e > max_examples) throw std::invalid_argument("run_supervised: bad example grid");
      PatternStore classes(cfg.dimension);
      for (std::size_t letter = 0; letter < 26; ++letter)
        classes.insert(std::string(1, glyphs.glyphs[letter].label),
                       bundle_class(std::span<const HDVector>(pool[letter].data(), e),
                                    class_tie.derive((1000 + e) * 26 + letter)));
      std::vector<std::size_t> correct(26, 0);
      parallel_for(26, cfg.threads, [&](std::size_t letter) {
        for (const auto& query : test_encodings[letter])
          if (classes.best_match(query, cfg.engine).hits[0].row == letter) ++correct[letter];
      });
      std::size_t total = 0;
      for (const auto c : correct) total += c;
      result.accuracy_by_examples.emplace_back(
          e, static_cast<double>(total) / static_cast<double>(26 * cfg.test_patterns));
    }
  }
  return result;
}

std::string TimingResult::to_csv() const {
  std::string out = "engine,patterns,median_ms\n";
  for (const auto& row : rows)
    out += row.engine + ',' + std::to_string(row.patterns) + ',' +
           format_fixed(row.median_ms, 3) + '\n';
  return out;
}

TimingResult run_timing(const ExperimentConfig& cfg) {
  const Seed base = cfg.master_seed.derive(kTimingTag);
  std::size_t max_l = 0;
  for (const auto l : cfg.timing_ladder) max_l = std::max(max_l, l);
  std::vector<HDVector> vectors;
  vectors.reserve(max_l);
  for (std::size_t i = 0; i < max_l; ++i)
    vectors.push_back(HDVector::random(cfg.dimension, base.derive(i)));
  const HDVector query = HDVector::random(cfg.dimension, base.derive(max_l));

  TimingResult result;
  for (const std::size_t l : cfg.timing_ladder) {
    PatternStore store(cfg.dimension);
    for (std::size_t i = 0; i < l; ++i) store.insert(std::to_string(i), vectors[i]);

    std::vector<std::size_t> xor_counts, complex_counts;
    auto time_engine = [&](DistanceEngine engine, std::vector<std::size_t>& counts_out) {
      std::vector<double> times;
      times.reserve(cfg.timing_repetitions);
      for (std::size_t rep = 0; rep < cfg.timing_repetitions; ++rep) {
        const auto start = std::chrono::steady_clock::now();
        auto counts = store.batch_mismatches(query, engine, cfg.threads);
        const auto stop = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
        counts_out = std::move(counts);
      }
      return median(std::move(times));
    };

    result.rows.push_back(
        TimingRow{"xor", l, time_engine(DistanceEngine::xor_popcount, xor_counts)});
    if (cfg.time_complex_engine) {
      result.rows.push_back(
          TimingRow{"complex", l, time_engine(DistanceEngine::complex_matrix, complex_counts)});
      if (complex_counts != xor_counts)
        throw std::logic_error("run_timing: engines disagree on distances");
    }
  }
  return result;
}

std::string CurvesResult::capacity_csv() const {
  std::string out = "d,capacity\n";
  for (const auto& [d, cap] : capacity_by_dimension)
    out += std::to_string(d) + ',' + std::to_string(cap) + '\n';
  return out;
}

std::string CurvesResult::overlap_csv() const {
  std::string out = "c,predicted_distance,empirical_distance\n";
  for (const auto& row : overlap)
    out += std::to_string(row.common) + ',' + format_fixed(row.predicted) + ',' +
           format_fixed(row.empirical) + '\n';
  return out;
}

std::string CurvesResult::sensitivity_csv() const {
  std::string out = "pattern_size,sensitivity\n";
  for (const auto& [size, sens] : sensitivity_by_size)
    out += std::to_string(size) + ',' + std::to_string(sens) + '\n';
  return out;
}

CurvesResult run_analysis_curves(const ExperimentConfig& cfg) {
  CurvesResult result;
  for (const std::size_t d : cfg.capacity_dimensions)
    result.capacity_by_dimension.emplace_back(d, analysis::capacity(d, cfg.tail_threshold));

  const std::size_t m = cfg.overlap_pattern_size;
  if (m % 2 == 0) throw std::invalid_argument("run_analysis_curves: overlap pattern size must be odd");
  const Seed base = cfg.master_seed.derive(kCurvesTag);
  result.overlap.resize(m + 1);
  parallel_for(m + 1, cfg.threads, [&](std::size_t c) {
    double sum = 0.0;
    for (std::size_t t = 0; t < cfg.overlap_trials; ++t) {
      const Seed trial = base.derive(c * cfg.overlap_trials + t);
      std::vector<HDVector> left, right;
      left.reserve(m);
      right.reserve(m);
      for (std::size_t i = 0; i < c; ++i) {
        left.push_back(HDVector::random(cfg.dimension, trial.derive(i)));
        right.push_back(left.back());
      }
      for (std::size_t i = c; i < m; ++i)
        left.push_back(HDVector::random(cfg.dimension, trial.derive(1000 + i)));
      for (std::size_t i = c; i < m; ++i)
        right.push_back(HDVector::random(cfg.dimension, trial.derive(2000 + i)));
      const HDVector a = majority_bundle(std::span<const HDVector>(left), trial.derive(9001));
      const HDVector b = majority_bundle(std::span<const HDVector>(right), trial.derive(9002));
      sum += hamming_distance(a, b);
    }
    result.overlap[c] = CurvesResult::OverlapRow{
        c, analysis::overlap_distance(c, m, m),
        sum / static_cast<double>(cfg.overlap_trials)};
  });

  for (const std::size_t size : cfg.sensitivity_sizes)
    result.sensitivity_by_size.emplace_back(
        size, analysis::sensitivity(cfg.dimension, cfg.tail_threshold, size, size));
  return result;
}

}  // namespace hologn
