// hologn: encode patterns into hypervectors, manage stores, run recall and
// the capacity/sensitivity analysis, and drive the experiment suites.
//
// Exit codes: 0 success, 1 usage error, 2 data/format error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hologn/analysis.hpp"
#include "hologn/encoder.hpp"
#include "hologn/experiments.hpp"
#include "hologn/glyphs.hpp"
#include "hologn/pattern_memory.hpp"

namespace {

using namespace hologn;

constexpr std::uint64_t kDefaultSeed = 0x484f4c4f474e31ull;  // documented default

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-")
    std::cout << content;
  else
    write_file(out_path, content);
}

PatternStore load_store(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open store file: " + path);
  return PatternStore::load(in);
}

void save_store(const std::string& path, const PatternStore& store) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write store file: " + path);
  store.save(out);
}

SymbolPattern parse_symbols(const std::string& text, std::size_t alphabet) {
  SymbolPattern pattern;
  if (text.find(',') != std::string::npos) {
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
      pattern.symbols.push_back(static_cast<std::uint32_t>(std::stoul(item)));
  } else {
    for (const char c : text) {
      if (c < '0' || c > '9') throw std::runtime_error("symbol string must be digits or comma-separated");
      pattern.symbols.push_back(static_cast<std::uint32_t>(c - '0'));
    }
  }
  for (const auto s : pattern.symbols)
    if (s >= alphabet) throw std::runtime_error("symbol outside alphabet");
  return pattern;
}

DistanceEngine parse_engine(const std::string& name) {
  if (name == "xor") return DistanceEngine::xor_popcount;
  if (name == "complex") return DistanceEngine::complex_matrix;
  throw CLI::ValidationError("--engine", "must be xor or complex");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Holographic Graph Neuron: BSC hypervectors, associative recall, capacity analysis"};
  app.require_subcommand(1);
  app.fallthrough();  // accept global options after the subcommand name

  std::size_t d = 10000;
  double thr = 1e-6;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;
  std::string engine_name = "xor";
  std::string out_path;
  app.add_option("--d", d, "hypervector dimension")->capture_default_str();
  app.add_option("--thr", thr, "tail threshold probability")->capture_default_str();
  app.add_option("--seed", seed, "master seed (fixed default, never system entropy)")
      ->capture_default_str();
  app.add_option("--threads", threads, "worker threads (results are thread-count independent)")
      ->capture_default_str();
  app.add_option("--engine", engine_name, "distance engine: xor | complex")->capture_default_str();
  app.add_option("--out", out_path, "output file ('-' = stdout)");

  // encode
  auto* cmd_encode = app.add_subcommand("encode", "encode a glyph or symbol string to a vector file");
  std::string glyph_path, letter, symbols;
  std::size_t alphabet = 2;
  cmd_encode->add_option("--glyphs", glyph_path, "glyph file (defaults to the builtin font)");
  cmd_encode->add_option("--letter", letter, "letter A..Z to encode from the glyph set");
  cmd_encode->add_option("--symbols", symbols, "symbol pattern, digits or comma-separated");
  cmd_encode->add_option("--alphabet", alphabet, "alphabet size for --symbols")->capture_default_str();

  // store
  auto* cmd_store = app.add_subcommand("store", "manage a pattern store");
  std::string store_path, label, vector_path;
  auto* store_add = cmd_store->add_subcommand("add", "append a vector to a store (created if missing)");
  store_add->add_option("--store", store_path, "store file")->required();
  store_add->add_option("--label", label, "row label")->required();
  store_add->add_option("--vector", vector_path, "vector file")->required();
  auto* store_list = cmd_store->add_subcommand("list", "list store rows");
  store_list->add_option("--store", store_path, "store file")->required();

  // query
  auto* cmd_query = app.add_subcommand("query", "best match or xi-accurate recall against a store");
  double xi = -1.0;
  cmd_query->add_option("--store", store_path, "store file")->required();
  cmd_query->add_option("--vector", vector_path, "query vector file")->required();
  cmd_query->add_option("--xi", xi, "return all rows within distance xi (omit for best match)");

  // analysis
  auto* cmd_capacity = app.add_subcommand("capacity", "bundle capacity at (d, thr)");
  bool exact_pmf = false;
  cmd_capacity->add_flag("--exact", exact_pmf, "use the exact binomial pmf instead of the Gaussian approximation");
  auto* cmd_sensitivity = app.add_subcommand("sensitivity", "minimal detectable overlap at (d, thr, m, n)");
  std::size_t m = 15, n = 15, c = 0;
  cmd_sensitivity->add_option("--m", m, "first pattern length")->capture_default_str();
  cmd_sensitivity->add_option("--n", n, "second pattern length")->capture_default_str();
  cmd_sensitivity->add_flag("--exact", exact_pmf, "use the exact binomial pmf");
  auto* cmd_overlap = app.add_subcommand("overlap", "expected distance between bundles sharing c components");
  cmd_overlap->add_option("--c", c, "common component count")->required();
  cmd_overlap->add_option("--m", m, "first pattern length")->capture_default_str();
  cmd_overlap->add_option("--n", n, "second pattern length")->capture_default_str();

  // experiments
  auto* cmd_experiment = app.add_subcommand("experiment", "run an experiment suite, CSV output");
  std::size_t trials = 1000, learn_examples = 501, test_patterns = 500;
  std::string out_dir = ".";
  auto* exp_oneshot = cmd_experiment->add_subcommand("oneshot", "one-shot recall under distortion");
  exp_oneshot->add_option("--trials", trials, "trials per (letter, distortion)")->capture_default_str();
  exp_oneshot->add_option("--glyphs", glyph_path, "glyph file (defaults to the builtin font)");
  auto* exp_supervised = cmd_experiment->add_subcommand("supervised", "supervised class-bundle recall");
  exp_supervised->add_option("--examples", learn_examples, "training examples per letter")->capture_default_str();
  exp_supervised->add_option("--tests", test_patterns, "fresh test patterns per letter")->capture_default_str();
  exp_supervised->add_option("--glyphs", glyph_path, "glyph file (defaults to the builtin font)");
  auto* exp_timing = cmd_experiment->add_subcommand("timing", "query time vs store size, both engines");
  auto* exp_curves = cmd_experiment->add_subcommand("curves", "capacity/overlap/sensitivity tables");
  cmd_experiment->add_option("--out-dir", out_dir, "directory for the CSV files")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    const Seed master{seed, 0};
    const DistanceEngine engine = parse_engine(engine_name);

    if (*cmd_encode) {
      SymbolPattern pattern;
      std::size_t alphabet_size;
      std::size_t neuron_count;
      if (!letter.empty()) {
        if (letter.size() != 1 || letter[0] < 'A' || letter[0] > 'Z')
          throw std::runtime_error("--letter must be a single character A..Z");
        const GlyphSet set = glyph_path.empty() ? builtin_glyphs() : load_glyphs(glyph_path);
        pattern = glyph_pattern(set.glyphs[static_cast<std::size_t>(letter[0] - 'A')]);
        alphabet_size = 2;
        neuron_count = kGlyphCells;
      } else if (!symbols.empty()) {
        pattern = parse_symbols(symbols, alphabet);
        alphabet_size = alphabet;
        neuron_count = pattern.symbols.size();
      } else {
        std::cerr << "encode: one of --letter or --symbols is required\n";
        return 1;
      }
      GNArraySpec spec{neuron_count, alphabet_size, d, master.derive(0x636f6465ull)};
      const Codebook cb(spec);
      emit(out_path, encode_pattern(cb, pattern).to_text());
    } else if (*store_add) {
      PatternStore store = std::filesystem::exists(store_path) ? load_store(store_path)
                                                               : PatternStore(d);
      const std::size_t row = store.insert(label, HDVector::from_text(read_file(vector_path)));
      save_store(store_path, store);
      std::cout << row << "\n";
    } else if (*store_list) {
      const PatternStore store = load_store(store_path);
      for (std::size_t i = 0; i < store.size(); ++i)
        std::cout << i << "\t" << store.label(i) << "\n";
    } else if (*cmd_query) {
      const PatternStore store = load_store(store_path);
      const HDVector query = HDVector::from_text(read_file(vector_path));
      const QueryResult result = xi < 0.0 ? store.best_match(query, engine, threads)
                                          : store.recall_xi(query, xi, engine, threads);
      std::string text = "row\tlabel\tdistance\n";
      for (const auto& hit : result.hits) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.6f", hit.distance);
        text += std::to_string(hit.row) + "\t" + hit.label + "\t" + buf + "\n";
      }
      emit(out_path, text);
    } else if (*cmd_capacity) {
      const auto engine_kind = exact_pmf ? analysis::PmfEngine::exact : analysis::PmfEngine::approx;
      std::cout << analysis::capacity(d, thr, engine_kind) << "\n";
    } else if (*cmd_sensitivity) {
      const auto engine_kind = exact_pmf ? analysis::PmfEngine::exact : analysis::PmfEngine::approx;
      std::cout << analysis::sensitivity(d, thr, m, n, engine_kind) << "\n";
    } else if (*cmd_overlap) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.6f", analysis::overlap_distance(c, m, n));
      std::cout << buf << "\n";
    } else if (*cmd_experiment) {
      ExperimentConfig cfg;
      cfg.dimension = d;
      cfg.master_seed = master;
      cfg.threads = threads;
      cfg.engine = engine;
      cfg.tail_threshold = thr;
      cfg.trials = trials;
      cfg.learn_examples = learn_examples;
      cfg.test_patterns = test_patterns;
      if (!glyph_path.empty()) cfg.glyphs = load_glyphs(glyph_path);
      const std::filesystem::path dir(out_dir);
      std::filesystem::create_directories(dir);
      if (*exp_oneshot) {
        write_file((dir / "oneshot.csv").string(), run_oneshot(cfg).to_csv());
      } else if (*exp_supervised) {
        const auto result = run_supervised(cfg);
        write_file((dir / "supervised_accuracy.csv").string(), result.accuracy_csv());
        write_file((dir / "supervised_convergence.csv").string(), result.convergence_csv());
      } else if (*exp_timing) {
        write_file((dir / "timing.csv").string(), run_timing(cfg).to_csv());
      } else if (*exp_curves) {
        const auto result = run_analysis_curves(cfg);
        write_file((dir / "capacity.csv").string(), result.capacity_csv());
        write_file((dir / "overlap.csv").string(), result.overlap_csv());
        write_file((dir / "sensitivity.csv").string(), result.sensitivity_csv());
      } else {
        std::cerr << "experiment: choose oneshot, supervised, timing, or curves\n";
        return 1;
      }
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
