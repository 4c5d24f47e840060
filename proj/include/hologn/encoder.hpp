#pragma once

// HoloGN encoding: one initialization vector per graph neuron, element codes
// by cyclic shift, and a single majority bundle representing a whole pattern.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hologn/hdvector.hpp"
#include "hologn/seed.hpp"

namespace hologn {

struct GNArraySpec {
  std::size_t neuron_count = 0;    // pattern length n
  std::size_t alphabet_size = 0;   // symbols per neuron
  std::size_t dimension = 10000;   // d
  Seed master_seed;

  void validate() const;
};

struct SymbolPattern {
  std::vector<std::uint32_t> symbols;  // one entry per neuron, each < alphabet_size
};

// Substream tags hung off the master seed.
inline constexpr std::uint64_t kIvStreamBase = 0;
inline constexpr std::uint64_t kEncodeTieTag = 0x656e2d746965ull;  // "en-tie"
inline constexpr std::uint64_t kClassTieTag = 0x636c2d746965ull;   // "cl-tie"

class Codebook {
 public:
  explicit Codebook(GNArraySpec spec);

  [[nodiscard]] const GNArraySpec& spec() const { return spec_; }
  [[nodiscard]] const HDVector& iv(std::size_t neuron) const;

  // E(j, i) = Sh(IV_j, i). Cached for small alphabets, computed on demand
  // otherwise.
  [[nodiscard]] HDVector element_code(std::size_t neuron, std::size_t symbol) const;

  [[nodiscard]] Seed encode_tiebreak_seed() const { return spec_.master_seed.derive(kEncodeTieTag); }

  friend HDVector encode_pattern(const Codebook&, const SymbolPattern&);

 private:
  GNArraySpec spec_;
  std::vector<HDVector> iv_;
  std::vector<HDVector> code_cache_;  // neuron-major, empty when not cached
};

// Majority bundle of the n activated element codes.
HDVector encode_pattern(const Codebook& cb, const SymbolPattern& pattern);

// Bundle per-example encodings into one class representative.
HDVector bundle_class(std::span<const HDVector> encodings, Seed tiebreak_seed);

}  // namespace hologn
