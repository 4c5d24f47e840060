#include "hologn/encoder.hpp"

#include <stdexcept>

namespace hologn {

namespace {
// Above this many element codes the cache is skipped and shifts are computed
// per call.
constexpr std::size_t kCodeCacheLimit = 8192;
}  // namespace

void GNArraySpec::validate() const {
  if (neuron_count < 1) throw std::invalid_argument("GNArraySpec: neuron_count must be >= 1");
  if (alphabet_size < 2) throw std::invalid_argument("GNArraySpec: alphabet_size must be >= 2");
  if (alphabet_size > dimension)
    throw std::invalid_argument("GNArraySpec: alphabet_size must not exceed dimension");
}

Codebook::Codebook(GNArraySpec spec) : spec_(spec) {
  spec_.validate();
  iv_.reserve(spec_.neuron_count);
  for (std::size_t j = 0; j < spec_.neuron_count; ++j)
    iv_.push_back(HDVector::random(spec_.dimension, spec_.master_seed.derive(kIvStreamBase + j)));

  if (spec_.neuron_count * spec_.alphabet_size <= kCodeCacheLimit) {
    code_cache_.reserve(spec_.neuron_count * spec_.alphabet_size);
    for (std::size_t j = 0; j < spec_.neuron_count; ++j)
      for (std::size_t i = 0; i < spec_.alphabet_size; ++i)
        code_cache_.push_back(cyclic_shift(iv_[j], static_cast<long long>(i)));
  }
}

const HDVector& Codebook::iv(std::size_t neuron) const {
  if (neuron >= spec_.neuron_count) throw std::out_of_range("Codebook::iv: neuron index out of range");
  return iv_[neuron];
}

HDVector Codebook::element_code(std::size_t neuron, std::size_t symbol) const {
  if (neuron >= spec_.neuron_count)
    throw std::out_of_range("Codebook::element_code: neuron index out of range");
  if (symbol >= spec_.alphabet_size)
    throw std::out_of_range("Codebook::element_code: symbol index out of range");
  if (!code_cache_.empty()) return code_cache_[neuron * spec_.alphabet_size + symbol];
  return cyclic_shift(iv_[neuron], static_cast<long long>(symbol));
}

HDVector encode_pattern(const Codebook& cb, const SymbolPattern& pattern) {
  const auto& spec = cb.spec();
  if (pattern.symbols.size() != spec.neuron_count)
    throw std::invalid_argument("encode_pattern: pattern length does not match neuron count");

  std::vector<HDVector> scratch;
  std::vector<const HDVector*> codes;
  codes.reserve(spec.neuron_count);
  const bool cached = !cb.code_cache_.empty();
  if (!cached) scratch.reserve(spec.neuron_count);
  for (std::size_t j = 0; j < spec.neuron_count; ++j) {
    const std::uint32_t symbol = pattern.symbols[j];
    if (symbol >= spec.alphabet_size)
      throw std::invalid_argument("encode_pattern: symbol outside alphabet");
    if (cached) {
      codes.push_back(&cb.code_cache_[j * spec.alphabet_size + symbol]);
    } else {
      scratch.push_back(cyclic_shift(cb.iv_[j], static_cast<long long>(symbol)));
      codes.push_back(&scratch.back());
    }
  }
  return majority_bundle(std::span<const HDVector* const>(codes), cb.encode_tiebreak_seed());
}

HDVector bundle_class(std::span<const HDVector> encodings, Seed tiebreak_seed) {
  if (encodings.empty()) throw std::invalid_argument("bundle_class: empty encoding list");
  return majority_bundle(encodings, tiebreak_seed);
}

}  // namespace hologn
