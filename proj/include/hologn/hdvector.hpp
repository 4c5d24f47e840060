#pragma once

// Binary Spatter Code hypervector: a fixed-dimension bit vector packed into
// 64-bit words (little-endian bit order within a word, padding bits zero).
// Values are immutable in spirit: every operation returns a fresh vector, so
// sharing across threads is safe.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "hologn/seed.hpp"

namespace hologn {

class HDVector {
 public:
  // All-zero vector of the given dimension. dimension >= 1.
  explicit HDVector(std::size_t dimension);

  // Fair-coin random vector, fully determined by (dimension, seed).
  // dimension >= 64.
  static HDVector random(std::size_t dimension, Seed seed);

  [[nodiscard]] std::size_t dimension() const { return dimension_; }
  [[nodiscard]] std::size_t word_count() const { return words_.size(); }
  [[nodiscard]] std::span<const std::uint64_t> words() const { return words_; }

  [[nodiscard]] bool bit(std::size_t position) const;
  void set_bit(std::size_t position, bool value);

  // Number of one-bits.
  [[nodiscard]] std::size_t density() const;

  // Lowercase hex of the packed words, word 0 (least significant) first.
  [[nodiscard]] std::string to_hex() const;
  static HDVector from_hex(std::size_t dimension, const std::string& hex);

  // Dump/load format: dimension in decimal ASCII, newline, hex, newline.
  [[nodiscard]] std::string to_text() const;
  static HDVector from_text(const std::string& text);

  bool operator==(const HDVector&) const = default;

 private:
  std::size_t dimension_;
  std::vector<std::uint64_t> words_;

  void clear_padding();
  friend HDVector cyclic_shift(const HDVector&, long long);
  friend HDVector operator^(const HDVector&, const HDVector&);
  friend HDVector complement(const HDVector&);
  friend HDVector majority_bundle(std::span<const HDVector* const>, Seed);
};

// Rotation of the bit positions: bit p of the input lands at (p + amount) mod d.
// Negative amounts invert; amounts reduce modulo d.
HDVector cyclic_shift(const HDVector& v, long long amount);

// Position-wise XOR. Dimensions must match.
HDVector operator^(const HDVector& a, const HDVector& b);

// Number of positions where a and b differ.
std::size_t mismatch_count(const HDVector& a, const HDVector& b);

// Normalized Hamming distance in [0, 1].
double hamming_distance(const HDVector& a, const HDVector& b);

// Bitwise negation (test helper, not part of the BSC algebra).
HDVector complement(const HDVector& v);

// Majority vote per position. Strict majority of ones -> 1, of zeros -> 0;
// with an even component count, exact ties take the bit of a deterministic
// random vector drawn from tiebreak_seed. List must be non-empty, dimensions
// equal.
HDVector majority_bundle(std::span<const HDVector* const> components, Seed tiebreak_seed);
HDVector majority_bundle(std::span<const HDVector> components, Seed tiebreak_seed);

}  // namespace hologn
