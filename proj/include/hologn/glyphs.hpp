#pragma once

// 7x5 binary letter bitmaps and the distortion operator used by the
// recognition experiments. Cells are row-major, 0 = white, 1 = black.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hologn/encoder.hpp"
#include "hologn/seed.hpp"

namespace hologn {

inline constexpr std::size_t kGlyphRows = 7;
inline constexpr std::size_t kGlyphCols = 5;
inline constexpr std::size_t kGlyphCells = kGlyphRows * kGlyphCols;

struct Glyph {
  char label = '?';
  std::array<std::uint8_t, kGlyphCells> cells{};  // row-major, values 0/1
};

struct GlyphSet {
  std::vector<Glyph> glyphs;  // exactly 26, labeled A..Z in order
  std::string source;
};

// The bundled public-domain 5x7 dot-matrix font.
const GlyphSet& builtin_glyphs();

// Parses the glyph file format: per letter a `:X` line then 7 lines of 5
// characters from {., #}. Requires exactly 26 letters A..Z.
GlyphSet parse_glyphs(std::istream& in, std::string source);
GlyphSet load_glyphs(const std::string& path);
std::string format_glyphs(const GlyphSet& set);

// One neuron per cell, row-major, binary alphabet.
SymbolPattern glyph_pattern(const Glyph& glyph);

// Flips exactly `flip_bits` distinct cells chosen uniformly without
// replacement; deterministic in the seed.
Glyph distort(const Glyph& glyph, std::size_t flip_bits, Seed seed);

}  // namespace hologn
