#include "hologn/glyphs.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hologn {

namespace {

constexpr const char* kBuiltinFont = R"FONT(:A
..#..
.#.#.
#...#
#...#
#####
#...#
#...#
:B
####.
#...#
#...#
####.
#...#
#...#
####.
:C
.###.
#...#
#....
#....
#....
#...#
.###.
:D
###..
#..#.
#...#
#...#
#...#
#..#.
###..
:E
#####
#....
#....
####.
#....
#....
#####
:F
#####
#....
#....
####.
#....
#....
#....
:G
.###.
#...#
#....
#.###
#...#
#...#
.####
:H
#...#
#...#
#...#
#####
#...#
#...#
#...#
:I
.###.
..#..
..#..
..#..
..#..
..#..
.###.
:J
..###
...#.
...#.
...#.
...#.
#..#.
.##..
:K
#...#
#..#.
#.#..
##...
#.#..
#..#.
#...#
:L
#....
#....
#....
#....
#....
#....
#####
:M
#...#
##.##
#.#.#
#.#.#
#...#
#...#
#...#
:N
#...#
#...#
##..#
#.#.#
#..##
#...#
#...#
:O
.###.
#...#
#...#
#...#
#...#
#...#
.###.
:P
####.
#...#
#...#
####.
#....
#....
#....
:Q
.###.
#...#
#...#
#...#
#.#.#
#..#.
.##.#
:R
####.
#...#
#...#
####.
#.#..
#..#.
#...#
:S
.####
#....
#....
.###.
....#
....#
####.
:T
#####
..#..
..#..
..#..
..#..
..#..
..#..
:U
#...#
#...#
#...#
#...#
#...#
#...#
.###.
:V
#...#
#...#
#...#
#...#
#...#
.#.#.
..#..
:W
#...#
#...#
#...#
#.#.#
#.#.#
#.#.#
.#.#.
:X
#...#
#...#
.#.#.
..#..
.#.#.
#...#
#...#
:Y
#...#
#...#
#...#
.#.#.
..#..
..#..
..#..
:Z
#####
....#
...#.
..#..
.#...
#....
#####
)FONT";

}  // namespace

const GlyphSet& builtin_glyphs() {
  static const GlyphSet set = [] {
    std::istringstream in(kBuiltinFont);
    return parse_glyphs(in, "builtin 5x7 dot-matrix font");
  }();
  return set;
}

GlyphSet parse_glyphs(std::istream& in, std::string source) {
  GlyphSet set;
  set.source = std::move(source);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.size() != 2 || line[0] != ':')
      throw std::runtime_error("glyph file line " + std::to_string(line_no) +
                               ": expected a `:X` label line");
    Glyph glyph;
    glyph.label = line[1];
    for (std::size_t row = 0; row < kGlyphRows; ++row) {
      if (!std::getline(in, line))
        throw std::runtime_error("glyph file: truncated bitmap for label " +
                                 std::string(1, glyph.label));
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.size() != kGlyphCols)
        throw std::runtime_error("glyph file line " + std::to_string(line_no) +
                                 ": expected " + std::to_string(kGlyphCols) + " cells");
      for (std::size_t col = 0; col < kGlyphCols; ++col) {
        const char c = line[col];
        if (c != '.' && c != '#')
          throw std::runtime_error("glyph file line " + std::to_string(line_no) +
                                   ": cells must be . or #");
        glyph.cells[row * kGlyphCols + col] = c == '#' ? 1 : 0;
      }
    }
    set.glyphs.push_back(glyph);
  }
  if (set.glyphs.size() != 26)
    throw std::runtime_error("glyph file: expected 26 letters, got " +
                             std::to_string(set.glyphs.size()));
  for (std::size_t i = 0; i < 26; ++i)
    if (set.glyphs[i].label != static_cast<char>('A' + i))
      throw std::runtime_error("glyph file: letters must be A..Z in order");
  return set;
}

GlyphSet load_glyphs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open glyph file: " + path);
  return parse_glyphs(in, path);
}

std::string format_glyphs(const GlyphSet& set) {
  std::string out;
  for (const auto& glyph : set.glyphs) {
    out += ':';
    out += glyph.label;
    out += '\n';
    for (std::size_t row = 0; row < kGlyphRows; ++row) {
      for (std::size_t col = 0; col < kGlyphCols; ++col)
        out += glyph.cells[row * kGlyphCols + col] ? '#' : '.';
      out += '\n';
    }
  }
  return out;
}

SymbolPattern glyph_pattern(const Glyph& glyph) {
  SymbolPattern pattern;
  pattern.symbols.assign(glyph.cells.begin(), glyph.cells.end());
  return pattern;
}

Glyph distort(const Glyph& glyph, std::size_t flip_bits, Seed seed) {
  if (flip_bits > kGlyphCells)
    throw std::invalid_argument("distort: flip_bits exceeds cell count");
  Glyph out = glyph;
  // partial Fisher-Yates over the cell indices
  std::array<std::uint8_t, kGlyphCells> order{};
  for (std::size_t i = 0; i < kGlyphCells; ++i) order[i] = static_cast<std::uint8_t>(i);
  CounterRng rng(seed);
  for (std::size_t i = 0; i < flip_bits; ++i) {
    const std::size_t j = i + rng.next_below(kGlyphCells - i);
    std::swap(order[i], order[j]);
    out.cells[order[i]] ^= 1;
  }
  return out;
}

}  // namespace hologn
