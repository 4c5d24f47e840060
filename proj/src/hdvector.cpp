#include "hologn/hdvector.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace hologn {

namespace {

constexpr std::size_t kBitsPerWord = 64;

std::size_t words_for(std::size_t dimension) {
  return (dimension + kBitsPerWord - 1) / kBitsPerWord;
}

}  // namespace

HDVector::HDVector(std::size_t dimension)
    : dimension_(dimension), words_(words_for(dimension), 0) {
  if (dimension == 0) throw std::invalid_argument("HDVector: dimension must be positive");
}

void HDVector::clear_padding() {
  const std::size_t tail = dimension_ % kBitsPerWord;
  if (tail != 0) words_.back() &= (~0ull >> (kBitsPerWord - tail));
}

HDVector HDVector::random(std::size_t dimension, Seed seed) {
  if (dimension < 64) throw std::invalid_argument("HDVector::random: dimension must be >= 64");
  HDVector v(dimension);
  CounterRng rng(seed);
  for (auto& w : v.words_) w = rng.next();
  v.clear_padding();
  return v;
}

bool HDVector::bit(std::size_t position) const {
  if (position >= dimension_) throw std::out_of_range("HDVector::bit: position out of range");
  return (words_[position / kBitsPerWord] >> (position % kBitsPerWord)) & 1u;
}

void HDVector::set_bit(std::size_t position, bool value) {
  if (position >= dimension_) throw std::out_of_range("HDVector::set_bit: position out of range");
  const std::uint64_t mask = 1ull << (position % kBitsPerWord);
  if (value)
    words_[position / kBitsPerWord] |= mask;
  else
    words_[position / kBitsPerWord] &= ~mask;
}

std::size_t HDVector::density() const {
  std::size_t ones = 0;
  for (auto w : words_) ones += std::popcount(w);
  return ones;
}

std::string HDVector::to_hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(words_.size() * 16);
  for (auto w : words_)
    for (int nibble = 15; nibble >= 0; --nibble)
      out.push_back(digits[(w >> (4 * nibble)) & 0xf]);
  return out;
}

HDVector HDVector::from_hex(std::size_t dimension, const std::string& hex) {
  HDVector v(dimension);
  if (hex.size() != v.words_.size() * 16)
    throw std::invalid_argument("HDVector::from_hex: hex length does not match dimension");
  for (std::size_t i = 0; i < v.words_.size(); ++i) {
    std::uint64_t w = 0;
    for (std::size_t j = 0; j < 16; ++j) {
      const char c = hex[i * 16 + j];
      std::uint64_t nibble;
      if (c >= '0' && c <= '9')
        nibble = static_cast<std::uint64_t>(c - '0');
      else if (c >= 'a' && c <= 'f')
        nibble = static_cast<std::uint64_t>(c - 'a' + 10);
      else
        throw std::invalid_argument("HDVector::from_hex: invalid hex digit");
      w = (w << 4) | nibble;
    }
    v.words_[i] = w;
  }
  const std::size_t tail = dimension % kBitsPerWord;
  if (tail != 0 && (v.words_.back() >> tail) != 0)
    throw std::invalid_argument("HDVector::from_hex: nonzero padding bits");
  return v;
}

std::string HDVector::to_text() const {
  return std::to_string(dimension_) + "\n" + to_hex() + "\n";
}

HDVector HDVector::from_text(const std::string& text) {
  const std::size_t nl = text.find('\n');
  if (nl == std::string::npos)
    throw std::invalid_argument("HDVector::from_text: missing header line");
  std::size_t dimension = 0;
  const auto* first = text.data();
  const auto [ptr, ec] = std::from_chars(first, first + nl, dimension);
  if (ec != std::errc{} || ptr != first + nl || dimension == 0)
    throw std::invalid_argument("HDVector::from_text: bad dimension header");
  std::string hex = text.substr(nl + 1);
  while (!hex.empty() && (hex.back() == '\n' || hex.back() == '\r')) hex.pop_back();
  return from_hex(dimension, hex);
}

HDVector cyclic_shift(const HDVector& v, long long amount) {
  const auto d = static_cast<long long>(v.dimension());
  std::size_t s = static_cast<std::size_t>(((amount % d) + d) % d);
  if (s == 0) return v;

  // result = (v << s) | (v >> (d - s)) over the d-bit ring
  HDVector out(v.dimension());
  const std::size_t word_shift = s / kBitsPerWord;
  const std::size_t bit_shift = s % kBitsPerWord;
  const std::size_t nwords = v.words_.size();
  auto word_or_zero = [&](std::size_t i) -> std::uint64_t {
    return i < nwords ? v.words_[i] : 0;
  };
  // low part: v << s
  for (std::size_t i = nwords; i-- > 0;) {
    std::uint64_t w = i >= word_shift ? word_or_zero(i - word_shift) << bit_shift : 0;
    if (bit_shift != 0 && i >= word_shift + 1)
      w |= word_or_zero(i - word_shift - 1) >> (kBitsPerWord - bit_shift);
    out.words_[i] = w;
  }
  // high part: v >> (d - s), i.e. bits d-s .. d-1 wrap to the bottom
  const std::size_t r = v.dimension() - s;
  const std::size_t rw = r / kBitsPerWord;
  const std::size_t rb = r % kBitsPerWord;
  for (std::size_t i = 0; i + rw < nwords; ++i) {
    std::uint64_t w = word_or_zero(i + rw) >> rb;
    if (rb != 0 && i + rw + 1 < nwords) w |= word_or_zero(i + rw + 1) << (kBitsPerWord - rb);
    out.words_[i] |= w;
  }
  out.clear_padding();
  return out;
}

HDVector operator^(const HDVector& a, const HDVector& b) {
  if (a.dimension() != b.dimension())
    throw std::invalid_argument("xor: dimension mismatch");
  HDVector out(a.dimension());
  for (std::size_t i = 0; i < a.words_.size(); ++i) out.words_[i] = a.words_[i] ^ b.words_[i];
  return out;
}

std::size_t mismatch_count(const HDVector& a, const HDVector& b) {
  if (a.dimension() != b.dimension())
    throw std::invalid_argument("hamming_distance: dimension mismatch");
  std::size_t count = 0;
  const auto aw = a.words(), bw = b.words();
  for (std::size_t i = 0; i < aw.size(); ++i) count += std::popcount(aw[i] ^ bw[i]);
  return count;
}

double hamming_distance(const HDVector& a, const HDVector& b) {
  return static_cast<double>(mismatch_count(a, b)) / static_cast<double>(a.dimension());
}

HDVector complement(const HDVector& v) {
  HDVector out(v.dimension());
  for (std::size_t i = 0; i < v.words_.size(); ++i) out.words_[i] = ~v.words_[i];
  out.clear_padding();
  return out;
}

HDVector majority_bundle(std::span<const HDVector* const> components, Seed tiebreak_seed) {
  if (components.empty())
    throw std::invalid_argument("majority_bundle: empty component list");
  const std::size_t d = components[0]->dimension();
  for (const auto* v : components)
    if (v->dimension() != d)
      throw std::invalid_argument("majority_bundle: dimension mismatch");
  if (components.size() == 1) return *components[0];

  const std::size_t n = components.size();
  const std::size_t nwords = components[0]->word_count();

  // Bit-sliced per-position counters: plane p holds bit p of every count.
  std::size_t plane_count = std::bit_width(n);
  std::vector<std::vector<std::uint64_t>> planes;
  planes.reserve(plane_count);
  for (const auto* v : components) {
    const auto vw = v->words();
    std::size_t p = 0;
    std::vector<std::uint64_t> carry(vw.begin(), vw.end());
    for (; p < planes.size(); ++p) {
      bool any = false;
      auto& plane = planes[p];
      for (std::size_t i = 0; i < nwords; ++i) {
        const std::uint64_t t = plane[i] & carry[i];
        plane[i] ^= carry[i];
        carry[i] = t;
        any |= t != 0;
      }
      if (!any) {
        carry.clear();
        break;
      }
    }
    if (!carry.empty() && p == planes.size()) planes.push_back(std::move(carry));
  }

  // Majority per position: count > floor(n/2) -> 1; for even n an exact tie
  // (count == n/2) takes the tie-break bit.
  const std::size_t threshold = n / 2;
  const bool even = (n % 2) == 0;
  HDVector tie(1);
  if (even) tie = HDVector::random(std::max<std::size_t>(d, 64), tiebreak_seed);

  HDVector out(d);
  for (std::size_t i = 0; i < nwords; ++i) {
    std::uint64_t gt = 0, eq = ~0ull;
    for (std::size_t p = plane_count; p-- > 0;) {
      const std::uint64_t plane = p < planes.size() ? planes[p][i] : 0;
      const std::uint64_t tbit = ((threshold >> p) & 1u) ? ~0ull : 0ull;
      gt |= eq & plane & ~tbit;
      eq &= ~(plane ^ tbit);
    }
    out.words_[i] = even ? (gt | (eq & tie.words()[i])) : gt;
  }
  out.clear_padding();
  return out;
}

HDVector majority_bundle(std::span<const HDVector> components, Seed tiebreak_seed) {
  std::vector<const HDVector*> ptrs;
  ptrs.reserve(components.size());
  for (const auto& v : components) ptrs.push_back(&v);
  return majority_bundle(std::span<const HDVector* const>(ptrs), tiebreak_seed);
}

}  // namespace hologn
