#include "hologn/pattern_memory.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "hologn/parallel.hpp"

namespace hologn {

namespace {

// Mismatch count of one row via the complex formulation: bit 0 -> i, bit 1 -> 1
// in both operands; the imaginary part of the inner product counts mismatches.
std::size_t complex_row_mismatches(const HDVector& row, const std::vector<double>& query_re,
                                   const std::vector<double>& query_im) {
  const std::size_t d = row.dimension();
  double re = 0.0, im = 0.0;
  for (std::size_t pos = 0; pos < d; ++pos) {
    const double hr = row.bit(pos) ? 1.0 : 0.0;
    const double hi = 1.0 - hr;
    re += hr * query_re[pos] - hi * query_im[pos];
    im += hr * query_im[pos] + hi * query_re[pos];
  }
  (void)re;  // the real part counts matches; only Im is needed
  return static_cast<std::size_t>(std::llround(im));
}

}  // namespace

PatternStore::PatternStore(std::size_t dimension) : dimension_(dimension) {
  if (dimension == 0) throw std::invalid_argument("PatternStore: dimension must be positive");
}

std::size_t PatternStore::insert(std::string label, HDVector v) {
  if (v.dimension() != dimension_)
    throw std::invalid_argument("PatternStore::insert: dimension mismatch");
  if (label.find('\t') != std::string::npos || label.find('\n') != std::string::npos)
    throw std::invalid_argument("PatternStore::insert: label may not contain tab or newline");
  rows_.push_back(Row{std::move(label), std::move(v)});
  return rows_.size() - 1;
}

std::vector<std::size_t> PatternStore::batch_mismatches(const HDVector& query,
                                                        DistanceEngine engine,
                                                        unsigned threads) const {
  if (query.dimension() != dimension_)
    throw std::invalid_argument("PatternStore: query dimension mismatch");
  std::vector<std::size_t> counts(rows_.size());
  if (engine == DistanceEngine::xor_popcount) {
    parallel_for(rows_.size(), threads,
                 [&](std::size_t i) { counts[i] = mismatch_count(rows_[i].vector, query); });
  } else {
    std::vector<double> query_re(dimension_), query_im(dimension_);
    for (std::size_t pos = 0; pos < dimension_; ++pos) {
      query_re[pos] = query.bit(pos) ? 1.0 : 0.0;
      query_im[pos] = 1.0 - query_re[pos];
    }
    parallel_for(rows_.size(), threads, [&](std::size_t i) {
      counts[i] = complex_row_mismatches(rows_[i].vector, query_re, query_im);
    });
  }
  return counts;
}

std::vector<double> PatternStore::batch_distances_xor(const HDVector& query,
                                                      unsigned threads) const {
  const auto counts = batch_mismatches(query, DistanceEngine::xor_popcount, threads);
  std::vector<double> out(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i)
    out[i] = static_cast<double>(counts[i]) / static_cast<double>(dimension_);
  return out;
}

std::vector<double> PatternStore::batch_distances_complex(const HDVector& query,
                                                          unsigned threads) const {
  const auto counts = batch_mismatches(query, DistanceEngine::complex_matrix, threads);
  std::vector<double> out(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i)
    out[i] = static_cast<double>(counts[i]) / static_cast<double>(dimension_);
  return out;
}

QueryResult PatternStore::best_match(const HDVector& query, DistanceEngine engine,
                                     unsigned threads) const {
  if (rows_.empty()) throw std::invalid_argument("PatternStore::best_match: empty store");
  const auto counts = batch_mismatches(query, engine, threads);
  std::size_t best = 0;
  for (std::size_t i = 1; i < counts.size(); ++i)
    if (counts[i] < counts[best]) best = i;
  QueryResult result;
  result.hits.push_back(QueryHit{
      best, rows_[best].label,
      static_cast<double>(counts[best]) / static_cast<double>(dimension_)});
  return result;
}

QueryResult PatternStore::recall_xi(const HDVector& query, double xi, DistanceEngine engine,
                                    unsigned threads) const {
  if (xi < 0.0 || xi >= 0.5)
    throw std::domain_error("PatternStore::recall_xi: xi must lie in [0, 0.5)");
  const auto counts = batch_mismatches(query, engine, threads);
  QueryResult result;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double dist = static_cast<double>(counts[i]) / static_cast<double>(dimension_);
    if (dist <= xi) result.hits.push_back(QueryHit{i, rows_[i].label, dist});
  }
  std::stable_sort(result.hits.begin(), result.hits.end(),
                   [](const QueryHit& a, const QueryHit& b) { return a.distance < b.distance; });
  return result;
}

void PatternStore::save(std::ostream& out) const {
  out << "HOLOGN-STORE v1 d=" << dimension_ << " l=" << rows_.size() << "\n";
  for (const auto& row : rows_) out << row.label << '\t' << row.vector.to_hex() << '\n';
}

PatternStore PatternStore::load(std::istream& in) {
  std::string header;
  if (!std::getline(in, header))
    throw std::runtime_error("PatternStore::load: missing header");
  std::size_t d = 0, l = 0;
  const auto dpos = header.find(" d=");
  const auto lpos = header.find(" l=");
  if (header.rfind("HOLOGN-STORE v1", 0) != 0 || dpos == std::string::npos ||
      lpos == std::string::npos)
    throw std::runtime_error("PatternStore::load: bad header: " + header);
  d = std::stoull(header.substr(dpos + 3));
  l = std::stoull(header.substr(lpos + 3));

  PatternStore store(d);
  std::string line;
  for (std::size_t i = 0; i < l; ++i) {
    if (!std::getline(in, line))
      throw std::runtime_error("PatternStore::load: truncated store file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw std::runtime_error("PatternStore::load: missing tab separator on row " +
                               std::to_string(i));
    store.insert(line.substr(0, tab), HDVector::from_hex(d, line.substr(tab + 1)));
  }
  return store;
}

}  // namespace hologn
