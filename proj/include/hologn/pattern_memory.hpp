#pragma once

// Unsorted store of labeled hypervectors (the l x d matrix H) with two
// interchangeable batch Hamming engines: a popcount scan over packed bits and
// the complex matrix-vector formulation. Both produce exact mismatch counts.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "hologn/hdvector.hpp"

namespace hologn {

enum class DistanceEngine { xor_popcount, complex_matrix };

struct QueryHit {
  std::size_t row = 0;
  std::string label;
  double distance = 0.0;
};

struct QueryResult {
  std::vector<QueryHit> hits;  // ascending by distance, then by row index
};

class PatternStore {
 public:
  explicit PatternStore(std::size_t dimension);

  [[nodiscard]] std::size_t dimension() const { return dimension_; }
  [[nodiscard]] std::size_t size() const { return rows_.size(); }
  [[nodiscard]] const std::string& label(std::size_t row) const { return rows_[row].label; }
  [[nodiscard]] const HDVector& vector(std::size_t row) const { return rows_[row].vector; }

  // Appends a row; returns its index. Labels may not contain tabs or
  // newlines (they would break the store file format).
  std::size_t insert(std::string label, HDVector v);

  // Exact mismatch counts per row, in row order.
  [[nodiscard]] std::vector<std::size_t> batch_mismatches(const HDVector& query,
                                                          DistanceEngine engine,
                                                          unsigned threads = 1) const;

  [[nodiscard]] std::vector<double> batch_distances_xor(const HDVector& query,
                                                        unsigned threads = 1) const;
  [[nodiscard]] std::vector<double> batch_distances_complex(const HDVector& query,
                                                            unsigned threads = 1) const;

  // Row with the minimal distance; ties go to the lowest index.
  [[nodiscard]] QueryResult best_match(const HDVector& query,
                                       DistanceEngine engine = DistanceEngine::xor_popcount,
                                       unsigned threads = 1) const;

  // All rows with distance <= xi, ascending. 0 <= xi < 0.5.
  [[nodiscard]] QueryResult recall_xi(const HDVector& query, double xi,
                                      DistanceEngine engine = DistanceEngine::xor_popcount,
                                      unsigned threads = 1) const;

  // Store file: `HOLOGN-STORE v1 d=<d> l=<l>` then one `label\thex` line per row.
  void save(std::ostream& out) const;
  static PatternStore load(std::istream& in);

 private:
  struct Row {
    std::string label;
    HDVector vector;
  };

  std::size_t dimension_;
  std::vector<Row> rows_;
};

}  // namespace hologn
