#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "critgraph/rational.hpp"

namespace critgraph {

using int128 = __int128;

// Dense integer matrix, row major. Entries are 64-bit on input; the
// elimination routines widen to 128 bits internally and throw
// ArithmeticOverflow rather than wrap.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<long long> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a((size_t)r * c, 0) {}
  long long& at(int r, int c) { return a[(size_t)r * cols + c]; }
  long long at(int r, int c) const { return a[(size_t)r * cols + c]; }
};

// Exact rank by fraction-free (Bareiss) elimination. Intermediate
// entries are minors of the input, kept in 128 bits.
int bareiss_rank(const IntMatrix& m);

// A nonzero rational solution of M x = 0, or nullopt when the kernel
// is trivial. Uses rational Gauss-Jordan; the witness is exact.
std::optional<std::vector<Rat>> kernel_vector(const IntMatrix& m);

// Incremental exact rank: rows are kept in echelon form and divided by
// their gcd after every reduction, so entries stay minor-sized. Used
// where tight vectors arrive one by one and the scan should stop
// feeding the basis once the target rank is reached.
class RankAccumulator {
 public:
  explicit RankAccumulator(int cols) : cols_(cols) {}

  // Returns true when the vector enlarged the span.
  bool add(const std::vector<long long>& v);
  int rank() const { return (int)rows_.size(); }

 private:
  int cols_;
  std::vector<std::vector<int128>> rows_;  // sorted by leading column
};

}  // namespace critgraph
