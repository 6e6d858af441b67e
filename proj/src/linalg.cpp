#include "critgraph/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace critgraph {

namespace {

int128 checked_mul128(int128 a, int128 b) {
  int128 out;
  if (__builtin_mul_overflow(a, b, &out)) throw ArithmeticOverflow();
  return out;
}

int128 checked_sub128(int128 a, int128 b) {
  int128 out;
  if (__builtin_sub_overflow(a, b, &out)) throw ArithmeticOverflow();
  return out;
}

int128 abs128(int128 x) { return x < 0 ? -x : x; }

int128 gcd128(int128 a, int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

int bareiss_rank(const IntMatrix& m) {
  int rows = m.rows, cols = m.cols;
  if (rows == 0 || cols == 0) return 0;
  std::vector<int128> w((size_t)rows * cols);
  for (size_t i = 0; i < m.a.size(); ++i) w[i] = m.a[i];
  auto at = [&](int r, int c) -> int128& { return w[(size_t)r * cols + c]; };

  int rank = 0;
  int128 prev = 1;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (at(r, c) != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = c; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
    int128 p = at(rank, c);
    for (int r = rank + 1; r < rows; ++r) {
      int128 f = at(r, c);
      for (int j = c + 1; j < cols; ++j) {
        int128 num = checked_sub128(checked_mul128(at(r, j), p),
                                    checked_mul128(f, at(rank, j)));
        if (num % prev != 0) throw std::logic_error("bareiss divisibility lost");
        at(r, j) = num / prev;
      }
      at(r, c) = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

std::optional<std::vector<Rat>> kernel_vector(const IntMatrix& m) {
  int rows = m.rows, cols = m.cols;
  std::vector<std::vector<Rat>> w(rows, std::vector<Rat>(cols));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) w[r][c] = Rat(m.at(r, c));

  std::vector<int> pivot_col;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (!w[r][c].is_zero()) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(w[pivot], w[rank]);
    Rat inv = Rat(1) / w[rank][c];
    for (int j = c; j < cols; ++j) w[rank][j] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || w[r][c].is_zero()) continue;
      Rat f = w[r][c];
      for (int j = c; j < cols; ++j) w[r][j] -= f * w[rank][j];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  if (rank >= cols) return std::nullopt;

  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  int free_col = 0;
  while (is_pivot[free_col]) ++free_col;

  std::vector<Rat> x(cols, Rat(0));
  x[free_col] = Rat(1);
  for (int r = 0; r < rank; ++r) x[pivot_col[r]] = -w[r][free_col];
  return x;
}

bool RankAccumulator::add(const std::vector<long long>& v) {
  std::vector<int128> cur(v.begin(), v.end());
  for (const auto& row : rows_) {
    int lead = 0;
    while (row[lead] == 0) ++lead;
    if (cur[lead] == 0) continue;
    int128 a = row[lead], b = cur[lead];
    for (int j = 0; j < cols_; ++j)
      cur[j] = checked_sub128(checked_mul128(cur[j], a), checked_mul128(row[j], b));
    int128 g = 0;
    for (int j = 0; j < cols_; ++j) g = gcd128(g, cur[j]);
    if (g > 1)
      for (int j = 0; j < cols_; ++j) cur[j] /= g;
  }
  int lead = 0;
  while (lead < cols_ && cur[lead] == 0) ++lead;
  if (lead == cols_) return false;
  if (cur[lead] < 0)
    for (int j = 0; j < cols_; ++j) cur[j] = -cur[j];
  auto pos = std::find_if(rows_.begin(), rows_.end(), [&](const auto& row) {
    int l = 0;
    while (row[l] == 0) ++l;
    return l > lead;
  });
  rows_.insert(pos, std::move(cur));
  return true;
}

}  // namespace critgraph
