#include <random>

#include "critgraph/linalg.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace critgraph;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
  IntMatrix m((int)rows.size(), (int)rows[0].size());
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < rows[0].size(); ++c) m.at((int)r, (int)c) = rows[r][c];
  return m;
}

}  // namespace

TEST_CASE("rank of fixed matrices") {
  CHECK(bareiss_rank(from_rows({{1, 0}, {0, 1}})) == 2);
  CHECK(bareiss_rank(from_rows({{1, 2}, {2, 4}})) == 1);
  CHECK(bareiss_rank(from_rows({{0, 0}, {0, 0}})) == 0);
  CHECK(bareiss_rank(from_rows({{2, 3, 5}, {7, 11, 13}, {9, 14, 19}})) == 3);
  // third row = first + second
  CHECK(bareiss_rank(from_rows({{1, 2, 3}, {4, 5, 6}, {5, 7, 9}})) == 2);
}

TEST_CASE("rank agrees with naive rational elimination on random matrices") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> dim(1, 8), val(-5, 5);
  for (int trial = 0; trial < 300; ++trial) {
    const int r = dim(rng), c = dim(rng);
    std::vector<std::vector<long long>> rows(r, std::vector<long long>(c));
    for (auto& row : rows)
      for (auto& x : row) x = val(rng);
    CHECK(bareiss_rank(from_rows(rows)) == oracle::naive_rank(rows));
  }
}

TEST_CASE("kernel vector solves the homogeneous system") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> val(-4, 4);
  int deficient_seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int r = 3 + (int)(rng() % 3), c = 3 + (int)(rng() % 3);
    std::vector<std::vector<long long>> rows(r, std::vector<long long>(c));
    for (auto& row : rows)
      for (auto& x : row) x = val(rng);
    IntMatrix m = from_rows(rows);
    auto k = kernel_vector(m);
    if (bareiss_rank(m) == c) {
      CHECK(!k.has_value());
      continue;
    }
    ++deficient_seen;
    REQUIRE(k.has_value());
    bool nonzero = false;
    for (const Rat& x : *k)
      if (!(x == Rat(0))) nonzero = true;
    CHECK(nonzero);
    for (int i = 0; i < r; ++i) {
      Rat dot(0);
      for (int j = 0; j < c; ++j) dot = dot + Rat(rows[i][j]) * (*k)[j];
      CHECK(dot == Rat(0));
    }
  }
  CHECK(deficient_seen > 10);
}

TEST_CASE("incremental rank accumulator matches batch rank") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> val(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const int c = 2 + (int)(rng() % 5);
    const int r = 1 + (int)(rng() % 8);
    std::vector<std::vector<long long>> rows(r, std::vector<long long>(c));
    for (auto& row : rows)
      for (auto& x : row) x = val(rng);
    RankAccumulator acc(c);
    for (int i = 0; i < r; ++i) {
      acc.add(rows[i]);
      std::vector<std::vector<long long>> prefix(rows.begin(), rows.begin() + i + 1);
      CHECK(acc.rank() == oracle::naive_rank(prefix));
    }
  }
}

TEST_CASE("rationals normalize and compare exactly") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-2, -4) == Rat(1, 2));
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(1, 2) * Rat(2, 3) == Rat(1, 3));
  CHECK(Rat(1) / Rat(3) == Rat(1, 3));
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-1, 2).str() == "-1/2");
  CHECK(Rat(3).str() == "3");
}
