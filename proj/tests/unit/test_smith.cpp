#include "doctest.h"

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "starlike/smith.hpp"

using namespace starlike;

namespace {

Eigen::SparseMatrix<int> sparse(const std::vector<std::vector<long long>>& m) {
  Eigen::SparseMatrix<int> s(static_cast<int>(m.size()), m.empty() ? 0 : static_cast<int>(m[0].size()));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m[r].size(); ++c)
      if (m[r][c]) s.insert(static_cast<int>(r), static_cast<int>(c)) = static_cast<int>(m[r][c]);
  return s;
}

std::vector<long long> as_ll(const std::vector<BigInt>& v) {
  std::vector<long long> out;
  for (const BigInt& x : v) out.push_back(static_cast<long long>(x));
  return out;
}

}  // namespace

TEST_SUITE("smith") {

TEST_CASE("textbook example") {
  std::vector<std::vector<long long>> m = {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  SmithInvariants s = smith(sparse(m));
  CHECK(s.rank == 3);
  CHECK(as_ll(s.invariant_factors) == std::vector<long long>{2, 6, 12});
  CHECK(as_ll(s.elementary_divisors()) == std::vector<long long>{2, 2, 3, 3, 4});
}

TEST_CASE("zero and empty matrices") {
  CHECK(smith(Eigen::SparseMatrix<int>(3, 0)).rank == 0);
  CHECK(smith(Eigen::SparseMatrix<int>(2, 2)).rank == 0);
}

TEST_CASE("prime powers") {
  auto f = as_ll(prime_power_factors(BigInt(360)));
  std::sort(f.begin(), f.end());
  CHECK(f == std::vector<long long>{5, 8, 9});
}

TEST_CASE("random matrices against the minors oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 4), cols = 1 + static_cast<int>(rng() % 4);
    std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols));
    for (auto& row : m)
      for (auto& x : row) x = static_cast<long long>(rng() % 9) - 4;
    SmithInvariants s = smith(sparse(m));
    CHECK(as_ll(s.invariant_factors) == oracle::invariant_factors_by_minors(m));
    CHECK(s.rank == oracle::dense_smith(m).first);
  }
}

TEST_CASE("wide scalar path agrees") {
  std::vector<std::vector<long long>> m = {{4, 6}, {6, 9}, {2, 0}};
  CHECK(as_ll(detail::smith_with<BigInt>(sparse(m)).invariant_factors) ==
        as_ll(detail::smith_with<std::int64_t>(sparse(m)).invariant_factors));
}

}
