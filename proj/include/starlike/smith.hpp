#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace starlike {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

struct SmithInvariants {
  int rank = 0;
  std::vector<BigInt> invariant_factors;  // diagonal entries > 1, in divisibility order

  // Prime powers of all invariant factors, sorted.
  std::vector<BigInt> elementary_divisors() const;
};

std::vector<BigInt> prime_power_factors(BigInt n);

namespace detail {

struct Overflow {};

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t checked_abs(std::int64_t a) { return a < 0 ? checked_sub(0, a) : a; }

inline BigInt checked_mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt checked_sub(const BigInt& a, const BigInt& b) { return a - b; }
inline BigInt checked_add(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt checked_abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

template <class Scalar>
using SparseRow = std::vector<std::pair<int, Scalar>>;

// row_a -= f * row_b, both sorted by column.
template <class Scalar>
SparseRow<Scalar> axpy_rows(const SparseRow<Scalar>& a, const Scalar& f, const SparseRow<Scalar>& b) {
  SparseRow<Scalar> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, checked_sub(Scalar(0), checked_mul(f, b[j].second)));
      ++j;
    } else {
      Scalar v = checked_sub(a[i].second, checked_mul(f, b[j].second));
      if (v != 0) out.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

template <class Scalar>
Scalar entry(const SparseRow<Scalar>& row, int col) {
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, int c) { return e.first < c; });
  return it != row.end() && it->first == col ? it->second : Scalar(0);
}

}  // namespace detail

// Absolute values of the nonzero Smith diagonal of a dense matrix, in divisibility order.
template <class Scalar>
std::vector<Scalar> smith_diagonal(DenseMatrix<Scalar> m) {
  using detail::checked_abs;
  using detail::checked_add;
  using detail::checked_mul;
  using detail::checked_sub;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  std::vector<Scalar> diag;
  auto row_axpy = [&](Eigen::Index dst, const Scalar& f, Eigen::Index src) {
    for (Eigen::Index c = 0; c < cols; ++c)
      if (m(src, c) != 0) m(dst, c) = checked_sub(m(dst, c), checked_mul(f, m(src, c)));
  };
  auto col_axpy = [&](Eigen::Index dst, const Scalar& f, Eigen::Index src) {
    for (Eigen::Index r = 0; r < rows; ++r)
      if (m(r, src) != 0) m(r, dst) = checked_sub(m(r, dst), checked_mul(f, m(r, src)));
  };

  for (Eigen::Index t = 0; t < std::min(rows, cols); ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    Eigen::Index pr = -1, pc = -1;
    Scalar best = 0;
    for (Eigen::Index r = t; r < rows; ++r)
      for (Eigen::Index c = t; c < cols; ++c)
        if (m(r, c) != 0 && (pr < 0 || checked_abs(m(r, c)) < best)) {
          best = checked_abs(m(r, c));
          pr = r;
          pc = c;
        }
    if (pr < 0) break;
    m.row(t).swap(m.row(pr));
    m.col(t).swap(m.col(pc));

    for (;;) {
      bool clean = true;
      for (Eigen::Index r = t + 1; r < rows; ++r) {
        if (m(r, t) == 0) continue;
        row_axpy(r, Scalar(m(r, t) / m(t, t)), t);
        if (m(r, t) != 0) clean = false;
      }
      for (Eigen::Index c = t + 1; c < cols; ++c) {
        if (m(t, c) == 0) continue;
        col_axpy(c, Scalar(m(t, c) / m(t, t)), t);
        if (m(t, c) != 0) clean = false;
      }
      if (!clean) {
        Eigen::Index br = t, bc = t;
        best = checked_abs(m(t, t));
        for (Eigen::Index r = t + 1; r < rows; ++r)
          if (m(r, t) != 0 && checked_abs(m(r, t)) < best) best = checked_abs(m(r, t)), br = r, bc = t;
        for (Eigen::Index c = t + 1; c < cols; ++c)
          if (m(t, c) != 0 && checked_abs(m(t, c)) < best) best = checked_abs(m(t, c)), br = t, bc = c;
        m.row(t).swap(m.row(br));
        m.col(t).swap(m.col(bc));
        continue;
      }
      // the pivot must divide the remaining block
      Eigen::Index bad = -1;
      for (Eigen::Index r = t + 1; r < rows && bad < 0; ++r)
        for (Eigen::Index c = t + 1; c < cols; ++c)
          if (m(r, c) % m(t, t) != 0) {
            bad = r;
            break;
          }
      if (bad < 0) break;
      for (Eigen::Index c = t; c < cols; ++c) m(t, c) = checked_add(m(t, c), m(bad, c));
    }
    diag.push_back(checked_abs(m(t, t)));
  }
  return diag;
}

namespace detail {

// Eliminates unit pivots sparsely; returns the rank found so far and the untouched remainder.
template <class Scalar>
std::pair<int, DenseMatrix<Scalar>> eliminate_units(const Eigen::SparseMatrix<int>& a) {
  const int R = static_cast<int>(a.rows()), C = static_cast<int>(a.cols());
  std::vector<SparseRow<Scalar>> rows(R);
  std::vector<std::vector<int>> col_rows(C);
  Eigen::SparseMatrix<int, Eigen::RowMajor> rm = a;
  for (int r = 0; r < R; ++r)
    for (Eigen::SparseMatrix<int, Eigen::RowMajor>::InnerIterator it(rm, r); it; ++it)
      if (it.value() != 0) {
        rows[r].emplace_back(static_cast<int>(it.col()), Scalar(it.value()));
        col_rows[it.col()].push_back(r);
      }
  std::vector<bool> row_dead(R, false);
  int rank = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int r = 0; r < R; ++r) {
      if (row_dead[r] || rows[r].empty()) continue;
      int pc = -1;
      std::size_t best = 0;
      for (const auto& [c, v] : rows[r])
        if ((v == 1 || v == -1) && (pc < 0 || col_rows[c].size() < best)) pc = c, best = col_rows[c].size();
      if (pc < 0) continue;
      const Scalar pv = entry(rows[r], pc);
      std::vector<int> others;
      others.swap(col_rows[pc]);
      for (int r2 : others) {
        if (r2 == r || row_dead[r2]) continue;
        Scalar v = entry(rows[r2], pc);
        if (v == 0) continue;
        Scalar f = checked_mul(v, pv);  // pv = +-1, so v / pv == v * pv
        SparseRow<Scalar> old = std::move(rows[r2]);
        rows[r2] = axpy_rows(old, f, rows[r]);
        // register fill-in
        std::size_t i = 0;
        for (const auto& [c, val] : rows[r2]) {
          while (i < old.size() && old[i].first < c) ++i;
          if (i == old.size() || old[i].first != c) col_rows[c].push_back(r2);
        }
      }
      row_dead[r] = true;
      rows[r].clear();
      ++rank;
      progress = true;
    }
  }
  std::vector<int> live_rows, col_map(C, -1);
  int live_cols = 0;
  for (int r = 0; r < R; ++r) {
    if (row_dead[r] || rows[r].empty()) continue;
    live_rows.push_back(r);
    for (const auto& [c, v] : rows[r])
      if (col_map[c] < 0) col_map[c] = live_cols++;
  }
  DenseMatrix<Scalar> rest = DenseMatrix<Scalar>::Zero(static_cast<Eigen::Index>(live_rows.size()), live_cols);
  for (std::size_t i = 0; i < live_rows.size(); ++i)
    for (const auto& [c, v] : rows[live_rows[i]]) rest(static_cast<Eigen::Index>(i), col_map[c]) = v;
  return {rank, std::move(rest)};
}

template <class Scalar>
SmithInvariants smith_with(const Eigen::SparseMatrix<int>& a) {
  auto [rank, rest] = eliminate_units<Scalar>(a);
  SmithInvariants out;
  out.rank = rank;
  for (const Scalar& v : smith_diagonal<Scalar>(std::move(rest))) {
    ++out.rank;
    if (v != 1) out.invariant_factors.emplace_back(v);
  }
  return out;
}

}  // namespace detail

// Rank and invariant factors of an integer matrix. Runs in int64 and restarts with
// arbitrary precision if any intermediate entry overflows.
SmithInvariants smith(const Eigen::SparseMatrix<int>& a);

}  // namespace starlike
