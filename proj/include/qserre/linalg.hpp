#pragma once

#include <optional>
#include <vector>

#include "qserre/ratf.hpp"

namespace qserre {

using Vec = std::vector<RatF>;

/// Dense row-major matrix over Q(r,s).
struct Matrix {
  size_t rows = 0, cols = 0;
  std::vector<Vec> a;

  Matrix() = default;
  Matrix(size_t r, size_t c) : rows(r), cols(c), a(r, Vec(c)) {}
  Vec& operator[](size_t i) { return a[i]; }
  const Vec& operator[](size_t i) const { return a[i]; }
};

namespace detail {

struct EchelonForm {
  std::vector<Vec> rows;          // echelon rows, pivots normalized to 1
  std::vector<size_t> pivot_cols; // pivot column of rows[k]
  size_t cols = 0;
  size_t rank() const { return pivot_cols.size(); }
};

/// Gaussian elimination over the field, entries kept in reduced canonical
/// form. The pivot in each column is the candidate with the fewest stored
/// polynomial terms, which keeps the scan matrices (mostly monomial entries)
/// from growing. Deterministic.
inline EchelonForm echelon(const Matrix& m) {
  EchelonForm ef;
  ef.cols = m.cols;
  std::vector<Vec> rows;
  rows.reserve(m.rows);
  for (size_t i = 0; i < m.rows; ++i) {
    bool nonzero = false;
    for (const auto& x : m[i])
      if (!x.is_zero()) {
        nonzero = true;
        break;
      }
    if (nonzero) rows.push_back(m[i]);
  }
  size_t next = 0;
  for (size_t col = 0; col < m.cols && next < rows.size(); ++col) {
    size_t best = rows.size(), best_sz = 0;
    for (size_t i = next; i < rows.size(); ++i) {
      if (rows[i][col].is_zero()) continue;
      const size_t sz = rows[i][col].complexity();
      if (best == rows.size() || sz < best_sz) {
        best = i;
        best_sz = sz;
      }
    }
    if (best == rows.size()) continue;
    std::swap(rows[next], rows[best]);
    Vec& p = rows[next];
    const RatF pivot_inv = p[col].inv();
    for (size_t k = col; k < m.cols; ++k)
      if (!p[k].is_zero()) p[k] *= pivot_inv;
    for (size_t i = next + 1; i < rows.size(); ++i) {
      if (rows[i][col].is_zero()) continue;
      const RatF f = rows[i][col];
      for (size_t k = col; k < m.cols; ++k) {
        if (p[k].is_zero()) continue;
        rows[i][k] -= f * p[k];
      }
    }
    ef.pivot_cols.push_back(col);
    ++next;
    // drop rows that became identically zero
    size_t w = next;
    for (size_t i = next; i < rows.size(); ++i) {
      bool z = true;
      for (size_t k = col + 1; k < m.cols && z; ++k) z = rows[i][k].is_zero();
      if (!z) std::swap(rows[w++], rows[i]);
    }
    rows.resize(w);
  }
  rows.resize(next);
  ef.rows = std::move(rows);
  return ef;
}

}  // namespace detail

inline size_t rank(const Matrix& m) { return detail::echelon(m).rank(); }

/// Basis of the right nullspace {x : m x = 0}.
inline std::vector<Vec> nullspace(const Matrix& m) {
  const auto ef = detail::echelon(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (size_t c : ef.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    Vec x(m.cols);
    x[f] = RatF(1);
    for (size_t k = ef.rank(); k-- > 0;) {
      const size_t pc = ef.pivot_cols[k];
      RatF sum;
      for (size_t c = pc + 1; c < m.cols; ++c) {
        if (ef.rows[k][c].is_zero() || x[c].is_zero()) continue;
        sum += ef.rows[k][c] * x[c];
      }
      x[pc] = -sum;
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

struct LinearSolution {
  Vec particular;
  std::vector<Vec> homogeneous;
};

/// Solve m x = b exactly. Returns nullopt when inconsistent. Encoded as the
/// nullspace of [m | -b]: solutions are the kernel vectors with last
/// coordinate 1.
inline std::optional<LinearSolution> solve(const Matrix& m, const Vec& b) {
  Matrix aug(m.rows, m.cols + 1);
  for (size_t i = 0; i < m.rows; ++i) {
    aug[i] = m[i];
    aug[i].push_back(-b[i]);
  }
  const auto ns = nullspace(aug);
  LinearSolution out;
  bool found = false;
  for (const auto& v : ns) {
    if (v.back().is_zero()) {
      Vec h(v.begin(), v.end() - 1);
      out.homogeneous.push_back(std::move(h));
    } else if (!found) {
      const RatF inv = v.back().inv();
      out.particular.assign(m.cols, RatF{});
      for (size_t c = 0; c < m.cols; ++c) out.particular[c] = v[c] * inv;
      found = true;
    } else {
      // extra affine solution: its difference from the first is homogeneous
      const RatF inv = v.back().inv();
      Vec h(m.cols);
      for (size_t c = 0; c < m.cols; ++c) h[c] = v[c] * inv - out.particular[c];
      out.homogeneous.push_back(std::move(h));
    }
  }
  if (!found) return std::nullopt;
  return out;
}

}  // namespace qserre
