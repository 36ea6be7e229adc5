#include "raagpres/snf.hpp"

#include <algorithm>
#include <stdexcept>

namespace raagpres {

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty() || b.empty()) return {};
  std::size_t n = a.size(), k = b.size(), p = b[0].size();
  IntMatrix out(n, std::vector<BigInt>(p, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (a[i][j] == 0) continue;
      for (std::size_t l = 0; l < p; ++l) out[i][l] += a[i][j] * b[j][l];
    }
  return out;
}

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

struct Worker {
  IntMatrix a, u, v;
  std::size_t rows, cols;

  explicit Worker(const IntMatrix& m)
      : a(m), rows(m.size()), cols(m.empty() ? 0 : m[0].size()) {
    u = identity_matrix(rows);
    v = identity_matrix(cols);
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : v) std::swap(row[i], row[j]);
  }
  void add_row(std::size_t dst, std::size_t src, const BigInt& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < cols; ++c) a[dst][c] += q * a[src][c];
    for (std::size_t c = 0; c < rows; ++c) u[dst][c] += q * u[src][c];
  }
  void add_col(std::size_t dst, std::size_t src, const BigInt& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < rows; ++r) a[r][dst] += q * a[r][src];
    for (std::size_t r = 0; r < cols; ++r) v[r][dst] += q * v[r][src];
  }
  void negate_row(std::size_t i) {
    for (auto& x : a[i]) x = -x;
    for (auto& x : u[i]) x = -x;
  }

  // smallest non-zero |entry| in the trailing submatrix, or nothing
  bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    BigInt best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (a[i][j] == 0) continue;
        BigInt m = abs_big(a[i][j]);
        if (!found || m < best) {
          found = true;
          best = m;
          pi = i;
          pj = j;
        }
      }
    return found;
  }

  void run() {
    std::size_t t = 0;
    std::size_t lim = std::min(rows, cols);
    while (t < lim) {
      std::size_t pi = 0, pj = 0;
      if (!find_pivot(t, pi, pj)) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      bool dirty = true;
      while (dirty) {
        dirty = false;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (a[i][t] == 0) continue;
          BigInt q = a[i][t] / a[t][t];
          add_row(i, t, -q);
          if (a[i][t] != 0) {  // remainder becomes the smaller pivot
            swap_rows(t, i);
            dirty = true;
          }
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[t][j] == 0) continue;
          BigInt q = a[t][j] / a[t][t];
          add_col(j, t, -q);
          if (a[t][j] != 0) {
            swap_cols(t, j);
            dirty = true;
          }
        }
        if (!dirty) {
          // pivot must divide the rest of the submatrix
          for (std::size_t i = t + 1; i < rows && !dirty; ++i)
            for (std::size_t j = t + 1; j < cols && !dirty; ++j)
              if (a[i][j] % a[t][t] != 0) {
                add_row(t, i, 1);
                dirty = true;
              }
        }
      }
      if (a[t][t] < 0) negate_row(t);
      ++t;
    }
  }
};

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
  std::size_t rows = m.size();
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (const auto& row : m)
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");

  Worker w(m);
  if (rows && cols) w.run();

  SnfResult res;
  res.u = std::move(w.u);
  res.v = std::move(w.v);
  std::size_t lim = std::min(rows, cols);
  res.diagonal.resize(lim, 0);
  for (std::size_t i = 0; i < lim; ++i) {
    res.diagonal[i] = rows ? w.a[i][i] : BigInt(0);
    if (res.diagonal[i] != 0) ++res.rank;
  }

  // exact check: U*m*V must equal the diagonal we report
  IntMatrix check = multiply(multiply(res.u, m), res.v);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      BigInt want = (i == j && i < lim) ? res.diagonal[i] : BigInt(0);
      if (check[i][j] != want) throw std::logic_error("snf transform check failed");
    }
  for (int i = 0; i + 1 < res.rank; ++i)
    if (res.diagonal[i + 1] % res.diagonal[i] != 0)
      throw std::logic_error("snf divisibility chain failed");
  return res;
}

}  // namespace raagpres
