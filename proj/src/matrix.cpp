#include "leibniz/matrix.hpp"

#include "leibniz/errors.hpp"

#include <algorithm>
#include <utility>

namespace leibniz {

std::size_t row_count(const Mat& m) { return m.size(); }
std::size_t col_count(const Mat& m) { return m.empty() ? 0 : m.front().size(); }

Mat identity_mat(std::size_t n) {
  Mat r(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
  return r;
}

Mat zero_mat(std::size_t rows, std::size_t cols) { return Mat(rows, Vec(cols, 0)); }

Mat mat_mul(const Mat& a, const Mat& b) {
  const std::size_t m = row_count(a), k = col_count(a), n = col_count(b);
  if (k != row_count(b)) fail(Errc::Internal, "mat_mul: shape mismatch");
  Mat r = zero_mat(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

Vec vec_mat(const Vec& v, const Mat& m) {
  if (v.size() != row_count(m)) fail(Errc::Internal, "vec_mat: shape mismatch");
  Vec r(col_count(m), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < r.size(); ++j) r[j] += v[i] * m[i][j];
  }
  return r;
}

Mat transpose(const Mat& m) {
  Mat r = zero_mat(col_count(m), row_count(m));
  for (std::size_t i = 0; i < row_count(m); ++i)
    for (std::size_t j = 0; j < col_count(m); ++j) r[j][i] = m[i][j];
  return r;
}

Int determinant(const Mat& m) {
  const std::size_t n = row_count(m);
  if (n != col_count(m)) fail(Errc::Internal, "determinant: non-square");
  if (n == 0) return 1;
  Mat a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

Mat inverse_unimodular(const Mat& m) {
  const std::size_t n = row_count(m);
  if (n != col_count(m)) fail(Errc::Internal, "inverse_unimodular: non-square");
  Int det = determinant(m);
  if (det != 1 && det != -1) fail(Errc::Internal, "inverse_unimodular: determinant not a unit");
  Mat inv = zero_mat(n, n);
  if (n == 0) return inv;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // cofactor expansion: inv = adj(m) / det, adj[i][j] = (-1)^{i+j} minor(j, i)
      Mat sub;
      sub.reserve(n - 1);
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        Vec row;
        row.reserve(n - 1);
        for (std::size_t c = 0; c < n; ++c)
          if (c != i) row.push_back(m[r][c]);
        sub.push_back(std::move(row));
      }
      Int cof = determinant(sub);
      if ((i + j) % 2 == 1) cof = -cof;
      inv[i][j] = (det == 1) ? cof : -cof;
    }
  return inv;
}

namespace {

void row_addmul(Mat& a, std::size_t dst, std::size_t src, const Int& c) {
  for (std::size_t j = 0; j < a[dst].size(); ++j) a[dst][j] += c * a[src][j];
}

void row_negate(Mat& a, std::size_t i) {
  for (auto& v : a[i]) v = -v;
}

void col_addmul(Mat& a, std::size_t dst, std::size_t src, const Int& c) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i][dst] += c * a[i][src];
}

void col_swap(Mat& a, std::size_t i, std::size_t j) {
  for (auto& row : a) std::swap(row[i], row[j]);
}

} // namespace

Mat hermite_normal_form(const Mat& m) {
  Mat h = m;
  const std::size_t rows = row_count(h), cols = col_count(h);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // gcd elimination in column c among rows >= r
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (h[i][c] != 0 && (best == rows || abs(h[i][c]) < abs(h[best][c]))) best = i;
      if (best == rows) break;
      if (best != r) std::swap(h[r], h[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h[i][c] == 0) continue;
        Int q = h[i][c] / h[r][c];
        if (q != 0) row_addmul(h, i, r, -q);
        if (h[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (h[r][c] == 0) continue;
    if (h[r][c] < 0) row_negate(h, r);
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(h[i][c], h[r][c]);
      if (q != 0) row_addmul(h, i, r, -q);
    }
    ++r;
  }
  h.resize(r);
  return h;
}

std::optional<Vec> hnf_solve(const Mat& hnf, const Vec& x) {
  Vec y = x;
  Vec coeffs(hnf.size(), 0);
  for (std::size_t k = 0; k < hnf.size(); ++k) {
    std::size_t c = 0;
    while (c < hnf[k].size() && hnf[k][c] == 0) ++c;
    if (c == hnf[k].size()) continue;
    if (y[c] % hnf[k][c] != 0) return std::nullopt;
    Int q = y[c] / hnf[k][c];
    if (q != 0)
      for (std::size_t j = 0; j < y.size(); ++j) y[j] -= q * hnf[k][j];
    coeffs[k] = q;
  }
  for (const auto& v : y)
    if (v != 0) return std::nullopt;
  return coeffs;
}

std::vector<Int> SmithForm::diagonal() const {
  std::vector<Int> d;
  const std::size_t n = std::min(row_count(normal), col_count(normal));
  d.reserve(n);
  for (std::size_t i = 0; i < n; ++i) d.push_back(normal[i][i]);
  return d;
}

SmithForm smith_normal_form(const Mat& m) {
  SmithForm sf;
  sf.original = m;
  const std::size_t rows = row_count(m), cols = col_count(m);
  Mat a = m;
  Mat left = identity_mat(rows);
  Mat right = identity_mat(cols);

  const auto apply_row_addmul = [&](std::size_t dst, std::size_t src, const Int& c) {
    row_addmul(a, dst, src, c);
    row_addmul(left, dst, src, c);
  };
  const auto apply_row_swap = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(left[i], left[j]);
  };
  const auto apply_col_addmul = [&](std::size_t dst, std::size_t src, const Int& c) {
    col_addmul(a, dst, src, c);
    col_addmul(right, dst, src, c);
  };
  const auto apply_col_swap = [&](std::size_t i, std::size_t j) {
    col_swap(a, i, j);
    col_swap(right, i, j);
  };

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing submatrix becomes the pivot
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) goto done; // trailing submatrix is zero
      if (pi != t) apply_row_swap(t, pi);
      if (pj != t) apply_col_swap(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        Int q = a[i][t] / a[t][t];
        if (q != 0) apply_row_addmul(i, t, -q);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        Int q = a[t][j] / a[t][t];
        if (q != 0) apply_col_addmul(j, t, -q);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // pivot must divide the rest of the submatrix for the divisor chain
      bool chain_ok = true;
      for (std::size_t i = t + 1; i < rows && chain_ok; ++i)
        for (std::size_t j = t + 1; j < cols && chain_ok; ++j)
          if (a[i][j] % a[t][t] != 0) {
            apply_row_addmul(t, i, 1);
            chain_ok = false;
          }
      if (chain_ok) break;
    }
    if (a[t][t] < 0) {
      row_negate(a, t);
      row_negate(left, t);
    }
  }
done:
  sf.normal = std::move(a);
  sf.left_transform = std::move(left);
  sf.right_transform = std::move(right);
  return sf;
}

Mat integer_kernel(const Mat& m) {
  const std::size_t rows = row_count(m), cols = col_count(m);
  SmithForm sf = smith_normal_form(m);
  const std::size_t diag = std::min(rows, cols);
  Mat basis;
  for (std::size_t i = 0; i < rows; ++i)
    if (i >= diag || sf.normal[i][i] == 0) basis.push_back(sf.left_transform[i]);
  return basis;
}

} // namespace leibniz
