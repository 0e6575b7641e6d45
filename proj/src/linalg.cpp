#include "sf/linalg.hpp"

namespace sf {

Mat zero_mat(size_t r, size_t c) { return Mat(r, Vec(c, Cyc(0))); }

Mat identity_mat(size_t n) {
  Mat m = zero_mat(n, n);
  for (size_t i = 0; i < n; ++i) m[i][i] = Cyc(1);
  return m;
}

Mat transpose(const Mat& m, size_t cols_if_empty) {
  size_t r = m.size();
  size_t c = r ? m[0].size() : cols_if_empty;
  Mat t = zero_mat(c, r);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) t[j][i] = m[i][j];
  return t;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  Mat c = zero_mat(n, m);
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (size_t j = 0; j < m; ++j)
        if (!b[l][j].is_zero()) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

Vec mat_vec(const Mat& a, const Vec& x) {
  Vec y(a.size(), Cyc(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j)
      if (!a[i][j].is_zero() && !x[j].is_zero()) y[i] += a[i][j] * x[j];
  return y;
}

std::vector<size_t> rref(Mat& m, size_t ncols) {
  std::vector<size_t> piv;
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < m.size(); ++c) {
    size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Cyc inv = m[r][c].inv();
    for (size_t k = c; k < ncols; ++k)
      if (!m[r][k].is_zero()) m[r][k] *= inv;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Cyc f = m[i][c];
      for (size_t k = c; k < ncols; ++k)
        if (!m[r][k].is_zero()) m[i][k] -= f * m[r][k];
    }
    piv.push_back(c);
    ++r;
  }
  m.resize(r);
  return piv;
}

size_t mat_rank(Mat m, size_t ncols) { return rref(m, ncols).size(); }

Mat nullspace(Mat m, size_t ncols) {
  auto piv = rref(m, ncols);
  std::vector<bool> is_piv(ncols, false);
  for (auto p : piv) is_piv[p] = true;
  Mat out;
  for (size_t f = 0; f < ncols; ++f) {
    if (is_piv[f]) continue;
    Vec v(ncols, Cyc(0));
    v[f] = Cyc(1);
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m[i][f];
    out.push_back(std::move(v));
  }
  return out;
}

Mat row_basis(Mat m, size_t ncols) {
  rref(m, ncols);
  return m;
}

bool solve(const Mat& m, const Vec& b, size_t ncols, Vec& x) {
  Mat aug = m;
  for (size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  auto piv = rref(aug, ncols + 1);
  x.assign(ncols, Cyc(0));
  for (size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] == ncols) return false;
    x[piv[i]] = aug[i][ncols];
  }
  return true;
}

bool in_row_span(const Mat& basis_rref, const std::vector<size_t>& pivots, Vec v) {
  for (size_t i = 0; i < pivots.size(); ++i) {
    Cyc f = v[pivots[i]];
    if (f.is_zero()) continue;
    for (size_t k = 0; k < v.size(); ++k)
      if (!basis_rref[i][k].is_zero()) v[k] -= f * basis_rref[i][k];
  }
  for (auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Mat span_intersection(const Mat& a, const Mat& b, size_t ncols) {
  // Solve x A = y B via the nullspace of [A; -B]^T.
  if (a.empty() || b.empty()) return {};
  Mat stacked;
  for (auto& r : a) stacked.push_back(r);
  for (auto& r : b) {
    Vec n = r;
    for (auto& x : n) x = -x;
    stacked.push_back(n);
  }
  Mat ns = nullspace(transpose(stacked, ncols), stacked.size());
  Mat out;
  for (auto& coeff : ns) {
    Vec v(ncols, Cyc(0));
    for (size_t i = 0; i < a.size(); ++i)
      if (!coeff[i].is_zero())
        for (size_t k = 0; k < ncols; ++k) v[k] += coeff[i] * a[i][k];
    out.push_back(v);
  }
  return row_basis(out, ncols);
}

bool same_span(const Mat& a, const Mat& b, size_t ncols) {
  Mat ra = row_basis(a, ncols), rb = row_basis(b, ncols);
  return ra == rb;
}

Cyc trace(const Mat& m) {
  Cyc t(0);
  for (size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

std::pair<size_t, Cyc> homology_trace(const Mat& d_in, size_t dim_a, const Mat& d_out, size_t dim_c,
                                      const Mat& f, size_t dim_b) {
  Mat Z = dim_c ? nullspace(d_out, dim_b) : identity_mat(dim_b);
  // Boundaries as row vectors.
  Mat I = dim_a ? row_basis(transpose(d_in, dim_a), dim_b) : Mat{};
  Mat basis = I;
  size_t nb = I.size();
  for (auto& z : Z) {
    Mat trial = basis;
    trial.push_back(z);
    if (mat_rank(trial, dim_b) > basis.size()) basis.push_back(z);
  }
  size_t dim = basis.size() - nb;
  Cyc tr(0);
  if (dim == 0) return {0, tr};
  Mat bt = transpose(basis, dim_b);
  for (size_t j = nb; j < basis.size(); ++j) {
    Vec img = mat_vec(f, basis[j]);
    Vec x;
    if (!solve(bt, img, basis.size(), x)) throw MathError("homology_trace: map does not preserve cycles");
    tr += x[j];
  }
  return {dim, tr};
}

}  // namespace sf
