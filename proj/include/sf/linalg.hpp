#pragma once

#include <vector>

#include "sf/exactfield.hpp"

namespace sf {

using Vec = std::vector<Cyc>;
using Mat = std::vector<Vec>;  // row-major

Mat zero_mat(size_t r, size_t c);
Mat identity_mat(size_t n);
Mat transpose(const Mat& m, size_t cols_if_empty = 0);
Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_vec(const Mat& a, const Vec& x);

// In-place reduced row echelon form; returns pivot columns.
std::vector<size_t> rref(Mat& m, size_t ncols);
size_t mat_rank(Mat m, size_t ncols);
// Basis of {x : m x = 0}.
Mat nullspace(Mat m, size_t ncols);
// Basis of the row span (echelonized).
Mat row_basis(Mat m, size_t ncols);
// Solve m x = b; false if inconsistent.
bool solve(const Mat& m, const Vec& b, size_t ncols, Vec& x);
bool in_row_span(const Mat& basis_rref, const std::vector<size_t>& pivots, Vec v);
// Intersection of the row spans of a and b.
Mat span_intersection(const Mat& a, const Mat& b, size_t ncols);
bool same_span(const Mat& a, const Mat& b, size_t ncols);
Cyc trace(const Mat& m);

// Trace of the endomorphism induced on ker(d_out)/im(d_in) by f, where
// d_in: A -> B, d_out: B -> C as matrices acting on column vectors and f: B -> B
// commutes with the differentials.  Returns (dimension, trace).
std::pair<size_t, Cyc> homology_trace(const Mat& d_in, size_t dim_a, const Mat& d_out, size_t dim_c,
                                      const Mat& f, size_t dim_b);

}  // namespace sf
