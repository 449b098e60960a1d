#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace ybx {

using Rat = mpq_class;

Rat parse_rat(const std::string& text);  // "p/q" or a bare integer
std::string rat_string(const Rat& value);

// Dense exact-rational matrix, row-major.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<Rat> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rat(0)) {}

  Rat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

Mat mat_identity(int n);
Mat mul(const Mat& x, const Mat& y);
Mat add(const Mat& x, const Mat& y);
Mat sub(const Mat& x, const Mat& y);
Mat scale(const Rat& t, const Mat& x);
Mat kron(const Mat& x, const Mat& y);  // leftmost factor most significant
Mat transpose(const Mat& x);
Mat commutator(const Mat& x, const Mat& y);  // xy - yx
bool is_zero(const Mat& x);
bool mat_equal(const Mat& x, const Mat& y);

// Exact inverse via Gauss-Jordan elimination; throws Singular.
Mat invert(const Mat& m);

// Matrix of a function on points: column x has a single 1 at row f(x).
Mat function_matrix(const std::vector<int>& f);

}  // namespace ybx
