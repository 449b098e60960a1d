#include "ybx/matrix.hpp"

#include <cctype>

#include "ybx/error.hpp"

namespace ybx {

Rat parse_rat(const std::string& text) {
  if (text.empty()) fail(ErrorCode::ParseError, "empty rational literal");
  size_t i = 0;
  auto scan_int = [&](const char* what) {
    size_t start = i;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    size_t digits_from = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits_from)
      fail(ErrorCode::ParseError, std::string("expected ") + what + " in rational literal '" + text + "'");
    return text.substr(start, i - start);
  };
  const std::string num = scan_int("numerator");
  std::string den = "1";
  if (i < text.size() && text[i] == '/') {
    ++i;
    den = scan_int("denominator");
  }
  if (i != text.size()) fail(ErrorCode::ParseError, "trailing characters in rational literal '" + text + "'");
  Rat value;
  value = Rat(mpz_class(num), mpz_class(den));
  if (value.get_den() == 0) fail(ErrorCode::ParseError, "zero denominator in rational literal '" + text + "'");
  value.canonicalize();
  return value;
}

std::string rat_string(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Mat mat_identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

static void require_same_shape(const Mat& x, const Mat& y, const char* op) {
  if (x.rows != y.rows || x.cols != y.cols)
    fail(ErrorCode::DimensionMismatch, std::string(op) + ": shapes " + std::to_string(x.rows) + "x" +
                                           std::to_string(x.cols) + " and " + std::to_string(y.rows) + "x" +
                                           std::to_string(y.cols) + " differ");
}

Mat mul(const Mat& x, const Mat& y) {
  if (x.cols != y.rows)
    fail(ErrorCode::DimensionMismatch, "product of " + std::to_string(x.rows) + "x" + std::to_string(x.cols) +
                                           " by " + std::to_string(y.rows) + "x" + std::to_string(y.cols));
  Mat out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Rat& xv = x.at(i, k);
      if (xv == 0) continue;
      for (int j = 0; j < y.cols; ++j) {
        const Rat& yv = y.at(k, j);
        if (yv == 0) continue;
        out.at(i, j) += xv * yv;
      }
    }
  return out;
}

Mat add(const Mat& x, const Mat& y) {
  require_same_shape(x, y, "sum");
  Mat out = x;
  for (size_t k = 0; k < out.a.size(); ++k) out.a[k] += y.a[k];
  return out;
}

Mat sub(const Mat& x, const Mat& y) {
  require_same_shape(x, y, "difference");
  Mat out = x;
  for (size_t k = 0; k < out.a.size(); ++k) out.a[k] -= y.a[k];
  return out;
}

Mat scale(const Rat& t, const Mat& x) {
  Mat out = x;
  for (auto& v : out.a) v *= t;
  return out;
}

Mat kron(const Mat& x, const Mat& y) {
  Mat out(x.rows * y.rows, x.cols * y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) {
      const Rat& xv = x.at(i, j);
      if (xv == 0) continue;
      for (int p = 0; p < y.rows; ++p)
        for (int q = 0; q < y.cols; ++q) {
          const Rat& yv = y.at(p, q);
          if (yv == 0) continue;
          out.at(i * y.rows + p, j * y.cols + q) = xv * yv;
        }
    }
  return out;
}

Mat transpose(const Mat& x) {
  Mat out(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) out.at(j, i) = x.at(i, j);
  return out;
}

Mat commutator(const Mat& x, const Mat& y) { return sub(mul(x, y), mul(y, x)); }

bool is_zero(const Mat& x) {
  for (const auto& v : x.a)
    if (v != 0) return false;
  return true;
}

bool mat_equal(const Mat& x, const Mat& y) {
  return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
}

Mat invert(const Mat& m) {
  if (m.rows != m.cols) fail(ErrorCode::DimensionMismatch, "only square matrices can be inverted");
  const int n = m.rows;
  Mat work = m;
  Mat inv = mat_identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (work.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) fail(ErrorCode::Singular, "matrix is singular (no pivot in column " + std::to_string(col) + ")");
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(work.at(pivot, j), work.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    const Rat p = work.at(col, col);
    for (int j = 0; j < n; ++j) {
      work.at(col, j) /= p;
      inv.at(col, j) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const Rat f = work.at(r, col);
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) {
        work.at(r, j) -= f * work.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

Mat function_matrix(const std::vector<int>& f) {
  const int n = static_cast<int>(f.size());
  Mat out(n, n);
  for (int x = 0; x < n; ++x) {
    if (f[x] < 0 || f[x] >= n)
      fail(ErrorCode::IndexOutOfRange, "function value " + std::to_string(f[x]) + " outside 0.." + std::to_string(n - 1));
    out.at(f[x], x) = 1;
  }
  return out;
}

}  // namespace ybx
