#include "ybx/linear.hpp"

#include <string>

#include "ybx/error.hpp"

namespace ybx {

Mat yb_map_matrix(const FiniteYBMap& m) {
  const int n = m.size;
  std::vector<int> f(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const auto [a, b] = m.apply(x, y);
      f[static_cast<size_t>(x) * n + y] = a * n + b;
    }
  return function_matrix(f);
}

Mat cross_map_matrix(const CrossMap& r) {
  std::vector<int> f(static_cast<size_t>(r.size_c) * r.size_b);
  for (int c = 0; c < r.size_c; ++c)
    for (int b = 0; b < r.size_b; ++b) {
      const auto [c2, b2] = r.table[static_cast<size_t>(c) * r.size_b + b];
      f[static_cast<size_t>(c) * r.size_b + b] = c2 * r.size_b + b2;
    }
  return function_matrix(f);
}

Mat swap_matrix(int d1, int d2) {
  Mat out(d1 * d2, d1 * d2);
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d2; ++j) out.at(j * d1 + i, i * d2 + j) = 1;
  return out;
}

Mat flip_factors(const Mat& m, int d1, int d2) {
  if (m.rows != d1 * d2 || m.cols != d1 * d2)
    fail(ErrorCode::DimensionMismatch, "flip expects a square matrix of size " + std::to_string(d1 * d2));
  const Mat s = swap_matrix(d1, d2);
  return mul(mul(s, m), swap_matrix(d2, d1));
}

Mat place(const Mat& base, const std::vector<int>& base_dims, const std::vector<int>& positions,
          const std::vector<int>& space_dims) {
  const int k = static_cast<int>(base_dims.size());
  if (static_cast<int>(positions.size()) != k)
    fail(ErrorCode::LengthMismatch, "placement needs one slot per operator leg");
  long long bd = 1;
  for (int d : base_dims) bd *= d;
  if (base.rows != base.cols || base.rows != bd)
    fail(ErrorCode::DimensionMismatch,
         "operator is " + std::to_string(base.rows) + "x" + std::to_string(base.cols) +
             " but its legs multiply to " + std::to_string(bd));
  const int m = static_cast<int>(space_dims.size());
  std::vector<bool> used(static_cast<size_t>(m), false);
  for (int t = 0; t < k; ++t) {
    const int p = positions[t];
    if (p < 1 || p > m) fail(ErrorCode::IndexOutOfRange, "slot " + std::to_string(p) + " outside 1.." + std::to_string(m));
    if (used[p - 1]) fail(ErrorCode::IndexOutOfRange, "slot " + std::to_string(p) + " used twice");
    used[p - 1] = true;
    if (space_dims[p - 1] != base_dims[t])
      fail(ErrorCode::DimensionMismatch, "leg " + std::to_string(t + 1) + " has dimension " +
                                             std::to_string(base_dims[t]) + " but slot " + std::to_string(p) +
                                             " has dimension " + std::to_string(space_dims[p - 1]));
  }

  long long total = 1;
  for (int d : space_dims) total *= d;
  std::vector<long long> stride(static_cast<size_t>(m), 1);
  for (int l = m - 2; l >= 0; --l) stride[l] = stride[l + 1] * space_dims[l + 1];
  std::vector<long long> bstride(static_cast<size_t>(k), 1);
  for (int t = k - 2; t >= 0; --t) bstride[t] = bstride[t + 1] * base_dims[t + 1];

  Mat out(static_cast<int>(total), static_cast<int>(total));
  for (long long col = 0; col < total; ++col) {
    long long bcol = 0;
    for (int t = 0; t < k; ++t) {
      const int digit = static_cast<int>(col / stride[positions[t] - 1]) % space_dims[positions[t] - 1];
      bcol += bstride[t] * digit;
    }
    for (int brow = 0; brow < base.rows; ++brow) {
      const Rat& v = base.at(brow, static_cast<int>(bcol));
      if (v == 0) continue;
      long long row = col;
      for (int t = 0; t < k; ++t) {
        const long long s = stride[positions[t] - 1];
        const int old_digit = static_cast<int>(row / s) % space_dims[positions[t] - 1];
        const int new_digit = static_cast<int>(brow / bstride[t]) % base_dims[t];
        row += (new_digit - old_digit) * s;
      }
      out.at(static_cast<int>(row), static_cast<int>(col)) = v;
    }
  }
  return out;
}

static void require_square_of(const Mat& m, long long want, const char* what) {
  if (m.rows != m.cols || m.rows != want)
    fail(ErrorCode::DimensionMismatch, std::string(what) + " must be " + std::to_string(want) + "x" +
                                           std::to_string(want) + ", got " + std::to_string(m.rows) + "x" +
                                           std::to_string(m.cols));
}

static void report_matrix_identity(CheckReport& rep, const std::string& relation, const Mat& lhs, const Mat& rhs) {
  rep.relations_checked += 1;
  for (int i = 0; i < lhs.rows; ++i)
    for (int j = 0; j < lhs.cols; ++j)
      if (lhs.at(i, j) != rhs.at(i, j)) {
        rep.add_failure(relation, {i, j},
                        "entry " + rat_string(lhs.at(i, j)) + " vs " + rat_string(rhs.at(i, j)));
        return;
      }
}

static void report_matrix_zero(CheckReport& rep, const std::string& relation, const Mat& m) {
  rep.relations_checked += 1;
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0) {
        rep.add_failure(relation, {i, j}, "entry " + rat_string(m.at(i, j)) + " is nonzero");
        return;
      }
}

CheckReport check_qybe(const Mat& r, int dim) {
  require_square_of(r, static_cast<long long>(dim) * dim, "the operator");
  const std::vector<int> sp{dim, dim, dim};
  const std::vector<int> legs{dim, dim};
  const Mat r12 = place(r, legs, {1, 2}, sp);
  const Mat r13 = place(r, legs, {1, 3}, sp);
  const Mat r23 = place(r, legs, {2, 3}, sp);
  CheckReport rep;
  report_matrix_identity(rep, "qybe", mul(mul(r12, r13), r23), mul(mul(r23, r13), r12));
  return rep;
}

CheckReport check_braid_matrix(const Mat& s, int dim) {
  require_square_of(s, static_cast<long long>(dim) * dim, "the operator");
  const std::vector<int> sp{dim, dim, dim};
  const std::vector<int> legs{dim, dim};
  const Mat s12 = place(s, legs, {1, 2}, sp);
  const Mat s23 = place(s, legs, {2, 3}, sp);
  CheckReport rep;
  report_matrix_identity(rep, "braid", mul(mul(s12, s23), s12), mul(mul(s23, s12), s23));
  return rep;
}

CheckReport check_cybe(const Mat& r, int dim) {
  require_square_of(r, static_cast<long long>(dim) * dim, "the operator");
  const std::vector<int> sp{dim, dim, dim};
  const std::vector<int> legs{dim, dim};
  const Mat r12 = place(r, legs, {1, 2}, sp);
  const Mat r13 = place(r, legs, {1, 3}, sp);
  const Mat r23 = place(r, legs, {2, 3}, sp);
  CheckReport rep;
  report_matrix_zero(rep, "cybe", add(add(commutator(r12, r13), commutator(r12, r23)), commutator(r13, r23)));
  return rep;
}

CheckReport check_classical_compat(const Mat& rb, const Mat& rc, const Mat& r, int dim_b, int dim_c) {
  require_square_of(rb, static_cast<long long>(dim_b) * dim_b, "rb");
  require_square_of(rc, static_cast<long long>(dim_c) * dim_c, "rc");
  require_square_of(r, static_cast<long long>(dim_c) * dim_b, "the cross element");
  const std::vector<int> cb{dim_c, dim_b};
  CheckReport rep;
  {
    const std::vector<int> sp{dim_b, dim_b, dim_c};
    const Mat rb12 = place(rb, {dim_b, dim_b}, {1, 2}, sp);
    const Mat r31 = place(r, cb, {3, 1}, sp);
    const Mat r32 = place(r, cb, {3, 2}, sp);
    report_matrix_zero(rep, "fused_b", add(commutator(rb12, add(r31, r32)), commutator(r31, r32)));
  }
  {
    const std::vector<int> sp{dim_c, dim_c, dim_b};
    const Mat rc12 = place(rc, {dim_c, dim_c}, {1, 2}, sp);
    const Mat r13 = place(r, cb, {1, 3}, sp);
    const Mat r23 = place(r, cb, {2, 3}, sp);
    report_matrix_zero(rep, "fused_c", sub(commutator(rc12, add(r13, r23)), commutator(r13, r23)));
  }
  return rep;
}

Mat build_classical_extension(const Mat& rb, const Mat& rc, const Mat& r, int dim_b, int dim_c) {
  CheckReport gate;
  gate.merge(check_cybe(rb, dim_b));
  if (!gate.passed()) fail(ErrorCode::Incompatible, "rb does not satisfy the classical equation");
  gate.merge(check_cybe(rc, dim_c));
  if (!gate.passed()) fail(ErrorCode::Incompatible, "rc does not satisfy the classical equation");
  gate.merge(check_classical_compat(rb, rc, r, dim_b, dim_c));
  if (!gate.passed())
    fail(ErrorCode::Incompatible, "cross element is not compatible (" + gate.failures.front().relation + ")");
  const std::vector<int> sp{dim_b, dim_c, dim_b, dim_c};
  const std::vector<int> cb{dim_c, dim_b};
  return add(add(place(rb, {dim_b, dim_b}, {1, 3}, sp), place(rc, {dim_c, dim_c}, {2, 4}, sp)),
             sub(place(r, cb, {4, 1}, sp), place(r, cb, {2, 3}, sp)));
}

CheckReport check_quantum_compat(const Mat& rb, const Mat& rc, const Mat& r, int dim_b, int dim_c) {
  require_square_of(rb, static_cast<long long>(dim_b) * dim_b, "rb");
  require_square_of(rc, static_cast<long long>(dim_c) * dim_c, "rc");
  require_square_of(r, static_cast<long long>(dim_c) * dim_b, "the cross operator");
  const std::vector<int> cb{dim_c, dim_b};
  CheckReport rep;
  {
    const std::vector<int> sp{dim_c, dim_b, dim_b};
    const Mat rb23 = place(rb, {dim_b, dim_b}, {2, 3}, sp);
    const Mat r12 = place(r, cb, {1, 2}, sp);
    const Mat r13 = place(r, cb, {1, 3}, sp);
    report_matrix_identity(rep, "compat_b", mul(mul(rb23, r12), r13), mul(mul(r13, r12), rb23));
  }
  {
    const std::vector<int> sp{dim_c, dim_c, dim_b};
    const Mat rc12 = place(rc, {dim_c, dim_c}, {1, 2}, sp);
    const Mat r23 = place(r, cb, {2, 3}, sp);
    const Mat r13 = place(r, cb, {1, 3}, sp);
    report_matrix_identity(rep, "compat_c", mul(mul(rc12, r23), r13), mul(mul(r13, r23), rc12));
  }
  return rep;
}

Mat build_quantum_extension(const Mat& rb, const Mat& rc, const Mat& r, int dim_b, int dim_c) {
  require_square_of(r, static_cast<long long>(dim_c) * dim_b, "the cross operator");
  Mat r_inv;
  try {
    r_inv = invert(r);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Singular)
      fail(ErrorCode::NotInvertible, "the cross operator must be invertible to build an extension");
    throw;
  }
  const CheckReport compat = check_quantum_compat(rb, rc, r, dim_b, dim_c);
  if (!compat.passed())
    fail(ErrorCode::Incompatible, "cross operator is not compatible (" + compat.failures.front().relation + ")");
  const std::vector<int> sp{dim_b, dim_c, dim_b, dim_c};
  const std::vector<int> cb{dim_c, dim_b};
  return mul(mul(place(r, cb, {4, 1}, sp), place(rb, {dim_b, dim_b}, {1, 3}, sp)),
             mul(place(rc, {dim_c, dim_c}, {2, 4}, sp), place(r_inv, cb, {2, 3}, sp)));
}

CheckReport check_twist_matrix(const Mat& t, const Mat& f, const Mat& phi, const Mat& psi, int dim) {
  const long long d2 = static_cast<long long>(dim) * dim;
  const long long d3 = d2 * dim;
  require_square_of(t, d2, "t");
  require_square_of(f, d2, "f");
  require_square_of(phi, d3, "phi");
  require_square_of(psi, d3, "psi");
  Mat f_inv;
  try {
    f_inv = invert(f);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Singular) fail(ErrorCode::NotInvertible, "the twisting operator must be invertible");
    throw;
  }
  const std::vector<int> sp{dim, dim, dim};
  const std::vector<int> legs{dim, dim};
  const Mat f12 = place(f, legs, {1, 2}, sp);
  const Mat f23 = place(f, legs, {2, 3}, sp);
  const Mat t12 = place(t, legs, {1, 2}, sp);
  const Mat t23 = place(t, legs, {2, 3}, sp);
  CheckReport rep;
  report_matrix_identity(rep, "twist_intertwine", mul(f12, psi), mul(f23, phi));
  report_matrix_identity(rep, "twist_phi_commutes", mul(phi, t23), mul(t23, phi));
  report_matrix_identity(rep, "twist_psi_commutes", mul(psi, t12), mul(t12, psi));
  const Mat twisted = mul(mul(f, t), f_inv);
  CheckReport braid = check_braid_matrix(twisted, dim);
  rep.relations_checked += braid.relations_checked;
  for (const auto& fl : braid.failures) rep.add_failure("braid_twisted", fl.witness, fl.note);
  return rep;
}

CheckReport y3_lie_check(const Mat& rb, const Mat& rc, const Mat& r, int dim_b, int dim_c) {
  require_square_of(rb, static_cast<long long>(dim_b) * dim_b, "rb");
  require_square_of(rc, static_cast<long long>(dim_c) * dim_c, "rc");
  require_square_of(r, static_cast<long long>(dim_c) * dim_b, "the cross element");
  const std::vector<int> sp{dim_b, dim_c, dim_b, dim_c, dim_b, dim_c};
  const std::vector<int> bb{dim_b, dim_b};
  const std::vector<int> cc{dim_c, dim_c};
  const std::vector<int> cb{dim_c, dim_b};

  // Strand pairs (i,j) with 1 <= i < j <= 3 index the b and c generators; ordered
  // pairs (k,l) with k != l index the d generators d(2k, 2l-1).
  auto b_at = [&](int i, int j) { return place(rb, bb, {2 * i - 1, 2 * j - 1}, sp); };
  auto c_at = [&](int i, int j) { return place(rc, cc, {2 * i, 2 * j}, sp); };
  auto d_at = [&](int k, int l) { return place(r, cb, {2 * k, 2 * l - 1}, sp); };
  auto b_name = [](int i, int j) { return "b" + std::to_string(2 * i - 1) + std::to_string(2 * j - 1); };
  auto c_name = [](int i, int j) { return "c" + std::to_string(2 * i) + std::to_string(2 * j); };
  auto d_name = [](int k, int l) { return "d" + std::to_string(2 * k) + std::to_string(2 * l - 1); };

  CheckReport rep;
  auto comm_zero = [&](const std::string& label, const Mat& x, const Mat& y) {
    report_matrix_zero(rep, label, commutator(x, y));
  };

  const Mat b13 = b_at(1, 2), b15 = b_at(1, 3), b35 = b_at(2, 3);
  const Mat c24 = c_at(1, 2), c26 = c_at(1, 3), c46 = c_at(2, 3);

  report_matrix_zero(rep, "cybe_b",
                     add(add(commutator(b13, b15), commutator(b13, b35)), commutator(b15, b35)));
  report_matrix_zero(rep, "cybe_c",
                     add(add(commutator(c24, c26), commutator(c24, c46)), commutator(c26, c46)));

  const std::vector<std::pair<int, int>> strand_pairs{{1, 2}, {1, 3}, {2, 3}};
  std::vector<std::pair<int, int>> d_index;
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; l <= 3; ++l)
      if (k != l) d_index.emplace_back(k, l);

  for (const auto& [i, j] : strand_pairs)
    for (const auto& [p, q] : strand_pairs)
      comm_zero("comm " + b_name(i, j) + " " + c_name(p, q), b_at(i, j), c_at(p, q));

  for (const auto& [i, j] : strand_pairs)
    for (const auto& [k, l] : d_index)
      if (l != i && l != j)
        comm_zero("comm " + b_name(i, j) + " " + d_name(k, l), b_at(i, j), d_at(k, l));

  for (const auto& [i, j] : strand_pairs)
    for (const auto& [k, l] : d_index)
      if (k != i && k != j)
        comm_zero("comm " + c_name(i, j) + " " + d_name(k, l), c_at(i, j), d_at(k, l));

  for (size_t u = 0; u < d_index.size(); ++u)
    for (size_t v = u + 1; v < d_index.size(); ++v) {
      const auto [k, l] = d_index[u];
      const auto [m, n] = d_index[v];
      if (k != m && l != n)
        comm_zero("comm " + d_name(k, l) + " " + d_name(m, n), d_at(k, l), d_at(m, n));
    }

  for (const auto& [i, j] : strand_pairs) {
    int k = 6 - i - j;  // the strand outside {i,j}
    report_matrix_zero(rep, "mixed " + b_name(i, j),
                       add(commutator(b_at(i, j), add(d_at(k, i), d_at(k, j))),
                           commutator(d_at(k, i), d_at(k, j))));
    report_matrix_zero(rep, "mixed " + c_name(i, j),
                       sub(commutator(c_at(i, j), add(d_at(i, k), d_at(j, k))),
                           commutator(d_at(i, k), d_at(j, k))));
  }

  auto e_at = [&](int i, int j) {
    return add(add(b_at(i, j), c_at(i, j)), sub(d_at(j, i), d_at(i, j)));
  };
  const Mat e12 = e_at(1, 2), e13 = e_at(1, 3), e23 = e_at(2, 3);
  report_matrix_zero(rep, "cybe_e",
                     add(add(commutator(e12, e13), commutator(e12, e23)), commutator(e13, e23)));
  return rep;
}

}  // namespace ybx
