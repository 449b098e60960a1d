#include "ybx/hopf.hpp"

#include <string>

#include "ybx/error.hpp"

namespace ybx {

void validate_hopf_shape(const HopfData& h) {
  const size_t n = static_cast<size_t>(h.dim);
  if (h.dim <= 0) fail(ErrorCode::DimensionMismatch, "dimension must be positive");
  if (h.mult.size() != n * n * n) fail(ErrorCode::DimensionMismatch, "product tensor has wrong size");
  if (h.unit.size() != n) fail(ErrorCode::DimensionMismatch, "unit vector has wrong size");
  if (h.comult.size() != n * n * n) fail(ErrorCode::DimensionMismatch, "coproduct tensor has wrong size");
  if (h.counit.size() != n) fail(ErrorCode::DimensionMismatch, "counit vector has wrong size");
  if (h.antipode.rows != h.dim || h.antipode.cols != h.dim)
    fail(ErrorCode::DimensionMismatch, "antipode matrix has wrong size");
}

HopfData group_algebra(const GroupTable& g) {
  const int n = g.size;
  HopfData h;
  h.dim = n;
  h.mult.assign(static_cast<size_t>(n) * n * n, Rat(0));
  h.comult.assign(static_cast<size_t>(n) * n * n, Rat(0));
  h.unit.assign(static_cast<size_t>(n), Rat(0));
  h.counit.assign(static_cast<size_t>(n), Rat(1));
  h.antipode = Mat(n, n);
  h.unit[0] = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      h.mult[(static_cast<size_t>(i) * n + j) * n + g.mul(i, j)] = 1;
    h.comult[(static_cast<size_t>(i) * n + i) * n + i] = 1;
    h.antipode.at(g.inverse(i), i) = 1;
  }
  return h;
}

HopfData dual_group_algebra(const GroupTable& g) {
  const int n = g.size;
  HopfData h;
  h.dim = n;
  h.mult.assign(static_cast<size_t>(n) * n * n, Rat(0));
  h.comult.assign(static_cast<size_t>(n) * n * n, Rat(0));
  h.unit.assign(static_cast<size_t>(n), Rat(1));
  h.counit.assign(static_cast<size_t>(n), Rat(0));
  h.antipode = Mat(n, n);
  h.counit[0] = 1;
  for (int i = 0; i < n; ++i) {
    h.mult[(static_cast<size_t>(i) * n + i) * n + i] = 1;
    h.antipode.at(g.inverse(i), i) = 1;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      h.comult[(static_cast<size_t>(g.mul(a, b)) * n + a) * n + b] = 1;
  return h;
}

CheckReport check_hopf_axioms(const HopfData& h) {
  validate_hopf_shape(h);
  const int n = h.dim;
  CheckReport rep;

  bool assoc_bad = false;
  for (int i = 0; i < n && !assoc_bad; ++i)
    for (int j = 0; j < n && !assoc_bad; ++j)
      for (int k = 0; k < n && !assoc_bad; ++k) {
        rep.relations_checked += 1;
        for (int l = 0; l < n; ++l) {
          Rat lhs(0), rhs(0);
          for (int t = 0; t < n; ++t) {
            lhs += h.m(i, j, t) * h.m(t, k, l);
            rhs += h.m(j, k, t) * h.m(i, t, l);
          }
          if (lhs != rhs) {
            rep.add_failure("associativity", {i, j, k, l},
                            "coefficient " + rat_string(lhs) + " vs " + rat_string(rhs));
            assoc_bad = true;
            break;
          }
        }
      }

  for (int i = 0; i < n; ++i) {
    rep.relations_checked += 1;
    for (int l = 0; l < n; ++l) {
      Rat left(0), right(0);
      for (int t = 0; t < n; ++t) {
        left += h.unit[t] * h.m(t, i, l);
        right += h.unit[t] * h.m(i, t, l);
      }
      const Rat want = (l == i) ? Rat(1) : Rat(0);
      if (left != want || right != want) {
        rep.add_failure("unit", {i, l}, "unit element does not act as identity");
        break;
      }
    }
  }

  for (int i = 0; i < n; ++i) {
    rep.relations_checked += 1;
    bool bad = false;
    for (int a = 0; a < n && !bad; ++a)
      for (int b = 0; b < n && !bad; ++b)
        for (int c = 0; c < n && !bad; ++c) {
          Rat lhs(0), rhs(0);
          for (int t = 0; t < n; ++t) {
            lhs += h.d(i, t, c) * h.d(t, a, b);
            rhs += h.d(i, a, t) * h.d(t, b, c);
          }
          if (lhs != rhs) {
            rep.add_failure("coassociativity", {i, a, b, c},
                            "coefficient " + rat_string(lhs) + " vs " + rat_string(rhs));
            bad = true;
          }
        }
  }

  for (int i = 0; i < n; ++i) {
    rep.relations_checked += 1;
    for (int k = 0; k < n; ++k) {
      Rat left(0), right(0);
      for (int t = 0; t < n; ++t) {
        left += h.counit[t] * h.d(i, t, k);
        right += h.counit[t] * h.d(i, k, t);
      }
      const Rat want = (k == i) ? Rat(1) : Rat(0);
      if (left != want || right != want) {
        rep.add_failure("counit", {i, k}, "counit does not collapse the coproduct");
        break;
      }
    }
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      rep.relations_checked += 1;
      bool bad = false;
      for (int k1 = 0; k1 < n && !bad; ++k1)
        for (int k2 = 0; k2 < n && !bad; ++k2) {
          Rat lhs(0), rhs(0);
          for (int t = 0; t < n; ++t) lhs += h.m(i, j, t) * h.d(t, k1, k2);
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
              if (h.d(i, a, b) == 0) continue;
              for (int c = 0; c < n; ++c)
                for (int e = 0; e < n; ++e) {
                  if (h.d(j, c, e) == 0) continue;
                  rhs += h.d(i, a, b) * h.d(j, c, e) * h.m(a, c, k1) * h.m(b, e, k2);
                }
            }
          if (lhs != rhs) {
            rep.add_failure("comult_multiplicative", {i, j, k1, k2},
                            "coefficient " + rat_string(lhs) + " vs " + rat_string(rhs));
            bad = true;
          }
        }
    }
  {
    rep.relations_checked += 1;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Rat lhs(0);
        for (int i = 0; i < n; ++i) lhs += h.unit[i] * h.d(i, j, k);
        if (lhs != h.unit[j] * h.unit[k]) {
          rep.add_failure("comult_multiplicative", {j, k}, "coproduct of the unit is not unit (x) unit");
          break;
        }
      }
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      rep.relations_checked += 1;
      Rat lhs(0);
      for (int t = 0; t < n; ++t) lhs += h.m(i, j, t) * h.counit[t];
      if (lhs != h.counit[i] * h.counit[j]) {
        rep.add_failure("counit_multiplicative", {i, j},
                        "coefficient " + rat_string(lhs) + " vs " + rat_string(h.counit[i] * h.counit[j]));
      }
    }
  {
    rep.relations_checked += 1;
    Rat eps_one(0);
    for (int i = 0; i < n; ++i) eps_one += h.unit[i] * h.counit[i];
    if (eps_one != 1) rep.add_failure("counit_multiplicative", {}, "counit of the unit is not 1");
  }

  for (int i = 0; i < n; ++i) {
    rep.relations_checked += 1;
    for (int l = 0; l < n; ++l) {
      Rat left(0), right(0);
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          const Rat& dv = h.d(i, j, k);
          if (dv == 0) continue;
          for (int s = 0; s < n; ++s) {
            if (h.antipode.at(s, j) != 0) left += dv * h.antipode.at(s, j) * h.m(s, k, l);
            if (h.antipode.at(s, k) != 0) right += dv * h.antipode.at(s, k) * h.m(j, s, l);
          }
        }
      const Rat want = h.counit[i] * h.unit[l];
      if (left != want || right != want) {
        rep.add_failure("antipode", {i, l},
                        "convolution gives " + rat_string(left) + " / " + rat_string(right) +
                            ", expected " + rat_string(want));
        break;
      }
    }
  }

  bool cocomm = true;
  for (int i = 0; i < n && cocomm; ++i)
    for (int j = 0; j < n && cocomm; ++j)
      for (int k = 0; k < n && cocomm; ++k)
        if (h.d(i, j, k) != h.d(i, k, j)) cocomm = false;
  rep.info.emplace_back("cocommutative", cocomm);
  return rep;
}

int algebra_dim(const AlgebraFactors& factors) {
  int d = 1;
  for (const auto* f : factors) d *= f->dim;
  return d;
}

static std::vector<long long> factor_strides(const AlgebraFactors& factors) {
  const int k = static_cast<int>(factors.size());
  std::vector<long long> stride(static_cast<size_t>(k), 1);
  for (int t = k - 2; t >= 0; --t) stride[t] = stride[t + 1] * factors[t + 1]->dim;
  return stride;
}

std::vector<Rat> algebra_unit(const AlgebraFactors& factors) {
  const int total = algebra_dim(factors);
  const auto stride = factor_strides(factors);
  std::vector<Rat> out(static_cast<size_t>(total), Rat(1));
  for (int v = 0; v < total; ++v)
    for (size_t t = 0; t < factors.size(); ++t) {
      const int digit = static_cast<int>(v / stride[t]) % factors[t]->dim;
      out[v] *= factors[t]->unit[digit];
      if (out[v] == 0) break;
    }
  return out;
}

std::vector<Rat> algebra_mul(const AlgebraFactors& factors, const std::vector<Rat>& x,
                             const std::vector<Rat>& y) {
  const int total = algebra_dim(factors);
  if (static_cast<int>(x.size()) != total || static_cast<int>(y.size()) != total)
    fail(ErrorCode::DimensionMismatch, "element size does not match the tensor algebra");
  const auto stride = factor_strides(factors);
  const int k = static_cast<int>(factors.size());
  std::vector<Rat> out(static_cast<size_t>(total), Rat(0));
  std::vector<int> di(static_cast<size_t>(k)), dj(static_cast<size_t>(k));
  for (int i = 0; i < total; ++i) {
    if (x[i] == 0) continue;
    for (int t = 0; t < k; ++t) di[t] = static_cast<int>(i / stride[t]) % factors[t]->dim;
    for (int j = 0; j < total; ++j) {
      if (y[j] == 0) continue;
      for (int t = 0; t < k; ++t) dj[t] = static_cast<int>(j / stride[t]) % factors[t]->dim;
      const Rat base = x[i] * y[j];
      // expand the product leg by leg
      std::vector<std::pair<long long, Rat>> partial{{0, base}};
      for (int t = 0; t < k && !partial.empty(); ++t) {
        std::vector<std::pair<long long, Rat>> next;
        const HopfData& f = *factors[t];
        for (int l = 0; l < f.dim; ++l) {
          const Rat& mv = f.m(di[t], dj[t], l);
          if (mv == 0) continue;
          for (const auto& [idx, coef] : partial) next.emplace_back(idx + stride[t] * l, coef * mv);
        }
        partial = std::move(next);
      }
      for (const auto& [idx, coef] : partial) out[idx] += coef;
    }
  }
  return out;
}

std::vector<Rat> algebra_inverse(const AlgebraFactors& factors, const std::vector<Rat>& x) {
  const int total = algebra_dim(factors);
  if (static_cast<int>(x.size()) != total)
    fail(ErrorCode::DimensionMismatch, "element size does not match the tensor algebra");
  Mat left(total, total);
  for (int j = 0; j < total; ++j) {
    std::vector<Rat> basis(static_cast<size_t>(total), Rat(0));
    basis[j] = 1;
    const auto col = algebra_mul(factors, x, basis);
    for (int i = 0; i < total; ++i) left.at(i, j) = col[i];
  }
  Mat left_inv;
  try {
    left_inv = invert(left);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Singular)
      fail(ErrorCode::NotInvertibleInAlgebra, "element has no inverse in the tensor algebra");
    throw;
  }
  const auto one = algebra_unit(factors);
  std::vector<Rat> inv(static_cast<size_t>(total), Rat(0));
  for (int i = 0; i < total; ++i)
    for (int j = 0; j < total; ++j) {
      if (left_inv.at(i, j) == 0 || one[j] == 0) continue;
      inv[i] += left_inv.at(i, j) * one[j];
    }
  if (algebra_mul(factors, x, inv) != one || algebra_mul(factors, inv, x) != one)
    fail(ErrorCode::NotInvertibleInAlgebra, "element has only a one-sided inverse candidate");
  return inv;
}

std::vector<Rat> place_element(const Mat& coeffs, int pos_row, int pos_col,
                               const AlgebraFactors& factors) {
  const int k = static_cast<int>(factors.size());
  if (pos_row < 1 || pos_row > k || pos_col < 1 || pos_col > k || pos_row == pos_col)
    fail(ErrorCode::IndexOutOfRange, "element legs must go to two distinct factor slots");
  if (coeffs.rows != factors[pos_row - 1]->dim || coeffs.cols != factors[pos_col - 1]->dim)
    fail(ErrorCode::DimensionMismatch, "element shape does not match the chosen factor slots");
  const int total = algebra_dim(factors);
  const auto stride = factor_strides(factors);
  std::vector<Rat> out(static_cast<size_t>(total), Rat(0));
  for (int v = 0; v < total; ++v) {
    const int dr = static_cast<int>(v / stride[pos_row - 1]) % factors[pos_row - 1]->dim;
    const int dc = static_cast<int>(v / stride[pos_col - 1]) % factors[pos_col - 1]->dim;
    Rat val = coeffs.at(dr, dc);
    if (val == 0) continue;
    for (int t = 0; t < k; ++t) {
      if (t == pos_row - 1 || t == pos_col - 1) continue;
      const int digit = static_cast<int>(v / stride[t]) % factors[t]->dim;
      val *= factors[t]->unit[digit];
      if (val == 0) break;
    }
    out[v] = val;
  }
  return out;
}

static void compare_elements(CheckReport& rep, const std::string& relation, const std::vector<Rat>& lhs,
                             const std::vector<Rat>& rhs) {
  rep.relations_checked += 1;
  for (size_t v = 0; v < lhs.size(); ++v)
    if (lhs[v] != rhs[v]) {
      rep.add_failure(relation, {static_cast<long long>(v)},
                      "coefficient " + rat_string(lhs[v]) + " vs " + rat_string(rhs[v]));
      return;
    }
}

CheckReport check_cross_element(const HopfData& b, const HopfData& c, const Mat& r) {
  validate_hopf_shape(b);
  validate_hopf_shape(c);
  if (r.rows != c.dim || r.cols != b.dim)
    fail(ErrorCode::DimensionMismatch, "cross element must have one row per first-algebra basis vector");
  const AlgebraFactors cb{&c, &b};
  std::vector<Rat> rvec(static_cast<size_t>(c.dim) * b.dim);
  for (int i = 0; i < c.dim; ++i)
    for (int j = 0; j < b.dim; ++j) rvec[static_cast<size_t>(i) * b.dim + j] = r.at(i, j);
  const auto r_inv = algebra_inverse(cb, rvec);

  CheckReport rep;
  {
    const AlgebraFactors ccb{&c, &c, &b};
    std::vector<Rat> lhs(static_cast<size_t>(algebra_dim(ccb)), Rat(0));
    for (int c1 = 0; c1 < c.dim; ++c1)
      for (int c2 = 0; c2 < c.dim; ++c2)
        for (int bb = 0; bb < b.dim; ++bb) {
          Rat acc(0);
          for (int i = 0; i < c.dim; ++i) acc += c.d(i, c1, c2) * r.at(i, bb);
          lhs[(static_cast<size_t>(c1) * c.dim + c2) * b.dim + bb] = acc;
        }
    const auto rhs =
        algebra_mul(ccb, place_element(r, 2, 3, ccb), place_element(r, 1, 3, ccb));
    compare_elements(rep, "spl_1", lhs, rhs);
  }
  {
    const AlgebraFactors cbb{&c, &b, &b};
    std::vector<Rat> lhs(static_cast<size_t>(algebra_dim(cbb)), Rat(0));
    for (int cc = 0; cc < c.dim; ++cc)
      for (int b1 = 0; b1 < b.dim; ++b1)
        for (int b2 = 0; b2 < b.dim; ++b2) {
          Rat acc(0);
          for (int j = 0; j < b.dim; ++j) acc += r.at(cc, j) * b.d(j, b1, b2);
          lhs[(static_cast<size_t>(cc) * b.dim + b1) * b.dim + b2] = acc;
        }
    const auto rhs =
        algebra_mul(cbb, place_element(r, 1, 2, cbb), place_element(r, 1, 3, cbb));
    compare_elements(rep, "spl_2", lhs, rhs);
  }
  {
    std::vector<Rat> lhs(static_cast<size_t>(c.dim) * b.dim, Rat(0));
    for (int cc = 0; cc < c.dim; ++cc)
      for (int b2 = 0; b2 < b.dim; ++b2) {
        Rat acc(0);
        for (int j = 0; j < b.dim; ++j) acc += r.at(cc, j) * b.antipode.at(b2, j);
        lhs[static_cast<size_t>(cc) * b.dim + b2] = acc;
      }
    compare_elements(rep, "spl_3", lhs, r_inv);
  }
  {
    std::vector<Rat> lhs(static_cast<size_t>(c.dim) * b.dim, Rat(0));
    for (int c2 = 0; c2 < c.dim; ++c2)
      for (int bb = 0; bb < b.dim; ++bb) {
        Rat acc(0);
        for (int i = 0; i < c.dim; ++i) acc += c.antipode.at(c2, i) * r.at(i, bb);
        lhs[static_cast<size_t>(c2) * b.dim + bb] = acc;
      }
    compare_elements(rep, "spl_4", lhs, r_inv);
  }
  return rep;
}

HopfData build_product_hopf(const HopfData& b, const HopfData& c, const Mat& r) {
  validate_hopf_shape(b);
  validate_hopf_shape(c);
  if (r.rows != c.dim || r.cols != b.dim)
    fail(ErrorCode::DimensionMismatch, "cross element must have one row per first-algebra basis vector");
  const CheckReport gate = check_cross_element(b, c, r);
  if (!gate.passed())
    fail(ErrorCode::Incompatible,
         "cross element does not satisfy the splitting conditions (" + gate.failures.front().relation + ")");
  const int nb = b.dim, nc = c.dim, nw = nb * nc;

  HopfData w;
  w.dim = nw;
  w.mult.assign(static_cast<size_t>(nw) * nw * nw, Rat(0));
  w.comult.assign(static_cast<size_t>(nw) * nw * nw, Rat(0));
  w.unit.assign(static_cast<size_t>(nw), Rat(0));
  w.counit.assign(static_cast<size_t>(nw), Rat(0));
  w.antipode = Mat(nw, nw);

  for (int b1 = 0; b1 < nb; ++b1)
    for (int c1 = 0; c1 < nc; ++c1) {
      const int i = b1 * nc + c1;
      w.unit[i] = b.unit[b1] * c.unit[c1];
      w.counit[i] = b.counit[b1] * c.counit[c1];
      for (int b2 = 0; b2 < nb; ++b2)
        for (int c2 = 0; c2 < nc; ++c2) {
          const int j = b2 * nc + c2;
          for (int b3 = 0; b3 < nb; ++b3) {
            if (b.m(b1, b2, b3) == 0) continue;
            for (int c3 = 0; c3 < nc; ++c3) {
              const Rat v = b.m(b1, b2, b3) * c.m(c1, c2, c3);
              if (v == 0) continue;
              w.mult[(static_cast<size_t>(i) * nw + j) * nw + (b3 * nc + c3)] = v;
            }
          }
        }
    }

  const AlgebraFactors bcbc{&b, &c, &b, &c};
  const auto r23 = place_element(r, 2, 3, bcbc);
  std::vector<Rat> rvec(static_cast<size_t>(nc) * nb);
  for (int i = 0; i < nc; ++i)
    for (int j = 0; j < nb; ++j) rvec[static_cast<size_t>(i) * nb + j] = r.at(i, j);
  const auto r_inv_small = algebra_inverse(AlgebraFactors{&c, &b}, rvec);
  Mat r_inv_mat(nc, nb);
  for (int i = 0; i < nc; ++i)
    for (int j = 0; j < nb; ++j) r_inv_mat.at(i, j) = r_inv_small[static_cast<size_t>(i) * nb + j];
  const auto r23_inv = place_element(r_inv_mat, 2, 3, bcbc);

  const int four = algebra_dim(bcbc);
  for (int bi = 0; bi < nb; ++bi)
    for (int ci = 0; ci < nc; ++ci) {
      std::vector<Rat> db13(static_cast<size_t>(four), Rat(0));
      std::vector<Rat> dc24(static_cast<size_t>(four), Rat(0));
      for (int v = 0; v < four; ++v) {
        const int d1 = v / (nc * nb * nc);
        const int d2 = (v / (nb * nc)) % nc;
        const int d3 = (v / nc) % nb;
        const int d4 = v % nc;
        db13[v] = b.d(bi, d1, d3) * c.unit[d2] * c.unit[d4];
        dc24[v] = c.d(ci, d2, d4) * b.unit[d1] * b.unit[d3];
      }
      const auto conj = algebra_mul(
          bcbc, r23, algebra_mul(bcbc, db13, algebra_mul(bcbc, dc24, r23_inv)));
      const int i = bi * nc + ci;
      for (int v = 0; v < four; ++v) {
        if (conj[v] == 0) continue;
        const int d1 = v / (nc * nb * nc);
        const int d2 = (v / (nb * nc)) % nc;
        const int d3 = (v / nc) % nb;
        const int d4 = v % nc;
        w.comult[(static_cast<size_t>(i) * nw + (d1 * nc + d2)) * nw + (d3 * nc + d4)] = conj[v];
      }
    }

  const AlgebraFactors bc{&b, &c};
  Mat r21(nb, nc);
  for (int i = 0; i < nc; ++i)
    for (int j = 0; j < nb; ++j) r21.at(j, i) = r.at(i, j);
  const auto r21_vec = place_element(r21, 1, 2, bc);
  const auto r21_inv = algebra_inverse(bc, r21_vec);
  for (int bi = 0; bi < nb; ++bi)
    for (int ci = 0; ci < nc; ++ci) {
      std::vector<Rat> core(static_cast<size_t>(nw), Rat(0));
      for (int b2 = 0; b2 < nb; ++b2)
        for (int c2 = 0; c2 < nc; ++c2)
          core[static_cast<size_t>(b2) * nc + c2] = b.antipode.at(b2, bi) * c.antipode.at(c2, ci);
      const auto img = algebra_mul(bc, r21_inv, algebra_mul(bc, core, r21_vec));
      for (int v = 0; v < nw; ++v) w.antipode.at(v, bi * nc + ci) = img[v];
    }
  return w;
}

Mat product_r_element(const HopfData& b, const HopfData& c, const Mat& r, const Mat& rb,
                      const Mat& rc) {
  validate_hopf_shape(b);
  validate_hopf_shape(c);
  if (r.rows != c.dim || r.cols != b.dim)
    fail(ErrorCode::DimensionMismatch, "cross element must have one row per first-algebra basis vector");
  if (rb.rows != b.dim || rb.cols != b.dim || rc.rows != c.dim || rc.cols != c.dim)
    fail(ErrorCode::DimensionMismatch, "factor elements must be square over their algebras");
  const int nb = b.dim, nc = c.dim, nw = nb * nc;
  const AlgebraFactors bcbc{&b, &c, &b, &c};

  std::vector<Rat> rvec(static_cast<size_t>(nc) * nb);
  for (int i = 0; i < nc; ++i)
    for (int j = 0; j < nb; ++j) rvec[static_cast<size_t>(i) * nb + j] = r.at(i, j);
  const auto r_inv_small = algebra_inverse(AlgebraFactors{&c, &b}, rvec);
  Mat r_inv_mat(nc, nb);
  for (int i = 0; i < nc; ++i)
    for (int j = 0; j < nb; ++j) r_inv_mat.at(i, j) = r_inv_small[static_cast<size_t>(i) * nb + j];

  const auto prod = algebra_mul(
      bcbc, place_element(r, 4, 1, bcbc),
      algebra_mul(bcbc, place_element(rb, 1, 3, bcbc),
                  algebra_mul(bcbc, place_element(rc, 2, 4, bcbc),
                              place_element(r_inv_mat, 2, 3, bcbc))));

  Mat out(nw, nw);
  const int four = algebra_dim(bcbc);
  for (int v = 0; v < four; ++v) {
    if (prod[v] == 0) continue;
    const int d1 = v / (nc * nb * nc);
    const int d2 = (v / (nb * nc)) % nc;
    const int d3 = (v / nc) % nb;
    const int d4 = v % nc;
    out.at(d1 * nc + d2, d3 * nc + d4) = prod[v];
  }
  return out;
}

CheckReport check_quasitriangular(const HopfData& h, const Mat& r, QTConvention convention) {
  validate_hopf_shape(h);
  const int n = h.dim;
  if (r.rows != n || r.cols != n)
    fail(ErrorCode::DimensionMismatch, "element of H (x) H must be dim x dim");
  const AlgebraFactors hh{&h, &h};
  std::vector<Rat> rvec(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rvec[static_cast<size_t>(i) * n + j] = r.at(i, j);
  algebra_inverse(hh, rvec);  // NotInvertibleInAlgebra if absent

  CheckReport rep;
  {
    bool bad = false;
    for (int a = 0; a < n && !bad; ++a) {
      std::vector<Rat> delta(static_cast<size_t>(n) * n), delta_op(static_cast<size_t>(n) * n);
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          delta[static_cast<size_t>(j) * n + k] = h.d(a, j, k);
          delta_op[static_cast<size_t>(j) * n + k] = h.d(a, k, j);
        }
      const auto lhs = algebra_mul(hh, delta_op, rvec);
      const auto rhs = algebra_mul(hh, rvec, delta);
      rep.relations_checked += 1;
      for (size_t v = 0; v < lhs.size(); ++v)
        if (lhs[v] != rhs[v]) {
          rep.add_failure("qt_exchange", {a, static_cast<long long>(v)},
                          "coefficient " + rat_string(lhs[v]) + " vs " + rat_string(rhs[v]));
          bad = true;
          break;
        }
    }
  }

  const AlgebraFactors hhh{&h, &h, &h};
  const auto r12 = place_element(r, 1, 2, hhh);
  const auto r13 = place_element(r, 1, 3, hhh);
  const auto r23 = place_element(r, 2, 3, hhh);
  const int total = algebra_dim(hhh);

  std::vector<Rat> split_first(static_cast<size_t>(total), Rat(0));
  std::vector<Rat> split_second(static_cast<size_t>(total), Rat(0));
  for (int a = 0; a < n; ++a)
    for (int bb = 0; bb < n; ++bb)
      for (int cc = 0; cc < n; ++cc) {
        Rat acc1(0), acc2(0);
        for (int i = 0; i < n; ++i) {
          acc1 += h.d(i, a, bb) * r.at(i, cc);
          acc2 += r.at(a, i) * h.d(i, bb, cc);
        }
        const size_t v = (static_cast<size_t>(a) * n + bb) * n + cc;
        split_first[v] = acc1;
        split_second[v] = acc2;
      }
  if (convention == QTConvention::standard) {
    compare_elements(rep, "qt_comult_first", split_first, algebra_mul(hhh, r13, r23));
    compare_elements(rep, "qt_comult_second", split_second, algebra_mul(hhh, r13, r12));
  } else {
    compare_elements(rep, "qt_comult_first", split_first, algebra_mul(hhh, r23, r13));
    compare_elements(rep, "qt_comult_second", split_second, algebra_mul(hhh, r12, r13));
  }

  compare_elements(rep, "qybe_algebra", algebra_mul(hhh, r12, algebra_mul(hhh, r13, r23)),
                   algebra_mul(hhh, r23, algebra_mul(hhh, r13, r12)));
  return rep;
}

}  // namespace ybx
