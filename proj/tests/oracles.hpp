#pragma once

// Independent reference computations. Nothing here calls the Smith normal
// form, Bareiss determinants or the group-ring product.

#include <cstdint>
#include <map>
#include <vector>

#include "torelli/int_matrix.hpp"

namespace oracle {

using torelli::IntMatrix;
using torelli::IntVector;
using torelli::Integer;

/// Laplace expansion along the first row.
inline Integer cofactor_determinant(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t c = 0; c < n; ++c)
      if (c != j) cols.push_back(c);
    const Integer minor = cofactor_determinant(m.select_rows(rows).select_cols(cols));
    det += (j % 2 == 0 ? 1 : -1) * m(0, j) * minor;
  }
  return det;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

/// gcd of all k x k minors.
inline Integer determinantal_divisor(const IntMatrix& m, std::size_t k) {
  std::vector<std::vector<std::size_t>> rs;
  std::vector<std::vector<std::size_t>> cs;
  std::vector<std::size_t> cur;
  subsets(m.rows(), k, 0, cur, rs);
  subsets(m.cols(), k, 0, cur, cs);
  Integer g = 0;
  for (const auto& r : rs)
    for (const auto& c : cs) {
      Integer d = cofactor_determinant(m.select_rows(r).select_cols(c));
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    }
  return g;
}

/// Invariant factors d_k = D_k / D_{k-1}, padded with zeros to min(rows, cols).
inline IntVector smith_diagonal(const IntMatrix& m) {
  const std::size_t k = std::min(m.rows(), m.cols());
  IntVector out(k, 0);
  Integer prev = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    const Integer d = determinantal_divisor(m, i);
    if (d == 0) break;
    out[i - 1] = d / prev;
    prev = d;
  }
  return out;
}

/// Extended Euclid: returns (g, x, y) with a x + b y = g.
struct Bezout {
  Integer g, x, y;
};
inline Bezout extended_gcd(Integer a, Integer b) {
  Integer x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    const Integer q = a / b;
    Integer t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  return {a, x0, y0};
}

/// The umkehr map of D, assembled step by step from its definition:
///   H_2(X,dX) --PD^-1--> H^2(X) --ev--> Hom(H_2 X, Z) --precompose D-->
///   Hom(H_2(X,dX), Z) --ev^-1--> H^2(X,dX) --PD--> H_2(X)
/// with cochains stored as value tables on basis vectors and <e_i, f_j> = delta_ij.
inline IntMatrix umkehr(const IntMatrix& d) {
  const std::size_t n = d.rows();
  auto pairing = [](std::size_t i, std::size_t j) { return Integer(i == j ? 1 : 0); };
  IntMatrix out(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    // PD^-1(f_j): the cochain with value <e_i, f_j> on e_i.
    std::vector<Integer> on_e(n);
    for (std::size_t i = 0; i < n; ++i) on_e[i] = pairing(i, j);
    // Precompose with D: the value on f_k is the cochain evaluated on D f_k.
    std::vector<Integer> on_f(n, 0);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) on_f[k] += d(i, k) * on_e[i];
    // PD of the relative cochain: the class x = sum x_m e_m with <x, f_k> = on_f[k].
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t m = 0; m < n; ++m)
        if (pairing(m, k) != 0) out(m, j) = on_f[k] / pairing(m, k);
  }
  return out;
}

/// SW of the knot-surgery family written out term by term:
/// (E1 + 1/E1)(E2 + 1/E2)(-(2n-1) + n F^2 + n F^-2).
inline std::map<std::vector<std::int64_t>, Integer> knot_surgery_sw(unsigned n) {
  std::map<std::vector<std::int64_t>, Integer> out;
  for (int a : {-1, 1})
    for (int b : {-1, 1})
      for (int f : {-2, 0, 2}) out[{a, b, f}] = f == 0 ? Integer(-(2 * static_cast<long>(n) - 1)) : Integer(n);
  return out;
}

}  // namespace oracle
