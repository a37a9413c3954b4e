#pragma once

// Independent reference computations used only by the tests.

#include <random>
#include <vector>

#include "disc24/exact_linalg.hpp"

namespace disc24::oracle {

/// Laplace expansion along the first row.
inline Int laplace_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Int total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    const Int term = m(0, j) * laplace_det(minor);
    total += (j % 2 == 0) ? term : Int(-term);
  }
  return total;
}

/// gcd of all k x k minors (the k-th determinantal divisor).
inline Int determinantal_divisor(const IntMatrix& m, std::size_t k) {
  std::vector<std::size_t> rows(k), cols(k);
  Int g = 0;
  auto next = [](std::vector<std::size_t>& idx, std::size_t n) {
    for (std::size_t i = idx.size(); i-- > 0;) {
      if (idx[i] + idx.size() - i < n) {
        ++idx[i];
        for (std::size_t j = i + 1; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < k; ++i) rows[i] = i;
  do {
    for (std::size_t i = 0; i < k; ++i) cols[i] = i;
    do {
      IntMatrix sub(k, k);
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) sub(a, b) = m(rows[a], cols[b]);
      Int d = laplace_det(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    } while (next(cols, m.cols()));
  } while (next(rows, m.rows()));
  return g;
}

/// Invariant factors d_k = D_k / D_{k-1} up to the rank.
inline IntVector invariant_factors_by_minors(const IntMatrix& m) {
  IntVector out;
  Int prev = 1;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    const Int d = determinantal_divisor(m, k);
    if (d == 0) break;
    out.push_back(Int(d / prev));
    prev = d;
  }
  return out;
}

/// Product of random elementary row operations and sign flips.
inline IntMatrix random_unimodular(std::size_t n, std::mt19937_64& rng, int steps = 12) {
  IntMatrix u = IntMatrix::identity(n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<long> coeff(-2, 2);
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = pick(rng), j = pick(rng);
    if (i == j) {
      for (std::size_t c = 0; c < n; ++c) u(i, c) = -u(i, c);
      continue;
    }
    const Int k = coeff(rng);
    for (std::size_t c = 0; c < n; ++c) u(i, c) += k * u(j, c);
  }
  return u;
}

/// Coefficients of prod(1 - t^d) / (1 - t)^(r+1) up to t^n_max: the Hilbert
/// function of a complete intersection.
inline std::vector<Int> ci_hilbert_function(long r, const std::vector<long>& degrees, long n_max) {
  std::vector<Int> num(static_cast<std::size_t>(n_max + 1), 0);
  num[0] = 1;
  for (long d : degrees)
    for (long n = n_max; n >= d; --n) num[static_cast<std::size_t>(n)] -= num[static_cast<std::size_t>(n - d)];
  for (long k = 0; k <= r; ++k)
    for (long n = 1; n <= n_max; ++n) num[static_cast<std::size_t>(n)] += num[static_cast<std::size_t>(n - 1)];
  return num;
}

}  // namespace disc24::oracle
