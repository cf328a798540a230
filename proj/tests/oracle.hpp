#pragma once

// Reference computations for tests. Deliberately shares no code with the
// library beyond FpMatrix storage: plain integer vectors, column pivoting on
// the largest-index nonzero, brute-force enumeration where feasible.

#include <cstdint>
#include <functional>
#include <vector>

#include "hecke/matrix.hpp"

namespace oracle {

using Mat = std::vector<std::vector<std::int64_t>>;

inline std::int64_t md(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

inline std::int64_t inv(std::int64_t a, std::int64_t p) {
  // Fermat.
  std::int64_t r = 1;
  std::int64_t b = md(a, p);
  for (std::int64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return r;
}

inline Mat to_mat(const hecke::FpMatrix& m) {
  Mat a(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  return a;
}

/// Rank by column-wise elimination, pivoting on the last available row.
inline std::size_t rank(Mat a, std::int64_t p) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size();
  const std::size_t cols = a.front().size();
  std::vector<bool> used(rows, false);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = rows; i-- > 0;) {
      if (!used[i] && md(a[i][c], p) != 0) {
        piv = i;
        break;
      }
    }
    if (piv == rows) continue;
    used[piv] = true;
    ++r;
    const std::int64_t iv = inv(a[piv][c], p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == piv || md(a[i][c], p) == 0) continue;
      const std::int64_t f = md(a[i][c], p) * iv % p;
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = md(a[i][j] - f * a[piv][j], p);
    }
  }
  return r;
}

inline std::size_t rank(const hecke::FpMatrix& m) { return rank(to_mat(m), m.modulus()); }

inline Mat mul(const Mat& a, const Mat& b, std::int64_t p) {
  if (a.empty()) return {};
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = k == 0 ? 0 : b.front().size();
  Mat c(n, std::vector<std::int64_t>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t j = 0; j < m; ++j) c[i][j] = (c[i][j] + a[i][l] * b[l][j]) % p;
  return c;
}

/// dim of {Phi : A_i Phi = Phi B_i for all i}, as (#rows x #cols) unknowns,
/// via the rank of the stacked linear system.
inline std::size_t intertwiner_dim(const std::vector<hecke::FpMatrix>& ga, const std::vector<hecke::FpMatrix>& gb) {
  const std::size_t da = ga.front().rows();
  const std::size_t db = gb.front().rows();
  const std::int64_t p = ga.front().modulus();
  const std::size_t unknowns = da * db;
  if (unknowns == 0) return 0;
  Mat sys;
  for (std::size_t g = 0; g < ga.size(); ++g) {
    const Mat a = to_mat(ga[g]);
    const Mat b = to_mat(gb[g]);
    // Equation (i,j): sum_k a[i][k] Phi[k][j] - sum_k Phi[i][k] b[k][j] = 0.
    for (std::size_t i = 0; i < da; ++i) {
      for (std::size_t j = 0; j < db; ++j) {
        std::vector<std::int64_t> row(unknowns, 0);
        for (std::size_t k = 0; k < da; ++k) row[k * db + j] = md(row[k * db + j] + a[i][k], p);
        for (std::size_t k = 0; k < db; ++k) row[i * db + k] = md(row[i * db + k] - b[k][j], p);
        sys.push_back(std::move(row));
      }
    }
  }
  return unknowns - rank(sys, p);
}

/// Same dimension by enumerating every candidate (tiny sizes only).
inline std::size_t intertwiner_dim_bruteforce(const std::vector<hecke::FpMatrix>& ga,
                                              const std::vector<hecke::FpMatrix>& gb) {
  const std::size_t da = ga.front().rows();
  const std::size_t db = gb.front().rows();
  const std::int64_t p = ga.front().modulus();
  const std::size_t k = da * db;
  if (k == 0) return 0;
  std::vector<Mat> as;
  std::vector<Mat> bs;
  for (const auto& m : ga) as.push_back(to_mat(m));
  for (const auto& m : gb) bs.push_back(to_mat(m));
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= static_cast<std::uint64_t>(p);
  std::uint64_t count = 0;
  Mat phi(da, std::vector<std::int64_t>(db, 0));
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t t = idx;
    for (std::size_t i = 0; i < k; ++i) {
      phi[i / db][i % db] = static_cast<std::int64_t>(t % p);
      t /= p;
    }
    bool ok = true;
    for (std::size_t g = 0; g < as.size() && ok; ++g) ok = mul(as[g], phi, p) == mul(phi, bs[g], p);
    if (ok) ++count;
  }
  std::size_t d = 0;
  while (count > 1) {
    count /= static_cast<std::uint64_t>(p);
    ++d;
  }
  return d;
}

/// The defining relations checked with plain integer arithmetic:
/// G^(p-1) = 1, G S G = S and S^2 = S (sum_k G^k) for S in {S0, S1}.
inline bool relations_hold(const hecke::FpMatrix& s0, const hecke::FpMatrix& s1, const hecke::FpMatrix& g) {
  const std::int64_t p = g.modulus();
  const std::size_t n = g.rows();
  Mat id(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  const Mat gm = to_mat(g);
  Mat pw = id;
  Mat c(n, std::vector<std::int64_t>(n, 0));
  for (std::int64_t k = 0; k < p - 1; ++k) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) c[i][j] = (c[i][j] + pw[i][j]) % p;
    pw = mul(pw, gm, p);
  }
  if (pw != id) return false;
  for (const auto* s : {&s0, &s1}) {
    const Mat sm = to_mat(*s);
    if (mul(mul(gm, sm, p), gm, p) != sm) return false;
    if (mul(sm, sm, p) != mul(sm, c, p)) return false;
  }
  return true;
}

inline std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
