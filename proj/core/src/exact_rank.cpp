#include "qsrg/exact_rank.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace qsrg {

using BigInt = boost::multiprecision::cpp_int;

namespace {

// Divide a row by the gcd of its entries. Keeps elimination entries small:
// the matrices here have tiny invariant factors, so without this the
// Bareiss minors dwarf the information they carry.
void reduce_row(std::vector<BigInt>& row) {
  BigInt g = 0;
  for (const BigInt& v : row) {
    if (v != 0) g = gcd(g, abs(v));
    if (g == 1) return;
  }
  if (g <= 1) return;
  for (BigInt& v : row) v /= g;
}

int exact_rank_big(std::vector<std::vector<BigInt>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < n; ++col) {
    // Pivot on the smallest nonzero entry in this column.
    int pivot = -1;
    for (int r = rank; r < n; ++r) {
      if (m[r][col] == 0) continue;
      if (pivot < 0 || abs(m[r][col]) < abs(m[pivot][col])) pivot = r;
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    const std::vector<BigInt>& prow = m[rank];
    const BigInt& p = prow[col];
    for (int r = rank + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const BigInt q = m[r][col];
      std::vector<BigInt>& row = m[r];
      for (int c = col; c < cols; ++c) row[c] = row[c] * p - prow[c] * q;
      reduce_row(row);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int exact_rank(const IntMatrix& m) {
  std::vector<std::vector<BigInt>> big(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    big[i].assign(m[i].begin(), m[i].end());
  return exact_rank_big(std::move(big));
}

int rank_mod_p(const IntMatrix& m, std::uint64_t p) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(cols));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < cols; ++j) {
      long long v = m[i][j] % static_cast<long long>(p);
      if (v < 0) v += static_cast<long long>(p);
      a[i][j] = static_cast<std::uint64_t>(v);
    }

  auto inv_mod = [p](std::uint64_t x) {
    // p prime; Fermat.
    std::uint64_t result = 1, base = x, e = p - 2;
    while (e) {
      if (e & 1) result = (__uint128_t)result * base % p;
      base = (__uint128_t)base * base % p;
      e >>= 1;
    }
    return result;
  };

  int rank = 0;
  for (int col = 0; col < cols && rank < n; ++col) {
    int pivot = -1;
    for (int r = rank; r < n; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    const std::uint64_t pinv = inv_mod(a[rank][col]);
    for (int c = col; c < cols; ++c) a[rank][c] = (__uint128_t)a[rank][c] * pinv % p;
    for (int r = rank + 1; r < n; ++r) {
      const std::uint64_t f = a[r][col];
      if (f == 0) continue;
      const std::uint64_t neg = p - f;
      for (int c = col; c < cols; ++c)
        a[r][c] = (a[r][c] + (__uint128_t)neg * a[rank][c]) % p;
    }
    ++rank;
  }
  return rank;
}

int integer_multiplicity(const IntMatrix& adjacency, long long lambda) {
  const int n = static_cast<int>(adjacency.size());
  IntMatrix shifted = adjacency;
  for (int i = 0; i < n; ++i) shifted[i][i] -= lambda;

  // rank mod p never exceeds the rational rank, so full rank mod p is an
  // exact nonsingularity certificate.
  constexpr std::uint64_t kPrime = 2147483647;  // 2^31 - 1
  if (rank_mod_p(shifted, kPrime) == n) return 0;
  return n - exact_rank(shifted);
}

}  // namespace qsrg
