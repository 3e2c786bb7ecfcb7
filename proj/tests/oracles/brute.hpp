#pragma once
// Slow, independent reference computations used only by tests.

#include <functional>
#include <map>
#include <vector>

namespace oracle {

// sum over 0/1 words with b ones and a-b zeros of Y^{inv}, as a coefficient vector
inline std::vector<long> qbinom_words(int a, int b) {
  std::vector<long> c(static_cast<size_t>(b * (a - b) + 1), 0);
  for (unsigned w = 0; w < (1u << a); ++w) {
    if (__builtin_popcount(w) != b) continue;
    int inv = 0, ones = 0;
    for (int i = 0; i < a; ++i) {
      if ((w >> i) & 1u)
        ++ones;
      else
        inv += ones;
    }
    ++c[static_cast<size_t>(inv)];
  }
  return c;
}

// symmetric a x a matrices over F_p of each rank, by Gaussian elimination mod p
inline std::vector<long> sym_rank_counts(int a, int p) {
  std::vector<long> out(static_cast<size_t>(a + 1), 0);
  int free_entries = a * (a + 1) / 2;
  long total = 1;
  for (int i = 0; i < free_entries; ++i) total *= p;
  for (long code = 0; code < total; ++code) {
    std::vector<std::vector<long>> m(static_cast<size_t>(a), std::vector<long>(static_cast<size_t>(a)));
    long c = code;
    for (int i = 0; i < a; ++i)
      for (int j = i; j < a; ++j) {
        m[i][j] = m[j][i] = c % p;
        c /= p;
      }
    int rank = 0;
    for (int col = 0; col < a && rank < a; ++col) {
      int piv = -1;
      for (int r = rank; r < a; ++r)
        if (m[r][col] % p) piv = r;
      if (piv < 0) continue;
      std::swap(m[piv], m[rank]);
      long inv = 1;
      while ((m[rank][col] * inv) % p != 1) ++inv;
      for (int r = 0; r < a; ++r) {
        if (r == rank) continue;
        long f = (m[r][col] * inv) % p;
        for (int k = 0; k < a; ++k) m[r][k] = ((m[r][k] - f * m[rank][k]) % p + p) % p;
      }
      ++rank;
    }
    ++out[static_cast<size_t>(rank)];
  }
  return out;
}

}  // namespace oracle
