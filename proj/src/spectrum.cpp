#include "hexoct/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <mutex>

#include "hexoct/error.hpp"
#include "hexoct/parallel.hpp"

namespace hexoct {

namespace {

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t max_abs_row_sum(const IntMatrix& a) {
  std::int64_t best = 0;
  for (const auto& row : a) {
    std::int64_t s = 0;
    for (auto v : row) s += std::llabs(v);
    best = std::max(best, s);
  }
  return best;
}

std::size_t rank_mod_p_inplace(std::vector<std::vector<std::uint32_t>>& m, std::uint32_t p) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const std::uint64_t inv = pow_mod(m[rank][c], p - 2, p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      const std::uint64_t f = m[r][c] * inv % p;
      const std::uint64_t neg = p - f;
      auto& row = m[r];
      const auto& prow = m[rank];
      for (std::size_t k = c; k < cols; ++k) row[k] = static_cast<std::uint32_t>((row[k] + neg * prow[k]) % p);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank_mod_p(const IntMatrix& m, std::uint32_t p) {
  std::vector<std::vector<std::uint32_t>> r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    r[i].resize(m[i].size());
    for (std::size_t j = 0; j < m[i].size(); ++j) r[i][j] = reduce(m[i][j], p);
  }
  return rank_mod_p_inplace(r, p);
}

std::vector<std::uint32_t> large_primes(std::size_t count) {
  static std::mutex mu;
  static std::vector<std::uint32_t> cache;
  std::lock_guard lock(mu);
  std::uint32_t n = cache.empty() ? 2147483647u : cache.back() - 2;
  while (cache.size() < count) {
    if (is_prime(n)) cache.push_back(n);
    n -= 2;
  }
  return {cache.begin(), cache.begin() + static_cast<std::ptrdiff_t>(count)};
}

bool annihilates(const IntMatrix& a, const std::vector<std::int64_t>& roots) {
  const std::size_t n = a.size();
  const std::int64_t rho = max_abs_row_sum(a);
  // every entry of the product is bounded by prod_k (rho + |root_k|)
  double log2_bound = 1.0;
  for (auto r : roots) log2_bound += std::log2(static_cast<double>(rho + std::llabs(r)) + 1.0);
  const auto primes = large_primes(static_cast<std::size_t>(log2_bound / 30.0) + 1);
  for (std::uint32_t p : primes) {
    std::vector<std::vector<std::uint32_t>> am(n, std::vector<std::uint32_t>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) am[i][j] = reduce(a[i][j], p);
    // x <- x (A - r I), starting from the identity
    std::vector<std::vector<std::uint64_t>> x(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) x[i][i] = 1;
    for (auto r : roots) {
      const std::uint64_t rr = reduce(r, p);
      std::vector<std::vector<std::uint64_t>> y(n, std::vector<std::uint64_t>(n, 0));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
          const std::uint64_t v = x[i][k];
          if (v == 0) continue;
          for (std::size_t j = 0; j < n; ++j)
            if (am[k][j]) y[i][j] = (y[i][j] + v * am[k][j]) % p;
          y[i][k] = (y[i][k] + (p - rr) * v) % p;
        }
      x = std::move(y);
    }
    for (const auto& row : x)
      if (std::any_of(row.begin(), row.end(), [](std::uint64_t v) { return v != 0; })) return false;
  }
  return true;
}

std::map<std::int64_t, int> integer_spectrum(const IntMatrix& a, int jobs) {
  constexpr std::size_t kMaxPrimes = 8;
  const std::int64_t n = static_cast<std::int64_t>(a.size());
  const std::int64_t rho = max_abs_row_sum(a);
  const auto primes = large_primes(kMaxPrimes);
  const std::size_t count = static_cast<std::size_t>(2 * rho + 1);
  // Each GF(p) nullity bounds the rational one from above; keep the minimum.
  std::vector<int> nullity(count, static_cast<int>(n));
  std::int64_t total = 0;
  for (std::uint32_t p : primes) {
    parallel_for(count, jobs, [&](std::size_t b, std::size_t e, std::size_t) {
      for (std::size_t i = b; i < e; ++i) {
        if (nullity[i] == 0) continue;
        const std::int64_t lambda = static_cast<std::int64_t>(i) - rho;
        IntMatrix m = a;
        for (std::int64_t k = 0; k < n; ++k) m[k][k] -= lambda;
        nullity[i] = std::min(nullity[i], static_cast<int>(n - static_cast<std::int64_t>(rank_mod_p(m, p))));
      }
    });
    total = 0;
    for (int v : nullity) total += v;
    if (total <= n) break;
  }
  // A short total already proves a non-integral eigenvalue.
  if (total < n)
    throw NonIntegralSpectrum("integer eigenvalues account for at most " + std::to_string(total) + " of " +
                              std::to_string(n) + " dimensions");
  if (total > n) throw NonIntegralSpectrum("nullity bounds did not settle after " + std::to_string(kMaxPrimes) + " primes");
  std::map<std::int64_t, int> spec;
  std::vector<std::int64_t> roots;
  for (std::size_t i = 0; i < count; ++i)
    if (nullity[i] > 0) {
      spec[static_cast<std::int64_t>(i) - rho] = nullity[i];
      roots.push_back(static_cast<std::int64_t>(i) - rho);
    }
  // A is diagonalisable; once the roots annihilate it every eigenvalue is a
  // root, the rational multiplicities sum to n, and since each is at most the
  // bound above (whose total is n) all bounds are attained.
  if (!annihilates(a, roots)) throw NonIntegralSpectrum("matrix has an eigenvalue outside the integer candidates");
  return spec;
}

std::vector<std::int64_t> power_traces(const IntMatrix& a, int max_power) {
  const std::size_t n = a.size();
  std::vector<std::int64_t> out{static_cast<std::int64_t>(n)};
  IntMatrix x(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) x[i][i] = 1;
  for (int k = 1; k <= max_power; ++k) {
    IntMatrix y(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (x[i][l] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) y[i][j] += x[i][l] * a[l][j];
      }
    x = std::move(y);
    std::int64_t t = 0;
    for (std::size_t i = 0; i < n; ++i) t += x[i][i];
    out.push_back(t);
  }
  return out;
}

}  // namespace hexoct
