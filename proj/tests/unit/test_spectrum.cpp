#include <doctest.h>

#include <bit>

#include "hexoct/error.hpp"
#include "hexoct/spectrum.hpp"

using namespace hexoct;

namespace {

IntMatrix empty_graph(std::size_t n) { return IntMatrix(n, std::vector<std::int64_t>(n, 0)); }

IntMatrix complete(std::size_t n) {
  IntMatrix a = empty_graph(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = i != j;
  return a;
}

IntMatrix cycle(std::size_t n) {
  IntMatrix a = empty_graph(n);
  for (std::size_t i = 0; i < n; ++i) a[i][(i + 1) % n] = a[(i + 1) % n][i] = 1;
  return a;
}

IntMatrix hypercube(int d) {
  const std::size_t n = std::size_t{1} << d;
  IntMatrix a = empty_graph(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = std::popcount(i ^ j) == 1;
  return a;
}

IntMatrix petersen() {
  // Vertices are 2-subsets of {0..4}; adjacent when disjoint.
  std::vector<std::pair<int, int>> v;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) v.push_back({i, j});
  IntMatrix a = empty_graph(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      a[i][j] = v[i].first != v[j].first && v[i].first != v[j].second && v[i].second != v[j].first &&
                v[i].second != v[j].second;
  return a;
}

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("complete graphs") {
  for (std::size_t n = 2; n <= 9; ++n) {
    const auto s = integer_spectrum(complete(n));
    CHECK(s == std::map<std::int64_t, int>{{-1, static_cast<int>(n) - 1}, {static_cast<std::int64_t>(n) - 1, 1}});
  }
}

TEST_CASE("hypercubes: eigenvalue d - 2k with multiplicity C(d, k)") {
  for (int d = 1; d <= 6; ++d) {
    std::map<std::int64_t, int> want;
    for (int k = 0; k <= d; ++k) want[d - 2 * k] = static_cast<int>(binomial(d, k));
    CHECK(integer_spectrum(hypercube(d), 2) == want);
  }
}

TEST_CASE("cycles with integral spectra and the Petersen graph") {
  CHECK(integer_spectrum(cycle(4)) == std::map<std::int64_t, int>{{-2, 1}, {0, 2}, {2, 1}});
  CHECK(integer_spectrum(cycle(6)) == std::map<std::int64_t, int>{{-2, 1}, {-1, 2}, {1, 2}, {2, 1}});
  CHECK(integer_spectrum(petersen()) == std::map<std::int64_t, int>{{-2, 4}, {1, 5}, {3, 1}});
  CHECK(integer_spectrum(empty_graph(7)) == std::map<std::int64_t, int>{{0, 7}});
}

TEST_CASE("non-integral spectra are reported") {
  CHECK_THROWS_AS(integer_spectrum(cycle(5)), NonIntegralSpectrum);
  CHECK_THROWS_AS(integer_spectrum(cycle(8)), NonIntegralSpectrum);
  IntMatrix path = empty_graph(3);
  path[0][1] = path[1][0] = path[1][2] = path[2][1] = 1;  // eigenvalues 0, +-sqrt2
  CHECK_THROWS_AS(integer_spectrum(path), NonIntegralSpectrum);
}

TEST_CASE("modular rank") {
  const auto primes = large_primes(4);
  REQUIRE(primes.size() == 4);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    CHECK(primes[i] < (1u << 31));
    if (i) CHECK(primes[i] < primes[i - 1]);
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= primes[i]; ++d) REQUIRE(primes[i] % d != 0);
  }
  const std::uint32_t p = primes[0];
  CHECK(rank_mod_p(complete(5), p) == 5);
  CHECK(rank_mod_p(empty_graph(5), p) == 0);
  IntMatrix m{{1, 2}, {static_cast<std::int64_t>(p) + 2, 4}};  // second row = 2 * first mod p
  CHECK(rank_mod_p(m, p) == 1);
  IntMatrix neg{{-1, 2}, {3, -6}};
  CHECK(rank_mod_p(neg, p) == 1);
}

TEST_CASE("annihilating products and traces") {
  CHECK(annihilates(complete(4), {3, -1}));
  CHECK_FALSE(annihilates(complete(4), {3}));
  CHECK(annihilates(empty_graph(3), {0}));
  const auto t = power_traces(complete(4), 3);
  REQUIRE(t.size() == 4);
  CHECK(t[0] == 4);
  CHECK(t[1] == 0);
  CHECK(t[2] == 12);  // twice the edge count
  CHECK(t[3] == 24);  // six times the triangle count
}
