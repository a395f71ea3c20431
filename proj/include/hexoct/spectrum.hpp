#pragma once

// Exact integer spectra of small integer matrices.

#include <cstdint>
#include <map>
#include <vector>

namespace hexoct {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// Rank over GF(p), p an odd prime below 2^31.
std::size_t rank_mod_p(const IntMatrix& m, std::uint32_t p);

// Primes below 2^31, largest first.
std::vector<std::uint32_t> large_primes(std::size_t count);

// True iff prod_k (A - roots[k] I) is exactly the zero matrix. The product is
// evaluated modulo enough primes to exceed twice the a priori entry bound.
bool annihilates(const IntMatrix& a, const std::vector<std::int64_t>& roots);

// eigenvalue -> multiplicity for a symmetric integer matrix whose eigenvalues
// are all integers. Candidates are the integers of absolute value at most the
// largest absolute row sum; each multiplicity is bounded by a nullity over
// GF(p), and annihilates() certifies that no other eigenvalue exists. Throws
// NonIntegralSpectrum otherwise.
std::map<std::int64_t, int> integer_spectrum(const IntMatrix& a, int jobs = 1);

// tr(A^k) for k = 0..max_power, exact in 64 bits (caller keeps entries small).
std::vector<std::int64_t> power_traces(const IntMatrix& a, int max_power);

}  // namespace hexoct
