#pragma once

#include "abvis/qint.hpp"
#include "abvis/qring.hpp"

#include <cstdint>
#include <vector>

namespace abvis {

// Moebius function over Z (trial division; intended for modest n).
int mobius_int(std::uint64_t n);

// Partial sum of 1/zeta(d): sum_{n<=N} mu(n)/n^d (mu by linear sieve).
double riemann_zeta_recip(int d, std::int64_t N);

// A prime ideal of Z[sqrt(2)], described by its absolute norm (2, p or p^2)
// and a normalized generator. Split primes above p come in conjugate
// non-associate pairs.
struct PrimeIdeal {
    std::int64_t norm;
    SplitKind kind;
    QInt gen;
};

// All prime ideals of norm <= norm_bound, sorted by (norm, generator).
std::vector<PrimeIdeal> list_prime_ideals(std::int64_t norm_bound);

// Truncated Euler product for zeta_K(2) over Q(sqrt 2):
// product over prime ideals of norm <= norm_bound of 1/(1 - N(P)^-2).
double dedekind_zeta2_euler(std::int64_t norm_bound);

// zeta_K(2) = pi^4 / (48 sqrt 2)
double dedekind_zeta2_closed();

// Number of ideals of Z[sqrt(2)] of norm n. Multiplicative: 1 at powers of
// the ramified prime, k+1 at p^k for split p, and 1/0 (k even/odd) for
// inert p.
std::int64_t ideal_count(std::int64_t n);

// sum_{n<=N} ideal_count(n)/n^2, a monotone lower approximation of zeta_K(2)
double ideal_count_partial_sum(std::int64_t N);

// Truncated reciprocal series sum over squarefree ideals of norm <= Delta of
// (-1)^omega(I) / N(I)^2, approaching 1/zeta_K(2).
double mobius_ideal_series(std::int64_t Delta);

} // namespace abvis
