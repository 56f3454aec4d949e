#pragma once

#include "abvis/qint.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace abvis {

// Raised by factor() when |N(x)| has a rational prime factor above the
// trial-division bound. Never a wrong answer.
struct factor_bound_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivResult {
    QInt quot;
    QInt rem;
};

// Euclidean division in Z[sqrt(2)]: x = d*q + r with |N(r)| < |N(d)|.
// The quotient is the exact quotient in Q(sqrt(2)) with both coefficients
// rounded to the nearest integer, ties away from zero.
DivResult euclid_divmod(const QInt& x, const QInt& d);

// Exact division; returns false if d does not divide x.
bool divide_exact(const QInt& x, const QInt& d, QInt& out);

bool divides(const QInt& d, const QInt& x);

struct Normalized {
    QInt rep;        // the unique associate in [1, lambda)
    int sign;        // +1 or -1
    long lambda_exp; // x = sign * lambda^lambda_exp * rep
};

// Unique associate representative in [1, lambda) under the real embedding.
// Throws std::domain_error for x = 0.
Normalized normalize_associate(const QInt& x);

// Normalized generator of the ideal (x, y); gcd(0,0) = 0. The result is a
// unit (i.e. 1) exactly when x, y are relatively prime.
QInt gcd(const QInt& x, const QInt& y);

enum class SplitKind { ramified, split, inert };

struct PrimeSplit {
    SplitKind kind;
    QInt pi; // normalized prime above p
};

// Splitting of a rational prime in Z[sqrt(2)]:
//   p = 2           -> ramified, pi = sqrt(2)
//   p = +-1 mod 8   -> split, |N(pi)| = p; the second prime above p is the
//                      normalized conjugate
//   p = +-3 mod 8   -> inert, pi = normalized p, |N(pi)| = p^2
// Throws std::domain_error if p is not prime.
PrimeSplit rational_prime_split(const mpz_class& p);

// Square root of n modulo an odd prime p (Tonelli-Shanks, smallest
// quadratic nonresidue). Throws if n is a nonresidue.
mpz_class sqrt_mod(const mpz_class& n, const mpz_class& p);

struct PrimePower {
    QInt prime; // normalized to [1, lambda)
    int exp;
};

struct Factorization {
    int sign = 1;
    long lambda_exp = 0;
    std::vector<PrimePower> factors; // pairwise non-associate, sorted by |N|

    std::size_t omega() const { return factors.size(); }

    QInt reconstruct() const;
};

inline constexpr long kDefaultTrialBound = 1000000;

// Prime factorization of a nonzero element: factor |N(x)| over Z by trial
// division, then divide out the matching primes of Z[sqrt(2)].
Factorization factor(const QInt& x, long trial_bound = kDefaultTrialBound);

} // namespace abvis
