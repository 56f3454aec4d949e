#pragma once

#include "abvis/cutproject.hpp"
#include "abvis/qint.hpp"

#include <optional>
#include <vector>

namespace abvis {

// Outcome of a visibility test. For an invisible nonzero point the witness
// is an occluder c from C = {normalized primes} U {lambda} with x/c still a
// member of the set; the origin is invisible by convention and carries no
// witness.
struct VisibilityVerdict {
    bool visible = false;
    std::optional<QInt> witness;

    bool witness_is_lambda() const { return witness && *witness == QInt::lambda(); }
};

/**
 * Visibility in B: visible iff gcd(x1, x2) is a unit and the conjugate pair
 * stays outside the lambda-shrunk window (tested as conj(x) not in
 * (sqrt2 - 1) * W_A). Throws std::domain_error if x is not in B.
 */
VisibilityVerdict classify_b(const LatticePoint& x);

/**
 * Visibility in A' = sqrt(2)*A, decided by occluder search: a point is
 * invisible iff x/lambda is in A' (window shrink test; the sublattice
 * condition is preserved by units) or x/pi is in A' for some normalized
 * prime pi dividing gcd(x1, x2) (window and parity checked per prime).
 * Throws std::domain_error if x is not in A'.
 */
VisibilityVerdict classify_aprime(const LatticePoint& x);

/**
 * Geometric brute-force oracle: x is invisible iff some enumerated y equals
 * t*x for t in (0, 1). Collinearity and ordering are decided exactly in
 * Q(sqrt 2). `points` must contain every set element y with |y| <= |x|.
 */
bool geometric_oracle_visible(const std::vector<LatticePoint>& points,
                              const LatticePoint& x);

// Oracle verdicts for a full enumeration; same answers as the per-point
// oracle, with a rigorous floating-point prefilter (window membership bounds
// the conjugates, so a nonzero cross product of two set elements is bounded
// away from zero; doubtful pairs fall back to the exact test).
std::vector<char> geometric_oracle_bulk(const std::vector<LatticePoint>& points);

// gcd of the coordinates is 1; the origin is invisible
bool zd_visible(const ZdPoint& n, int d);

} // namespace abvis
