#pragma once

#include "abvis/geometry.hpp"
#include "abvis/qint.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace abvis {

struct cap_exceeded_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A point (x1, x2) of O_K^2. For the Ammann-Beenker set itself the stored
// coordinates are those of the companion point in A' = sqrt(2)*A, so that
// all arithmetic stays in Z[sqrt(2)]; real projections are scaled by the
// consumer where needed.
struct LatticePoint {
    QInt x1, x2;

    QInt conj1() const { return x1.conj(); }
    QInt conj2() const { return x2.conj(); }
    bool is_origin() const { return x1.is_zero() && x2.is_zero(); }
    double xd() const { return x1.to_double(); }
    double yd() const { return x2.to_double(); }

    bool operator==(const LatticePoint& o) const { return x1 == o.x1 && x2 == o.x2; }
    bool operator!=(const LatticePoint& o) const { return !(*this == o); }
};

// deterministic output order: lexicographic by (a1, b1, a2, b2)
inline bool lex_less(const LatticePoint& l, const LatticePoint& r)
{
    if (l.x1 != r.x1) return lex_less(l.x1, r.x1);
    return lex_less(l.x2, r.x2);
}

enum class Variant { B, Aprime, A, Scaled, Zd, ComplexAB };

const char* variant_name(Variant v);

// default point cap; the ABVIS_CAP environment variable overrides it
std::uint64_t default_cap();

struct SetSpec {
    Variant variant = Variant::B;
    Region region;
    QRat radius; // R > 0
    // parameters of the scaled variant P(m*W_A, l*O_K^2):
    QInt ell = QInt(1);
    QRat window_scale = QRat(1); // m
    bool sublattice = false;     // restrict to (y1 - y2)/sqrt(2) in O_K
    int zd_dim = 2;
    std::uint64_t cap = default_cap();
    bool exclude_origin = false;
};

// 1/sqrt(2) for the Ammann-Beenker set (stored coordinates are in A'), 1 otherwise
double projection_scale(const SetSpec& spec);

// (x1 - x2)/sqrt(2) in O_K, i.e. a1 - a2 even
bool sublattice_member(const LatticePoint& p);

// window membership of the star/conjugate pair: x in B
bool in_b(const LatticePoint& p);
// x in B and the sublattice condition: x in A'
bool in_aprime(const LatticePoint& p);

/**
 * Enumerates the requested cut-and-project set intersected with the closed
 * region R*D, in lexicographic coefficient order. Candidates come from an
 * integer coefficient box derived from |x_i| <= c1, |conj(x_i)| <= c2 via
 * a = (x + conj x)/2, b = (x - conj x)/(2 sqrt 2); every candidate is then
 * accepted or rejected by exact window and region tests only.
 *
 * Variant::A enumerates A' at radius sqrt(2)*R and returns the A'
 * coordinates (see LatticePoint). Variants Zd and ComplexAB have their own
 * entry points below.
 */
std::vector<LatticePoint> enumerate_points(const SetSpec& spec);

using ZdPoint = std::array<std::int64_t, 3>; // unused trailing coords are 0

// All integer vectors of Z^d in the closed region R*D (origin included).
std::vector<ZdPoint> enumerate_zd(int d, const Region& region, const QRat& R,
                                  std::uint64_t cap = default_cap());

// Streaming form; visits points in deterministic loop order.
void for_each_zd(int d, const Region& region, const QRat& R, std::uint64_t cap,
                 const std::function<void(const ZdPoint&)>& fn);

// A point x1 + x2*zeta of the complex-plane realization, zeta = e^{i pi/4}.
struct ComplexPoint {
    QInt x1, x2;

    double re() const { return x1.to_double() + x2.to_double() * 0.7071067811865475244; }
    double im() const { return x2.to_double() * 0.7071067811865475244; }

    bool operator==(const ComplexPoint& o) const { return x1 == o.x1 && x2 == o.x2; }
};

/**
 * The complex realization: points x = x1 + x2*zeta with x1, x2 in O_K whose
 * star image conj(x1) + conj(x2)*zeta^3 lies in the closed octagon W_8,
 * restricted to |x| <= rbound. All membership decisions are exact (the star
 * coordinates live in (1/2)Z[sqrt 2] and are tested with cleared
 * denominators).
 */
std::vector<ComplexPoint> enumerate_complex(const QRat& rbound,
                                            std::uint64_t cap = default_cap());

} // namespace abvis
