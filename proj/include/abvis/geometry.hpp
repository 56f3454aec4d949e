#pragma once

#include "abvis/qint.hpp"

#include <string>

namespace abvis {

/**
 * Window: scale * W_A, where W_A = sqrt(2) * W_8 and W_8 is the regular
 * octagon of side 1 centered at the origin with sides perpendicular to the
 * coordinate axes. Closed membership, decided exactly in Q(sqrt 2):
 *
 *   (u, v) in scale*W_A  <=>  max(|u|,|v|) <= scale*(2+sqrt2)/2
 *                             and |u|+|v| <= scale*(1+sqrt2)
 */
struct Window {
    QRat scale = QRat(1);
};

bool in_window(const Window& w, const QRat& u, const QRat& v);

inline bool in_window(const Window& w, const QInt& u, const QInt& v)
{
    return in_window(w, QRat(u), QRat(v));
}

// vol(scale*W_A) = scale^2 * 4(1+sqrt2)
double window_volume(const Window& w);

enum class RegionKind { disc, square, octagon };

// Test regions R*D with exact closed membership and exact-formula volumes.
// Unit shapes: disc of radius 1 (vol pi), square [-1,1]^2 (vol 4), and the
// octagon W_A itself (vol 4(1+sqrt2)).
struct Region {
    RegionKind kind = RegionKind::disc;
};

double region_unit_volume(RegionKind kind);

// dim = 2 gives R^2 * vol(D); dim = 3 extends disc -> ball and
// square -> cube (octagon is 2-d only).
double region_volume(const Region& region, double R, int dim = 2);

bool region_contains(const Region& region, const QRat& R, const QRat& x, const QRat& y);

const char* region_name(RegionKind kind);

// largest |coordinate| attained on R*D
double region_outer_coord(const Region& region, double R);

} // namespace abvis
