#include "abvis/geometry.hpp"

#include <numbers>
#include <stdexcept>

namespace abvis {

bool in_window(const Window& w, const QRat& u, const QRat& v)
{
    QRat au = u.abs(), av = v.abs();
    QRat lim_max = w.scale * QRat(mpq_class(1), mpq_class(1, 2)); // (2+sqrt2)/2
    QRat lim_sum = w.scale * QRat(1, 1);                          // 1+sqrt2
    QRat m = cmp(au, av) >= 0 ? au : av;
    return m <= lim_max && au + av <= lim_sum;
}

double window_volume(const Window& w)
{
    double s = w.scale.to_double();
    return s * s * 4.0 * (1.0 + std::numbers::sqrt2);
}

double region_unit_volume(RegionKind kind)
{
    switch (kind) {
    case RegionKind::disc: return std::numbers::pi;
    case RegionKind::square: return 4.0;
    case RegionKind::octagon: return 4.0 * (1.0 + std::numbers::sqrt2);
    }
    return 0.0;
}

double region_volume(const Region& region, double R, int dim)
{
    if (dim == 2) return R * R * region_unit_volume(region.kind);
    if (dim == 3) {
        switch (region.kind) {
        case RegionKind::disc: return 4.0 / 3.0 * std::numbers::pi * R * R * R;
        case RegionKind::square: return 8.0 * R * R * R;
        case RegionKind::octagon:
            throw std::invalid_argument("region_volume: octagon is 2-d only");
        }
    }
    throw std::invalid_argument("region_volume: dim must be 2 or 3");
}

bool region_contains(const Region& region, const QRat& R, const QRat& x, const QRat& y)
{
    if (R.sign() <= 0) throw std::domain_error("region_contains: R must be positive");
    QRat ax = x.abs(), ay = y.abs();
    switch (region.kind) {
    case RegionKind::disc:
        return x * x + y * y <= R * R;
    case RegionKind::square:
        return ax <= R && ay <= R;
    case RegionKind::octagon: {
        QRat lim_max = R * QRat(mpq_class(1), mpq_class(1, 2));
        QRat lim_sum = R * QRat(1, 1);
        QRat m = cmp(ax, ay) >= 0 ? ax : ay;
        return m <= lim_max && ax + ay <= lim_sum;
    }
    }
    return false;
}

const char* region_name(RegionKind kind)
{
    switch (kind) {
    case RegionKind::disc: return "disc";
    case RegionKind::square: return "square";
    case RegionKind::octagon: return "octagon";
    }
    return "?";
}

double region_outer_coord(const Region& region, double R)
{
    if (region.kind == RegionKind::octagon)
        return R * (2.0 + std::numbers::sqrt2) / 2.0;
    return R;
}

} // namespace abvis
