#include "abvis/visibility.hpp"

#include "abvis/geometry.hpp"
#include "abvis/qring.hpp"

#include <cmath>
#include <numeric>

namespace abvis {

namespace {

const QRat kLambdaInv(-1, 1); // sqrt2 - 1

bool lambda_shrink_hit(const LatticePoint& x)
{
    // conj(x) in (sqrt2 - 1) * W_A  <=>  lambda * conj(x) in W_A
    return in_window(Window{kLambdaInv}, QRat(x.conj1()), QRat(x.conj2()));
}

} // namespace

VisibilityVerdict classify_b(const LatticePoint& x)
{
    if (!in_b(x)) throw std::domain_error("classify_b: point not in B");
    if (x.is_origin()) return {false, std::nullopt};

    QInt g = gcd(x.x1, x.x2);
    if (!g.is_unit()) {
        QInt w = factor(g).factors.front().prime;
        return {false, w};
    }
    if (lambda_shrink_hit(x)) return {false, QInt::lambda()};
    return {true, std::nullopt};
}

VisibilityVerdict classify_aprime(const LatticePoint& x)
{
    if (!in_aprime(x)) throw std::domain_error("classify_aprime: point not in A'");
    if (x.is_origin()) return {false, std::nullopt};

    if (lambda_shrink_hit(x)) return {false, QInt::lambda()};

    QInt g = gcd(x.x1, x.x2);
    if (!g.is_unit()) {
        for (const PrimePower& f : factor(g).factors) {
            QInt q1, q2;
            if (!divide_exact(x.x1, f.prime, q1) || !divide_exact(x.x2, f.prime, q2))
                continue;
            if (in_aprime({q1, q2})) return {false, f.prime};
        }
    }
    return {true, std::nullopt};
}

bool geometric_oracle_visible(const std::vector<LatticePoint>& points,
                              const LatticePoint& x)
{
    if (x.is_origin()) return false;
    QInt nx = x.x1 * x.x1 + x.x2 * x.x2;
    for (const LatticePoint& y : points) {
        if (y == x) continue;
        QInt cross = x.x1 * y.x2 - x.x2 * y.x1;
        if (!cross.is_zero()) continue;
        QInt dot = x.x1 * y.x1 + x.x2 * y.x2;
        if (dot.sign() <= 0) continue;
        QInt ny = y.x1 * y.x1 + y.x2 * y.x2;
        if (cmp_real(ny, nx) < 0) return false; // y = t*x with t in (0,1)
    }
    return true;
}

std::vector<char> geometric_oracle_bulk(const std::vector<LatticePoint>& points)
{
    const std::size_t n = points.size();
    struct P {
        double x, y, r2;
    };
    std::vector<P> d(n);
    for (std::size_t i = 0; i < n; ++i) {
        d[i].x = points[i].xd();
        d[i].y = points[i].yd();
        d[i].r2 = d[i].x * d[i].x + d[i].y * d[i].y;
    }

    std::vector<char> vis(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (points[i].is_origin()) {
            vis[i] = 0;
            continue;
        }
        bool blocked = false;
        for (std::size_t j = 0; j < n && !blocked; ++j) {
            if (j == i) continue;
            // set elements have conjugates in W_A, so a nonzero cross product
            // has absolute value > 1/(2 * ((2+sqrt2)/2)^2) > 0.17
            double cross = d[i].x * d[j].y - d[i].y * d[j].x;
            if (std::fabs(cross) > 1e-2) continue;
            double dot = d[i].x * d[j].x + d[i].y * d[j].y;
            if (dot < -1e-9 || d[j].r2 > d[i].r2 + 1e-9) continue;
            // doubtful: decide exactly
            QInt ecross = points[i].x1 * points[j].x2 - points[i].x2 * points[j].x1;
            if (!ecross.is_zero()) continue;
            QInt edot = points[i].x1 * points[j].x1 + points[i].x2 * points[j].x2;
            if (edot.sign() <= 0) continue;
            QInt ni = points[i].x1 * points[i].x1 + points[i].x2 * points[i].x2;
            QInt nj = points[j].x1 * points[j].x1 + points[j].x2 * points[j].x2;
            if (cmp_real(nj, ni) < 0) blocked = true;
        }
        if (blocked) vis[i] = 0;
    }
    return vis;
}

bool zd_visible(const ZdPoint& n, int d)
{
    std::int64_t g = 0;
    for (int i = 0; i < d; ++i) g = std::gcd(g, n[i] < 0 ? -n[i] : n[i]);
    return g == 1;
}

} // namespace abvis
