#include "abvis/cutproject.hpp"

#include "abvis/qring.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>

namespace abvis {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

// writes v = (P + Q*sqrt2)/D with integer P, Q and D > 0
void clear_denoms(const QRat& v, mpz_class& P, mpz_class& Q, mpz_class& D)
{
    mpz_class dp = v.p().get_den(), dq = v.q().get_den();
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), dp.get_mpz_t(), dq.get_mpz_t());
    P = v.p().get_num() * (l / dp);
    Q = v.q().get_num() * (l / dq);
    D = l;
}

// exact test D*val <= P + Q*sqrt2 for a QInt val
struct ClearedBound {
    mpz_class P, Q, D;

    explicit ClearedBound(const QRat& v) { clear_denoms(v, P, Q, D); }

    bool le(const QInt& val) const
    {
        return QInt(P - D * val.a(), Q - D * val.b()).sign() >= 0;
    }
};

// membership of a conjugate pair in m*W_A, all decisions in Z[sqrt 2]
struct WindowTester {
    ClearedBound lim_max; // m*(2+sqrt2)/2
    ClearedBound lim_sum; // m*(1+sqrt2)

    explicit WindowTester(const QRat& m)
        : lim_max(m * QRat(mpq_class(1), mpq_class(1, 2))), lim_sum(m * QRat(1, 1))
    {
    }

    bool coord_ok(const QInt& u) const { return lim_max.le(u.abs()); }

    bool contains(const QInt& u, const QInt& v) const
    {
        QInt au = u.abs(), av = v.abs();
        return lim_max.le(au) && lim_max.le(av) && lim_sum.le(au + av);
    }
};

// membership of an O_K^2 point in the closed region R*D
struct RegionTester {
    RegionKind kind;
    ClearedBound main;  // R^2 (disc), R (square), R*(2+sqrt2)/2 (octagon max)
    ClearedBound sum;   // R*(1+sqrt2) (octagon only; unused otherwise)
    double outer;       // padded bound on |x_i|

    RegionTester(const Region& region, const QRat& R)
        : kind(region.kind),
          main(kind == RegionKind::disc     ? R * R
               : kind == RegionKind::square ? R
                                            : R * QRat(mpq_class(1), mpq_class(1, 2))),
          sum(R * QRat(1, 1))
    {
        double rd = R.to_double();
        outer = (kind == RegionKind::octagon ? rd * (2.0 + kSqrt2) / 2.0 : rd) + 1e-9;
    }

    bool coord_ok(const QInt& xi) const
    {
        if (kind == RegionKind::disc) return main.le(xi * xi);
        return main.le(xi.abs());
    }

    bool contains(const QInt& x1, const QInt& x2) const
    {
        switch (kind) {
        case RegionKind::disc:
            return main.le(x1 * x1 + x2 * x2);
        case RegionKind::square:
            return main.le(x1.abs()) && main.le(x2.abs());
        case RegionKind::octagon: {
            QInt a1 = x1.abs(), a2 = x2.abs();
            return main.le(a1) && main.le(a2) && sum.le(a1 + a2);
        }
        }
        return false;
    }
};

bool same_parity(const mpz_class& x, const mpz_class& y)
{
    return mpz_odd_p(x.get_mpz_t()) == mpz_odd_p(y.get_mpz_t());
}

std::vector<LatticePoint> run_lattice(const Region& region, const QRat& R,
                                      const QInt& ell_in, const QRat& m, bool subl,
                                      std::uint64_t cap)
{
    if (R.sign() <= 0) throw std::domain_error("enumerate: radius must be positive");
    if (m.sign() <= 0) throw std::domain_error("enumerate: window scale must be positive");
    if (ell_in.is_zero()) throw std::domain_error("enumerate: zero lattice multiplier");
    QInt ell = normalize_associate(ell_in).rep; // the set only depends on the ideal

    RegionTester reg(region, R);
    WindowTester win(m);

    const double elld = ell.to_double();
    const double ellbar = std::fabs(ell.conj().to_double());
    const double c2 = (2.0 + kSqrt2) / 2.0;
    const double ymax = reg.outer / elld;
    const double ybarmax = m.to_double() * c2 / ellbar + 1e-9;
    const long amax = static_cast<long>(std::floor((ymax + ybarmax) / 2.0)) + 2;
    const long bmax = static_cast<long>(std::floor((ymax + ybarmax) / (2.0 * kSqrt2))) + 2;

    struct Cand {
        QInt y, x, xbar;
    };
    std::vector<Cand> cands;
    for (long a = -amax; a <= amax; ++a) {
        for (long b = -bmax; b <= bmax; ++b) {
            QInt y(a, b);
            QInt x = ell * y;
            if (!reg.coord_ok(x)) continue;
            QInt xbar = x.conj();
            if (!win.coord_ok(xbar)) continue;
            cands.push_back({y, x, xbar});
        }
    }
    std::sort(cands.begin(), cands.end(),
              [](const Cand& l, const Cand& r) { return lex_less(l.x, r.x); });

    std::vector<LatticePoint> out;
    for (const Cand& c1 : cands) {
        for (const Cand& c2 : cands) {
            if (subl && !same_parity(c1.y.a(), c2.y.a())) continue;
            if (!win.contains(c1.xbar, c2.xbar)) continue;
            if (!reg.contains(c1.x, c2.x)) continue;
            if (out.size() >= cap)
                throw cap_exceeded_error("enumerate: point cap exceeded");
            out.push_back({c1.x, c2.x});
        }
    }
    return out;
}

} // namespace

const char* variant_name(Variant v)
{
    switch (v) {
    case Variant::B: return "b";
    case Variant::Aprime: return "aprime";
    case Variant::A: return "ab";
    case Variant::Scaled: return "scaled";
    case Variant::Zd: return "zd";
    case Variant::ComplexAB: return "complex";
    }
    return "?";
}

std::uint64_t default_cap()
{
    if (const char* env = std::getenv("ABVIS_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 10000000ull;
}

double projection_scale(const SetSpec& spec)
{
    return spec.variant == Variant::A ? 1.0 / kSqrt2 : 1.0;
}

bool sublattice_member(const LatticePoint& p)
{
    return same_parity(p.x1.a(), p.x2.a());
}

bool in_b(const LatticePoint& p)
{
    return in_window(Window{QRat(1)}, QRat(p.conj1()), QRat(p.conj2()));
}

bool in_aprime(const LatticePoint& p)
{
    return in_b(p) && sublattice_member(p);
}

std::vector<LatticePoint> enumerate_points(const SetSpec& spec)
{
    switch (spec.variant) {
    case Variant::B:
        return run_lattice(spec.region, spec.radius, QInt(1), QRat(1), false, spec.cap);
    case Variant::Aprime:
        return run_lattice(spec.region, spec.radius, QInt(1), QRat(1), true, spec.cap);
    case Variant::A:
        // A = (1/sqrt2) A'; enumerate A' in the sqrt(2)-scaled region
        return run_lattice(spec.region, spec.radius * QRat::sqrt2(), QInt(1), QRat(1),
                           true, spec.cap);
    case Variant::Scaled:
        return run_lattice(spec.region, spec.radius, spec.ell, spec.window_scale,
                           spec.sublattice, spec.cap);
    case Variant::Zd:
    case Variant::ComplexAB:
        throw std::invalid_argument("enumerate_points: use enumerate_zd / enumerate_complex");
    }
    return {};
}

namespace {

// int64 fast path for den*value <= num comparisons (rational thresholds)
struct FastBound {
    bool usable = false;
    std::int64_t num = 0, den = 1;

    FastBound(const QRat& v, double value_range)
    {
        if (v.q() != 0) return;
        const mpq_class& r = v.p();
        if (!r.get_num().fits_slong_p() || !r.get_den().fits_slong_p()) return;
        num = r.get_num().get_si();
        den = r.get_den().get_si();
        // den * value must not overflow
        usable = static_cast<double>(den) * value_range < 4.0e18;
    }

    bool le(std::int64_t value) const { return den * value <= num; }
};

} // namespace

void for_each_zd(int d, const Region& region, const QRat& R, std::uint64_t cap,
                 const std::function<void(const ZdPoint&)>& fn)
{
    if (d != 2 && d != 3) throw std::invalid_argument("for_each_zd: d must be 2 or 3");
    if (R.sign() <= 0) throw std::domain_error("for_each_zd: radius must be positive");
    if (d == 3 && region.kind == RegionKind::octagon)
        throw std::invalid_argument("for_each_zd: octagon region is 2-d only");

    RegionTester reg(region, R);
    const long nmax = static_cast<long>(std::floor(reg.outer)) + 1;
    std::uint64_t count = 0;

    auto emit = [&](std::int64_t n1, std::int64_t n2, std::int64_t n3) {
        if (++count > cap) throw cap_exceeded_error("enumerate_zd: point cap exceeded");
        fn(ZdPoint{n1, n2, n3});
    };

    const double smax = 3.0 * static_cast<double>(nmax) * static_cast<double>(nmax);
    FastBound fast_r2(R * R, smax);
    FastBound fast_r(R, static_cast<double>(nmax));

    if (region.kind == RegionKind::disc && fast_r2.usable) {
        for (std::int64_t n1 = -nmax; n1 <= nmax; ++n1) {
            for (std::int64_t n2 = -nmax; n2 <= nmax; ++n2) {
                std::int64_t s2 = n1 * n1 + n2 * n2;
                if (d == 2) {
                    if (fast_r2.le(s2)) emit(n1, n2, 0);
                    continue;
                }
                for (std::int64_t n3 = -nmax; n3 <= nmax; ++n3)
                    if (fast_r2.le(s2 + n3 * n3)) emit(n1, n2, n3);
            }
        }
        return;
    }
    if (region.kind == RegionKind::square && fast_r.usable) {
        std::int64_t m = nmax;
        while (m >= 0 && !fast_r.le(m)) --m;
        for (std::int64_t n1 = -m; n1 <= m; ++n1)
            for (std::int64_t n2 = -m; n2 <= m; ++n2) {
                if (d == 2) {
                    emit(n1, n2, 0);
                    continue;
                }
                for (std::int64_t n3 = -m; n3 <= m; ++n3) emit(n1, n2, n3);
            }
        return;
    }

    if (d == 2) {
        for (long n1 = -nmax; n1 <= nmax; ++n1)
            for (long n2 = -nmax; n2 <= nmax; ++n2)
                if (reg.contains(QInt(n1), QInt(n2))) emit(n1, n2, 0);
        return;
    }

    ClearedBound r2(R * R);
    for (long n1 = -nmax; n1 <= nmax; ++n1) {
        for (long n2 = -nmax; n2 <= nmax; ++n2) {
            for (long n3 = -nmax; n3 <= nmax; ++n3) {
                if (region.kind == RegionKind::disc) {
                    QInt s(mpz_class(n1) * n1 + mpz_class(n2) * n2 + mpz_class(n3) * n3,
                           mpz_class(0));
                    if (!r2.le(s)) continue;
                } else {
                    if (!reg.coord_ok(QInt(n1)) || !reg.coord_ok(QInt(n2)) ||
                        !reg.coord_ok(QInt(n3)))
                        continue;
                }
                emit(n1, n2, n3);
            }
        }
    }
}

std::vector<ZdPoint> enumerate_zd(int d, const Region& region, const QRat& R,
                                  std::uint64_t cap)
{
    std::vector<ZdPoint> out;
    for_each_zd(d, region, R, cap, [&](const ZdPoint& p) { out.push_back(p); });
    return out;
}

std::vector<ComplexPoint> enumerate_complex(const QRat& rbound, std::uint64_t cap)
{
    if (rbound.sign() <= 0)
        throw std::domain_error("enumerate_complex: radius must be positive");

    // |x|^2 = x1^2 + x2^2 + sqrt2*x1*x2 <= rbound^2
    ClearedBound r2(rbound * rbound);
    // doubled star coordinates: U = 2*conj(x1) - sqrt2*conj(x2), V = sqrt2*conj(x2);
    // W_8 membership becomes max(|U|,|V|) <= 1+sqrt2, |U|+|V| <= 2+sqrt2
    const QInt w8_max(1, 1), w8_sum(2, 1);

    const double rb = rbound.to_double();
    const double star_outer = (1.0 + kSqrt2) / 2.0 + 1e-9; // max |star coordinate|
    const double x2max = rb * kSqrt2 + 1e-9;               // |Im x| = |x2|/sqrt2
    const double x2barmax = star_outer * kSqrt2;
    const long a2max = static_cast<long>(std::floor((x2max + x2barmax) / 2.0)) + 2;
    const long b2max = static_cast<long>(std::floor((x2max + x2barmax) / (2.0 * kSqrt2))) + 2;

    std::vector<ComplexPoint> out;
    const QInt rt2 = QInt::sqrt2();
    for (long a2 = -a2max; a2 <= a2max; ++a2) {
        for (long b2 = -b2max; b2 <= b2max; ++b2) {
            QInt x2(a2, b2);
            double x2d = x2.to_double();
            double x2bard = x2.conj().to_double();
            if (std::fabs(x2d) > x2max + 1 || std::fabs(x2bard) > x2barmax + 1) continue;
            QInt v = rt2 * x2.conj();
            if ((w8_max - v.abs()).sign() < 0) continue; // |V| alone already too big

            // x1 ranges from |x1 + x2/sqrt2| <= rb and |conj(x1) - conj(x2)/sqrt2| <= star_outer
            double t = x2d * kSqrt2 / 2.0, tb = x2bard * kSqrt2 / 2.0;
            double lo = -rb - t, hi = rb - t;
            double lob = tb - star_outer, hib = tb + star_outer;
            long a1lo = static_cast<long>(std::floor((lo + lob) / 2.0)) - 1;
            long a1hi = static_cast<long>(std::ceil((hi + hib) / 2.0)) + 1;
            long b1lo = static_cast<long>(std::floor((lo - hib) / (2.0 * kSqrt2))) - 1;
            long b1hi = static_cast<long>(std::ceil((hi - lob) / (2.0 * kSqrt2))) + 1;
            for (long a1 = a1lo; a1 <= a1hi; ++a1) {
                for (long b1 = b1lo; b1 <= b1hi; ++b1) {
                    QInt x1(a1, b1);
                    QInt u = x1.conj() * 2 - v;
                    QInt au = u.abs(), av = v.abs();
                    if ((w8_max - au).sign() < 0 || (w8_max - av).sign() < 0 ||
                        (w8_sum - au - av).sign() < 0)
                        continue;
                    if (!r2.le(x1 * x1 + x2 * x2 + rt2 * x1 * x2)) continue;
                    if (out.size() >= cap)
                        throw cap_exceeded_error("enumerate_complex: point cap exceeded");
                    out.push_back({x1, x2});
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const ComplexPoint& l, const ComplexPoint& r) {
        if (l.x1 != r.x1) return lex_less(l.x1, r.x1);
        return lex_less(l.x2, r.x2);
    });
    return out;
}

} // namespace abvis
