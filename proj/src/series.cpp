#include "abvis/series.hpp"

#include "abvis/qring.hpp"
#include "abvis/visibility.hpp"
#include "abvis/zeta.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace abvis {

namespace {

const QRat kLambdaBarAbs(-1, 1);     // |conj(lambda)| = sqrt2 - 1
const QRat kLambdaBarSq(3, -2);      // (sqrt2 - 1)^2 = 3 - 2 sqrt2
constexpr double kC2 = (2.0 + std::numbers::sqrt2) / 2.0;

} // namespace

OccluderData occluder_data(const OccluderSet& F)
{
    std::vector<QInt> reps;
    QInt prod(1);
    for (const QInt& c : F.primes) {
        if (c.is_zero() || c.is_unit())
            throw std::domain_error("occluder_data: occluders must be non-unit primes");
        QInt rep = normalize_associate(c).rep;
        for (const QInt& seen : reps)
            if (seen == rep)
                throw std::domain_error("occluder_data: repeated or associate primes");
        reps.push_back(rep);
        prod *= rep;
    }
    OccluderData d;
    d.ell = normalize_associate(prod).rep;
    d.m = F.has_lambda ? kLambdaBarAbs : QRat(1);
    mpz_class n = d.ell.norm();
    d.norm_sq = n * n;
    return d;
}

namespace {

// adds the pair of terms (without/with lambda) for one squarefree ideal
void add_ideal_terms(QRat& exact, int omega, std::int64_t norm, SeriesVariant variant)
{
    long covol = variant == SeriesVariant::B ? 8 : 16;
    mpz_class den = mpz_class(covol) * norm * norm;
    mpq_class c(4, den);
    c.canonicalize();
    QRat base(c, c); // vol(W_A) / (covol N^2) = (4 + 4 sqrt2) / (covol N^2)
    QRat term = base - base * kLambdaBarSq; // F and F U {lambda} together
    if (omega % 2 != 0) term = -term;
    exact += term;
}

} // namespace

SeriesValue truncated_density_series(std::int64_t Delta, SeriesVariant variant)
{
    if (Delta < 1) throw std::domain_error("truncated_density_series: Delta >= 1");
    std::vector<std::int64_t> norms;
    if (Delta >= 2)
        for (const PrimeIdeal& P : list_prime_ideals(Delta)) norms.push_back(P.norm);

    SeriesValue out{QRat(0), 0.0};
    auto rec = [&](auto&& self, std::size_t idx, std::int64_t n, int omega) -> void {
        add_ideal_terms(out.exact, omega, n, variant);
        for (std::size_t i = idx; i < norms.size(); ++i) {
            if (norms[i] > Delta / n) break;
            self(self, i + 1, n * norms[i], omega + 1);
        }
    };
    rec(rec, 0, 1, 0);
    out.approx = out.exact.to_double();
    return out;
}

SeriesValue closed_truncation_series(std::int64_t bound, SeriesVariant variant)
{
    if (bound < 1) throw std::domain_error("closed_truncation_series: bound >= 1");
    std::vector<std::int64_t> norms;
    if (bound >= 2)
        for (const PrimeIdeal& P : list_prime_ideals(bound)) norms.push_back(P.norm);

    SeriesValue out{QRat(0), 0.0};
    auto rec = [&](auto&& self, std::size_t idx, std::int64_t n, int omega) -> void {
        add_ideal_terms(out.exact, omega, n, variant);
        for (std::size_t i = idx; i < norms.size(); ++i)
            self(self, i + 1, n * norms[i], omega + 1);
    };
    rec(rec, 0, 1, 0);
    out.approx = out.exact.to_double();
    return out;
}

mpq_class euler_product_exact(std::int64_t bound)
{
    mpq_class prod(1);
    if (bound >= 2) {
        for (const PrimeIdeal& P : list_prime_ideals(bound)) {
            mpz_class n2 = mpz_class(P.norm) * P.norm;
            prod *= mpq_class(n2 - 1, n2);
        }
    }
    prod.canonicalize();
    return prod;
}

IeResult ie_identity_check(const QRat& R, const Region& region, SeriesVariant variant,
                           std::uint64_t cap)
{
    if (R.sign() <= 0) throw std::domain_error("ie_identity_check: R must be positive");
    IeResult res;

    // left side: classifier count
    SetSpec base;
    base.variant = variant == SeriesVariant::B ? Variant::B : Variant::Aprime;
    base.region = region;
    base.radius = R;
    base.cap = cap;
    std::vector<LatticePoint> pts = enumerate_points(base);
    for (const LatticePoint& p : pts) {
        VisibilityVerdict v = variant == SeriesVariant::B ? classify_b(p) : classify_aprime(p);
        if (v.visible) ++res.lhs;
    }

    // right side: alternating sum over occluder sets, cut off at the exact
    // norm bound (see header)
    const double Rd = R.to_double();
    const double outer = region_outer_coord(region, Rd);
    res.norm_bound = static_cast<std::int64_t>(std::floor(outer * kC2)) + 1;

    std::vector<PrimeIdeal> ideals;
    if (res.norm_bound >= 2) ideals = list_prime_ideals(res.norm_bound);

    auto term_count = [&](const QInt& ell, bool with_lambda) -> long long {
        SetSpec s;
        s.variant = Variant::Scaled;
        s.region = region;
        s.radius = R;
        s.ell = ell;
        s.window_scale = with_lambda ? kLambdaBarAbs : QRat(1);
        s.sublattice = variant == SeriesVariant::Aprime;
        s.cap = cap;
        std::vector<LatticePoint> ps = enumerate_points(s);
        long long n = 0;
        for (const LatticePoint& p : ps)
            if (!p.is_origin()) ++n;
        return n;
    };

    auto visit = [&](const QInt& ell, std::int64_t norm, int omega) {
        for (int lam = 0; lam <= 1; ++lam) {
            long long n = term_count(ell, lam == 1);
            int sign = (omega + lam) % 2 == 0 ? 1 : -1;
            res.rhs += sign * n;
            ++res.occluder_sets;
            if (n > 0) {
                ++res.nonempty_sets;
                double L = static_cast<double>(n) * static_cast<double>(norm) *
                           static_cast<double>(norm) / (Rd * Rd);
                if (L > res.empirical_L) res.empirical_L = L;
            }
        }
    };

    auto rec = [&](auto&& self, std::size_t idx, const QInt& ell, std::int64_t n,
                   int omega) -> void {
        visit(ell, n, omega);
        for (std::size_t i = idx; i < ideals.size(); ++i) {
            if (ideals[i].norm > res.norm_bound / n) break;
            self(self, i + 1, normalize_associate(ell * ideals[i].gen).rep,
                 n * ideals[i].norm, omega + 1);
        }
    };
    rec(rec, 0, QInt(1), 1, 0);

    res.empirical_stop =
        static_cast<std::int64_t>(std::ceil(std::sqrt(2.0 * res.empirical_L * Rd * Rd)));
    res.equal = res.lhs == res.rhs;
    return res;
}

namespace {

double zeta_int(int d)
{
    return std::riemann_zeta(static_cast<double>(d));
}

} // namespace

DensityReport density_report(const SetSpec& spec)
{
    DensityReport rep;
    rep.region_name = region_name(spec.region.kind);
    rep.radius = spec.radius.to_double();
    rep.exclude_origin = spec.exclude_origin;

    const double sqrt2 = std::numbers::sqrt2;
    const double zk2 = dedekind_zeta2_closed();
    const double kappa_ab = 2.0 * (sqrt2 - 1.0) / zk2;

    bool origin_in_range = true; // every region here contains the origin
    switch (spec.variant) {
    case Variant::B:
    case Variant::Aprime:
    case Variant::A: {
        rep.set_name = variant_name(spec.variant);
        std::vector<LatticePoint> pts = enumerate_points(spec);
        rep.total = pts.size();
        for (const LatticePoint& p : pts) {
            VisibilityVerdict v = spec.variant == Variant::B ? classify_b(p)
                                                             : classify_aprime(p);
            if (v.visible) ++rep.visible;
        }
        rep.volume = region_volume(spec.region, rep.radius);
        if (spec.variant == Variant::B) {
            rep.theta_ref = (1.0 + sqrt2) / 2.0;
            rep.theta_hat_ref = 1.0 / zk2;
        } else if (spec.variant == Variant::Aprime) {
            rep.theta_ref = (1.0 + sqrt2) / 4.0;
            rep.theta_hat_ref = 1.0 / (2.0 * zk2);
        } else {
            rep.theta_ref = (1.0 + sqrt2) / 2.0;
            rep.theta_hat_ref = 1.0 / zk2;
        }
        rep.kappa_ref = kappa_ab;
        break;
    }
    case Variant::Scaled: {
        rep.set_name = "scaled";
        std::vector<LatticePoint> pts = enumerate_points(spec);
        rep.total = pts.size();
        rep.has_visibility = false;
        rep.volume = region_volume(spec.region, rep.radius);
        double nl = std::abs(normalize_associate(spec.ell).rep.norm().get_d());
        double m = spec.window_scale.to_double();
        double covol = (spec.sublattice ? 16.0 : 8.0) * nl * nl;
        rep.theta_ref = m * m * 4.0 * (1.0 + sqrt2) / covol;
        break;
    }
    case Variant::Zd: {
        rep.set_name = spec.zd_dim == 2 ? "zd2" : "zd3";
        std::uint64_t total = 0, visible = 0;
        for_each_zd(spec.zd_dim, spec.region, spec.radius, spec.cap, [&](const ZdPoint& n) {
            ++total;
            if (zd_visible(n, spec.zd_dim)) ++visible;
        });
        rep.total = total;
        rep.visible = visible;
        rep.volume = region_volume(spec.region, rep.radius, spec.zd_dim);
        rep.theta_ref = 1.0;
        rep.theta_hat_ref = 1.0 / zeta_int(spec.zd_dim);
        rep.kappa_ref = rep.theta_hat_ref;
        break;
    }
    case Variant::ComplexAB: {
        rep.set_name = "complex";
        std::vector<ComplexPoint> pts = enumerate_complex(spec.radius, spec.cap);
        rep.total = pts.size();
        rep.has_visibility = false;
        rep.volume = region_volume(Region{RegionKind::disc}, rep.radius);
        rep.region_name = "disc";
        rep.theta_ref = (1.0 + sqrt2) / 2.0;
        break;
    }
    }

    if (spec.exclude_origin && origin_in_range && rep.total > 0) --rep.total;

    rep.total_per_vol = rep.total / rep.volume;
    rep.err_theta = std::abs(rep.total_per_vol / rep.theta_ref - 1.0);
    if (rep.has_visibility) {
        rep.visible_per_vol = rep.visible / rep.volume;
        rep.visible_fraction = rep.total > 0
                                   ? static_cast<double>(rep.visible) / rep.total
                                   : 0.0;
        rep.err_theta_hat = std::abs(rep.visible_per_vol / rep.theta_hat_ref - 1.0);
        rep.err_kappa = std::abs(rep.visible_fraction / rep.kappa_ref - 1.0);
    }
    return rep;
}

} // namespace abvis
