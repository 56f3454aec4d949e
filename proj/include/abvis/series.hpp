#pragma once

#include "abvis/cutproject.hpp"
#include "abvis/geometry.hpp"
#include "abvis/qint.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace abvis {

enum class SeriesVariant { B, Aprime };

/**
 * A finite occluder set F, a subset of C = {normalized primes} U {lambda}.
 * The primes must be pairwise non-associate; lambda is carried as a flag
 * since it contributes the unit ideal.
 */
struct OccluderSet {
    std::vector<QInt> primes;
    bool has_lambda = false;
};

struct OccluderData {
    QInt ell;          // normalized least common multiple of F
    QRat m;            // min{1, min |conj(c)|}: sqrt2-1 iff lambda in F, else 1
    mpz_class norm_sq; // N(ell)^2
};

OccluderData occluder_data(const OccluderSet& F);

struct SeriesValue {
    QRat exact;
    double approx;
};

/**
 * Truncated visible-density series: the exact Q(sqrt 2) sum over occluder
 * sets F with |N(ell_F)| <= Delta of
 *
 *    (-1)^#F * m_F^2 * vol(W_A) / (covol * N(ell_F)^2),
 *
 * with covol = 8 for B and 16 for A' (index-2 sublattice). Enumerated over
 * squarefree ideals crossed with the lambda flag.
 */
SeriesValue truncated_density_series(std::int64_t Delta, SeriesVariant variant);

// Same sum, but over all F whose prime factors have norm <= bound (a
// multiplicatively closed truncation): equals the Euler product below
// exactly.
SeriesValue closed_truncation_series(std::int64_t bound, SeriesVariant variant);

// product over prime ideals of norm <= bound of (1 - N(P)^-2), exact
mpq_class euler_product_exact(std::int64_t bound);

struct IeResult {
    long long lhs = 0;          // visible points by classifier, origin excluded
    long long rhs = 0;          // alternating sum of intersection counts
    bool equal = false;
    int occluder_sets = 0;      // number of F considered
    int nonempty_sets = 0;      // F with a nonzero point in range
    std::int64_t norm_bound = 0;    // exact cutoff on |N(ell_F)| used
    double empirical_L = 0.0;       // max over F of count * N(ell_F)^2 / R^2
    std::int64_t empirical_stop = 0; // where the doubled empirical rule stops
};

/**
 * Exact finite-radius counting identity: the number of visible points in
 * R*D equals the alternating sum over occluder sets F of the point counts
 * of P(m_F W_A, L_F) minus the origin, intersected with R*D. Candidates are
 * generated by increasing N(ell_F); any F with |N(ell_F)| above
 * outer(R*D) * (2+sqrt2)/2 is provably empty (a nonzero coordinate has
 * |N| >= 1), which gives the cutoff. Integer equality, no tolerance.
 */
IeResult ie_identity_check(const QRat& R, const Region& region, SeriesVariant variant,
                           std::uint64_t cap = default_cap());

struct DensityReport {
    std::string set_name;
    std::string region_name;
    double radius = 0.0;
    bool exclude_origin = false;

    std::uint64_t total = 0;
    std::uint64_t visible = 0;
    double volume = 0.0;
    double total_per_vol = 0.0;
    double visible_per_vol = 0.0;
    double visible_fraction = 0.0;

    bool has_visibility = true; // false for the complex cross-check set

    double theta_ref = 0.0;     // reference density of the full set
    double theta_hat_ref = 0.0; // reference density of the visible subset
    double kappa_ref = 0.0;     // reference visible fraction
    double err_theta = 0.0;     // relative errors against the references
    double err_theta_hat = 0.0;
    double err_kappa = 0.0;
};

// Counts, density estimates and reference values for one enumeration run.
DensityReport density_report(const SetSpec& spec);

} // namespace abvis
