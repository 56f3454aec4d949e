#include "abvis/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace abvis {

int mobius_int(std::uint64_t n)
{
    if (n == 0) throw std::domain_error("mobius_int: n must be positive");
    int omega = 0;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d != 0) continue;
        n /= d;
        if (n % d == 0) return 0;
        ++omega;
    }
    if (n > 1) ++omega;
    return omega % 2 == 0 ? 1 : -1;
}

namespace {

// mu(1..N) by linear sieve
std::vector<signed char> mobius_sieve(std::int64_t N)
{
    std::vector<signed char> mu(N + 1, 0);
    std::vector<std::int32_t> primes;
    std::vector<char> composite(N + 1, 0);
    mu[1] = 1;
    for (std::int64_t i = 2; i <= N; ++i) {
        if (!composite[i]) {
            primes.push_back(static_cast<std::int32_t>(i));
            mu[i] = -1;
        }
        for (std::int32_t p : primes) {
            std::int64_t ip = i * p;
            if (ip > N) break;
            composite[ip] = 1;
            if (i % p == 0) {
                mu[ip] = 0;
                break;
            }
            mu[ip] = -mu[i];
        }
    }
    return mu;
}

std::vector<std::int64_t> primes_up_to(std::int64_t N)
{
    std::vector<char> composite(std::max<std::int64_t>(N + 1, 2), 0);
    std::vector<std::int64_t> primes;
    for (std::int64_t i = 2; i <= N; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::int64_t j = i * i; j <= N; j += i) composite[j] = 1;
    }
    return primes;
}

} // namespace

double riemann_zeta_recip(int d, std::int64_t N)
{
    if (d < 2) throw std::domain_error("riemann_zeta_recip: d must be >= 2");
    if (N < 1) throw std::domain_error("riemann_zeta_recip: N must be >= 1");
    std::vector<signed char> mu = mobius_sieve(N);
    double sum = 0.0;
    for (std::int64_t n = N; n >= 1; --n) {
        if (mu[n] == 0) continue;
        sum += mu[n] / std::pow(static_cast<double>(n), d);
    }
    return sum;
}

std::vector<PrimeIdeal> list_prime_ideals(std::int64_t norm_bound)
{
    if (norm_bound < 2) throw std::domain_error("list_prime_ideals: bound must be >= 2");
    std::vector<PrimeIdeal> out;
    for (std::int64_t p : primes_up_to(norm_bound)) {
        mpz_class pz(static_cast<long>(p));
        if (p == 2) {
            out.push_back({2, SplitKind::ramified, QInt::sqrt2()});
            continue;
        }
        std::int64_t m8 = p % 8;
        if (m8 == 1 || m8 == 7) {
            PrimeSplit ps = rational_prime_split(pz);
            out.push_back({p, SplitKind::split, ps.pi});
            out.push_back({p, SplitKind::split, normalize_associate(ps.pi.conj()).rep});
        } else if (p * p <= norm_bound) {
            out.push_back({p * p, SplitKind::inert,
                           normalize_associate(QInt(pz, mpz_class(0))).rep});
        }
    }
    std::sort(out.begin(), out.end(), [](const PrimeIdeal& l, const PrimeIdeal& r) {
        if (l.norm != r.norm) return l.norm < r.norm;
        return cmp_real(l.gen, r.gen) < 0;
    });
    return out;
}

double dedekind_zeta2_euler(std::int64_t norm_bound)
{
    double prod = 1.0;
    for (const PrimeIdeal& P : list_prime_ideals(norm_bound)) {
        double n = static_cast<double>(P.norm);
        prod *= 1.0 / (1.0 - 1.0 / (n * n));
    }
    return prod;
}

double dedekind_zeta2_closed()
{
    const double pi4 = std::pow(std::numbers::pi, 4);
    return pi4 / (48.0 * std::numbers::sqrt2);
}

std::int64_t ideal_count(std::int64_t n)
{
    if (n < 1) throw std::domain_error("ideal_count: n must be positive");
    std::int64_t count = 1;
    for (std::int64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d != 0) continue;
        int k = 0;
        while (n % d == 0) {
            n /= d;
            ++k;
        }
        std::int64_t m8 = d % 8;
        if (d == 2) {
            // a_{2^k} = 1
        } else if (m8 == 1 || m8 == 7) {
            count *= k + 1;
        } else if (k % 2 != 0) {
            return 0;
        }
    }
    if (n > 1) {
        std::int64_t m8 = n % 8;
        if (n == 2) {
            // a_2 = 1
        } else if (m8 == 1 || m8 == 7) {
            count *= 2;
        } else {
            return 0;
        }
    }
    return count;
}

double ideal_count_partial_sum(std::int64_t N)
{
    if (N < 1) throw std::domain_error("ideal_count_partial_sum: N must be >= 1");
    // multiplicative evaluation over a smallest-prime-factor sieve
    std::vector<std::int32_t> spf(N + 1, 0);
    for (std::int64_t i = 2; i <= N; ++i) {
        if (spf[i] != 0) continue;
        for (std::int64_t j = i; j <= N; j += i)
            if (spf[j] == 0) spf[j] = static_cast<std::int32_t>(i);
    }
    std::vector<std::int32_t> a(N + 1, 0);
    a[1] = 1;
    double sum = 1.0;
    for (std::int64_t n = 2; n <= N; ++n) {
        std::int64_t p = spf[n], m = n, k = 0;
        while (m % p == 0) {
            m /= p;
            ++k;
        }
        std::int64_t ap;
        if (p == 2) ap = 1;
        else if (p % 8 == 1 || p % 8 == 7) ap = k + 1;
        else ap = (k % 2 == 0) ? 1 : 0;
        a[n] = static_cast<std::int32_t>(ap * a[m]);
        if (a[n] != 0) sum += static_cast<double>(a[n]) / (static_cast<double>(n) * n);
    }
    return sum;
}

double mobius_ideal_series(std::int64_t Delta)
{
    if (Delta < 1) throw std::domain_error("mobius_ideal_series: Delta must be >= 1");
    std::vector<std::int64_t> norms;
    if (Delta >= 2)
        for (const PrimeIdeal& P : list_prime_ideals(Delta)) norms.push_back(P.norm);

    double sum = 0.0;
    // depth-first over squarefree products of distinct prime ideals, by norm
    auto rec = [&](auto&& self, std::size_t idx, std::int64_t n, int omega) -> void {
        double nn = static_cast<double>(n);
        sum += (omega % 2 == 0 ? 1.0 : -1.0) / (nn * nn);
        for (std::size_t i = idx; i < norms.size(); ++i) {
            if (norms[i] > Delta / n) break;
            self(self, i + 1, n * norms[i], omega + 1);
        }
    };
    rec(rec, 0, 1, 0);
    return sum;
}

} // namespace abvis
