#include "abvis/qring.hpp"

#include <algorithm>
#include <cstdlib>

namespace abvis {

mpq_class parse_decimal(const std::string& s)
{
    std::string t = s;
    bool neg = false;
    if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
        neg = t[0] == '-';
        t = t.substr(1);
    }
    auto dot = t.find('.');
    std::string digits;
    std::size_t frac_len = 0;
    if (dot == std::string::npos) {
        digits = t;
    } else {
        digits = t.substr(0, dot) + t.substr(dot + 1);
        frac_len = t.size() - dot - 1;
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("parse_decimal: bad number '" + s + "'");
    mpz_class num(digits, 10);
    mpz_class den = 1;
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    mpq_class r(num, den);
    r.canonicalize();
    if (neg) r = -r;
    return r;
}

namespace {

// round p/q to the nearest integer, ties away from zero (q > 0)
mpz_class round_div(const mpz_class& p, const mpz_class& q)
{
    mpz_class r;
    if (p >= 0) {
        mpz_class t = 2 * p + q;
        mpz_fdiv_q(r.get_mpz_t(), t.get_mpz_t(), mpz_class(2 * q).get_mpz_t());
    } else {
        mpz_class t = -2 * p + q;
        mpz_fdiv_q(r.get_mpz_t(), t.get_mpz_t(), mpz_class(2 * q).get_mpz_t());
        r = -r;
    }
    return r;
}

} // namespace

DivResult euclid_divmod(const QInt& x, const QInt& d)
{
    if (d.is_zero()) throw std::domain_error("euclid_divmod: division by zero");
    QInt p = x * d.conj();
    mpz_class n = d.norm(); // p / n is the exact quotient in Q(sqrt 2)
    mpz_class an = ::abs(n);
    int s = n < 0 ? -1 : 1;
    QInt q(round_div(p.a() * s, an), round_div(p.b() * s, an));
    QInt r = x - d * q;
    return {q, r};
}

bool divide_exact(const QInt& x, const QInt& d, QInt& out)
{
    if (d.is_zero()) return false;
    DivResult dr = euclid_divmod(x, d);
    if (!dr.rem.is_zero()) return false;
    out = dr.quot;
    return true;
}

bool divides(const QInt& d, const QInt& x)
{
    QInt q;
    return divide_exact(x, d, q);
}

Normalized normalize_associate(const QInt& x)
{
    if (x.is_zero()) throw std::domain_error("normalize_associate: zero");
    Normalized n{x, 1, 0};
    if (n.rep.sign() < 0) {
        n.rep = -n.rep;
        n.sign = -1;
    }
    const QInt one(1), lam = QInt::lambda(), lam_inv = QInt::lambda_inv();
    while (cmp_real(n.rep, lam) >= 0) {
        n.rep *= lam_inv;
        ++n.lambda_exp;
    }
    while (cmp_real(n.rep, one) < 0) {
        n.rep *= lam;
        --n.lambda_exp;
    }
    return n;
}

QInt gcd(const QInt& x, const QInt& y)
{
    QInt a = x, b = y;
    while (!b.is_zero()) {
        QInt r = euclid_divmod(a, b).rem;
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    return normalize_associate(a).rep;
}

namespace {

bool is_prime(const mpz_class& p)
{
    return mpz_probab_prime_p(p.get_mpz_t(), 32) != 0;
}

mpz_class pow_mod(mpz_class base, mpz_class e, const mpz_class& m)
{
    mpz_class r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

int legendre(const mpz_class& a, const mpz_class& p)
{
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

} // namespace

mpz_class sqrt_mod(const mpz_class& n, const mpz_class& p)
{
    mpz_class a = n % p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    if (legendre(a, p) != 1)
        throw std::domain_error("sqrt_mod: nonresidue");
    if (p % 4 == 3) return pow_mod(a, (p + 1) / 4, p);

    // Tonelli-Shanks; the nonresidue z is the smallest one.
    mpz_class q = p - 1;
    unsigned long s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    mpz_class z = 2;
    while (legendre(z, p) != -1) ++z;

    mpz_class m = s, c = pow_mod(z, q, p), t = pow_mod(a, q, p),
              r = pow_mod(a, (q + 1) / 2, p);
    while (t != 1) {
        mpz_class t2 = t;
        unsigned long i = 0;
        while (t2 != 1) {
            t2 = t2 * t2 % p;
            ++i;
        }
        mpz_class b = c;
        for (mpz_class j = 0; j < m - i - 1; ++j) b = b * b % p;
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

PrimeSplit rational_prime_split(const mpz_class& p)
{
    if (p < 2 || !is_prime(p))
        throw std::domain_error("rational_prime_split: not a prime: " + p.get_str());
    if (p == 2) return {SplitKind::ramified, QInt::sqrt2()};
    mpz_class m8 = p % 8;
    if (m8 == 1 || m8 == 7) {
        mpz_class t = sqrt_mod(2, p);
        QInt pi = gcd(QInt(mpz_class(p), mpz_class(0)), QInt(t, mpz_class(-1)));
        mpz_class n = ::abs(pi.norm());
        if (n != p) throw std::logic_error("rational_prime_split: bad split norm");
        return {SplitKind::split, pi};
    }
    return {SplitKind::inert, normalize_associate(QInt(mpz_class(p), mpz_class(0))).rep};
}

QInt Factorization::reconstruct() const
{
    QInt r(sign);
    if (lambda_exp >= 0)
        r *= QInt::lambda().pow(lambda_exp);
    else
        r *= QInt::lambda_inv().pow(-lambda_exp);
    for (const auto& f : factors) r *= f.prime.pow(f.exp);
    return r;
}

Factorization factor(const QInt& x, long trial_bound)
{
    if (x.is_zero()) throw std::domain_error("factor: zero");
    mpz_class n = ::abs(x.norm());
    QInt rest = x;
    Factorization out;

    mpz_class d = 2;
    while (n > 1) {
        if (d * d > n) {
            // remaining cofactor is prime
            if (n > trial_bound)
                throw factor_bound_error("factor: prime factor " + n.get_str() +
                                         " exceeds trial bound");
            d = n;
        } else if (d > trial_bound) {
            throw factor_bound_error("factor: norm cofactor " + n.get_str() +
                                     " has no factor below trial bound");
        }
        if (n % d != 0) {
            d += d == 2 ? 1 : 2;
            continue;
        }
        // d is the smallest remaining prime factor of the norm
        PrimeSplit ps = rational_prime_split(d);
        std::vector<QInt> above{ps.pi};
        if (ps.kind == SplitKind::split)
            above.push_back(normalize_associate(ps.pi.conj()).rep);
        for (const QInt& pi : above) {
            int e = 0;
            QInt q;
            while (divide_exact(rest, pi, q)) {
                rest = q;
                ++e;
            }
            if (e > 0) out.factors.push_back({pi, e});
        }
        while (n % d == 0) n /= d;
    }

    // what is left must be a unit
    Normalized u = normalize_associate(rest);
    if (u.rep != QInt(1))
        throw std::logic_error("factor: nonunit residue after removing primes");
    out.sign = u.sign;
    out.lambda_exp = u.lambda_exp;

    std::sort(out.factors.begin(), out.factors.end(),
              [](const PrimePower& l, const PrimePower& r) {
                  mpz_class nl = ::abs(l.prime.norm()), nr = ::abs(r.prime.norm());
                  int c = cmp(nl, nr);
                  if (c != 0) return c < 0;
                  return cmp_real(l.prime, r.prime) < 0;
              });
    return out;
}

} // namespace abvis
