#pragma once

#include <gmpxx.h>

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

namespace abvis {

/**
 * QInt: an element a + b*sqrt(2) of the ring Z[sqrt(2)], with
 * arbitrary-precision integer coefficients. The representation is unique,
 * so equality is coefficient equality and the sign of the real embedding
 * is decided exactly without floating point.
 */
class QInt {
public:
    QInt() : a_(0), b_(0) {}
    QInt(long a) : a_(a), b_(0) {}
    QInt(long a, long b) : a_(a), b_(b) {}
    QInt(mpz_class a, mpz_class b) : a_(std::move(a)), b_(std::move(b)) {}

    static QInt sqrt2() { return QInt(0, 1); }
    // fundamental unit lambda = 1 + sqrt(2)
    static QInt lambda() { return QInt(1, 1); }
    // lambda^-1 = sqrt(2) - 1
    static QInt lambda_inv() { return QInt(-1, 1); }

    const mpz_class& a() const { return a_; }
    const mpz_class& b() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }

    QInt conj() const { return QInt(a_, -b_); }

    mpz_class norm() const { return a_ * a_ - 2 * b_ * b_; }

    bool is_unit() const
    {
        mpz_class n = norm();
        return n == 1 || n == -1;
    }

    // Sign of the real embedding a + b*sqrt(2), computed exactly.
    int sign() const
    {
        int sa = sgn(a_), sb = sgn(b_);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // opposite coefficient signs: compare a^2 against 2 b^2
        int sn = sgn(norm());
        return sa > 0 ? sn : -sn;
    }

    QInt abs() const { return sign() < 0 ? -*this : *this; }

    double to_double() const
    {
        return a_.get_d() + b_.get_d() * std::sqrt(2.0);
    }

    QInt operator-() const { return QInt(-a_, -b_); }

    QInt operator+(const QInt& o) const { return QInt(a_ + o.a_, b_ + o.b_); }
    QInt operator-(const QInt& o) const { return QInt(a_ - o.a_, b_ - o.b_); }
    QInt operator*(const QInt& o) const
    {
        return QInt(a_ * o.a_ + 2 * b_ * o.b_, a_ * o.b_ + b_ * o.a_);
    }
    QInt operator*(long k) const { return QInt(a_ * k, b_ * k); }

    QInt& operator+=(const QInt& o) { a_ += o.a_; b_ += o.b_; return *this; }
    QInt& operator-=(const QInt& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    QInt& operator*=(const QInt& o) { *this = *this * o; return *this; }

    bool operator==(const QInt& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const QInt& o) const { return !(*this == o); }

    QInt pow(long e) const
    {
        if (e < 0) throw std::domain_error("QInt::pow: negative exponent");
        QInt r(1), base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    std::string str() const
    {
        if (b_ == 0) return a_.get_str();
        std::string s;
        if (a_ != 0) s += a_.get_str();
        if (b_ > 0 && a_ != 0) s += "+";
        if (b_ == -1) s += "-";
        else if (b_ != 1) s += b_.get_str();
        s += "sqrt2";
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const QInt& x)
    {
        return os << x.str();
    }

private:
    mpz_class a_, b_;
};

// Ordering of real embeddings, exact: -1, 0, +1.
inline int cmp_real(const QInt& x, const QInt& y) { return (x - y).sign(); }

inline bool operator<(const QInt& x, const QInt& y) { return cmp_real(x, y) < 0; }
inline bool operator<=(const QInt& x, const QInt& y) { return cmp_real(x, y) <= 0; }
inline bool operator>(const QInt& x, const QInt& y) { return cmp_real(x, y) > 0; }
inline bool operator>=(const QInt& x, const QInt& y) { return cmp_real(x, y) >= 0; }

inline QInt conj(const QInt& x) { return x.conj(); }
inline mpz_class norm(const QInt& x) { return x.norm(); }

// Lexicographic coefficient order (a, then b); used for deterministic output.
inline bool lex_less(const QInt& x, const QInt& y)
{
    int c = cmp(x.a(), y.a());
    if (c != 0) return c < 0;
    return cmp(x.b(), y.b()) < 0;
}

/**
 * QRat: an element p + q*sqrt(2) of the field Q(sqrt(2)), with exact
 * rational coefficients. Closed under field operations; comparisons and
 * equality are exact.
 */
class QRat {
public:
    QRat() : p_(0), q_(0) {}
    QRat(long p) : p_(p), q_(0) {}
    QRat(long p, long q) : p_(p), q_(q) {}
    QRat(mpq_class p, mpq_class q) : p_(std::move(p)), q_(std::move(q))
    {
        p_.canonicalize();
        q_.canonicalize();
    }
    QRat(const QInt& x) : p_(x.a()), q_(x.b()) {}

    static QRat sqrt2() { return QRat(0, 1); }

    const mpq_class& p() const { return p_; }
    const mpq_class& q() const { return q_; }

    bool is_zero() const { return p_ == 0 && q_ == 0; }

    QRat conj() const { return QRat(p_, mpq_class(-q_)); }

    mpq_class norm() const { return p_ * p_ - 2 * q_ * q_; }

    int sign() const
    {
        int sp = sgn(p_), sq = sgn(q_);
        if (sq == 0) return sp;
        if (sp == 0) return sq;
        if (sp == sq) return sp;
        int sn = sgn(mpq_class(p_ * p_ - 2 * q_ * q_));
        return sp > 0 ? sn : -sn;
    }

    QRat abs() const { return sign() < 0 ? -*this : *this; }

    double to_double() const
    {
        return p_.get_d() + q_.get_d() * std::sqrt(2.0);
    }

    QRat operator-() const { return QRat(mpq_class(-p_), mpq_class(-q_)); }

    QRat operator+(const QRat& o) const
    {
        return QRat(mpq_class(p_ + o.p_), mpq_class(q_ + o.q_));
    }
    QRat operator-(const QRat& o) const
    {
        return QRat(mpq_class(p_ - o.p_), mpq_class(q_ - o.q_));
    }
    QRat operator*(const QRat& o) const
    {
        return QRat(mpq_class(p_ * o.p_ + 2 * q_ * o.q_),
                    mpq_class(p_ * o.q_ + q_ * o.p_));
    }

    // Multiplicative inverse; p^2 = 2 q^2 has no rational solution besides 0,
    // so the denominator vanishes only for the zero element.
    QRat inv() const
    {
        mpq_class n = norm();
        if (n == 0) throw std::domain_error("QRat::inv: zero element");
        return QRat(mpq_class(p_ / n), mpq_class(-q_ / n));
    }

    QRat operator/(const QRat& o) const { return *this * o.inv(); }

    QRat& operator+=(const QRat& o) { p_ += o.p_; q_ += o.q_; return *this; }
    QRat& operator-=(const QRat& o) { p_ -= o.p_; q_ -= o.q_; return *this; }
    QRat& operator*=(const QRat& o) { *this = *this * o; return *this; }

    bool operator==(const QRat& o) const { return p_ == o.p_ && q_ == o.q_; }
    bool operator!=(const QRat& o) const { return !(*this == o); }

    std::string str() const
    {
        if (q_ == 0) return p_.get_str();
        std::string s;
        if (p_ != 0) s += p_.get_str();
        if (q_ > 0 && p_ != 0) s += "+";
        if (q_ == -1) s += "-";
        else if (q_ != 1) s += q_.get_str();
        s += "sqrt2";
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const QRat& x)
    {
        return os << x.str();
    }

private:
    mpq_class p_, q_;
};

inline int cmp(const QRat& x, const QRat& y) { return (x - y).sign(); }

inline bool operator<(const QRat& x, const QRat& y) { return cmp(x, y) < 0; }
inline bool operator<=(const QRat& x, const QRat& y) { return cmp(x, y) <= 0; }
inline bool operator>(const QRat& x, const QRat& y) { return cmp(x, y) > 0; }
inline bool operator>=(const QRat& x, const QRat& y) { return cmp(x, y) >= 0; }

// Parses a plain decimal string ("300", "-1.5", "0.25") into an exact rational.
mpq_class parse_decimal(const std::string& s);

// Decimal radius as an exact QRat (rational part only).
inline QRat qrat_from_decimal(const std::string& s)
{
    return QRat(parse_decimal(s), mpq_class(0));
}

} // namespace abvis
