#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <ostream>
#include <string>

#include "afspin/errors.hpp"

namespace afspin {

/// Exact rational number, always stored in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}
    Rational(int v) : q_(v) {}
    Rational(long num, long den)
    {
        if (den == 0)
            throw DivisionByZero("rational with zero denominator");
        q_ = mpq_class(mpz_class(num), mpz_class(den));
        q_.canonicalize();
    }
    Rational(const mpz_class& num, const mpz_class& den)
    {
        if (den == 0)
            throw DivisionByZero("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses "p", "-p" or "p/q".
    static Rational parse(const std::string& text)
    {
        mpq_class q;
        if (text.empty() || q.set_str(text, 10) != 0)
            throw ParseError("not a rational number: '" + text + "'");
        if (q.get_den() == 0)
            throw DivisionByZero("rational with zero denominator: '" + text + "'");
        return Rational(q);
    }

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o)
    {
        if (o.is_zero())
            throw DivisionByZero("rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rational inverse() const
    {
        if (is_zero())
            throw DivisionByZero("inverse of zero");
        return Rational(mpq_class(1) / q_);
    }

    /// Exact square root when both numerator and denominator are perfect squares.
    std::optional<Rational> sqrt() const
    {
        if (sign() < 0)
            return std::nullopt;
        if (!mpz_perfect_square_p(num().get_mpz_t()) || !mpz_perfect_square_p(den().get_mpz_t()))
            return std::nullopt;
        mpz_class n, d;
        mpz_sqrt(n.get_mpz_t(), num().get_mpz_t());
        mpz_sqrt(d.get_mpz_t(), den().get_mpz_t());
        return Rational(n, d);
    }

    /// Value as a machine integer; throws if not an integer or out of range.
    long to_long() const
    {
        if (!is_integer() || !num().fits_slong_p())
            throw UnsupportedScalar("rational " + str() + " is not a machine integer");
        return num().get_si();
    }

    std::string str() const { return q_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class q_{0};
};

} // namespace afspin
