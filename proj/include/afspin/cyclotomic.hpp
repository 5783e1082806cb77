#pragma once

#include <array>
#include <ostream>
#include <string>

#include "afspin/rational.hpp"

namespace afspin {

/// Element of Q(zeta12) in the power basis 1, z, z^2, z^3 with z^4 = z^2 - 1, z = exp(2 pi i / 12).
class CycValue {
public:
    CycValue() = default;
    CycValue(long v) { c_[0] = Rational(v); }
    CycValue(Rational v) { c_[0] = std::move(v); }
    CycValue(Rational c0, Rational c1, Rational c2, Rational c3) : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

    static CycValue zeta() { return {0, 1, 0, 0}; }

    /// z^k for any integer k; z^6 = -1.
    static CycValue zeta_power(long k)
    {
        long r = ((k % 12) + 12) % 12;
        CycValue x(1);
        for (long i = 0; i < r; ++i)
            x *= zeta();
        return x;
    }

    static CycValue i() { return zeta_power(3); }
    /// exp(2 pi i / 3)
    static CycValue omega() { return zeta_power(4); }
    /// exp(4 pi i / 3)
    static CycValue omega2() { return zeta_power(8); }

    const Rational& coeff(int k) const { return c_[k]; }

    bool is_zero() const
    {
        return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
    }
    bool is_rational() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }
    bool is_integer() const { return is_rational() && c_[0].is_integer(); }

    CycValue operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }
    CycValue& operator+=(const CycValue& o)
    {
        for (int k = 0; k < 4; ++k)
            c_[k] += o.c_[k];
        return *this;
    }
    CycValue& operator-=(const CycValue& o) { return *this += -o; }
    CycValue& operator*=(const CycValue& o)
    {
        std::array<Rational, 7> p;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                p[a + b] += c_[a] * o.c_[b];
        // z^6 = -1, z^5 = z^3 - z, z^4 = z^2 - 1
        p[0] -= p[6];
        p[3] += p[5];
        p[1] -= p[5];
        p[2] += p[4];
        p[0] -= p[4];
        c_ = {p[0], p[1], p[2], p[3]};
        return *this;
    }
    CycValue& operator/=(const Rational& r)
    {
        for (auto& x : c_)
            x /= r;
        return *this;
    }

    friend CycValue operator+(CycValue x, const CycValue& y) { return x += y; }
    friend CycValue operator-(CycValue x, const CycValue& y) { return x -= y; }
    friend CycValue operator*(CycValue x, const CycValue& y) { return x *= y; }
    friend CycValue operator/(CycValue x, const Rational& r) { return x /= r; }
    friend bool operator==(const CycValue& x, const CycValue& y) { return x.c_ == y.c_; }

    /// Complex conjugation z -> z^-1 = z - z^3.
    CycValue conj() const { return {c_[0] + c_[2], c_[1], -c_[2], -c_[1] - c_[3]}; }

    std::string str() const
    {
        static const char* names[] = {"", "ζ", "ζ^2", "ζ^3"};
        std::string s;
        for (int k = 0; k < 4; ++k) {
            if (c_[k].is_zero())
                continue;
            Rational a = c_[k].sign() < 0 ? -c_[k] : c_[k];
            s += s.empty() ? (c_[k].sign() < 0 ? "-" : "") : (c_[k].sign() < 0 ? " - " : " + ");
            if (k == 0)
                s += a.str();
            else
                s += (a == Rational(1) ? "" : a.str() + "·") + names[k];
        }
        return s.empty() ? "0" : s;
    }

    friend std::ostream& operator<<(std::ostream& os, const CycValue& x) { return os << x.str(); }

private:
    std::array<Rational, 4> c_;
};

} // namespace afspin
