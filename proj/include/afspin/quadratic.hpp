#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "afspin/rational.hpp"

namespace afspin {

/// Element a + b*sqrt(D) of the real quadratic field Q(sqrt D), D a positive squarefree integer.
template <int D>
class QuadraticNumber {
    static_assert(D >= 2, "D must be a squarefree integer >= 2");

public:
    static constexpr int radicand = D;

    QuadraticNumber() = default;
    QuadraticNumber(long a) : a_(a) {}
    QuadraticNumber(int a) : a_(a) {}
    QuadraticNumber(Rational a) : a_(std::move(a)) {}
    QuadraticNumber(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    /// The field generator sqrt(D).
    static QuadraticNumber root() { return QuadraticNumber(Rational(0), Rational(1)); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    QuadraticNumber operator-() const { return {-a_, -b_}; }
    QuadraticNumber& operator+=(const QuadraticNumber& o) { a_ += o.a_; b_ += o.b_; return *this; }
    QuadraticNumber& operator-=(const QuadraticNumber& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    QuadraticNumber& operator*=(const QuadraticNumber& o)
    {
        Rational a = a_ * o.a_ + Rational(D) * b_ * o.b_;
        Rational b = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(a);
        b_ = std::move(b);
        return *this;
    }
    QuadraticNumber& operator/=(const QuadraticNumber& o) { return *this *= o.inverse(); }

    friend QuadraticNumber operator+(QuadraticNumber x, const QuadraticNumber& y) { return x += y; }
    friend QuadraticNumber operator-(QuadraticNumber x, const QuadraticNumber& y) { return x -= y; }
    friend QuadraticNumber operator*(QuadraticNumber x, const QuadraticNumber& y) { return x *= y; }
    friend QuadraticNumber operator/(QuadraticNumber x, const QuadraticNumber& y) { return x /= y; }

    friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y)
    {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }

    /// Galois conjugate a - b*sqrt(D).
    QuadraticNumber galois() const { return {a_, -b_}; }

    /// Field norm a^2 - D b^2.
    Rational norm() const { return a_ * a_ - Rational(D) * b_ * b_; }

    QuadraticNumber inverse() const
    {
        Rational n = norm();
        if (n.is_zero())
            throw DivisionByZero("inverse of zero in Q(sqrt " + std::to_string(D) + ")");
        return {a_ / n, -b_ / n};
    }

    /// Sign of the real number a + b*sqrt(D).
    int sign() const
    {
        int sa = a_.sign(), sb = b_.sign();
        if (sb == 0)
            return sa;
        if (sa == 0)
            return sb;
        if (sa == sb)
            return sa;
        // opposite signs: compare a^2 with D b^2
        int c = (a_ * a_ <=> Rational(D) * b_ * b_) < 0 ? -1 : 1;
        return sa > 0 ? c : -c;
    }

    /// Square root inside the field when it exists.
    std::optional<QuadraticNumber> sqrt() const
    {
        if (is_zero())
            return QuadraticNumber();
        if (sign() < 0)
            return std::nullopt;
        if (b_.is_zero()) {
            if (auto r = a_.sqrt())
                return QuadraticNumber(*r);
            if (auto r = (a_ / Rational(D)).sqrt())
                return QuadraticNumber(Rational(0), *r);
            return std::nullopt;
        }
        // (c + d sqrtD)^2 = a + b sqrtD  <=>  c^2 + D d^2 = a, 2cd = b
        auto r = norm().sqrt();
        if (!r)
            return std::nullopt;
        for (const Rational& c2 : {(a_ + *r) / Rational(2), (a_ - *r) / Rational(2)}) {
            auto c = c2.sqrt();
            if (!c || c->is_zero())
                continue;
            Rational d = b_ / (Rational(2) * *c);
            QuadraticNumber s(*c, d);
            if (s.sign() < 0)
                s = -s;
            if (s * s == *this)
                return s;
        }
        return std::nullopt;
    }

    /// Debug form: "a", "(b)√D", or "(a + (b)√D)".
    std::string str() const
    {
        std::string rd = "√" + std::to_string(D);
        if (b_.is_zero())
            return a_.str();
        if (a_.is_zero())
            return b_ == Rational(1) ? rd : "(" + b_.str() + ")" + rd;
        return "(" + a_.str() + " + (" + b_.str() + ")" + rd + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadraticNumber& x) { return os << x.str(); }

private:
    Rational a_;
    Rational b_;
};

using QSqrt2 = QuadraticNumber<2>;
using QSqrt3 = QuadraticNumber<3>;

} // namespace afspin
