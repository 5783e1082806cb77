#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "afspin/errors.hpp"
#include "afspin/quadratic.hpp"

namespace afspin {

constexpr int max_dimension = 8;

/// Basis monomial e_{i1}...e_{ik} (i1 < ... < ik) of C_n, indices stored as a bit mask (bit i-1 = e_i).
struct Blade {
    int dim = 0;
    unsigned mask = 0;

    Blade() = default;
    Blade(int n, unsigned m) : dim(n), mask(m)
    {
        if (n < 1 || n > max_dimension)
            throw DimensionError("dimension " + std::to_string(n) + " outside 1.." + std::to_string(max_dimension));
        if (m >> n)
            throw DimensionError("blade mask has indices above dimension " + std::to_string(n));
    }

    /// Blade from 1-based indices in any order; repeated indices are rejected.
    static Blade from_indices(int n, std::initializer_list<int> idx)
    {
        unsigned m = 0;
        for (int i : idx) {
            if (i < 1 || i > n)
                throw DimensionError("index e" + std::to_string(i) + " outside 1.." + std::to_string(n));
            if (m & (1u << (i - 1)))
                throw DimensionError("repeated index in blade");
            m |= 1u << (i - 1);
        }
        return Blade(n, m);
    }

    int grade() const { return std::popcount(mask); }

    std::vector<int> indices() const
    {
        std::vector<int> out;
        for (int i = 0; i < dim; ++i)
            if (mask & (1u << i))
                out.push_back(i + 1);
        return out;
    }

    /// "1" for the scalar unit, otherwise "e1e3" style.
    std::string str() const
    {
        if (mask == 0)
            return "1";
        std::string s;
        for (int i : indices())
            s += "e" + std::to_string(i);
        return s;
    }

    friend bool operator==(const Blade& x, const Blade& y) { return x.dim == y.dim && x.mask == y.mask; }
};

/// Lexicographic order on increasing index tuples: () < (1) < (1,2) < (1,2,3) < (1,3) < (2) ...
struct BladeLexLess {
    bool operator()(unsigned x, unsigned y) const
    {
        while (x != y) {
            if (x == 0)
                return true;
            if (y == 0)
                return false;
            int lx = std::countr_zero(x), ly = std::countr_zero(y);
            if (lx != ly)
                return lx < ly;
            x &= x - 1;
            y &= y - 1;
        }
        return false;
    }
};

/// Sign of e_x e_y relative to e_{x xor y}: one factor -1 per inversion of the concatenated
/// index sequence, and one per index shared by both blades (e_i^2 = -1).
inline int blade_product_sign(unsigned x, unsigned y)
{
    int swaps = 0;
    for (unsigned rest = y; rest; rest &= rest - 1) {
        int j = std::countr_zero(rest);
        swaps += std::popcount(x >> (j + 1));
    }
    swaps += std::popcount(x & y);
    return (swaps & 1) ? -1 : 1;
}

inline std::pair<int, Blade> blade_product(const Blade& x, const Blade& y)
{
    if (x.dim != y.dim)
        throw DimensionError("blade product of dimensions " + std::to_string(x.dim) + " and " + std::to_string(y.dim));
    return {blade_product_sign(x.mask, y.mask), Blade(x.dim, x.mask ^ y.mask)};
}

/// Sparse element of the Clifford algebra C_n (e_i^2 = -1) with coefficients in the field S.
template <class S>
class CliffordElement {
public:
    using scalar_type = S;
    using term_map = std::map<unsigned, S, BladeLexLess>;

    CliffordElement() = default;
    explicit CliffordElement(int n) : dim_(check_dim(n)) {}

    static CliffordElement scalar(int n, const S& c)
    {
        CliffordElement x(n);
        x.add_term(0, c);
        return x;
    }
    static CliffordElement one(int n) { return scalar(n, S(1)); }
    static CliffordElement blade(const Blade& b, const S& c = S(1))
    {
        CliffordElement x(b.dim);
        x.add_term(b.mask, c);
        return x;
    }
    /// Product e_{i1} e_{i2} ... in the given order (indices may repeat).
    static CliffordElement monomial(int n, std::initializer_list<int> idx)
    {
        CliffordElement x = one(n);
        for (int i : idx)
            x = x * basis(n, i);
        return x;
    }
    /// Basis vector e_i, 1-based.
    static CliffordElement basis(int n, int i) { return blade(Blade::from_indices(n, {i})); }

    int dim() const { return dim_; }
    const term_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    S coefficient(unsigned mask) const
    {
        auto it = terms_.find(mask);
        return it == terms_.end() ? S() : it->second;
    }
    S scalar_part() const { return coefficient(0); }

    bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
    bool is_even() const
    {
        for (const auto& [m, c] : terms_)
            if (std::popcount(m) & 1)
                return false;
        return true;
    }
    bool is_vector() const
    {
        for (const auto& [m, c] : terms_)
            if (std::popcount(m) != 1)
                return false;
        return true;
    }

    /// Adds c * e_mask, pruning an exact zero.
    void add_term(unsigned mask, const S& c)
    {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(mask, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    CliffordElement operator-() const
    {
        CliffordElement r(dim_);
        for (const auto& [m, c] : terms_)
            r.terms_.emplace(m, -c);
        return r;
    }

    CliffordElement& operator+=(const CliffordElement& o)
    {
        same_dim(o);
        for (const auto& [m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }
    CliffordElement& operator-=(const CliffordElement& o) { return *this += -o; }

    friend CliffordElement operator+(CliffordElement x, const CliffordElement& y) { return x += y; }
    friend CliffordElement operator-(CliffordElement x, const CliffordElement& y) { return x -= y; }

    friend CliffordElement operator*(const CliffordElement& x, const CliffordElement& y)
    {
        x.same_dim(y);
        CliffordElement r(x.dim_);
        for (const auto& [mx, cx] : x.terms_)
            for (const auto& [my, cy] : y.terms_) {
                S c = cx * cy;
                if (blade_product_sign(mx, my) < 0)
                    c = -c;
                r.add_term(mx ^ my, c);
            }
        return r;
    }

    friend CliffordElement operator*(const S& s, const CliffordElement& x) { return x.scaled(s); }

    CliffordElement scaled(const S& s) const
    {
        CliffordElement r(dim_);
        if (s.is_zero())
            return r;
        for (const auto& [m, c] : terms_)
            r.terms_.emplace(m, c * s);
        return r;
    }

    friend bool operator==(const CliffordElement& x, const CliffordElement& y)
    {
        return x.dim_ == y.dim_ && x.terms_ == y.terms_;
    }

    /// Reversal: multiplies a grade-k blade by (-1)^{k(k-1)/2}.
    CliffordElement star() const
    {
        CliffordElement r(dim_);
        for (const auto& [m, c] : terms_) {
            int k = std::popcount(m);
            r.terms_.emplace(m, ((k * (k - 1) / 2) & 1) ? -c : c);
        }
        return r;
    }

    /// Grade involution ': multiplies a grade-k blade by (-1)^k.
    CliffordElement grade_involution() const
    {
        CliffordElement r(dim_);
        for (const auto& [m, c] : terms_)
            r.terms_.emplace(m, (std::popcount(m) & 1) ? -c : c);
        return r;
    }

    /// Conjugation: star of the grade involution.
    CliffordElement conjugate() const { return grade_involution().star(); }

    /// Debug rendering such as "1/2 + (-1/2)√2·e1e3".
    std::string str() const
    {
        if (terms_.empty())
            return "0";
        std::string s;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Blade b(dim_, m);
            std::string t;
            if (m == 0)
                t = c.str();
            else if (c == S(1))
                t = b.str();
            else if (c == S(-1))
                t = "-" + b.str();
            else
                t = c.str() + "·" + b.str();
            if (!first)
                s += t[0] == '-' ? " - " + t.substr(1) : " + " + t;
            else
                s += t;
            first = false;
        }
        return s;
    }

private:
    static int check_dim(int n)
    {
        if (n < 1 || n > max_dimension)
            throw DimensionError("dimension " + std::to_string(n) + " outside 1.." + std::to_string(max_dimension));
        return n;
    }
    void same_dim(const CliffordElement& o) const
    {
        if (dim_ != o.dim_)
            throw DimensionError("operands in C_" + std::to_string(dim_) + " and C_" + std::to_string(o.dim_));
    }

    int dim_ = 1;
    term_map terms_;
};

template <class S>
CliffordElement<S> mul(const CliffordElement<S>& x, const CliffordElement<S>& y) { return x * y; }
template <class S>
CliffordElement<S> add(const CliffordElement<S>& x, const CliffordElement<S>& y) { return x + y; }
template <class S>
CliffordElement<S> scale(const S& c, const CliffordElement<S>& x) { return x.scaled(c); }
template <class S>
CliffordElement<S> star(const CliffordElement<S>& x) { return x.star(); }
template <class S>
CliffordElement<S> grade_involution(const CliffordElement<S>& x) { return x.grade_involution(); }
template <class S>
CliffordElement<S> conjugate(const CliffordElement<S>& x) { return x.conjugate(); }

/// Grade-1 element sum v_i e_i.
template <class S>
CliffordElement<S> vector_embed(const std::vector<S>& v, int n)
{
    if (static_cast<int>(v.size()) != n)
        throw DimensionError("vector of length " + std::to_string(v.size()) + " in C_" + std::to_string(n));
    CliffordElement<S> x(n);
    for (int i = 0; i < n; ++i)
        x.add_term(1u << i, v[i]);
    return x;
}

/// Coordinates of a purely grade-1 element.
template <class S>
std::vector<S> vector_extract(const CliffordElement<S>& x)
{
    if (!x.is_vector())
        throw NonVectorError("element " + x.str() + " is not a vector");
    std::vector<S> v(x.dim());
    for (const auto& [m, c] : x.terms())
        v[std::countr_zero(m)] = c;
    return v;
}

} // namespace afspin
