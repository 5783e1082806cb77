#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "afspin/errors.hpp"

namespace afspin {

constexpr std::size_t default_closure_bound = 4096;

/// Elements of a finite group generated by a list, in breadth-first order from the identity,
/// each with a shortest word (generator indices) reaching it by right multiplication.
template <class E>
struct Closure {
    std::vector<E> elements;
    std::vector<std::vector<int>> words;
};

template <class E, class Mul, class Key>
Closure<E> bfs_closure(const E& identity, const std::vector<E>& gens, Mul mul, Key key,
                       std::size_t bound = default_closure_bound)
{
    Closure<E> c;
    std::map<decltype(key(identity)), std::size_t> seen;
    c.elements.push_back(identity);
    c.words.emplace_back();
    seen.emplace(key(identity), 0);
    for (std::size_t head = 0; head < c.elements.size(); ++head) {
        for (std::size_t g = 0; g < gens.size(); ++g) {
            E y = mul(c.elements[head], gens[g]);
            auto k = key(y);
            if (seen.count(k))
                continue;
            if (c.elements.size() >= bound)
                throw ClosureBoundExceeded("closure exceeds " + std::to_string(bound) + " elements");
            seen.emplace(std::move(k), c.elements.size());
            std::vector<int> w = c.words[head];
            w.push_back(static_cast<int>(g));
            c.elements.push_back(std::move(y));
            c.words.push_back(std::move(w));
        }
    }
    return c;
}

/// Abstract finite group given by its multiplication table; element 0 is the identity.
struct CayleyTable {
    std::vector<std::vector<int>> mul;
    std::vector<int> inv;

    int order() const { return static_cast<int>(mul.size()); }
    int product(int a, int b) const { return mul[a][b]; }

    int element_order(int a) const
    {
        int k = 1;
        for (int x = a; x != 0; x = mul[x][a])
            ++k;
        return k;
    }

    int power(int a, long e) const
    {
        if (e < 0) {
            a = inv[a];
            e = -e;
        }
        int r = 0;
        for (long i = 0; i < e; ++i)
            r = mul[r][a];
        return r;
    }

    bool is_abelian() const
    {
        for (int a = 0; a < order(); ++a)
            for (int b = 0; b < a; ++b)
                if (mul[a][b] != mul[b][a])
                    return false;
        return true;
    }

    int center_size() const
    {
        int z = 0;
        for (int a = 0; a < order(); ++a) {
            bool central = true;
            for (int b = 0; b < order() && central; ++b)
                central = mul[a][b] == mul[b][a];
            z += central;
        }
        return z;
    }

    /// Sorted list of element orders.
    std::vector<int> order_profile() const
    {
        std::vector<int> p;
        for (int a = 0; a < order(); ++a)
            p.push_back(element_order(a));
        std::sort(p.begin(), p.end());
        return p;
    }

    /// Size of the subgroup generated by the given elements.
    int generated_order(const std::vector<int>& gens) const
    {
        std::vector<char> in(order(), 0);
        std::vector<int> list{0};
        in[0] = 1;
        for (std::size_t h = 0; h < list.size(); ++h)
            for (int g : gens) {
                int y = mul[list[h]][g];
                if (!in[y]) {
                    in[y] = 1;
                    list.push_back(y);
                }
            }
        return static_cast<int>(list.size());
    }

    /// Conjugacy classes, each sorted, listed in order of their smallest member.
    std::vector<std::vector<int>> conjugacy_classes() const
    {
        std::vector<int> cls(order(), -1);
        std::vector<std::vector<int>> out;
        for (int a = 0; a < order(); ++a) {
            if (cls[a] >= 0)
                continue;
            std::vector<int> c;
            for (int g = 0; g < order(); ++g) {
                int y = mul[mul[inv[g]][a]][g];
                if (cls[y] < 0) {
                    cls[y] = static_cast<int>(out.size());
                    c.push_back(y);
                }
            }
            std::sort(c.begin(), c.end());
            out.push_back(c);
        }
        return out;
    }
};

/// Builds the multiplication table of a closure (the identity must be element 0).
template <class E, class Mul, class Key>
CayleyTable cayley_table(const std::vector<E>& elements, Mul mul, Key key)
{
    std::map<decltype(key(elements[0])), int> index;
    for (std::size_t i = 0; i < elements.size(); ++i)
        index.emplace(key(elements[i]), static_cast<int>(i));
    CayleyTable t;
    int n = static_cast<int>(elements.size());
    t.mul.assign(n, std::vector<int>(n));
    t.inv.assign(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto it = index.find(key(mul(elements[a], elements[b])));
            if (it == index.end())
                throw InvariantViolation("element set is not closed under multiplication");
            t.mul[a][b] = it->second;
            if (it->second == 0)
                t.inv[a] = b;
        }
    return t;
}

/// Symbolic name of an abstract finite group.
struct GroupName {
    std::string id;

    /// Typeset form with subscripts, e.g. "C₃⋊Q₈".
    std::string pretty() const
    {
        static const char* sub[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
        static const char* sup[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
        if (id.find('(') != std::string::npos)
            return id;
        std::string s;
        bool exponent = false;
        for (char ch : id) {
            bool digit = ch >= '0' && ch <= '9';
            if (ch == '^')
                exponent = true;
            else if (digit && exponent)
                s += sup[ch - '0'];
            else if (digit && id != "1")
                s += sub[ch - '0'];
            else if (ch == ':')
                s += "⋊";
            else if (ch == 'x')
                s += "×";
            else
                s += ch;
            if (!digit && ch != '^')
                exponent = false;
        }
        return s;
    }

    friend bool operator==(const GroupName& a, const GroupName& b) { return a.id == b.id; }
};

namespace detail {

/// Relator over two generators: list of (generator 0 or 1, exponent).
using TwoGenWord = std::vector<std::pair<int, int>>;

inline int eval_two_gen(const CayleyTable& t, int a, int b, const TwoGenWord& w)
{
    int r = 0;
    for (auto [g, e] : w)
        r = t.mul[r][t.power(g == 0 ? a : b, e)];
    return r;
}

/// True when some pair (a, b) generates the whole group and satisfies all relations lhs = rhs.
inline bool has_two_gen_presentation(const CayleyTable& t, const std::vector<std::pair<TwoGenWord, TwoGenWord>>& rels)
{
    for (int a = 0; a < t.order(); ++a)
        for (int b = 0; b < t.order(); ++b) {
            bool ok = true;
            for (const auto& [l, r] : rels)
                if (eval_two_gen(t, a, b, l) != eval_two_gen(t, a, b, r)) {
                    ok = false;
                    break;
                }
            if (ok && t.generated_order({a, b}) == t.order())
                return true;
        }
    return false;
}

struct GroupProfile {
    const char* id;
    int order;
    bool abelian;
    std::vector<int> orders;  // multiplicity of element orders 1,2,3,...
    std::vector<std::pair<TwoGenWord, TwoGenWord>> presentation;
};

inline std::vector<int> order_counts(const std::vector<int>& profile)
{
    std::vector<int> c;
    for (int o : profile) {
        if (static_cast<int>(c.size()) < o)
            c.resize(o, 0);
        ++c[o - 1];
    }
    return c;
}

inline const std::vector<GroupProfile>& group_catalog()
{
    // element-order multiplicities indexed by order-1
    static const std::vector<GroupProfile> cat = {
        {"1", 1, true, {1}, {}},
        {"C2", 2, true, {1, 1}, {}},
        {"C3", 3, true, {1, 0, 2}, {}},
        {"C4", 4, true, {1, 1, 0, 2}, {}},
        {"C2^2", 4, true, {1, 3}, {}},
        {"C6", 6, true, {1, 1, 2, 0, 0, 2}, {}},
        {"S3", 6, false, {1, 3, 2}, {}},
        {"C8", 8, true, {1, 1, 0, 2, 0, 0, 0, 4}, {}},
        {"C4xC2", 8, true, {1, 3, 0, 4}, {}},
        {"C2^3", 8, true, {1, 7}, {}},
        {"D8", 8, false, {1, 5, 0, 2}, {}},
        {"Q8", 8, false, {1, 1, 0, 6}, {}},
        {"C12", 12, true, {1, 1, 2, 2, 0, 2, 0, 0, 0, 0, 0, 4}, {}},
        {"C6xC2", 12, true, {1, 3, 2, 0, 0, 6}, {}},
        {"A4", 12, false, {1, 3, 8}, {}},
        {"D12", 12, false, {1, 7, 2, 0, 0, 2}, {}},
        // a^3 = 1, x^-1 a x = a^-1, x^4 = 1
        {"C3:C4", 12, false, {1, 1, 2, 6, 0, 2},
         {{{{0, 3}}, {}}, {{{1, -1}, {0, 1}, {1, 1}}, {{0, -1}}}, {{{1, 4}}, {}}}},
        {"C16", 16, true, {1, 1, 0, 2, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0, 8}, {}},
        {"D16", 16, false, {1, 9, 0, 2, 0, 0, 0, 4}, {}},
        {"SD16", 16, false, {1, 5, 0, 6, 0, 0, 0, 4}, {}},
        // a^4 = b^2 = (ab)^2 = c with c^2 = 1
        {"Q16", 16, false, {1, 1, 0, 10, 0, 0, 0, 4},
         {{{{0, 4}}, {{1, 2}}}, {{{1, 2}}, {{0, 1}, {1, 1}, {0, 1}, {1, 1}}}, {{{0, 8}}, {}}}},
        {"C24", 24, true, {1, 1, 2, 2, 0, 2, 0, 4, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 8}, {}},
        {"SL(2,3)", 24, false, {1, 1, 8, 6, 0, 8}, {}},
        // a^6 = x^2 (order 12 a), x^-1 a x = a^-1
        {"C3:Q8", 24, false, {1, 1, 2, 14, 0, 2, 0, 0, 0, 0, 0, 4},
         {{{{0, 6}}, {{1, 2}}}, {{{1, -1}, {0, 1}, {1, 1}}, {{0, -1}}}, {{{0, 12}}, {}}}},
    };
    return cat;
}

} // namespace detail

/// Identifies a group from its order, commutativity and element-order profile, confirming
/// with a presentation search where the catalog lists one.
inline GroupName identify_group(const CayleyTable& t)
{
    std::vector<int> counts = detail::order_counts(t.order_profile());
    bool abelian = t.is_abelian();
    for (const auto& p : detail::group_catalog()) {
        if (p.order != t.order() || p.abelian != abelian || p.orders != counts)
            continue;
        if (!p.presentation.empty() && !detail::has_two_gen_presentation(t, p.presentation))
            continue;
        return GroupName{p.id};
    }
    std::string prof;
    for (std::size_t i = 0; i < counts.size(); ++i)
        if (counts[i])
            prof += " " + std::to_string(counts[i]) + "x" + std::to_string(i + 1);
    throw UnknownGroup("group of order " + std::to_string(t.order()) + (abelian ? ", abelian" : ", non-abelian") +
                       ", element orders" + prof);
}

} // namespace afspin
