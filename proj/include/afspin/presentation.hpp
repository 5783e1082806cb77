#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "afspin/errors.hpp"
#include "afspin/matrix.hpp"
#include "afspin/quadratic.hpp"

namespace afspin {

/// Integer polynomial in the declared parameters; monomials are sorted lists of parameter indices.
class ExponentExpr {
public:
    using Monomial = std::vector<int>;

    ExponentExpr() = default;
    ExponentExpr(long c) { if (c) terms_[{}] = c; }

    static ExponentExpr param(int i)
    {
        ExponentExpr e;
        e.terms_[{i}] = 1;
        return e;
    }

    /// Parses e.g. "2*k3", "-(k3*(1 + 2*l))", "k*k1 + k2 - 1" against the parameter names.
    static ExponentExpr parse(const std::string& text, const std::vector<std::string>& params)
    {
        Parser p{text, params, 0};
        ExponentExpr e = p.expr();
        p.skip();
        if (p.pos != text.size())
            throw ParseError("unexpected '" + text.substr(p.pos) + "' in exponent '" + text + "'");
        return e;
    }

    const std::map<Monomial, long>& terms() const { return terms_; }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
    bool is_affine() const
    {
        return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.size() <= 1; });
    }
    long constant() const
    {
        auto it = terms_.find({});
        return it == terms_.end() ? 0 : it->second;
    }

    long evaluate(const std::vector<long>& values) const
    {
        long s = 0;
        for (const auto& [mono, c] : terms_) {
            long t = c;
            for (int i : mono) {
                if (i >= static_cast<int>(values.size()))
                    throw InvariantViolation("exponent refers to parameter " + std::to_string(i) + " without a value");
                t *= values[i];
            }
            s += t;
        }
        return s;
    }

    friend ExponentExpr operator+(const ExponentExpr& a, const ExponentExpr& b)
    {
        ExponentExpr r = a;
        for (const auto& [m, c] : b.terms_)
            r.add(m, c);
        return r;
    }
    friend ExponentExpr operator-(const ExponentExpr& a) { return a * ExponentExpr(-1); }
    friend ExponentExpr operator-(const ExponentExpr& a, const ExponentExpr& b) { return a + (-b); }
    friend ExponentExpr operator*(const ExponentExpr& a, const ExponentExpr& b)
    {
        ExponentExpr r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = ma;
                m.insert(m.end(), mb.begin(), mb.end());
                std::sort(m.begin(), m.end());
                r.add(m, ca * cb);
            }
        return r;
    }
    friend bool operator==(const ExponentExpr& a, const ExponentExpr& b) { return a.terms_ == b.terms_; }

    std::string str(const std::vector<std::string>& params) const
    {
        if (terms_.empty())
            return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            long a = c < 0 ? -c : c;
            s += s.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
            std::string mono;
            for (int i : m)
                mono += (mono.empty() ? "" : "*") + params.at(i);
            if (mono.empty())
                s += std::to_string(a);
            else
                s += (a == 1 ? "" : std::to_string(a) + "*") + mono;
        }
        return s;
    }

private:
    void add(const Monomial& m, long c)
    {
        long& v = terms_[m];
        v += c;
        if (v == 0)
            terms_.erase(m);
    }

    struct Parser {
        const std::string& s;
        const std::vector<std::string>& params;
        std::size_t pos;

        void skip()
        {
            while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
                ++pos;
        }
        bool eat(char c)
        {
            skip();
            if (pos < s.size() && s[pos] == c) {
                ++pos;
                return true;
            }
            return false;
        }
        ExponentExpr expr()
        {
            ExponentExpr e = term();
            for (;;) {
                if (eat('+'))
                    e = e + term();
                else if (eat('-'))
                    e = e - term();
                else
                    return e;
            }
        }
        ExponentExpr term()
        {
            ExponentExpr e = factor();
            while (eat('*'))
                e = e * factor();
            return e;
        }
        ExponentExpr factor()
        {
            skip();
            if (eat('-'))
                return -factor();
            if (eat('+'))
                return factor();
            if (eat('(')) {
                ExponentExpr e = expr();
                if (!eat(')'))
                    throw ParseError("missing ')' in exponent '" + s + "'");
                return e;
            }
            if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                std::size_t end = pos;
                while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end])))
                    ++end;
                long v = std::stol(s.substr(pos, end - pos));
                pos = end;
                return ExponentExpr(v);
            }
            if (pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
                std::size_t end = pos;
                while (end < s.size() && (std::isalnum(static_cast<unsigned char>(s[end])) || s[end] == '_'))
                    ++end;
                std::string name = s.substr(pos, end - pos);
                pos = end;
                auto it = std::find(params.begin(), params.end(), name);
                if (it == params.end())
                    throw ParseError("unknown parameter '" + name + "' in exponent '" + s + "'");
                return param(static_cast<int>(it - params.begin()));
            }
            throw ParseError("malformed exponent '" + s + "'");
        }
    };

    std::map<Monomial, long> terms_;
};

enum class Role { lattice, holonomy };

struct GeneratorId {
    std::string name;
    Role role = Role::lattice;
};

struct Letter {
    int gen = 0;
    ExponentExpr exp;
};

using Word = std::vector<Letter>;

/// Word with integer exponents, zero exponents removed.
using IntWord = std::vector<std::pair<int, long>>;

inline Word inverse(const Word& w)
{
    Word r;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        r.push_back({it->gen, -it->exp});
    return r;
}

inline IntWord inverse(const IntWord& w)
{
    IntWord r;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        r.emplace_back(it->first, -it->second);
    return r;
}

/// Merges adjacent letters in the same generator and drops zero exponents.
inline IntWord reduce(const IntWord& w)
{
    IntWord r;
    for (const auto& [g, e] : w) {
        if (e == 0)
            continue;
        if (!r.empty() && r.back().first == g) {
            r.back().second += e;
            if (r.back().second == 0)
                r.pop_back();
        } else {
            r.emplace_back(g, e);
        }
    }
    return r;
}

struct Presentation {
    std::vector<GeneratorId> generators;
    std::vector<Word> relators;
    std::vector<std::string> parameters;

    int size() const { return static_cast<int>(generators.size()); }

    int index_of(const std::string& name) const
    {
        for (int i = 0; i < size(); ++i)
            if (generators[i].name == name)
                return i;
        throw NotFound("generator '" + name + "'");
    }

    std::vector<int> holonomy_generators() const
    {
        std::vector<int> out;
        for (int i = 0; i < size(); ++i)
            if (generators[i].role == Role::holonomy)
                out.push_back(i);
        return out;
    }

    IntWord evaluate(const Word& w, const std::vector<long>& params) const
    {
        IntWord r;
        for (const auto& l : w)
            r.emplace_back(l.gen, l.exp.evaluate(params));
        return reduce(r);
    }

    std::vector<IntWord> evaluated_relators(const std::vector<long>& params) const
    {
        if (params.size() != parameters.size())
            throw InvariantViolation("expected " + std::to_string(parameters.size()) + " parameter values, got " +
                                     std::to_string(params.size()));
        std::vector<IntWord> out;
        for (const auto& r : relators)
            out.push_back(evaluate(r, params));
        return out;
    }

    std::string word_str(const IntWord& w) const
    {
        if (w.empty())
            return "1";
        std::string s;
        for (const auto& [g, e] : w) {
            if (!s.empty())
                s += " ";
            s += generators[g].name;
            if (e != 1)
                s += "^" + std::to_string(e);
        }
        return s;
    }

    std::string word_str(const Word& w) const
    {
        if (w.empty())
            return "1";
        std::string s;
        for (const auto& l : w) {
            if (!s.empty())
                s += " ";
            s += generators[l.gen].name;
            if (!(l.exp == ExponentExpr(1))) {
                std::string x = l.exp.str(parameters);
                s += "^" + (l.exp.is_constant() && l.exp.constant() >= 0 ? x : "(" + x + ")");
            }
        }
        return s;
    }
};

/// Entry a + b*sqrt(d) of an orthogonal matrix, stored independently of the field.
struct QuadraticEntry {
    Rational a;
    Rational b;
};

/// Orthogonal form nu of the holonomy: matrices over Q(sqrt field), field 2 meaning entries in Q(sqrt2).
struct OrthogonalForm {
    int field = 2;
    std::map<int, std::vector<std::vector<QuadraticEntry>>> entries;

    template <class S>
    Matrix<S> matrix(int gen, int n) const
    {
        if (S::radicand != field && !is_rational())
            throw UnsupportedScalar("orthogonal form lives in Q(sqrt " + std::to_string(field) + ")");
        auto it = entries.find(gen);
        if (it == entries.end())
            return Matrix<S>::identity(n);
        Matrix<S> m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m(i, j) = S(it->second[i][j].a, it->second[i][j].b);
        return m;
    }

    bool is_rational() const
    {
        for (const auto& [g, rows] : entries)
            for (const auto& r : rows)
                for (const auto& x : r)
                    if (!x.b.is_zero())
                        return false;
        return true;
    }
};

/// One family of almost-Bieberbach groups: presentation, integral holonomy and orthogonal form.
struct AlmostBieberbachRecord {
    std::string family;
    std::string holonomy_group;
    int nilpotency_class = 2;
    std::string source;
    bool orientable = true;
    int dimension = 4;
    Presentation presentation;
    std::map<int, IntMatrix> holonomy;
    std::optional<OrthogonalForm> orthogonal;
    std::vector<std::vector<long>> parameter_sets;
    std::shared_ptr<AlmostBieberbachRecord> sylow_pullback;

    IntMatrix theta(int gen) const
    {
        auto it = holonomy.find(gen);
        return it == holonomy.end() ? IntMatrix::identity(dimension) : it->second;
    }

    /// theta of an integer word, lattice letters acting trivially.
    IntMatrix theta(const IntWord& w) const
    {
        IntMatrix m = IntMatrix::identity(dimension);
        for (const auto& [g, e] : w) {
            IntMatrix t = theta(g);
            if (e < 0)
                t = t.unimodular_inverse();
            for (long k = 0; k < (e < 0 ? -e : e); ++k)
                m = m * t;
        }
        return m;
    }
};

/// Every parameter reduced to {0, 1}.
inline std::vector<long> reduce_params_mod2(const std::vector<long>& params)
{
    std::vector<long> r;
    for (long p : params)
        r.push_back(((p % 2) + 2) % 2);
    return r;
}

inline std::vector<long> reduce_params_mod2(const AlmostBieberbachRecord& rec, const std::vector<long>& params)
{
    if (params.size() != rec.presentation.parameters.size())
        throw InvariantViolation("family " + rec.family + " takes " +
                                 std::to_string(rec.presentation.parameters.size()) + " parameters");
    return reduce_params_mod2(params);
}

} // namespace afspin
