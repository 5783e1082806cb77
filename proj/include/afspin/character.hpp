#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "afspin/cyclotomic.hpp"
#include "afspin/errors.hpp"

namespace afspin {

/// Word in the named holonomy generators of a catalog record, e.g. {{"beta", 1}, {"alpha", 1}}.
using ClassWord = std::vector<std::pair<std::string, int>>;

struct ClassColumn {
    std::string label;
    ClassWord word;
    int size = 1;
};

/// Irreducible complex characters of a holonomy group, one column per conjugacy class.
struct CharacterTable {
    std::string group;
    int order = 1;
    std::string presentation;
    std::optional<CycValue> xi;
    std::string xi_text;
    std::vector<ClassColumn> classes;
    std::vector<std::vector<CycValue>> chars;

    int degree(int i) const
    {
        const CycValue& d = chars[i][0];
        return static_cast<int>(d.coeff(0).to_long());
    }

    /// Printable form of a table entry using the symbols i and xi where they apply.
    std::string value_label(const CycValue& v) const
    {
        if (v.is_integer())
            return std::to_string(v.coeff(0).to_long());
        std::vector<std::pair<CycValue, std::string>> named = {{CycValue::i(), "i"}};
        if (xi) {
            named.emplace_back(*xi, "ξ");
            named.emplace_back(xi->conj(), "ξ̄");
        }
        for (const auto& [x, name] : named) {
            if (v == x)
                return name;
            if (v == -x)
                return "-" + name;
        }
        return v.str();
    }
};

namespace detail {

inline std::vector<CycValue> row(std::initializer_list<CycValue> v) { return std::vector<CycValue>(v); }

inline std::vector<CharacterTable> build_character_tables()
{
    const CycValue i = CycValue::i();
    std::vector<CharacterTable> out;

    out.push_back({"1", 1, "1", std::nullopt, "", {{"1", {}, 1}}, {row({1})}});

    out.push_back({"C2", 2, "⟨ā | ā² = 1⟩", std::nullopt, "",
                   {{"1", {}, 1}, {"ā", {{"alpha", 1}}, 1}},
                   {row({1, 1}), row({1, -1})}});

    out.push_back({"C2^2", 4, "⟨ā, b̄ | ā² = b̄² = [ā, b̄] = 1⟩", std::nullopt, "",
                   {{"1", {}, 1}, {"ā", {{"alpha", 1}}, 1}, {"b̄", {{"beta", 1}}, 1},
                    {"āb̄", {{"alpha", 1}, {"beta", 1}}, 1}},
                   {row({1, 1, 1, 1}), row({1, -1, 1, -1}), row({1, 1, -1, -1}), row({1, -1, -1, 1})}});

    out.push_back({"C4", 4, "⟨ā | ā⁴ = 1⟩", std::nullopt, "",
                   {{"1", {}, 1}, {"ā", {{"alpha", 1}}, 1}, {"ā²", {{"alpha", 2}}, 1}, {"ā³", {{"alpha", 3}}, 1}},
                   {row({1, 1, 1, 1}), row({1, -1, 1, -1}), row({1, i, -1, -i}), row({1, -i, -1, i})}});

    out.push_back({"D8", 8, "⟨ā, b̄ | ā⁴ = b̄² = (āb̄)² = 1⟩", std::nullopt, "",
                   {{"1", {}, 1}, {"b̄", {{"beta", 1}}, 2}, {"āb̄", {{"alpha", 1}, {"beta", 1}}, 2},
                    {"ā²", {{"alpha", 2}}, 1}, {"ā", {{"alpha", 1}}, 2}},
                   {row({1, 1, 1, 1, 1}), row({1, -1, 1, 1, -1}), row({1, 1, -1, 1, -1}), row({1, -1, -1, 1, 1}),
                    row({2, 0, 0, -2, 0})}});

    {
        CycValue xi = CycValue::omega();
        CycValue xb = xi.conj();
        out.push_back({"C3", 3, "⟨ā | ā³ = 1⟩", xi, "ξ = exp(2πi/3)",
                       {{"1", {}, 1}, {"ā", {{"alpha", 1}}, 1}, {"ā²", {{"alpha", 2}}, 1}},
                       {row({1, 1, 1}), row({1, xi, xb}), row({1, xb, xi})}});
    }

    // ā of order 2 and b̄ of order 3 in this presentation: b̄ is the catalog's alpha, ā its beta.
    out.push_back({"S3", 6, "⟨ā, b̄ | ā² = b̄³ = (āb̄)² = 1⟩", std::nullopt, "",
                   {{"1", {}, 1}, {"ā", {{"beta", 1}}, 3}, {"b̄", {{"alpha", 1}}, 2}},
                   {row({1, 1, 1}), row({1, -1, 1}), row({2, 0, -1})}});

    {
        // Columns are ordered 1, ā³, ā², ā⁵, ā⁴, ā so that every row is a homomorphism;
        // the natural order 1, ā, ..., ā⁵ would make χ3 non-multiplicative.
        CycValue xi = CycValue::omega2();
        CycValue xb = xi.conj();
        out.push_back({"C6", 6, "⟨ā | ā⁶ = 1⟩", xi, "ξ = exp(4πi/3)",
                       {{"1", {}, 1}, {"ā³", {{"alpha", 3}}, 1}, {"ā²", {{"alpha", 2}}, 1},
                        {"ā⁵", {{"alpha", 5}}, 1}, {"ā⁴", {{"alpha", 4}}, 1}, {"ā", {{"alpha", 1}}, 1}},
                       {row({1, 1, 1, 1, 1, 1}), row({1, -1, 1, -1, 1, -1}), row({1, -1, xi, -xi, xb, -xb}),
                        row({1, -1, xb, -xb, xi, -xi}), row({1, 1, xi, xi, xb, xb}), row({1, 1, xb, xb, xi, xi})}});
    }

    // ā is a reflection and b̄ a rotation of order 6: b̄ is the catalog's alpha, ā its beta.
    out.push_back({"D12", 12, "⟨ā, b̄ | ā² = b̄⁶ = (āb̄)² = 1⟩", std::nullopt, "",
                   {{"1", {}, 1}, {"ā", {{"beta", 1}}, 3}, {"b̄³", {{"alpha", 3}}, 1}, {"b̄²", {{"alpha", 2}}, 2},
                    {"āb̄", {{"beta", 1}, {"alpha", 1}}, 3}, {"b̄", {{"alpha", 1}}, 2}},
                   {row({1, 1, 1, 1, 1, 1}), row({1, -1, -1, 1, 1, -1}), row({1, -1, 1, 1, -1, 1}),
                    row({1, 1, -1, 1, -1, -1}), row({2, 0, -2, -1, 0, 1}), row({2, 0, 2, -1, 0, -1})}});
    return out;
}

} // namespace detail

/// The nine holonomy-group tables in a fixed order.
inline const std::vector<CharacterTable>& character_tables()
{
    static const std::vector<CharacterTable> tables = detail::build_character_tables();
    return tables;
}

inline const CharacterTable& character_table(const std::string& group)
{
    for (const auto& t : character_tables())
        if (t.group == group)
            return t;
    throw NotFound("character table for group '" + group + "'");
}

/// (1/|F|) sum over classes of size * a * conj(b).
inline CycValue inner_product(const std::vector<CycValue>& a, const std::vector<CycValue>& b,
                              const CharacterTable& t)
{
    CycValue s;
    for (std::size_t c = 0; c < t.classes.size(); ++c)
        s += CycValue(t.classes[c].size) * a[c] * b[c].conj();
    return s / Rational(t.order);
}

struct OrthogonalityReport {
    bool rows = true;
    bool columns = true;
    bool degrees = true;
    bool class_sizes = true;
    bool ok() const { return rows && columns && degrees && class_sizes; }
};

inline OrthogonalityReport check_orthogonality(const CharacterTable& t)
{
    OrthogonalityReport r;
    std::size_t k = t.chars.size();
    if (k != t.classes.size())
        r.rows = r.columns = false;
    for (std::size_t a = 0; a < k && r.rows; ++a)
        for (std::size_t b = 0; b < k; ++b)
            if (!(inner_product(t.chars[a], t.chars[b], t) == CycValue(a == b ? 1 : 0)))
                r.rows = false;
    for (std::size_t c = 0; c < t.classes.size() && r.columns; ++c)
        for (std::size_t d = 0; d < t.classes.size(); ++d) {
            CycValue s;
            for (std::size_t a = 0; a < k; ++a)
                s += t.chars[a][c] * t.chars[a][d].conj();
            CycValue expected = c == d ? CycValue(Rational(t.order, t.classes[c].size)) : CycValue(0);
            if (!(s == expected))
                r.columns = false;
        }
    long deg2 = 0;
    for (std::size_t a = 0; a < k; ++a)
        deg2 += static_cast<long>(t.degree(static_cast<int>(a))) * t.degree(static_cast<int>(a));
    r.degrees = deg2 == t.order;
    long sizes = 0;
    for (const auto& c : t.classes)
        sizes += c.size;
    r.class_sizes = sizes == t.order;
    return r;
}

/// Multiplicity of each irreducible in a class function given column by column.
inline std::vector<long> decompose_character(const std::vector<CycValue>& chi, const CharacterTable& t)
{
    if (chi.size() != t.classes.size())
        throw InvariantViolation("class function has " + std::to_string(chi.size()) + " values, table " + t.group +
                                 " has " + std::to_string(t.classes.size()) + " classes");
    std::vector<long> m;
    for (std::size_t a = 0; a < t.chars.size(); ++a) {
        CycValue x = inner_product(chi, t.chars[a], t);
        if (!x.is_integer() || x.coeff(0).sign() < 0)
            throw InconsistentRecord("multiplicity of χ" + std::to_string(a + 1) + " in " + t.group + " is " +
                                     x.str() + ", not a non-negative integer");
        m.push_back(x.coeff(0).to_long());
    }
    return m;
}

inline std::vector<long> decompose_character(const std::vector<long>& chi, const CharacterTable& t)
{
    std::vector<CycValue> v(chi.begin(), chi.end());
    return decompose_character(v, t);
}

/// "2χ1+χ3+χ4" style rendering; the zero character renders as "0".
inline std::string decomposition_str(const std::vector<long>& m)
{
    std::string s;
    for (std::size_t a = 0; a < m.size(); ++a) {
        if (m[a] == 0)
            continue;
        if (!s.empty())
            s += "+";
        if (m[a] != 1)
            s += std::to_string(m[a]);
        s += "χ" + std::to_string(a + 1);
    }
    return s.empty() ? "0" : s;
}

/// Markdown rendering of all tables, used for the reference file under docs/.
inline std::string character_tables_markdown()
{
    std::string s = "# Character tables of the holonomy groups\n\n"
                    "Generated by `afspin export tables` from the built-in constants in "
                    "`include/afspin/character.hpp`. Do not edit by hand.\n\n"
                    "Each column is a conjugacy class: its label in the abstract presentation, its size, "
                    "and the representative word in the catalog's generator names (`alpha`, `beta`).\n";
    for (const auto& t : character_tables()) {
        s += "\n## " + t.group + "\n\n";
        s += "Presentation: " + t.presentation + ", order " + std::to_string(t.order) + ".";
        if (!t.xi_text.empty())
            s += " Here " + t.xi_text + ".";
        s += "\n\n|    |";
        for (const auto& c : t.classes)
            s += " " + c.label + " |";
        s += "\n|---|";
        for (std::size_t c = 0; c < t.classes.size(); ++c)
            s += "---|";
        s += "\n| size |";
        for (const auto& c : t.classes)
            s += " " + std::to_string(c.size) + " |";
        s += "\n| word |";
        for (const auto& c : t.classes) {
            std::string w;
            for (const auto& [g, e] : c.word)
                w += (w.empty() ? "" : " ") + g + (e == 1 ? "" : "^" + std::to_string(e));
            s += " " + (w.empty() ? std::string("1") : w) + " |";
        }
        s += "\n";
        for (std::size_t a = 0; a < t.chars.size(); ++a) {
            s += "| χ" + std::to_string(a + 1) + " |";
            for (const auto& v : t.chars[a])
                s += " " + t.value_label(v) + " |";
            s += "\n";
        }
    }
    return s;
}

} // namespace afspin
