#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "afspin/character.hpp"
#include "afspin/group.hpp"
#include "afspin/presentation.hpp"
#include "afspin/spin.hpp"

namespace afspin {

/// A record is orientable exactly when every holonomy matrix lies in SL(n, Z).
inline bool orientability(const AlmostBieberbachRecord& rec)
{
    for (const auto& [g, m] : rec.holonomy)
        if (m.det() != 1)
            return false;
    return true;
}

/// Image of the integral holonomy representation, closed by breadth-first search.
struct FiniteMatrixGroup {
    /// Presentation indices of the holonomy generators, in declaration order.
    std::vector<int> generators;
    std::vector<IntMatrix> generator_matrices;
    std::vector<IntMatrix> elements;
    /// Shortest positive word for each element, as positions in `generators`.
    std::vector<std::vector<int>> words;
    CayleyTable table;

    int order() const { return static_cast<int>(elements.size()); }

    int index_of(const IntMatrix& m) const
    {
        auto it = std::find(elements.begin(), elements.end(), m);
        if (it == elements.end())
            throw NotFound("matrix is not in the holonomy group:\n" + matrix_str(m));
        return static_cast<int>(it - elements.begin());
    }

    /// Word of an element in presentation generator indices.
    IntWord word(int element) const
    {
        IntWord w;
        for (int pos : words[element])
            w.emplace_back(generators[pos], 1);
        return reduce(w);
    }
};

inline FiniteMatrixGroup closure_of(const std::vector<int>& generators, const std::vector<IntMatrix>& mats, int n)
{
    auto mul = [](const IntMatrix& a, const IntMatrix& b) { return a * b; };
    auto key = [](const IntMatrix& m) { return m.data(); };
    auto c = bfs_closure(IntMatrix::identity(n), mats, mul, key);
    FiniteMatrixGroup g{generators, mats, std::move(c.elements), std::move(c.words), {}};
    g.table = cayley_table(g.elements, mul, key);
    return g;
}

/// Closure of the holonomy matrices; faithfulness is checked against the named group.
inline FiniteMatrixGroup matrix_group_closure(const AlmostBieberbachRecord& rec)
{
    std::vector<int> gens = rec.presentation.holonomy_generators();
    std::vector<IntMatrix> mats;
    for (int g : gens)
        mats.push_back(rec.theta(g));
    FiniteMatrixGroup g = closure_of(gens, mats, rec.dimension);
    int expected = character_table(rec.holonomy_group).order;
    if (g.order() != expected)
        throw InconsistentRecord("holonomy matrices of family " + rec.family + " generate a group of order " +
                                 std::to_string(g.order()) + ", but " + rec.holonomy_group + " has order " +
                                 std::to_string(expected));
    std::string id = identify_group(g.table).id;
    if (id != rec.holonomy_group)
        throw InconsistentRecord("holonomy matrices of family " + rec.family + " generate " + id + ", not " +
                                 rec.holonomy_group);
    return g;
}

/// Element of the holonomy group reached by a word in named generators.
inline int evaluate_class_word(const FiniteMatrixGroup& g, const AlmostBieberbachRecord& rec, const ClassWord& w)
{
    IntWord iw;
    for (const auto& [name, e] : w)
        iw.emplace_back(rec.presentation.index_of(name), e);
    return g.index_of(rec.theta(iw));
}

/// Trace of the holonomy representation on each conjugacy class of its image.
struct ClassFunction {
    std::vector<std::vector<int>> classes;
    std::vector<long> values;
};

inline ClassFunction trace_character(const FiniteMatrixGroup& g)
{
    ClassFunction f;
    f.classes = g.table.conjugacy_classes();
    for (const auto& cls : f.classes) {
        long t = g.elements[cls.front()].trace();
        for (int x : cls)
            if (g.elements[x].trace() != t)
                throw InvariantViolation("trace is not constant on a conjugacy class");
        f.values.push_back(t);
    }
    return f;
}

inline ClassFunction trace_character(const AlmostBieberbachRecord& rec)
{
    return trace_character(matrix_group_closure(rec));
}

/// Character values on the columns of a table, after checking that the columns are the classes.
inline std::vector<long> character_on_table(const AlmostBieberbachRecord& rec, const FiniteMatrixGroup& g,
                                            const CharacterTable& t)
{
    ClassFunction f = trace_character(g);
    std::vector<int> class_of(g.order(), -1);
    for (std::size_t c = 0; c < f.classes.size(); ++c)
        for (int x : f.classes[c])
            class_of[x] = static_cast<int>(c);
    if (f.classes.size() != t.classes.size())
        throw InconsistentRecord(rec.holonomy_group + " table has " + std::to_string(t.classes.size()) +
                                 " columns, the holonomy group of family " + rec.family + " has " +
                                 std::to_string(f.classes.size()) + " classes");
    std::vector<long> out;
    std::vector<bool> used(f.classes.size(), false);
    for (const auto& col : t.classes) {
        int c = class_of[evaluate_class_word(g, rec, col.word)];
        if (used[c] || static_cast<int>(f.classes[c].size()) != col.size)
            throw InconsistentRecord("column " + col.label + " of the " + t.group +
                                     " table does not match a conjugacy class of family " + rec.family);
        used[c] = true;
        out.push_back(f.values[c]);
    }
    return out;
}

/// Multiplicities of the irreducibles of the named group in the holonomy character.
inline std::vector<long> record_character(const AlmostBieberbachRecord& rec)
{
    const CharacterTable& t = character_table(rec.holonomy_group);
    return decompose_character(character_on_table(rec, matrix_group_closure(rec), t), t);
}

namespace detail {

template <class T>
std::string pair_key(const Matrix<T>& a, const Matrix<T>& b)
{
    return matrix_str(a) + "|" + matrix_str(b);
}

/// Closure of generator pairs (a_i, b_i) under componentwise product.
template <class T>
std::vector<std::pair<Matrix<T>, Matrix<T>>> pair_closure(const std::vector<Matrix<T>>& a,
                                                          const std::vector<Matrix<T>>& b)
{
    if (a.size() != b.size())
        throw InconsistentRecord("representations have " + std::to_string(a.size()) + " and " +
                                 std::to_string(b.size()) + " generators");
    if (a.empty())
        return {};
    int n = a.front().size(), m = b.front().size();
    using P = std::pair<Matrix<T>, Matrix<T>>;
    std::vector<P> gens;
    for (std::size_t i = 0; i < a.size(); ++i)
        gens.emplace_back(a[i], b[i]);
    auto c = bfs_closure(
        P(Matrix<T>::identity(n), Matrix<T>::identity(m)), gens,
        [](const P& x, const P& y) { return P(x.first * y.first, x.second * y.second); },
        [](const P& x) { return pair_key(x.first, x.second); });
    return c.elements;
}

template <class T>
std::size_t distinct_firsts(const std::vector<std::pair<Matrix<T>, Matrix<T>>>& pairs)
{
    std::vector<std::string> keys;
    for (const auto& p : pairs)
        keys.push_back(matrix_str(p.first));
    std::sort(keys.begin(), keys.end());
    return static_cast<std::size_t>(std::unique(keys.begin(), keys.end()) - keys.begin());
}

} // namespace detail

/// Traces agree on every word in the matched generators; words are exhausted by closing the pairs.
template <class T>
bool characters_equal(const std::vector<Matrix<T>>& a, const std::vector<Matrix<T>>& b)
{
    for (const auto& [x, y] : detail::pair_closure(a, b))
        if (!(x.trace() == y.trace()))
            return false;
    return true;
}

/// True when a_i -> b_i extends to a well-defined homomorphism from <a> onto <b>.
template <class T>
bool defines_homomorphism(const std::vector<Matrix<T>>& a, const std::vector<Matrix<T>>& b)
{
    auto pairs = detail::pair_closure(a, b);
    return a.empty() || pairs.size() == detail::distinct_firsts(pairs);
}

/// A Sylow 2-subgroup of the holonomy image, with generators as words in the presentation.
struct SylowSubgroup {
    int index = 1;
    std::vector<int> generators;
    std::vector<IntWord> generator_words;
};

inline SylowSubgroup sylow2_subgroup(const FiniteMatrixGroup& g)
{
    int order = g.order(), two = 1;
    while (order % (two * 2) == 0)
        two *= 2;
    SylowSubgroup s;
    s.index = order / two;
    if (s.index == 1) {
        for (std::size_t i = 0; i < g.generators.size(); ++i) {
            s.generators.push_back(g.index_of(g.generator_matrices[i]));
            s.generator_words.push_back({{g.generators[i], 1}});
        }
        return s;
    }
    if (two == 1)
        return s;
    auto accept = [&](std::vector<int> gens) {
        s.generators = gens;
        for (int x : gens)
            s.generator_words.push_back(g.word(x));
    };
    for (int x = 1; x < order; ++x)
        if (g.table.generated_order({x}) == two) {
            accept({x});
            return s;
        }
    for (int x = 1; x < order; ++x)
        for (int y = x + 1; y < order; ++y)
            if (g.table.generated_order({x, y}) == two) {
                accept({x, y});
                return s;
            }
    throw InvariantViolation("no Sylow 2-subgroup generated by at most two elements");
}

/// Signed-permutation matrices equivalent to the given integral ones, generator by generator.
inline std::optional<std::vector<SignedPermMatrix>> signed_perm_form(const std::vector<IntMatrix>& theta)
{
    std::vector<SignedPermMatrix> direct;
    try {
        for (const auto& m : theta)
            direct.push_back(SignedPermMatrix::from_matrix(m));
        return direct;
    } catch (const NotSignedPerm&) {
    }
    if (theta.empty() || theta.size() > 2)
        return std::nullopt;
    int n = theta.front().size();
    auto so = all_signed_perms(n, true);
    std::vector<std::size_t> idx(theta.size(), 0);
    for (;;) {
        std::vector<IntMatrix> cand;
        for (std::size_t i = 0; i < idx.size(); ++i)
            cand.push_back(so[idx[i]].to_matrix<long>());
        if (defines_homomorphism(theta, cand) && defines_homomorphism(cand, theta) && characters_equal(theta, cand)) {
            std::vector<SignedPermMatrix> out;
            for (std::size_t i = 0; i < idx.size(); ++i)
                out.push_back(so[idx[i]]);
            return out;
        }
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == so.size())
            idx[k++] = 0;
        if (k == idx.size())
            return std::nullopt;
    }
}

} // namespace afspin
