#pragma once

#include <memory>
#include <string>
#include <vector>

#include "afspin/coset.hpp"
#include "afspin/holonomy.hpp"
#include "afspin/lift.hpp"

namespace afspin {

/// Relators of the holonomy group: the evaluated relators with every lattice letter deleted.
inline std::vector<IntWord> holonomy_relators(const AlmostBieberbachRecord& rec, const std::vector<long>& params,
                                              std::vector<int>& holonomy_index)
{
    const Presentation& p = rec.presentation;
    holonomy_index.assign(p.size(), -1);
    int k = 0;
    for (int g : p.holonomy_generators())
        holonomy_index[g] = k++;
    std::vector<IntWord> out;
    for (const auto& r : p.evaluated_relators(params)) {
        IntWord w;
        for (const auto& [g, e] : r)
            if (holonomy_index[g] >= 0)
                w.emplace_back(holonomy_index[g], e);
        w = reduce(w);
        if (!w.empty())
            out.push_back(w);
    }
    return out;
}

/// Orthogonal matrix of a holonomy word, when every generator's orthogonal form is rational.
inline std::optional<IntMatrix> rational_orthogonal(const AlmostBieberbachRecord& rec, const IntWord& w)
{
    IntMatrix m = IntMatrix::identity(rec.dimension);
    for (const auto& [g, e] : w) {
        IntMatrix x = IntMatrix::identity(rec.dimension);
        if (rec.orthogonal) {
            auto it = rec.orthogonal->entries.find(g);
            if (it != rec.orthogonal->entries.end())
                for (int i = 0; i < rec.dimension; ++i)
                    for (int j = 0; j < rec.dimension; ++j) {
                        const QuadraticEntry& q = it->second[i][j];
                        if (!q.b.is_zero() || !q.a.is_integer())
                            return std::nullopt;
                        x(i, j) = q.a.to_long();
                    }
        } else {
            x = rec.theta(g);
        }
        if (e < 0)
            x = x.transpose();
        for (long k = 0; k < (e < 0 ? -e : e); ++k)
            m = m * x;
    }
    return m;
}

/// Signed-permutation orthogonal form on the Sylow generators: the record's own orthogonal
/// form when it restricts to signed permutations, else theta, else a search.
inline std::vector<IntMatrix> sylow_orthogonal_form(const AlmostBieberbachRecord& rec, const FiniteMatrixGroup& g,
                                                    const SylowSubgroup& s)
{
    std::vector<IntMatrix> theta, nu;
    bool nu_ok = true;
    for (std::size_t i = 0; i < s.generators.size(); ++i) {
        theta.push_back(g.elements[s.generators[i]]);
        auto m = rational_orthogonal(rec, s.generator_words[i]);
        bool sp = false;
        if (m) {
            try {
                SignedPermMatrix::from_matrix(*m);
                sp = true;
            } catch (const NotSignedPerm&) {
            }
        }
        nu_ok = nu_ok && sp;
        if (sp)
            nu.push_back(*m);
    }
    if (nu_ok && defines_homomorphism(theta, nu))
        return nu;
    auto found = signed_perm_form(theta);
    if (!found)
        throw UnsupportedScalar("no signed-permutation form for the Sylow 2-subgroup of family " + rec.family);
    std::vector<IntMatrix> out;
    for (const auto& p : *found)
        out.push_back(p.to_matrix<long>());
    return out;
}

/// Record for the preimage of a Sylow 2-subgroup of the holonomy, at fixed parameters.
inline AlmostBieberbachRecord sylow_pullback(const AlmostBieberbachRecord& rec, const std::vector<long>& params)
{
    FiniteMatrixGroup g = matrix_group_closure(rec);
    SylowSubgroup s = sylow2_subgroup(g);

    std::vector<int> hidx;
    std::vector<IntWord> frels = holonomy_relators(rec, params, hidx);
    std::vector<IntWord> fsub;
    for (const auto& w : s.generator_words) {
        IntWord v;
        for (const auto& [gen, e] : w)
            v.emplace_back(hidx[gen], e);
        fsub.push_back(v);
    }
    int fgens = static_cast<int>(rec.presentation.holonomy_generators().size());
    CosetTable ft = coset_enumerate(fgens, frels, fsub);
    if (ft.index() != s.index)
        throw InvariantViolation("coset enumeration gives index " + std::to_string(ft.index()) + " for a Sylow " +
                                 "subgroup of index " + std::to_string(s.index) + " in family " + rec.family);

    // The lattice acts trivially on the cosets.
    const Presentation& p = rec.presentation;
    CosetTable action{p.size(), std::vector<std::vector<int>>(ft.index(), std::vector<int>(2 * p.size()))};
    for (int c = 0; c < ft.index(); ++c)
        for (int gen = 0; gen < p.size(); ++gen) {
            action.table[c][2 * gen] = hidx[gen] >= 0 ? ft.table[c][2 * hidx[gen]] : c;
            action.table[c][2 * gen + 1] = hidx[gen] >= 0 ? ft.table[c][2 * hidx[gen] + 1] : c;
        }
    SchreierPresentation sp = reidemeister_schreier(p, p.evaluated_relators(params), action);

    std::vector<IntMatrix> sylow_theta;
    for (int x : s.generators)
        sylow_theta.push_back(g.elements[x]);
    std::vector<IntMatrix> sylow_nu = sylow_orthogonal_form(rec, g, s);
    auto pairs = detail::pair_closure(sylow_theta, sylow_nu);
    auto nu_of = [&](const IntMatrix& theta) {
        if (theta.is_identity())
            return IntMatrix::identity(rec.dimension);
        for (const auto& [t, n] : pairs)
            if (t == theta)
                return n;
        throw InvariantViolation("Schreier generator of family " + rec.family + " leaves the Sylow subgroup");
    };

    std::vector<IntWord> words = sp.parent_words;
    Presentation child = sp.presentation;
    if (s.index > 1)
        tietze_eliminate(child, words);

    AlmostBieberbachRecord out;
    out.family = rec.family + "/Syl2";
    out.nilpotency_class = rec.nilpotency_class;
    out.source = "Sylow 2-subgroup pullback of family " + rec.family;
    out.orientable = rec.orientable;
    out.dimension = rec.dimension;
    out.presentation = child;
    OrthogonalForm nu;
    nu.field = 2;
    std::vector<IntMatrix> child_theta;
    for (int i = 0; i < child.size(); ++i) {
        IntMatrix t = rec.theta(words[i]);
        IntMatrix n = nu_of(t);
        out.presentation.generators[i].role = t.is_identity() ? Role::lattice : Role::holonomy;
        if (t.is_identity())
            continue;
        out.holonomy[i] = t;
        child_theta.push_back(t);
        std::vector<std::vector<QuadraticEntry>> rows(rec.dimension, std::vector<QuadraticEntry>(rec.dimension));
        for (int r = 0; r < rec.dimension; ++r)
            for (int c = 0; c < rec.dimension; ++c)
                rows[r][c] = {Rational(n(r, c)), Rational(0)};
        nu.entries[i] = rows;
    }
    out.orthogonal = nu;
    out.holonomy_group = child_theta.empty() ? "1" : identify_group(closure_of({}, child_theta, rec.dimension).table).id;
    return out;
}

/// Existence from the Sylow pullback, count from the number of homomorphisms to {+-1}.
inline LiftResult sylow_strategy(const AlmostBieberbachRecord& rec, const std::vector<long>& params)
{
    if (!rec.orientable)
        throw NonOrientable("family " + rec.family + " is not orientable");
    AlmostBieberbachRecord child = rec.sylow_pullback ? *rec.sylow_pullback : sylow_pullback(rec, params);
    bool same_generators = child.presentation.size() == rec.presentation.size() &&
                           sylow2_subgroup(matrix_group_closure(rec)).index == 1;
    LiftResult c = enumerate_lifts_in<QSqrt2>(child, std::vector<long>(child.presentation.parameters.size(), 0));
    LiftResult r;
    r.exists = c.exists;
    r.count = c.exists ? 1L << abelianization_mod2_rank(rec.presentation, params) : 0;
    if (same_generators)
        r.valid_assignments = c.valid_assignments;
    r.strategy = Strategy::sylow;
    r.parallelizable = r.exists && rec.dimension == 4;
    return r;
}

inline bool is_two_group(const std::string& holonomy_group)
{
    int n = character_table(holonomy_group).order;
    return (n & (n - 1)) == 0;
}

/// Direct enumeration for 2-group holonomy, the Sylow strategy otherwise.
inline LiftResult lift(const AlmostBieberbachRecord& rec, const std::vector<long>& params)
{
    return is_two_group(rec.holonomy_group) ? enumerate_lifts(rec, params) : sylow_strategy(rec, params);
}

} // namespace afspin
