#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "afspin/presentation.hpp"
#include "afspin/spin.hpp"

namespace afspin {

/// Sign per generator, +1 or -1, in declaration order.
using SignAssignment = std::vector<int>;

enum class Strategy { direct, sylow };

inline const char* strategy_name(Strategy s) { return s == Strategy::direct ? "direct" : "sylow"; }

struct LiftResult {
    bool exists = false;
    long count = 0;
    std::vector<SignAssignment> valid_assignments;
    Strategy strategy = Strategy::direct;
    bool parallelizable = false;
};

/// Canonical preimage of every generator's orthogonal holonomy; lattice generators map to 1.
template <class S>
std::vector<SpinElement<S>> base_preimages(const AlmostBieberbachRecord& rec)
{
    int n = rec.dimension;
    std::vector<SpinElement<S>> base(rec.presentation.size(), SpinElement<S>::one(n));
    for (int g : rec.presentation.holonomy_generators()) {
        Matrix<S> m = rec.orthogonal ? rec.orthogonal->template matrix<S>(g, n) : to_field<S>(rec.theta(g));
        if (!(m.det() == S(1)))
            throw NotInSO("holonomy of " + rec.presentation.generators[g].name + " in family " + rec.family +
                          " has determinant -1");
        SignedPermMatrix p;
        bool signed_perm = true;
        try {
            p = SignedPermMatrix::from_matrix(m);
        } catch (const NotSignedPerm&) {
            signed_perm = false;
        }
        base[g] = signed_perm ? preimage_signed_perm<S>(p).first : preimage_general(m).first;
    }
    return base;
}

/// Product of (sign * base)^exponent over the letters of an evaluated word.
template <class S>
SpinElement<S> evaluate_word(const IntWord& w, const SignAssignment& signs, const std::vector<SpinElement<S>>& base)
{
    int n = base.empty() ? 4 : base.front().dim();
    SpinElement<S> r = SpinElement<S>::one(n);
    for (const auto& [g, e] : w) {
        SpinElement<S> x = signs[g] < 0 ? -base[g] : base[g];
        r = r * x.pow(e);
    }
    return r;
}

template <class S>
SpinElement<S> evaluate_word(const Word& w, const SignAssignment& signs, const std::vector<SpinElement<S>>& base,
                             const Presentation& p, const std::vector<long>& params)
{
    return evaluate_word(p.evaluate(w, params), signs, base);
}

/// Assignment number k in lexicographic order (+1 before -1, first generator most significant).
inline SignAssignment assignment_at(unsigned long k, int n)
{
    SignAssignment s(n);
    for (int i = 0; i < n; ++i)
        s[i] = (k >> (n - 1 - i)) & 1 ? -1 : 1;
    return s;
}

/// Tries all 2^|S| sign assignments against the relators using the given base preimages.
template <class S>
LiftResult enumerate_lifts_with(const AlmostBieberbachRecord& rec, const std::vector<long>& params,
                                const std::vector<SpinElement<S>>& base)
{
    const Presentation& p = rec.presentation;
    int n = p.size();
    if (n > 24)
        throw EnumerationBoundExceeded("2^" + std::to_string(n) + " sign assignments in family " + rec.family);
    std::vector<IntWord> rels = p.evaluated_relators(params);
    // x^e of each letter, reused by every assignment since (s x)^e = s^e x^e
    std::vector<std::vector<SpinElement<S>>> powers;
    for (std::size_t r = 0; r < rels.size(); ++r) {
        std::vector<SpinElement<S>> pw;
        for (const auto& [g, e] : rels[r])
            pw.push_back(base[g].pow(e));
        SpinElement<S> unsigned_value = SpinElement<S>::one(rec.dimension);
        for (const auto& x : pw)
            unsigned_value = unsigned_value * x;
        if (!unsigned_value.is_plus_one() && !unsigned_value.is_minus_one())
            throw InconsistentRecord("relator " + p.word_str(rels[r]) + " of family " + rec.family +
                                     " evaluates to " + unsigned_value.str() + ", not +-1");
        powers.push_back(std::move(pw));
    }
    LiftResult res;
    for (unsigned long k = 0; k < (1ul << n); ++k) {
        SignAssignment s = assignment_at(k, n);
        bool ok = true;
        for (std::size_t r = 0; r < rels.size() && ok; ++r) {
            SpinElement<S> v = SpinElement<S>::one(rec.dimension);
            for (std::size_t i = 0; i < rels[r].size(); ++i) {
                auto [g, e] = rels[r][i];
                v = v * ((s[g] < 0 && (e & 1)) ? -powers[r][i] : powers[r][i]);
            }
            ok = v.is_plus_one();
        }
        if (ok)
            res.valid_assignments.push_back(std::move(s));
    }
    res.count = static_cast<long>(res.valid_assignments.size());
    res.exists = res.count > 0;
    res.parallelizable = res.exists && rec.dimension == 4;
    res.strategy = Strategy::direct;
    return res;
}

template <class S>
LiftResult enumerate_lifts_in(const AlmostBieberbachRecord& rec, const std::vector<long>& params)
{
    return enumerate_lifts_with<S>(rec, params, base_preimages<S>(rec));
}

/// Direct strategy over the scalar field of the record's orthogonal form.
inline LiftResult enumerate_lifts(const AlmostBieberbachRecord& rec, const std::vector<long>& params)
{
    if (!rec.orientable)
        throw NonOrientable("family " + rec.family + " is not orientable");
    int field = rec.orthogonal ? rec.orthogonal->field : 2;
    if (field == 3 && !rec.orthogonal->is_rational())
        return enumerate_lifts_in<QSqrt3>(rec, params);
    return enumerate_lifts_in<QSqrt2>(rec, params);
}

/// Rank over F2 of the rows of a 0/1 matrix.
inline int rank_mod2(std::vector<std::vector<int>> rows)
{
    int rank = 0;
    int cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
    for (int c = 0; c < cols; ++c) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][c]) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(rows[rank], rows[piv]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r)
            if (r != rank && rows[r][c])
                for (int k = 0; k < cols; ++k)
                    rows[r][k] ^= rows[rank][k];
        ++rank;
    }
    return rank;
}

/// Exponent-sum matrix of the evaluated relators, reduced mod 2.
inline std::vector<std::vector<int>> exponent_sums_mod2(const Presentation& p, const std::vector<long>& params)
{
    std::vector<std::vector<int>> rows;
    for (const auto& r : p.evaluated_relators(params)) {
        std::vector<int> row(p.size(), 0);
        for (const auto& [g, e] : r)
            row[g] ^= static_cast<int>(((e % 2) + 2) % 2);
        rows.push_back(row);
    }
    return rows;
}

/// Dimension of Hom(G, C2): generators minus the F2-rank of the exponent-sum matrix.
inline int abelianization_mod2_rank(const Presentation& p, const std::vector<long>& params)
{
    return p.size() - rank_mod2(exponent_sums_mod2(p, params));
}

} // namespace afspin
