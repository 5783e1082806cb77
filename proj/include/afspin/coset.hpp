#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "afspin/errors.hpp"
#include "afspin/presentation.hpp"

namespace afspin {

/// Complete coset table: entry [c][2g] is c·g and [c][2g+1] is c·g^-1; coset 0 is the subgroup.
struct CosetTable {
    int generators = 0;
    std::vector<std::vector<int>> table;

    int index() const { return static_cast<int>(table.size()); }

    int act(int coset, int gen, long exp) const
    {
        int col = exp >= 0 ? 2 * gen : 2 * gen + 1;
        for (long k = 0; k < (exp < 0 ? -exp : exp); ++k)
            coset = table[coset][col];
        return coset;
    }

    int act(int coset, const IntWord& w) const
    {
        for (const auto& [g, e] : w)
            coset = act(coset, g, e);
        return coset;
    }
};

constexpr std::size_t default_coset_bound = 200000;

namespace detail {

/// Hand-Lyndon-Todd coset enumeration with coincidence processing.
class ToddCoxeter {
public:
    ToddCoxeter(int gens, std::size_t bound) : gens_(gens), cols_(2 * gens), bound_(bound) { new_coset(); }

    void scan_and_fill(int c, const std::vector<int>& w)
    {
        if (w.empty())
            return;
        int f = c, b = c;
        int i = 0, j = static_cast<int>(w.size()) - 1;
        for (;;) {
            while (i <= j && t_[f][w[i]] >= 0)
                f = t_[f][w[i++]];
            if (i > j) {
                if (f != b)
                    coincidence(f, b);
                return;
            }
            while (j >= i && t_[b][inv(w[j])] >= 0)
                b = t_[b][inv(w[j--])];
            if (j < i) {
                coincidence(f, b);
                return;
            }
            if (i == j) {
                t_[f][w[i]] = b;
                t_[b][inv(w[i])] = f;
                return;
            }
            define(f, w[i]);
        }
    }

    void run(const std::vector<std::vector<int>>& relators, const std::vector<std::vector<int>>& subgroup)
    {
        for (const auto& w : subgroup)
            scan_and_fill(0, w);
        for (std::size_t c = 0; c < t_.size(); ++c) {
            for (const auto& r : relators) {
                if (!alive(static_cast<int>(c)))
                    break;
                scan_and_fill(static_cast<int>(c), r);
            }
            for (int x = 0; x < cols_ && alive(static_cast<int>(c)); ++x)
                if (t_[c][x] < 0)
                    define(static_cast<int>(c), x);
        }
    }

    CosetTable table() const
    {
        std::vector<int> number(t_.size(), -1);
        int k = 0;
        for (std::size_t c = 0; c < t_.size(); ++c)
            if (alive(static_cast<int>(c)))
                number[c] = k++;
        CosetTable out{gens_, {}};
        for (std::size_t c = 0; c < t_.size(); ++c) {
            if (!alive(static_cast<int>(c)))
                continue;
            std::vector<int> row(cols_);
            for (int x = 0; x < cols_; ++x) {
                if (t_[c][x] < 0)
                    throw EnumerationBoundExceeded("coset table is incomplete");
                row[x] = number[t_[c][x]];
            }
            out.table.push_back(row);
        }
        return out;
    }

    static int inv(int x) { return x ^ 1; }

private:
    bool alive(int c) const { return p_[c] == c; }

    int new_coset()
    {
        if (t_.size() >= bound_)
            throw EnumerationBoundExceeded("coset enumeration exceeds " + std::to_string(bound_) + " cosets");
        t_.emplace_back(cols_, -1);
        p_.push_back(static_cast<int>(p_.size()));
        return static_cast<int>(t_.size()) - 1;
    }

    void define(int c, int x)
    {
        int d = new_coset();
        t_[c][x] = d;
        t_[d][inv(x)] = c;
    }

    int rep(int c)
    {
        int r = c;
        while (p_[r] != r)
            r = p_[r];
        while (p_[c] != r) {
            int next = p_[c];
            p_[c] = r;
            c = next;
        }
        return r;
    }

    void merge(int k, int l, std::vector<int>& queue)
    {
        k = rep(k);
        l = rep(l);
        if (k == l)
            return;
        int lo = std::min(k, l), hi = std::max(k, l);
        p_[hi] = lo;
        queue.push_back(hi);
    }

    void coincidence(int a, int b)
    {
        std::vector<int> queue;
        merge(a, b, queue);
        for (std::size_t q = 0; q < queue.size(); ++q) {
            int e = queue[q];
            for (int x = 0; x < cols_; ++x) {
                int f = t_[e][x];
                if (f < 0)
                    continue;
                t_[f][inv(x)] = -1;
                int e1 = rep(e), f1 = rep(f);
                if (t_[e1][x] >= 0)
                    merge(f1, t_[e1][x], queue);
                else if (t_[f1][inv(x)] >= 0)
                    merge(e1, t_[f1][inv(x)], queue);
                else {
                    t_[e1][x] = f1;
                    t_[f1][inv(x)] = e1;
                }
            }
        }
    }

    int gens_;
    int cols_;
    std::size_t bound_;
    std::vector<std::vector<int>> t_;
    std::vector<int> p_;
};

inline std::vector<int> columns(const IntWord& w)
{
    std::vector<int> out;
    for (const auto& [g, e] : w)
        for (long k = 0; k < (e < 0 ? -e : e); ++k)
            out.push_back(e > 0 ? 2 * g : 2 * g + 1);
    return out;
}

} // namespace detail

/// Cosets of the subgroup generated by `subgroup` in the finitely presented group <gens | relators>.
inline CosetTable coset_enumerate(int gens, const std::vector<IntWord>& relators, const std::vector<IntWord>& subgroup,
                                  std::size_t bound = default_coset_bound)
{
    std::vector<std::vector<int>> rels, sub;
    for (const auto& r : relators)
        rels.push_back(detail::columns(r));
    for (const auto& w : subgroup)
        sub.push_back(detail::columns(w));
    detail::ToddCoxeter tc(gens, bound);
    tc.run(rels, sub);
    return tc.table();
}

/// Presentation of a finite-index subgroup on Schreier generators.
struct SchreierPresentation {
    Presentation presentation;
    /// Each subgroup generator as a word in the parent's generators.
    std::vector<IntWord> parent_words;
    /// Transversal word of each coset.
    std::vector<IntWord> transversal;
};

/// Reidemeister-Schreier rewriting; `action[c][2g]` and `action[c][2g+1]` give the parent's
/// generators acting on the cosets, e.g. a table from coset_enumerate.
inline SchreierPresentation reidemeister_schreier(const Presentation& parent, const std::vector<IntWord>& relators,
                                                  const CosetTable& action)
{
    int n = parent.size(), m = action.index();
    if (action.generators != n)
        throw InvariantViolation("coset action has " + std::to_string(action.generators) + " generators, presentation " +
                                 std::to_string(n));
    for (const auto& row : action.table)
        for (int x : row)
            if (x < 0 || x >= m)
                throw EnumerationBoundExceeded("coset table is incomplete");

    // Spanning tree by breadth-first search; tree[c] = (parent coset, column) with c = parent·column.
    std::vector<std::pair<int, int>> tree(m, {-1, -1});
    std::vector<IntWord> transversal(m);
    std::vector<bool> seen(m, false);
    std::vector<int> queue{0};
    seen[0] = true;
    for (std::size_t q = 0; q < queue.size(); ++q) {
        int c = queue[q];
        for (int x = 0; x < 2 * n; ++x) {
            int d = action.table[c][x];
            if (seen[d])
                continue;
            seen[d] = true;
            tree[d] = {c, x};
            transversal[d] = transversal[c];
            transversal[d].emplace_back(x / 2, x % 2 ? -1 : 1);
            queue.push_back(d);
        }
    }
    if (queue.size() != static_cast<std::size_t>(m))
        throw InvariantViolation("coset action is not transitive");

    auto is_tree_edge = [&](int c, int g) {
        int d = action.table[c][2 * g];
        return (tree[d].first == c && tree[d].second == 2 * g) || (tree[c].first == d && tree[c].second == 2 * g + 1);
    };

    SchreierPresentation out;
    std::map<std::pair<int, int>, int> schreier;
    for (int c = 0; c < m; ++c)
        for (int g = 0; g < n; ++g) {
            if (is_tree_edge(c, g))
                continue;
            int id = out.presentation.size();
            schreier[{c, g}] = id;
            std::string name = parent.generators[g].name + (m > 1 ? "_" + std::to_string(c) : "");
            out.presentation.generators.push_back({name, parent.generators[g].role});
            IntWord w = transversal[c];
            w.emplace_back(g, 1);
            IntWord back = inverse(transversal[action.table[c][2 * g]]);
            w.insert(w.end(), back.begin(), back.end());
            out.parent_words.push_back(reduce(w));
        }

    auto rewrite = [&](int c, const IntWord& r) {
        IntWord w;
        for (const auto& [g, e] : r)
            for (long k = 0; k < (e < 0 ? -e : e); ++k) {
                if (e > 0) {
                    auto it = schreier.find({c, g});
                    if (it != schreier.end())
                        w.emplace_back(it->second, 1);
                    c = action.table[c][2 * g];
                } else {
                    int d = action.table[c][2 * g + 1];
                    auto it = schreier.find({d, g});
                    if (it != schreier.end())
                        w.emplace_back(it->second, -1);
                    c = d;
                }
            }
        return reduce(w);
    };

    for (int c = 0; c < m; ++c)
        for (const auto& r : relators) {
            if (action.act(c, r) != c)
                throw InvariantViolation("relator " + parent.word_str(r) + " does not fix coset " + std::to_string(c));
            IntWord w = rewrite(c, r);
            if (w.empty())
                continue;
            Word word;
            for (const auto& [g, e] : w)
                word.push_back({g, ExponentExpr(e)});
            out.presentation.relators.push_back(word);
        }
    out.transversal = transversal;
    return out;
}

/// Removes a generator that occurs exactly once, with exponent +-1, in some relator, until none remains.
/// `keep` parallels the generators and is filtered alongside them.
template <class Payload>
void tietze_eliminate(Presentation& p, std::vector<Payload>& keep)
{
    std::vector<IntWord> rels;
    for (const auto& r : p.relators)
        rels.push_back(p.evaluate(r, std::vector<long>(p.parameters.size(), 0)));
    for (;;) {
        int best_rel = -1, best_gen = -1;
        std::size_t best_len = 0;
        for (std::size_t r = 0; r < rels.size(); ++r) {
            std::map<int, int> occurrences;
            std::map<int, long> exponent;
            for (const auto& [g, e] : rels[r]) {
                ++occurrences[g];
                exponent[g] = e;
            }
            for (const auto& [g, k] : occurrences)
                if (k == 1 && (exponent[g] == 1 || exponent[g] == -1) &&
                    (best_rel < 0 || rels[r].size() < best_len)) {
                    best_rel = static_cast<int>(r);
                    best_gen = g;
                    best_len = rels[r].size();
                }
        }
        if (best_rel < 0)
            break;
        // r = u x^s v = 1 gives x = u^-1 v^-1 when s = 1 and x = v u when s = -1
        const IntWord& r = rels[best_rel];
        std::size_t pos = 0;
        while (r[pos].first != best_gen)
            ++pos;
        IntWord u(r.begin(), r.begin() + static_cast<long>(pos)), v(r.begin() + static_cast<long>(pos) + 1, r.end());
        IntWord value;
        if (r[pos].second == 1) {
            value = inverse(u);
            IntWord vi = inverse(v);
            value.insert(value.end(), vi.begin(), vi.end());
        } else {
            value = v;
            value.insert(value.end(), u.begin(), u.end());
        }
        value = reduce(value);
        std::vector<IntWord> next;
        for (std::size_t k = 0; k < rels.size(); ++k) {
            if (static_cast<int>(k) == best_rel)
                continue;
            IntWord w;
            for (const auto& [g, e] : rels[k]) {
                if (g != best_gen) {
                    w.emplace_back(g, e);
                    continue;
                }
                IntWord piece = e > 0 ? value : inverse(value);
                for (long t = 0; t < (e < 0 ? -e : e); ++t)
                    w.insert(w.end(), piece.begin(), piece.end());
            }
            w = reduce(w);
            for (auto& [g, e] : w)
                if (g > best_gen)
                    --g;
            if (!w.empty() && std::find(next.begin(), next.end(), w) == next.end())
                next.push_back(w);
        }
        rels = std::move(next);
        p.generators.erase(p.generators.begin() + best_gen);
        keep.erase(keep.begin() + best_gen);
    }
    p.relators.clear();
    p.parameters.clear();
    for (const auto& r : rels) {
        Word word;
        for (const auto& [g, e] : r)
            word.push_back({g, ExponentExpr(e)});
        p.relators.push_back(word);
    }
}

} // namespace afspin
