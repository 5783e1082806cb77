#include <gtest/gtest.h>

#include "afspin/catalog.hpp"

using namespace afspin;

namespace {

const CatalogFile& catalog()
{
    static const CatalogFile cat = load_catalog(default_catalog_path());
    return cat;
}

// <a, b | a^n, b^2, (b a)^2>
std::vector<IntWord> dihedral_relators(long n) { return {{{0, n}}, {{1, 2}}, {{1, 1}, {0, 1}, {1, 1}, {0, 1}}}; }

Presentation presentation_of(int gens, const std::vector<IntWord>& relators)
{
    Presentation p;
    for (int g = 0; g < gens; ++g)
        p.generators.push_back({std::string(1, static_cast<char>('a' + g)), Role::holonomy});
    for (const auto& r : relators) {
        Word w;
        for (const auto& [g, e] : r)
            w.push_back({g, ExponentExpr(e)});
        p.relators.push_back(w);
    }
    return p;
}

/// Order of the group given by a presentation, by enumerating the cosets of the trivial subgroup.
int group_order(const Presentation& p)
{
    return coset_enumerate(p.size(), p.evaluated_relators({}), {}).index();
}

/// Brute-force order of <r^k, s> in the dihedral group of the n-gon, as permutations.
int dihedral_subgroup_order(int n, int k)
{
    using Perm = std::vector<int>;
    Perm r(n), s(n), id(n);
    for (int i = 0; i < n; ++i) {
        r[i] = (i + 1) % n;
        s[i] = (n - i) % n;
        id[i] = i;
    }
    auto mul = [](const Perm& a, const Perm& b) {
        Perm c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            c[i] = b[a[i]];
        return c;
    };
    Perm rk = id;
    for (int i = 0; i < k; ++i)
        rk = mul(rk, r);
    return static_cast<int>(bfs_closure(id, {rk, s}, mul, [](const Perm& p) { return p; }).elements.size());
}

void expect_complete_and_consistent(const CosetTable& t, const std::vector<IntWord>& relators,
                                    const std::vector<IntWord>& subgroup)
{
    for (int c = 0; c < t.index(); ++c) {
        for (int g = 0; g < t.generators; ++g) {
            EXPECT_EQ(t.table[t.table[c][2 * g]][2 * g + 1], c);
            EXPECT_EQ(t.table[t.table[c][2 * g + 1]][2 * g], c);
        }
        for (const auto& r : relators)
            EXPECT_EQ(t.act(c, r), c);
    }
    for (const auto& w : subgroup)
        EXPECT_EQ(t.act(0, w), 0);
}

} // namespace

TEST(CosetEnumerate, CyclicSixModCube)
{
    std::vector<IntWord> rels{{{0, 6}}};
    CosetTable t = coset_enumerate(1, rels, {{{0, 3}}});
    EXPECT_EQ(t.index(), 3);
    expect_complete_and_consistent(t, rels, {{{0, 3}}});
}

TEST(CosetEnumerate, CyclicTrivialSubgroup)
{
    for (long n = 1; n <= 12; ++n)
        EXPECT_EQ(coset_enumerate(1, {{{0, n}}}, {}).index(), n);
}

TEST(CosetEnumerate, SymmetricGroupReflection)
{
    auto rels = dihedral_relators(3);
    CosetTable t = coset_enumerate(2, rels, {{{1, 1}}});
    EXPECT_EQ(t.index(), 3);
    expect_complete_and_consistent(t, rels, {{{1, 1}}});
    EXPECT_EQ(coset_enumerate(2, rels, {}).index(), 6);
}

TEST(CosetEnumerate, DihedralTwelveKleinSubgroup)
{
    auto rels = dihedral_relators(6);
    std::vector<IntWord> sub{{{0, 3}}, {{1, 1}}};
    CosetTable t = coset_enumerate(2, rels, sub);
    EXPECT_EQ(dihedral_subgroup_order(6, 3), 4);
    EXPECT_EQ(t.index(), 12 / dihedral_subgroup_order(6, 3));
    expect_complete_and_consistent(t, rels, sub);
}

TEST(CosetEnumerate, DihedralIndicesMatchBruteForce)
{
    for (int n = 3; n <= 8; ++n)
        for (int k = 1; k <= n; ++k)
            EXPECT_EQ(coset_enumerate(2, dihedral_relators(n), {{{0, k}}, {{1, 1}}}).index(),
                      2 * n / dihedral_subgroup_order(n, k))
                << n << " " << k;
}

TEST(CosetEnumerate, BoundExceeded)
{
    EXPECT_THROW(coset_enumerate(1, {{{0, 1000}}}, {}, 100), EnumerationBoundExceeded);
}

TEST(ReidemeisterSchreier, IndexOneRelabels)
{
    auto rels = dihedral_relators(4);
    Presentation p = presentation_of(2, rels);
    CosetTable t = coset_enumerate(2, rels, {{{0, 1}}, {{1, 1}}});
    ASSERT_EQ(t.index(), 1);
    SchreierPresentation s = reidemeister_schreier(p, rels, t);
    ASSERT_EQ(s.presentation.size(), 2);
    EXPECT_EQ(s.presentation.generators[0].name, "a");
    EXPECT_EQ(s.presentation.generators[1].name, "b");
    EXPECT_EQ(s.parent_words, (std::vector<IntWord>{{{0, 1}}, {{1, 1}}}));
    EXPECT_EQ(s.presentation.evaluated_relators({}), rels);
}

TEST(ReidemeisterSchreier, FreeRankOneIndexTwo)
{
    Presentation p = presentation_of(1, {});
    CosetTable t{1, {{1, 1}, {0, 0}}};
    SchreierPresentation s = reidemeister_schreier(p, {}, t);
    EXPECT_EQ(s.presentation.size(), 1);
    EXPECT_TRUE(s.presentation.relators.empty());
    EXPECT_EQ(s.parent_words, (std::vector<IntWord>{{{0, 2}}}));
}

TEST(ReidemeisterSchreier, FreeRankTwoIndexTwo)
{
    Presentation p = presentation_of(2, {});
    // a swaps the two cosets, b fixes both
    CosetTable t{2, {{1, 1, 0, 0}, {0, 0, 1, 1}}};
    SchreierPresentation s = reidemeister_schreier(p, {}, t);
    EXPECT_EQ(s.presentation.size(), 1 + 2 * (2 - 1));
    EXPECT_TRUE(s.presentation.relators.empty());
    for (const auto& w : s.parent_words)
        EXPECT_EQ(t.act(0, w), 0);
}

TEST(ReidemeisterSchreier, SubgroupOrdersFromRewrittenPresentation)
{
    struct Case {
        long n;
        std::vector<IntWord> sub;
        int order;
    };
    for (const Case& c : {Case{3, {{{1, 1}}}, 2}, Case{6, {{{0, 3}}, {{1, 1}}}, 4}, Case{6, {{{0, 2}}}, 3},
                          Case{4, {{{0, 1}}}, 4}}) {
        auto rels = dihedral_relators(c.n);
        Presentation p = presentation_of(2, rels);
        CosetTable t = coset_enumerate(2, rels, c.sub);
        SchreierPresentation s = reidemeister_schreier(p, rels, t);
        EXPECT_EQ(s.presentation.size(), 1 + t.index() * (2 - 1));
        EXPECT_EQ(group_order(s.presentation), c.order) << c.n;
        for (const auto& w : s.parent_words)
            EXPECT_EQ(t.act(0, w), 0);

        Presentation q = s.presentation;
        std::vector<IntWord> words = s.parent_words;
        tietze_eliminate(q, words);
        EXPECT_EQ(q.size(), static_cast<int>(words.size()));
        EXPECT_LE(q.size(), s.presentation.size());
        EXPECT_EQ(group_order(q), c.order) << c.n;
    }
}

TEST(ReidemeisterSchreier, RejectsIncompleteTable)
{
    Presentation p = presentation_of(1, {});
    CosetTable t{1, {{1, -1}, {0, 0}}};
    EXPECT_THROW(reidemeister_schreier(p, {}, t), EnumerationBoundExceeded);
}

TEST(Sylow2Subgroup, Indices)
{
    std::map<std::string, int> expected{{"1", 1},  {"C2", 1}, {"C2^2", 1}, {"C4", 1}, {"D8", 1},
                                        {"C3", 3}, {"S3", 3}, {"C6", 3},   {"D12", 3}};
    for (const auto& rec : catalog().records) {
        FiniteMatrixGroup g = matrix_group_closure(rec);
        SylowSubgroup s = sylow2_subgroup(g);
        EXPECT_EQ(s.index, expected.at(rec.holonomy_group)) << rec.family;
        std::vector<IntMatrix> mats;
        for (int x : s.generators)
            mats.push_back(g.elements[x]);
        int order = mats.empty() ? 1 : closure_of({}, mats, rec.dimension).order();
        EXPECT_EQ(order * s.index, g.order()) << rec.family;
    }
}

TEST(SylowPullback, Family168HolonomyIsThetaCubed)
{
    const auto& rec = catalog().find("168");
    int alpha = rec.presentation.holonomy_generators().front();
    IntMatrix t = rec.theta(alpha);
    IntMatrix cube = t * t * t;
    EXPECT_EQ(cube, IntMatrix::diagonal({-1, -1, 1, 1}));
    for (const auto& params : rec.parameter_sets) {
        AlmostBieberbachRecord child = sylow_pullback(rec, params);
        EXPECT_EQ(child.holonomy_group, "C2");
        ASSERT_FALSE(child.holonomy.empty());
        for (const auto& [g, m] : child.holonomy)
            EXPECT_EQ(m, cube);
    }
}

TEST(SylowPullback, ChildHolonomyIsTheSylowSubgroup)
{
    std::map<std::string, std::string> expected{{"C3", "1"}, {"S3", "C2"}, {"C6", "C2"}, {"D12", "C2^2"}};
    for (const auto& rec : catalog().records) {
        if (is_two_group(rec.holonomy_group))
            continue;
        AlmostBieberbachRecord child = sylow_pullback(rec, rec.parameter_sets.front());
        EXPECT_EQ(child.holonomy_group, expected.at(rec.holonomy_group)) << rec.family;
        EXPECT_EQ(child.family, rec.family + "/Syl2");
        EXPECT_NO_THROW(enumerate_lifts(child, std::vector<long>(child.presentation.parameters.size())))
            << rec.family;
    }
}

TEST(SylowStrategy, Family184)
{
    LiftResult r = sylow_strategy(catalog().find("184"), {0, 0, 0, 1, 0});
    EXPECT_EQ(r.count, 4);
    EXPECT_TRUE(r.exists);
    EXPECT_EQ(r.strategy, Strategy::sylow);
    EXPECT_TRUE(r.valid_assignments.empty());
}

TEST(SylowStrategy, IndexOneKeepsAssignments)
{
    const auto& rec = catalog().find("103");
    for (const auto& params : rec.parameter_sets)
        EXPECT_EQ(sylow_strategy(rec, params).valid_assignments, enumerate_lifts(rec, params).valid_assignments);
}
