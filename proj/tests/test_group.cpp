#include <gtest/gtest.h>

#include "afspin/group.hpp"

using namespace afspin;

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b)
{
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = b[a[i]];
    return r;
}

/// Permutation group generated by `gens`, as a Cayley table.
CayleyTable perm_group(const std::vector<Perm>& gens)
{
    Perm id(gens.front().size());
    std::iota(id.begin(), id.end(), 0);
    auto c = bfs_closure(id, gens, compose, [](const Perm& p) { return p; });
    return cayley_table(c.elements, compose, [](const Perm& p) { return p; });
}

CayleyTable cyclic(int n)
{
    Perm r(n);
    for (int i = 0; i < n; ++i)
        r[i] = (i + 1) % n;
    return perm_group({r});
}

/// Dihedral group of order 2n acting on an n-gon.
CayleyTable dihedral(int n)
{
    Perm r(n), s(n);
    for (int i = 0; i < n; ++i) {
        r[i] = (i + 1) % n;
        s[i] = (n - i) % n;
    }
    return perm_group({r, s});
}

/// Left-regular action of the unit quaternions {±1, ±i, ±j, ±k} on themselves (Q8).
CayleyTable q8()
{
    // index = 2 * unit + sign, units 1, i, j, k
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    auto mul = [](int x, int y) {
        int u = unit[x / 2][y / 2];
        int s = sign[x / 2][y / 2] * ((x % 2) ? -1 : 1) * ((y % 2) ? -1 : 1);
        return 2 * u + (s < 0 ? 1 : 0);
    };
    std::vector<Perm> gens;
    for (int g : {2, 4}) {
        Perm p(8);
        for (int x = 0; x < 8; ++x)
            p[x] = mul(x, g);
        gens.push_back(p);
    }
    return perm_group(gens);
}

/// C_m : C_n with the generator of C_n inverting C_m (n even).
CayleyTable semidirect_inverting(int m, int n)
{
    std::vector<std::pair<int, int>> els;
    for (int x = 0; x < n; ++x)
        for (int a = 0; a < m; ++a)
            els.emplace_back(a, x);
    auto mul = [m, n](std::pair<int, int> p, std::pair<int, int> q) {
        int a = p.second % 2 ? (p.first - q.first + m) % m : (p.first + q.first) % m;
        return std::make_pair(a, (p.second + q.second) % n);
    };
    return cayley_table(els, mul, [](const auto& p) { return p; });
}

} // namespace

TEST(Closure, CyclicRotation)
{
    CayleyTable t = cyclic(6);
    EXPECT_EQ(t.order(), 6);
    EXPECT_TRUE(t.is_abelian());
    EXPECT_EQ(t.center_size(), 6);
    EXPECT_EQ(identify_group(t).id, "C6");
}

TEST(Closure, BoundExceeded)
{
    Perm r(12);
    for (int i = 0; i < 12; ++i)
        r[i] = (i + 1) % 12;
    Perm s{1, 0, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
    Perm id(12);
    std::iota(id.begin(), id.end(), 0);
    EXPECT_THROW(bfs_closure(id, {r, s}, compose, [](const Perm& p) { return p; }, 100), ClosureBoundExceeded);
}

TEST(Closure, ShortestWordsReachEachElement)
{
    Perm r{1, 2, 3, 0}, s{0, 3, 2, 1};
    Perm id{0, 1, 2, 3};
    auto c = bfs_closure(id, {r, s}, compose, [](const Perm& p) { return p; });
    ASSERT_EQ(c.elements.size(), 8u);
    std::vector<Perm> gens{r, s};
    for (std::size_t i = 0; i < c.elements.size(); ++i) {
        Perm x = id;
        for (int g : c.words[i])
            x = compose(x, gens[g]);
        EXPECT_EQ(x, c.elements[i]);
    }
    EXPECT_EQ(c.words[0].size(), 0u);
}

TEST(CayleyTable, GroupAxioms)
{
    for (const CayleyTable& t : {cyclic(5), dihedral(6), q8()}) {
        int n = t.order();
        for (int a = 0; a < n; ++a) {
            EXPECT_EQ(t.product(0, a), a);
            EXPECT_EQ(t.product(a, t.inv[a]), 0);
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    EXPECT_EQ(t.product(t.product(a, b), c), t.product(a, t.product(b, c)));
        }
    }
}

TEST(CayleyTable, ConjugacyClassesPartition)
{
    CayleyTable t = dihedral(4);
    auto classes = t.conjugacy_classes();
    std::vector<std::size_t> sizes;
    std::size_t total = 0;
    for (const auto& c : classes) {
        sizes.push_back(c.size());
        total += c.size();
    }
    std::sort(sizes.begin(), sizes.end());
    EXPECT_EQ(total, 8u);
    EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 1, 2, 2, 2}));
    EXPECT_EQ(dihedral(6).conjugacy_classes().size(), 6u);
    EXPECT_EQ(dihedral(3).conjugacy_classes().size(), 3u);
}

TEST(IdentifyGroup, PermutationOracles)
{
    EXPECT_EQ(identify_group(perm_group({{0}})).id, "1");
    EXPECT_EQ(identify_group(cyclic(2)).id, "C2");
    EXPECT_EQ(identify_group(cyclic(4)).id, "C4");
    EXPECT_EQ(identify_group(perm_group({{1, 0, 2, 3}, {0, 1, 3, 2}})).id, "C2^2");
    EXPECT_EQ(identify_group(cyclic(8)).id, "C8");
    EXPECT_EQ(identify_group(dihedral(4)).id, "D8");
    EXPECT_EQ(identify_group(q8()).id, "Q8");
    EXPECT_EQ(identify_group(cyclic(3)).id, "C3");
    EXPECT_EQ(identify_group(dihedral(3)).id, "S3");
    EXPECT_EQ(identify_group(dihedral(6)).id, "D12");
    EXPECT_EQ(identify_group(cyclic(12)).id, "C12");
    EXPECT_EQ(identify_group(cyclic(16)).id, "C16");
    EXPECT_EQ(identify_group(dihedral(8)).id, "D16");
    EXPECT_EQ(identify_group(perm_group({{1, 2, 0, 3}, {1, 0, 3, 2}})).id, "A4");
}

TEST(IdentifyGroup, SemidirectProducts)
{
    EXPECT_EQ(identify_group(semidirect_inverting(3, 4)).id, "C3:C4");
    EXPECT_EQ(identify_group(semidirect_inverting(3, 2)).id, "S3");
    EXPECT_EQ(identify_group(semidirect_inverting(6, 2)).id, "D12");
}

TEST(IdentifyGroup, DistinguishesSameOrderProfiles)
{
    // D12 and C3:C4 both have order 12 and are non-abelian; Q8 and D8 differ in involutions.
    EXPECT_NE(identify_group(dihedral(6)).id, identify_group(semidirect_inverting(3, 4)).id);
    EXPECT_NE(identify_group(dihedral(4)).id, identify_group(q8()).id);
}

TEST(IdentifyGroup, UnknownGroup)
{
    EXPECT_THROW(identify_group(cyclic(5)), UnknownGroup);
    EXPECT_THROW(identify_group(perm_group({{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}})), UnknownGroup);
}

TEST(GroupName, Pretty)
{
    EXPECT_EQ(GroupName{"C3:Q8"}.pretty(), "C₃⋊Q₈");
    EXPECT_EQ(GroupName{"C2^2"}.pretty(), "C₂²");
    EXPECT_EQ(GroupName{"Q16"}.pretty(), "Q₁₆");
    EXPECT_EQ(GroupName{"C6xC2"}.pretty(), "C₆×C₂");
    EXPECT_EQ(GroupName{"1"}.pretty(), "1");
    EXPECT_EQ(GroupName{"SL(2,3)"}.pretty(), "SL(2,3)");
}
