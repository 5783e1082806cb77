#include <gtest/gtest.h>

#include "afspin/catalog.hpp"

using namespace afspin;

namespace {

const CatalogFile& catalog()
{
    static const CatalogFile cat = load_catalog(default_catalog_path());
    return cat;
}

IntMatrix diag(std::initializer_list<long> d) { return IntMatrix::diagonal(std::vector<long>(d)); }

AlmostBieberbachRecord single_generator(const std::string& group, const IntMatrix& m)
{
    AlmostBieberbachRecord rec;
    rec.family = "test";
    rec.holonomy_group = group;
    rec.presentation.generators = {{"alpha", Role::holonomy}};
    rec.holonomy[0] = m;
    return rec;
}

/// Trace of theta on each column's representative word, without any conjugacy-class machinery.
std::vector<long> direct_column_traces(const AlmostBieberbachRecord& rec)
{
    std::vector<long> out;
    for (const auto& col : character_table(rec.holonomy_group).classes) {
        IntWord w;
        for (const auto& [name, e] : col.word)
            w.emplace_back(rec.presentation.index_of(name), e);
        out.push_back(rec.theta(w).trace());
    }
    return out;
}

} // namespace

TEST(Orientability, Examples)
{
    AlmostBieberbachRecord trivial;
    EXPECT_TRUE(orientability(trivial));
    EXPECT_TRUE(orientability(single_generator("C2", diag({1, 1, -1, -1}))));
    EXPECT_FALSE(orientability(single_generator("C2", diag({-1, 1, 1, 1}))));
}

TEST(Orientability, WholeCatalog)
{
    for (const auto& rec : catalog().records)
        EXPECT_TRUE(orientability(rec)) << rec.family;
}

TEST(MatrixGroupClosure, Sizes)
{
    EXPECT_EQ(matrix_group_closure(catalog().find("4")).order(), 2);
    EXPECT_EQ(matrix_group_closure(catalog().find("103")).order(), 8);
    EXPECT_EQ(matrix_group_closure(catalog().find("168")).order(), 6);
    EXPECT_EQ(matrix_group_closure(catalog().find("1")).order(), 1);
}

TEST(MatrixGroupClosure, FaithfulForEveryRecord)
{
    for (const auto& rec : catalog().records) {
        FiniteMatrixGroup g = matrix_group_closure(rec);
        EXPECT_EQ(g.order(), character_table(rec.holonomy_group).order) << rec.family;
        EXPECT_EQ(identify_group(g.table).id, rec.holonomy_group) << rec.family;
        for (int x = 0; x < g.order(); ++x)
            EXPECT_EQ(rec.theta(g.word(x)), g.elements[x]) << rec.family;
    }
}

TEST(MatrixGroupClosure, WrongGroupName)
{
    EXPECT_THROW(matrix_group_closure(single_generator("C4", diag({1, 1, -1, -1}))), InconsistentRecord);
    IntMatrix rot{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    EXPECT_THROW(matrix_group_closure(single_generator("C2^2", rot)), InconsistentRecord);
    EXPECT_EQ(matrix_group_closure(single_generator("C4", rot)).order(), 4);
}

TEST(MatrixGroupClosure, IndexOf)
{
    FiniteMatrixGroup g = matrix_group_closure(catalog().find("4"));
    EXPECT_EQ(g.index_of(IntMatrix::identity(4)), 0);
    EXPECT_THROW(g.index_of(diag({-1, -1, -1, -1})), NotFound);
}

TEST(TraceCharacter, TrivialAndC2)
{
    ClassFunction f1 = trace_character(catalog().find("1"));
    EXPECT_EQ(f1.values, std::vector<long>{4});

    ClassFunction f2 = trace_character(single_generator("C2", diag({1, 1, -1, -1})));
    EXPECT_EQ(f2.values, (std::vector<long>{4, 0}));
    EXPECT_EQ(decompose_character(f2.values, character_table("C2")), (std::vector<long>{2, 2}));
}

TEST(TraceCharacter, ConstantOnClassesForEveryRecord)
{
    for (const auto& rec : catalog().records) {
        ClassFunction f;
        ASSERT_NO_THROW(f = trace_character(rec)) << rec.family;
        long size = 0;
        for (const auto& c : f.classes)
            size += static_cast<long>(c.size());
        EXPECT_EQ(size, character_table(rec.holonomy_group).order);
        EXPECT_EQ(f.values.front(), 4);
    }
}

TEST(CharacterOnTable, AgreesWithDirectTraces)
{
    for (const auto& rec : catalog().records) {
        std::vector<long> t = character_on_table(rec, matrix_group_closure(rec), character_table(rec.holonomy_group));
        EXPECT_EQ(t, direct_column_traces(rec)) << rec.family;
    }
}

TEST(RecordCharacter, DegreeFour)
{
    for (const auto& rec : catalog().records) {
        const CharacterTable& t = character_table(rec.holonomy_group);
        std::vector<long> m = record_character(rec);
        long dim = 0;
        for (std::size_t a = 0; a < m.size(); ++a)
            dim += m[a] * t.degree(static_cast<int>(a));
        EXPECT_EQ(dim, 4) << rec.family;
    }
}

TEST(RecordCharacter, ConstantWithinHolonomyGroup)
{
    std::map<std::string, std::string> seen;
    for (const auto& rec : catalog().records) {
        std::string d = decomposition_str(record_character(rec));
        auto [it, fresh] = seen.emplace(rec.holonomy_group, d);
        if (!fresh)
            EXPECT_EQ(it->second, d) << rec.family;
    }
}

TEST(CharactersEqual, Examples)
{
    std::vector<IntMatrix> a{diag({1, 1, -1, -1})};
    EXPECT_TRUE(characters_equal(a, a));
    EXPECT_TRUE(characters_equal(a, {diag({-1, -1, 1, 1})}));
    EXPECT_FALSE(characters_equal({diag({1, 1, 1, -1})}, a));
    EXPECT_THROW(characters_equal(a, {}), InconsistentRecord);
}

TEST(DefinesHomomorphism, Examples)
{
    IntMatrix rot{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    EXPECT_TRUE(defines_homomorphism<long>({rot}, {rot * rot}));
    EXPECT_FALSE(defines_homomorphism<long>({rot * rot}, {rot}));
    EXPECT_TRUE(defines_homomorphism<long>({}, {}));
}

TEST(SignedPermForm, TwoGroupsHaveOne)
{
    for (const auto& rec : catalog().records) {
        if (!is_two_group(rec.holonomy_group))
            continue;
        std::vector<IntMatrix> theta;
        for (int g : rec.presentation.holonomy_generators())
            theta.push_back(rec.theta(g));
        auto form = signed_perm_form(theta);
        ASSERT_TRUE(form.has_value()) << rec.family;
        std::vector<IntMatrix> nu;
        for (const auto& p : *form)
            nu.push_back(p.to_matrix<long>());
        EXPECT_TRUE(defines_homomorphism(theta, nu)) << rec.family;
        EXPECT_TRUE(characters_equal(theta, nu)) << rec.family;
    }
}

TEST(SignedPermForm, NoneForCyclicSix)
{
    std::vector<IntMatrix> theta{catalog().find("168").theta(catalog().find("168").presentation.index_of("alpha"))};
    EXPECT_EQ(theta.front().trace(), 3);
    EXPECT_FALSE(signed_perm_form(theta).has_value());
}
