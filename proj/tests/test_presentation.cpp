#include <gtest/gtest.h>

#include <random>

#include "afspin/presentation.hpp"

using namespace afspin;

namespace {

const std::vector<std::string> ks{"k1", "k2", "k3", "l"};

ExponentExpr parse(const std::string& s) { return ExponentExpr::parse(s, ks); }

} // namespace

TEST(ExponentExpr, ParseAndEvaluate)
{
    EXPECT_EQ(parse("2*k3").evaluate({0, 0, 5, 0}), 10);
    EXPECT_EQ(parse("-(k3*(1 + 2*l))").evaluate({0, 0, 3, 2}), -15);
    EXPECT_EQ(parse("k1*k2 + k3 - 1").evaluate({2, 3, 4, 0}), 9);
    EXPECT_EQ(parse("-2*k3*l-k3").evaluate({0, 0, 1, 1}), -3);
    EXPECT_EQ(parse(" 7 ").evaluate({}), 7);
    EXPECT_EQ(parse("+k1").evaluate({4, 0, 0, 0}), 4);
}

TEST(ExponentExpr, Normalises)
{
    EXPECT_EQ(parse("k1 - k1"), ExponentExpr(0));
    EXPECT_EQ(parse("k1 + k2"), parse("k2 + k1"));
    EXPECT_EQ(parse("(k1 + 1)*(k1 - 1)"), parse("k1*k1 - 1"));
    EXPECT_TRUE(parse("3").is_constant());
    EXPECT_EQ(parse("3").constant(), 3);
    EXPECT_TRUE(parse("2*k1 + k2 + 1").is_affine());
    EXPECT_FALSE(parse("k1*k2").is_affine());
}

TEST(ExponentExpr, Str)
{
    EXPECT_EQ(ExponentExpr(0).str(ks), "0");
    EXPECT_EQ(parse("-1").str(ks), "-1");
    EXPECT_EQ(parse("k3 - 2*k1").str(ks), "-2*k1 + k3");
    EXPECT_EQ(parse("1 + k1*l").str(ks), "1 + k1*l");
    EXPECT_EQ(parse(parse("2*k2 - k1*k3 + 4").str(ks)), parse("2*k2 - k1*k3 + 4"));
}

TEST(ExponentExpr, ParseErrors)
{
    EXPECT_THROW(parse("k9"), ParseError);
    EXPECT_THROW(parse("(k1 + 1"), ParseError);
    EXPECT_THROW(parse("k1 +"), ParseError);
    EXPECT_THROW(parse("k1 k2"), ParseError);
    EXPECT_THROW(parse(""), ParseError);
    EXPECT_THROW(parse("2/k1"), ParseError);
}

TEST(ExponentExpr, EvaluateAgreesWithDirectArithmetic)
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> v(-9, 9);
    ExponentExpr e = parse("k1*k2 - 3*k3 + l*l + 2");
    for (int i = 0; i < 200; ++i) {
        std::vector<long> p{v(rng), v(rng), v(rng), v(rng)};
        EXPECT_EQ(e.evaluate(p), p[0] * p[1] - 3 * p[2] + p[3] * p[3] + 2);
    }
}

TEST(Word, ReduceAndInverse)
{
    IntWord w{{0, 2}, {0, -2}, {1, 1}, {1, 0}, {2, 3}, {2, -1}};
    EXPECT_EQ(reduce(w), (IntWord{{1, 1}, {2, 2}}));
    EXPECT_EQ(inverse(IntWord{{0, 1}, {1, -2}}), (IntWord{{1, 2}, {0, -1}}));
    EXPECT_TRUE(reduce(IntWord{{0, 1}, {0, -1}}).empty());
    IntWord x{{0, 1}, {1, 3}, {2, -1}};
    IntWord both = x;
    for (const auto& l : inverse(x))
        both.push_back(l);
    EXPECT_TRUE(reduce(both).empty());
}

TEST(Presentation, EvaluatesRelators)
{
    Presentation p;
    p.generators = {{"a", Role::holonomy}, {"b", Role::lattice}};
    p.parameters = {"k"};
    ExponentExpr k = ExponentExpr::param(0);
    p.relators = {{{0, 2}, {1, k}}, {{1, 1}, {0, 0}}};
    auto r = p.evaluated_relators({3});
    EXPECT_EQ(r[0], (IntWord{{0, 2}, {1, 3}}));
    EXPECT_EQ(r[1], (IntWord{{1, 1}}));
    EXPECT_EQ(p.word_str(r[0]), "a^2 b^3");
    EXPECT_EQ(p.word_str(p.relators[0]), "a^2 b^(k)");
    EXPECT_EQ(p.word_str(IntWord{}), "1");
    EXPECT_EQ(p.holonomy_generators(), std::vector<int>{0});
    EXPECT_EQ(p.index_of("b"), 1);
    EXPECT_THROW(p.index_of("z"), NotFound);
    EXPECT_THROW(p.evaluated_relators({}), InvariantViolation);
}

TEST(ReduceParamsMod2, Examples)
{
    EXPECT_EQ(reduce_params_mod2(std::vector<long>{2, 3, 0}), (std::vector<long>{0, 1, 0}));
    EXPECT_EQ(reduce_params_mod2(std::vector<long>{0, 0, 0}), (std::vector<long>{0, 0, 0}));
    EXPECT_EQ(reduce_params_mod2(std::vector<long>{5, 4, 1, 1}), (std::vector<long>{1, 0, 1, 1}));
    EXPECT_EQ(reduce_params_mod2(std::vector<long>{-3, -2}), (std::vector<long>{1, 0}));
}

TEST(ReduceParamsMod2, ChecksArity)
{
    AlmostBieberbachRecord rec;
    rec.family = "x";
    rec.presentation.parameters = {"k1", "k2"};
    EXPECT_EQ(reduce_params_mod2(rec, {7, 8}), (std::vector<long>{1, 0}));
    EXPECT_THROW(reduce_params_mod2(rec, {1}), InvariantViolation);
}

TEST(Record, ThetaOfWords)
{
    AlmostBieberbachRecord rec;
    rec.presentation.generators = {{"a", Role::holonomy}, {"t", Role::lattice}};
    IntMatrix rot{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    rec.holonomy[0] = rot;
    EXPECT_EQ(rec.theta(1), IntMatrix::identity(4));
    EXPECT_EQ(rec.theta(IntWord{{0, 4}, {1, 5}}), IntMatrix::identity(4));
    EXPECT_EQ(rec.theta(IntWord{{0, -1}}), rot.transpose());
    EXPECT_EQ(rec.theta(IntWord{{0, 2}}), rot * rot);
}
