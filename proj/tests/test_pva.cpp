#include "walg/pva.hpp"

#include "random_poly.hpp"

#include <gtest/gtest.h>

using namespace walg;
using walg::testing::RandomPolys;

namespace {

DiffPoly var(const LieAlgebraSpec& s, int i, int j, std::uint32_t der = 0)
{
    return DiffPoly::variable(s.index_of(GeneratorId::E(i, j)), der);
}

std::size_t pos(const LieAlgebraSpec& s, int i, int j) { return s.index_of(GeneratorId::E(i, j)); }

const LambdaPoly lambda = LambdaPoly::lambda_power(1);

struct AxiomCase {
    Kind kind;
    int n;
    unsigned seed;
};

const std::vector<AxiomCase> axiom_cases = {{Kind::A, 2, 1}, {Kind::C, 1, 2}, {Kind::B, 2, 3}, {Kind::G2, 2, 4}};
constexpr int trials_per_case = 60;  // 4 cases: 240 instances per axiom

}  // namespace

TEST(Pva, BaseBracketExamples)
{
    const auto s = build_spec(Kind::A, 3);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            EXPECT_EQ(bracket_base(s, pos(s, i, i), pos(s, j, j)), i == j ? lambda : LambdaPoly());
    const auto s2 = build_spec(Kind::A, 2);
    EXPECT_EQ(bracket_base(s2, pos(s2, 1, 2), pos(s2, 2, 1)), LambdaPoly(var(s2, 1, 1) - var(s2, 2, 2)) + lambda);
    EXPECT_TRUE(bracket_base(s2, pos(s2, 1, 2), pos(s2, 1, 2)).is_zero());
}

TEST(Pva, VarLeftExamples)
{
    const auto s = build_spec(Kind::A, 2);
    const DVar e11{static_cast<std::uint32_t>(pos(s, 1, 1)), 0};
    const DVar e12{static_cast<std::uint32_t>(pos(s, 1, 2)), 0};
    EXPECT_EQ(bracket_var_left(s, e11, var(s, 1, 1, 1)), LambdaPoly::lambda_power(2));
    EXPECT_TRUE(bracket_var_left(s, e12, DiffPoly(1)).is_zero());
    EXPECT_EQ(bracket_var_left(s, e12, var(s, 1, 1) * var(s, 2, 2)),
              LambdaPoly(-var(s, 1, 2) * var(s, 2, 2) + var(s, 1, 2) * var(s, 1, 1)));
    // left derivative contributes (-lambda)^r
    const DVar e11d{e11.gen, 2};
    EXPECT_EQ(bracket_var_left(s, e11d, var(s, 1, 1)), LambdaPoly::lambda_power(3));
}

TEST(Pva, RhoBracketExamples)
{
    const auto s = build_spec(Kind::A, 2);
    const auto w2 = var(s, 1, 1) * var(s, 2, 2) + var(s, 2, 2, 1) - var(s, 2, 1);
    EXPECT_TRUE(rho_bracket(s, pos(s, 1, 2), w2).is_zero());
    EXPECT_TRUE(rho_bracket(s, pos(s, 1, 2), DiffPoly(1)).is_zero());
    EXPECT_EQ(rho_bracket(s, pos(s, 1, 2), var(s, 2, 1)), LambdaPoly(var(s, 1, 1) - var(s, 2, 2)) + lambda);
    EXPECT_THROW(rho_bracket(s, pos(s, 2, 1), w2), std::invalid_argument);
    EXPECT_THROW(rho_bracket(s, pos(s, 1, 2), var(s, 1, 2)), std::invalid_argument);
}

TEST(Pva, RhoBracketEqualsRhoOfBracket)
{
    for (const auto& c : axiom_cases) {
        const auto s = build_spec(c.kind, c.n);
        RandomPolys gen(walg::testing::positions_with(s, false), c.seed);
        for (int t = 0; t < 50; ++t) {
            const auto p = gen.poly(3, 3, 2);
            for (std::size_t x = 0; x < s.dim(); ++x) {
                if (s.part[x] != Part::plus)
                    continue;
                const auto direct = bracket_var_left(s, DVar{static_cast<std::uint32_t>(x), 0}, p)
                                        .map_coeffs([&](const DiffPoly& q) { return rho_hom(s, q); });
                ASSERT_EQ(rho_bracket(s, x, p), direct);
            }
        }
    }
}

TEST(Pva, GeneralBracketAgreesWithVarLeft)
{
    const auto s = build_spec(Kind::A, 2);
    RandomPolys gen(walg::testing::positions_with(s, true), 5);
    for (int t = 0; t < 50; ++t) {
        const auto b = gen.poly();
        const DVar v{static_cast<std::uint32_t>(gen.uniform(0, 3)), static_cast<std::uint32_t>(gen.uniform(0, 2))};
        ASSERT_EQ(bracket(s, DiffPoly::variable(v), b), bracket_var_left(s, v, b));
    }
}

TEST(Pva, Skewsymmetry)
{
    for (const auto& c : axiom_cases) {
        const auto s = build_spec(c.kind, c.n);
        RandomPolys gen(walg::testing::positions_with(s, true), c.seed + 100);
        for (int t = 0; t < trials_per_case; ++t) {
            const auto a = gen.poly(), b = gen.poly();
            ASSERT_EQ(bracket(s, a, b), -skew_substitute(bracket(s, b, a)));
        }
    }
}

TEST(Pva, Sesquilinearity)
{
    for (const auto& c : axiom_cases) {
        const auto s = build_spec(c.kind, c.n);
        RandomPolys gen(walg::testing::positions_with(s, true), c.seed + 200);
        for (int t = 0; t < trials_per_case; ++t) {
            const auto a = gen.poly(), b = gen.poly();
            const auto ab = bracket(s, a, b);
            ASSERT_EQ(bracket(s, derive(a), b), -(lambda * ab));
            ASSERT_EQ(bracket(s, a, derive(b)), lambda_plus_d_power(ab, 1));
        }
    }
}

TEST(Pva, LeibnizRules)
{
    for (const auto& c : axiom_cases) {
        const auto s = build_spec(c.kind, c.n);
        RandomPolys gen(walg::testing::positions_with(s, true), c.seed + 300);
        for (int t = 0; t < trials_per_case; ++t) {
            const auto a = gen.poly(), b = gen.poly(), d = gen.poly();
            ASSERT_EQ(bracket(s, a, b * d), bracket(s, a, b) * d + bracket(s, a, d) * b);
            ASSERT_EQ(bracket(s, a * b, d), shift_apply(bracket(s, a, d), b) + shift_apply(bracket(s, b, d), a));
        }
    }
}

TEST(Pva, CartanVariablesOfGlN)
{
    const auto s = build_spec(Kind::A, 3);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            EXPECT_EQ(bracket(s, var(s, i, i), var(s, j, j)), i == j ? lambda : LambdaPoly());
}

TEST(Pva, LambdaOperations)
{
    const auto s = build_spec(Kind::A, 1);
    const auto x = var(s, 1, 1);
    // (lambda + d)^2 x = lambda^2 x + 2 lambda x' + x''
    const auto q = lambda_plus_d_power(LambdaPoly(x), 2);
    EXPECT_EQ(q.coeff(2), x);
    EXPECT_EQ(q.coeff(1), Rational(2) * var(s, 1, 1, 1));
    EXPECT_EQ(q.coeff(0), var(s, 1, 1, 2));
    // lambda x -> (-lambda - d) x
    const auto r = skew_substitute(lambda * x);
    EXPECT_EQ(r, -(lambda * x) - LambdaPoly(var(s, 1, 1, 1)));
    EXPECT_EQ(q.degree(), 2u);
}
