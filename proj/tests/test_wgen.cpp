#include "walg/wgen.hpp"

#include "naive_det.hpp"

#include <gtest/gtest.h>

using namespace walg;
using walg::testing::naive_det;

namespace {

DiffPoly var(const LieAlgebraSpec& s, const GeneratorId& g, std::uint32_t der = 0)
{
    return DiffPoly::variable(s.index_of(g), der);
}

DiffPoly lin(const LieElement& x) { return DiffPoly::from_lie(x); }

OpSeries fn(const DiffPoly& p) { return OpSeries::scalar(p); }

const OpSeries D = OpSeries::d_power(1);

void expect_members(const LieAlgebraSpec& s, const GeneratorSet& gs)
{
    for (const auto& [k, w] : gs.w)
        EXPECT_TRUE(verify_membership(s, w).member) << kind_name(s.kind) << s.rank << " w" << k;
    if (gs.y)
        EXPECT_TRUE(verify_membership(s, *gs.y).member) << kind_name(s.kind) << s.rank << " y";
}

// Orthogonal projection o_8 -> g_2 for the trace form, applied to every o_8 basis vector.
std::vector<LieElement> fold_map(const LieAlgebraSpec& o8, const LieAlgebraSpec& g2)
{
    std::vector<LieElement> emb(g2.dim());
    for (std::size_t r = 0; r < g2_root_names.size(); ++r) {
        const auto root = static_cast<G2Root>(r);
        emb[g2.index_of(GeneratorId::g2(root))] = detail::g2_in_o8(o8, root);
    }
    std::vector<std::vector<Rational>> gram(g2.dim(), std::vector<Rational>(g2.dim()));
    for (std::size_t a = 0; a < g2.dim(); ++a)
        for (std::size_t b = 0; b < g2.dim(); ++b)
            gram[a][b] = form_value(o8, emb[a], emb[b]);
    std::vector<LieElement> out(o8.dim());
    for (std::size_t p = 0; p < o8.dim(); ++p) {
        std::vector<Rational> rhs(g2.dim());
        for (std::size_t a = 0; a < g2.dim(); ++a)
            rhs[a] = form_value(o8, emb[a], LieElement::basis(p));
        const auto c = solve_combination(gram, rhs);
        for (std::size_t a = 0; a < g2.dim(); ++a)
            out[p].add(a, (*c)[a]);
    }
    return out;
}

}  // namespace

TEST(Wgen, MatrixExamples)
{
    const auto a2 = build_spec(Kind::A, 2);
    const auto m = build_matrix(a2);
    EXPECT_EQ(m.at(0, 0), D + fn(var(a2, GeneratorId::E(1, 1))));
    EXPECT_EQ(m.at(0, 1), fn(DiffPoly(1)));
    EXPECT_EQ(m.at(1, 0), fn(var(a2, GeneratorId::E(2, 1))));
    EXPECT_EQ(m.at(1, 1), D + fn(var(a2, GeneratorId::E(2, 2))));

    const auto b1 = build_spec(Kind::B, 1);
    const auto mb = build_matrix(b1);
    EXPECT_EQ(mb.at(1, 1), D);
    EXPECT_EQ(mb.at(1, 2), fn(DiffPoly(-1)));
    EXPECT_EQ(mb.at(0, 1), fn(DiffPoly(1)));
    EXPECT_TRUE(mb.at(2, 0).is_zero());  // F_{1'1} = 0 in o_3

    const auto g2 = build_spec(Kind::G2, 2);
    const auto mg = build_matrix(g2);
    EXPECT_EQ(mg.at(1, 0), fn(make_rational(1, 3) * var(g2, GeneratorId::g2(G2Root::Yb))));
    EXPECT_EQ(mg.at(3, 0), fn(make_rational(2, 3) * var(g2, GeneratorId::g2(G2Root::Ya2b))));
    EXPECT_EQ(mg.at(3, 3), D);
    EXPECT_TRUE(mg.has_determinant_shape());
}

TEST(Wgen, TypeDMatrixLayout)
{
    const auto s = build_spec(Kind::D, 3);
    const auto m = build_matrix(s);
    ASSERT_EQ(m.size(), 7u);
    EXPECT_EQ(m.at(2, 4), Rational(-2) * D);
    EXPECT_EQ(m.at(3, 3), OpSeries::d_power(-1));
    for (std::size_t c = 0; c < 7; ++c)
        if (c != 3) {
            EXPECT_TRUE(m.at(3, c).is_zero());
            EXPECT_TRUE(m.at(c, 3).is_zero());
        }
    EXPECT_EQ(m.at(2, 0), fn(lin(element(s, 3, 1) - element(s, 4, 1))));
    EXPECT_EQ(m.at(4, 4), D + fn(lin(element(s, 4, 4))));
    EXPECT_EQ(m.at(6, 4), fn(lin(element(s, 6, 4) - element(s, 6, 3))));
    EXPECT_EQ(m.at(5, 5), D + fn(lin(element(s, 5, 5))));
    EXPECT_EQ(m.at(5, 6), fn(DiffPoly(-1)));
    EXPECT_FALSE(m.has_determinant_shape());
}

TEST(Wgen, GeneratorExamples)
{
    const auto a1 = build_spec(Kind::A, 1);
    const auto g1 = generators(a1);
    EXPECT_EQ(g1.w.at(1), var(a1, GeneratorId::E(1, 1)));

    const auto a2 = build_spec(Kind::A, 2);
    const auto g2 = generators(a2);
    const auto e11 = var(a2, GeneratorId::E(1, 1)), e22 = var(a2, GeneratorId::E(2, 2));
    EXPECT_EQ(g2.w.at(1), e11 + e22);
    EXPECT_EQ(g2.w.at(2), e11 * e22 + var(a2, GeneratorId::E(2, 2), 1) - var(a2, GeneratorId::E(2, 1)));
    EXPECT_EQ(g2.designated, (std::vector<int>{1, 2}));

    const auto g = generators(build_spec(Kind::G2, 2));
    EXPECT_EQ(g.w.size(), 6u);
    EXPECT_EQ(g.designated, (std::vector<int>{2, 6}));
    const auto c2 = generators(build_spec(Kind::C, 2));
    EXPECT_EQ(c2.w.size(), 3u);
    EXPECT_EQ(c2.designated, (std::vector<int>{2, 4}));
}

TEST(Wgen, MembershipAtSmallRanks)
{
    for (int n = 1; n <= 3; ++n) {
        const auto s = build_spec(Kind::A, n);
        expect_members(s, generators(s));
    }
    for (int n = 1; n <= 2; ++n) {
        const auto b = build_spec(Kind::B, n);
        expect_members(b, generators(b));
        const auto c = build_spec(Kind::C, n);
        expect_members(c, generators(c));
    }
    for (int n = 2; n <= 3; ++n) {
        const auto d = build_spec(Kind::D, n);
        expect_members(d, generators(d));
    }
}

TEST(Wgen, MembershipWitness)
{
    const auto s = build_spec(Kind::A, 2);
    const auto cert = verify_membership(s, var(s, GeneratorId::E(2, 1)));
    ASSERT_FALSE(cert.member);
    ASSERT_FALSE(cert.entries.empty());
    EXPECT_EQ(cert.entries.back().x, s.index_of(GeneratorId::E(1, 2)));
    EXPECT_FALSE(cert.entries.back().value.is_zero());

    const auto ok = verify_membership(s, generators(s).w.at(2));
    EXPECT_TRUE(ok.member);
    EXPECT_EQ(ok.entries.size(), 1u);

    // a product of a member with a non-member is not a member
    const auto b = build_spec(Kind::B, 1);
    const auto w2 = generators(b).w.at(2);
    EXPECT_FALSE(verify_membership(b, w2 * lin(element(b, 2, 1))).member);
}

TEST(Wgen, TypeDStructure)
{
    for (int n = 2; n <= 4; ++n) {
        const auto s = build_spec(Kind::D, n);
        const auto gs = generators(s);
        LieElement y1;
        for (int i = 1; i <= n; ++i)
            y1 += element(s, i, i);
        ASSERT_EQ(gs.y_coeffs.size(), static_cast<std::size_t>(n + 1));
        EXPECT_EQ(gs.y_coeffs[1], lin(y1));
        EXPECT_EQ(gs.ybar_coeffs[1], -lin(y1));
        EXPECT_FALSE(check_d_parity(gs));
        EXPECT_FALSE(check_d_tail(gs));
        EXPECT_EQ(*gs.y, gs.y_coeffs.back());
        EXPECT_EQ(gs.w.size(), static_cast<std::size_t>(2 * n - 2));
        EXPECT_TRUE(gs.op.truncated());
        EXPECT_EQ(gs.op.floor(), -default_truncation);
    }
}

TEST(Wgen, TypeDTailFollowsTruncationDepth)
{
    const auto s = build_spec(Kind::D, 2);
    for (int k : {1, 2, 6}) {
        const auto gs = generators(s, k);
        EXPECT_EQ(gs.op.floor(), -k);
        EXPECT_FALSE(check_d_tail(gs));
        EXPECT_EQ(gs.w, generators(s).w);
    }
    EXPECT_THROW(generators(s, 0), std::invalid_argument);
}

TEST(Wgen, TypeDAgreesWithRowDeterminantAtRankTwo)
{
    const auto s = build_spec(Kind::D, 2);
    const auto gs = generators(s);
    const auto row = naive_det(build_matrix(s), false);
    const int floor = std::max(row.floor().value_or(-default_truncation), gs.op.floor().value_or(-default_truncation));
    for (int k = floor; k <= 3; ++k)
        EXPECT_EQ(row.coeff(k), gs.op.coeff(k)) << k;
}

TEST(Wgen, LeadingParts)
{
    const std::vector<std::pair<Kind, int>> specs = {{Kind::A, 1}, {Kind::A, 3}, {Kind::B, 2}, {Kind::C, 2},
                                                     {Kind::D, 2}, {Kind::D, 3}, {Kind::G2, 2}};
    for (const auto& [kind, n] : specs) {
        const auto s = build_spec(kind, n);
        const auto parts = leading_part_check(s, generators(s));
        EXPECT_EQ(parts.size(), static_cast<std::size_t>(s.kind == Kind::A ? n : s.rank));
        for (const auto& lp : parts)
            EXPECT_TRUE(lp.ratio.has_value()) << kind_name(kind) << n << " " << lp.label;
    }
    // w_2 of gl_3 has linear part -f
    const auto a3 = build_spec(Kind::A, 3);
    const auto parts = leading_part_check(a3, generators(a3));
    EXPECT_EQ(*parts[1].ratio, Rational(-1));
}

TEST(Wgen, ElementaryFamilyRoutesAgree)
{
    const std::vector<std::pair<Kind, int>> specs = {{Kind::A, 1}, {Kind::A, 2}, {Kind::A, 3}, {Kind::B, 1},
                                                     {Kind::B, 2}, {Kind::C, 1}, {Kind::C, 2}, {Kind::G2, 2}};
    for (const auto& [kind, n] : specs) {
        const auto s = build_spec(kind, n);
        const int order = operator_order(s);
        const auto m = build_matrix(s);
        const auto rec = e_recurrence(m, order + 1);
        const auto comb = e_combinatorial(m, order + 1);
        const auto det = e_from_determinant(coldet(m), order, order + 1);
        for (int k = 0; k <= order + 1; ++k) {
            ASSERT_EQ(rec[static_cast<std::size_t>(k)], comb[static_cast<std::size_t>(k)]) << kind_name(kind) << n << " " << k;
            ASSERT_EQ(rec[static_cast<std::size_t>(k)], det[static_cast<std::size_t>(k)]) << kind_name(kind) << n << " " << k;
        }
        EXPECT_TRUE(rec.back().is_zero());
    }
}

TEST(Wgen, ElementaryFamilyExamples)
{
    const auto a1 = build_spec(Kind::A, 1);
    const auto e = e_family(a1, 1);
    const auto h = h_family(a1, 1);
    EXPECT_EQ(e[1], D + fn(var(a1, GeneratorId::E(1, 1))));
    EXPECT_EQ(h[1], e[1]);

    const auto a2 = build_spec(Kind::A, 2);
    const auto gs = generators(a2);
    const auto e2 = e_family(a2, 2);
    OpSeries expected = OpSeries::d_power(2);
    expected.add(1, gs.w.at(1));
    expected.add(0, gs.w.at(2));
    EXPECT_EQ(e2[2], expected);
}

TEST(Wgen, BinomialRelationForGlN)
{
    for (int n = 1; n <= 3; ++n) {
        const auto s = build_spec(Kind::A, n);
        const auto gs = generators(s);
        const auto e = e_family(s, n);
        for (int m = 0; m <= n; ++m)
            for (int i = 0; i <= m; ++i) {
                const DiffPoly w = m == i ? DiffPoly(1) : gs.w.at(m - i);
                EXPECT_EQ(e[static_cast<std::size_t>(m)].coeff(i), binomial(n - m + i, i) * w) << n << m << i;
            }
    }
}

TEST(Wgen, MacMahonIdentity)
{
    EXPECT_TRUE(macmahon_check(build_spec(Kind::A, 1), 1).ok);
    EXPECT_TRUE(macmahon_check(build_spec(Kind::A, 3), 3).ok);
    EXPECT_TRUE(macmahon_check(build_spec(Kind::B, 2), 4).ok);
    EXPECT_TRUE(macmahon_check(build_spec(Kind::C, 2), 4).ok);
    const auto d2 = build_spec(Kind::D, 2);
    EXPECT_TRUE(macmahon_check(d2, family_bound(d2)).ok);
    EXPECT_THROW(macmahon_check(d2, family_bound(d2) + 1), std::invalid_argument);

    // negative control: a perturbed e_1 breaks the identity at degree 1
    const auto a2 = build_spec(Kind::A, 2);
    auto e = e_family(a2, 3);
    const auto h = h_family(a2, 3);
    e[1] += D;
    const auto bad = macmahon_check(h, e, 3);
    EXPECT_FALSE(bad.ok);
    EXPECT_EQ(bad.failing_degree, 1);
}

TEST(Wgen, HConstants)
{
    const auto a2 = build_spec(Kind::A, 2);
    const auto gs = generators(a2);
    const auto hc = h_constants(a2, 2);
    const auto& w1 = gs.w.at(1);
    EXPECT_EQ(hc[0], w1);
    // h_2 = e_1 e_1 - e_2 with e_1 = w_1 + 2d
    EXPECT_EQ(hc[1], w1 * w1 + Rational(2) * derive(w1) - gs.w.at(2));

    const auto a3 = build_spec(Kind::A, 3);
    for (const auto& p : h_constants(a3, 4))
        EXPECT_TRUE(verify_membership(a3, p).member);
}

TEST(Wgen, G2Membership)
{
    const auto g2 = build_spec(Kind::G2, 2);
    const auto gs = generators(g2);
    EXPECT_EQ(gs.w.size(), 6u);
    expect_members(g2, gs);
}

TEST(Wgen, G2AgreesWithFoldedTypeD)
{
    const auto o8 = build_spec(Kind::D, 4);
    const auto g2 = build_spec(Kind::G2, 2);
    const auto fold = fold_map(o8, g2);
    EXPECT_EQ(fold[o8.index_of(GeneratorId::F(2, 1))], make_rational(1, 3) * element(g2, G2Root::Yb));
    EXPECT_EQ(fold[o8.index_of(GeneratorId::F(7, 1))], element(g2, G2Root::Y2a3b));
    const auto go = generators(o8);
    const auto gg = generators(g2);
    auto image = [&](const DiffPoly& q) {
        return substitute(q, [&](DVar v) { return DiffPoly::from_lie(fold[v.gen], v.der); });
    };
    for (int k = 2; k <= 7; ++k)
        EXPECT_EQ(image(go.w.at(k)), gg.w.at(k)) << "w" << k;
    EXPECT_TRUE(image(*go.y).is_zero());
}

TEST(Wgen, G2NonembeddingScalesBreakMembership)
{
    // Rescaling the Y_{a+2b}, Y_{a+3b}, Y_{2a+3b} entries to 4/9 keeps w_2..w_5 but not w_6.
    const auto g2 = build_spec(Kind::G2, 2);
    auto m = build_matrix(g2);
    const std::vector<std::pair<std::size_t, std::size_t>> ya2b = {{3, 0}, {4, 1}, {5, 2}, {6, 3}};
    const std::vector<std::pair<std::size_t, std::size_t>> high = {{4, 0}, {5, 0}, {6, 1}, {6, 2}};
    for (auto [r, c] : ya2b)
        m.at(r, c) = make_rational(2, 3) * m.at(r, c);
    for (auto [r, c] : high)
        m.at(r, c) = make_rational(2, 9) * m.at(r, c);
    const auto op = coldet(m);
    for (int k = 2; k <= 5; ++k)
        EXPECT_TRUE(verify_membership(g2, op.coeff(7 - k)).member) << k;
    EXPECT_FALSE(verify_membership(g2, op.coeff(1)).member);
}
