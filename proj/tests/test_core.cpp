#include <gtest/gtest.h>

#include "lie4/catalog.hpp"
#include "lie4/jordan.hpp"

using namespace lie4;

TEST(Rational, StrictParse) {
    EXPECT_EQ(parse_rational("3/4"), Q(3, 4));
    EXPECT_EQ(parse_rational("-7"), Q(-7));
    EXPECT_EQ(parse_rational("0"), Q(0));
    for (const char* bad : {"2/4", "-0", "007", "3/1", "1/0", "1.5", "", "+1", "1/-2", " 1"})
        EXPECT_THROW(parse_rational(bad), Error) << bad;
}

TEST(Rational, SqrtOnlyForSquares) {
    Q s;
    EXPECT_TRUE(rational_sqrt(Q(9, 4), s));
    EXPECT_EQ(s, Q(3, 2));
    EXPECT_FALSE(rational_sqrt(Q(2), s));
    EXPECT_FALSE(rational_sqrt(Q(-1), s));
}

TEST(Linear, KernelAndInverse) {
    Mat a = Mat::from_rows({vec({1, 2, 3}), vec({2, 4, 6}), vec({1, 0, 1})}, 3);
    EXPECT_EQ(rank(a), 2u);
    auto k = kernel(a);
    ASSERT_EQ(k.size(), 1u);
    EXPECT_TRUE(is_zero(a * k[0]));
    EXPECT_EQ(det(a), 0);
    EXPECT_THROW(inverse(a), Error);
    Mat b = Mat::from_rows({vec({2, 1}), vec({1, 1})}, 2);
    EXPECT_EQ(b * inverse(b), Mat::identity(2));
}

TEST(Linear, SubspaceOps) {
    auto a = Subspace::span({unit(4, 0), unit(4, 1)}, 4);
    auto b = Subspace::span({unit(4, 1) + unit(4, 2), unit(4, 3)}, 4);
    EXPECT_EQ(intersect(a, b).dim(), 0u);
    EXPECT_TRUE(complementary(a, b));
    auto c = Subspace::span({unit(4, 1), unit(4, 2)}, 4);
    EXPECT_EQ(intersect(a, c).dim(), 1u);
    EXPECT_EQ(sum(a, c).dim(), 3u);
    EXPECT_TRUE(sum(a, c).contains(a));
}

TEST(Jordan, BlocksAndPairs) {
    Mat n = Mat::from_rows({vec({2, 1, 0}), vec({0, 2, 0}), vec({0, 0, 2})}, 3);
    auto jd = jordan_data(n);
    ASSERT_EQ(jd.factors.size(), 1u);
    EXPECT_EQ(jd.factors[0].blocks, (std::vector<int>{2, 1}));
    EXPECT_EQ(jd.reconstruct(), jd.charpoly);

    Mat rot = Mat::from_rows({vec({1, -2}), vec({2, 1})}, 2);
    auto jr = jordan_data(rot);
    ASSERT_EQ(jr.factors.size(), 1u);
    EXPECT_EQ(jr.factors[0].degree, 2);
    EXPECT_EQ(jr.factors[0].re, 1);
    EXPECT_EQ(*jr.factors[0].im, 2);

    Mat irr = Mat::from_rows({vec({0, 2}), vec({1, 0})}, 2);
    try {
        jordan_data(irr);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code, Errc::IrrationalParameterPath);
    }
    Mat cyc = Mat::from_rows({vec({0, 0, 2}), vec({1, 0, 0}), vec({0, 1, 0})}, 3);
    try {
        jordan_data(cyc);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code, Errc::IrreducibleCubicOrWorse);
    }
}

TEST(Jordan, DoubleComplexPair) {
    // rotation block repeated, once diagonal and once as a Jordan pair
    Mat d(4, 4), j(4, 4);
    for (Mat* m : {&d, &j}) {
        (*m)(0, 1) = -1;
        (*m)(1, 0) = 1;
        (*m)(2, 3) = -1;
        (*m)(3, 2) = 1;
    }
    j(0, 2) = 1;
    j(1, 3) = 1;
    EXPECT_EQ(jordan_data(d).factors[0].blocks, (std::vector<int>{1, 1}));
    EXPECT_EQ(jordan_data(j).factors[0].blocks, (std::vector<int>{2}));
}

TEST(LieAlgebra, JacobiViolationIsReported) {
    auto br = brackets(3, {{0, 1, {{2, 1}}}, {1, 2, {{1, 1}}}});
    EXPECT_THROW(LieAlgebra(3, br), Error);
    auto bad = LieAlgebra::unchecked(3, br);
    EXPECT_FALSE(validate(bad).empty());
}

TEST(LieAlgebra, DerivationsAreDerivations) {
    for (auto& in : grid()) {
        auto g = make(in);
        auto ds = derivations(g);
        for (auto& d : ds) EXPECT_TRUE(is_derivation(g, d)) << instance_name(in);
        // inner derivations span dim g - dim z
        std::vector<Vec> inner;
        for (size_t i = 0; i < 4; ++i) {
            Mat a = ad(g, unit(4, i));
            Vec flat;
            for (size_t r = 0; r < 4; ++r)
                for (size_t c = 0; c < 4; ++c) flat.push_back(a(r, c));
            inner.push_back(flat);
        }
        EXPECT_EQ(rank_of(inner), 4 - center(g).dim()) << instance_name(in);
        EXPECT_GE(ds.size(), rank_of(inner));
    }
}

TEST(LieAlgebra, ChangeBasisRoundTrip) {
    auto g = make(Family::D4_lambda, {Q(2)});
    Mat P = Mat::from_rows({vec({1, 1, 0, 0}), vec({0, 1, 2, 0}), vec({0, 0, 1, 1}), vec({1, 0, 0, 1})}, 4);
    auto h = change_basis(g, P);
    EXPECT_TRUE(validate(h).empty());
    EXPECT_TRUE(verify_isomorphism(g, h, inverse(P)));
    EXPECT_EQ(change_basis(h, inverse(P)), g);
}

TEST(Catalog, EveryGridMemberSatisfiesJacobiAndRegion) {
    for (auto& in : grid()) {
        EXPECT_TRUE(in_region(in.family, in.params)) << instance_name(in);
        EXPECT_TRUE(validate(make(in)).empty()) << instance_name(in);
        EXPECT_TRUE(is_solvable(make(in)));
        EXPECT_EQ(computed_commutator_class(make(in)), commutator_class(in.family, in.params)) << instance_name(in);
    }
    EXPECT_THROW(make(Family::R4_mu_lambda, {Q(0), Q(1)}), Error);
    EXPECT_THROW(make(Family::D4_lambda, {Q(1, 4)}), Error);
}
