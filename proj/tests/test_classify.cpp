#include <gtest/gtest.h>

#include <random>

#include "lie4/classify.hpp"

using namespace lie4;

namespace {

Mat random_invertible(std::mt19937& rng, size_t n) {
    std::uniform_int_distribution<int> d(-3, 3);
    for (;;) {
        Mat p(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) p(i, j) = d(rng);
        if (det(p) != 0) return p;
    }
}

}  // namespace

TEST(Identify, CatalogRoundTrip) {
    for (auto& in : grid()) {
        auto r = identify(make(in));
        EXPECT_EQ(r.instance, in) << instance_name(in) << " -> " << instance_name(r.instance);
        EXPECT_TRUE(verify_isomorphism(make(in), make(r.instance), r.witness));
    }
    for (auto& in : grid3()) {
        auto r = identify3(make(in));
        EXPECT_EQ(r.instance, in) << instance_name(in) << " -> " << instance_name(r.instance);
    }
}

TEST(Identify, InvariantUnderRandomBasisChange) {
    std::mt19937 rng(20261019);
    for (auto& in : grid()) {
        auto g = make(in);
        for (int k = 0; k < 20; ++k) {
            auto h = change_basis(g, random_invertible(rng, 4));
            auto r = identify(h);
            EXPECT_EQ(r.instance, in) << instance_name(in);
            EXPECT_TRUE(verify_isomorphism(h, make(r.instance), r.witness));
        }
    }
}

TEST(Identify, RawParametersCanonicalize) {
    // r4,mu,lambda with parameters out of order lands on the ordered representative
    auto r = identify(make_raw(Family::R4_mu_lambda, {Q(3), Q(2)}));
    EXPECT_EQ(r.instance, (Instance{Family::R4_mu_lambda, {Q(1, 3), Q(2, 3)}}));
    auto s = identify(make_raw(Family::D4_lambda, {Q(1, 4)}));
    EXPECT_EQ(s.instance, (Instance{Family::D4_lambda, {Q(3, 4)}}));
    auto t = identify(make_raw(Family::R4p_mu_lambda, {Q(-1), Q(2)}));
    EXPECT_EQ(t.instance.family, Family::R4p_mu_lambda);
    EXPECT_GT(t.instance.params[0], 0);
}

TEST(Identify, RejectsNonSolvable) {
    // sl2 + R
    auto br = brackets(4, {{0, 1, {{2, 2}}}, {0, 2, {{2, -2}}}, {1, 2, {{0, 1}}}});
    br = brackets(4, {{0, 1, {{1, 2}}}, {0, 2, {{2, -2}}}, {1, 2, {{0, 1}}}});
    LieAlgebra g(4, br);
    try {
        identify(g);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code, Errc::NotSolvable);
    }
}

TEST(Identify, IrrationalRotationIsRefused) {
    // ad(e0) on R^3 with eigenvalues 1 and 1 +- i sqrt(2)
    Mat a = Mat::from_rows({vec({1, 0, 0}), vec({0, 1, -2}), vec({0, 1, 1})}, 3);
    try {
        identify(semidirect_line(a));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code, Errc::IrrationalParameterPath);
    }
}

TEST(Identify, FingerprintSeparatesGrid) {
    // Fingerprints agree on isomorphic copies.
    std::mt19937 rng(7);
    for (auto& in : grid()) {
        auto g = make(in);
        EXPECT_EQ(fingerprint(g), fingerprint(change_basis(g, random_invertible(rng, 4)))) << instance_name(in);
    }
}

TEST(ScalarConjugate, AgreesWithIdentification) {
    std::vector<Mat> ms = {
        Mat::from_rows({vec({1, 0, 0}), vec({0, 2, 0}), vec({0, 0, 3})}, 3),
        Mat::from_rows({vec({2, 0, 0}), vec({0, 4, 0}), vec({0, 0, 6})}, 3),
        Mat::from_rows({vec({1, 1, 0}), vec({0, 1, 0}), vec({0, 0, 1})}, 3),
        Mat::from_rows({vec({3, 1, 0}), vec({0, 3, 0}), vec({0, 0, 3})}, 3),
        Mat::from_rows({vec({0, 1, 0}), vec({0, 0, 1}), vec({0, 0, 0})}, 3),
        Mat::from_rows({vec({0, -1, 0}), vec({1, 0, 0}), vec({0, 0, 1})}, 3),
        Mat::from_rows({vec({0, -2, 0}), vec({2, 0, 0}), vec({0, 0, 2})}, 3),
        Mat::from_rows({vec({-1, 0, 0}), vec({0, -2, 0}), vec({0, 0, -3})}, 3),
    };
    for (auto& a : ms)
        for (auto& b : ms) {
            auto sc = scalar_conjugate(a, b);
            bool same = identify(semidirect_line(a)).instance == identify(semidirect_line(b)).instance;
            EXPECT_EQ(sc.has_value(), same);
            if (sc) {
                EXPECT_EQ(sc->P * a, (sc->gamma * b) * sc->P);
            }
        }
}

TEST(Identify, MatrixRealizationsIdentifyToTheirFamily) {
    for (auto& in : grid()) {
        if (!info(in.family).indecomposable) continue;
        for (auto& mats : matrix_realizations(in.family, in.params)) {
            auto h = from_matrices(mats);
            EXPECT_EQ(identify(h).instance, in) << instance_name(in) << "\n" << describe(h);
        }
    }
}
