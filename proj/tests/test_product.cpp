#include <gtest/gtest.h>

#include "lie4/product.hpp"

using namespace lie4;

namespace {

Vec e(size_t i) { return unit(4, i); }

std::vector<Instance> search_sample() {
    return {{Family::R4, {}},           {Family::AffRxAffR, {}},          {Family::RxR3_gen, {}},
            {Family::N4, {}},           {Family::AffC, {}},               {Family::R4_gen, {}},
            {Family::R4_lambda, {Q(0)}}, {Family::R4p_mu_lambda, {Q(1), Q(0)}}, {Family::D4, {}},
            {Family::D4_lambda, {Q(1)}}, {Family::D4p_lambda, {Q(1, 2)}}, {Family::H4, {}}};
}

}  // namespace

TEST(Product, DecorationFollowsIdeals) {
    EXPECT_EQ(glyph(true, true), "×");
    EXPECT_EQ(glyph(false, true), "⋉");
    EXPECT_EQ(glyph(true, false), "⋈");
    EXPECT_EQ(glyph(false, false), "⋈");
}

TEST(Product, EndomorphismRoundTrip) {
    LieAlgebra g = make(Family::D4, {});
    auto ps = product_from_decomposition(g, {e(0), e(1)}, {e(2), e(3)});
    EXPECT_TRUE(is_integrable_product(g, ps.E));
    auto back = product_from_endomorphism(g, ps.E);
    EXPECT_EQ(back.plus, ps.plus);
    EXPECT_EQ(back.minus, ps.minus);
    EXPECT_EQ(glyph(back), "⋉");
}

TEST(Product, ErrorsAreTyped) {
    LieAlgebra g = make(Family::D4, {});
    try {
        product_from_decomposition(g, {e(0), e(1)}, {e(1), e(3)});
        FAIL();
    } catch (const Error& x) {
        EXPECT_EQ(x.code, Errc::NotComplementary);
    }
    try {
        product_from_decomposition(g, {e(1), e(2)}, {e(0), e(3)});
        FAIL();
    } catch (const Error& x) {
        EXPECT_EQ(x.code, Errc::NotSubalgebra);
    }
    try {
        is_integrable_product(g, Mat::identity(4));
        FAIL();
    } catch (const Error& x) {
        EXPECT_EQ(x.code, Errc::TrivialInvolution);
    }
    Mat N = Mat::identity(4);
    N(0, 1) = 1;
    try {
        is_integrable_product(g, N);
        FAIL();
    } catch (const Error& x) {
        EXPECT_EQ(x.code, Errc::NotInvolutive);
    }
}

TEST(Product, NonClosedEigenspaceIsNotIntegrable) {
    LieAlgebra g = make(Family::D4, {});
    Mat E = Mat::identity(4);
    E(1, 1) = -1;
    E(3, 3) = -1;  // +1: <e0,e2>, -1: <e1,e3>; [e0,e2] = -e2 closes, [e1,e3] = 0 closes
    EXPECT_TRUE(is_integrable_product(g, E));
    E = Mat::identity(4);
    E(0, 0) = -1;
    E(3, 3) = -1;  // +1: <e1,e2> with [e1,e2] = e3 outside
    EXPECT_FALSE(is_integrable_product(g, E));
}

// Whenever both sides are abelian, g' is abelian.
TEST(Product, AbelianPairsForceTwoStep) {
    for (auto& in : grid()) {
        if (info(in.family).dim != 4) continue;
        LieAlgebra g = make(in);
        ParacomplexSearch s(g);
        auto r = s.run(DecompKind::R2R2);
        if (r.status != SearchStatus::Found) continue;
        EXPECT_TRUE(abelian_pair_two_step(g, *r.cert.decomposition)) << instance_name(in);
    }
}

TEST(Product, TwoStepRejectsNonAbelianSides) {
    LieAlgebra g = make(Family::D4, {});
    auto ps = product_from_decomposition(g, {e(0), e(1)}, {e(2), e(3)});
    EXPECT_THROW(abelian_pair_two_step(g, ps), Error);
}

TEST(Product, GrassmannCellsCount) {
    auto c = grass_cells(2, 4);
    ASSERT_EQ(c.size(), 6u);
    std::vector<size_t> nf;
    for (auto& x : c) nf.push_back(x.free.size());
    EXPECT_EQ(nf, (std::vector<size_t>{4, 3, 2, 2, 1, 0}));
    EXPECT_EQ(grass_cells(1, 3).size(), 3u);
}

// Empty cells never contain a grid subalgebra; sampled cell points are subalgebras of the type.
TEST(Product, CellSolverAgreesWithBruteForce) {
    for (auto& in : search_sample()) {
        LieAlgebra g = make(in);
        for (SubType t : {SubType::Abelian, SubType::Aff, SubType::Any}) {
            auto cells = two_dim_subalgebra_cells(g, t);
            std::map<std::vector<size_t>, size_t> hits;
            oracle_scan(g, t, [&](const long u[4], const long v[4]) {
                auto S = Subspace::span({oracle_vec(u), oracle_vec(v)}, 4);
                ++hits[S.pivots()];
            });
            for (auto& c : cells) {
                EXPECT_NE(c.sol.status, SolveStatus::Undecided) << instance_name(in) << " " << c.label;
                auto gc = grass_cells(2, 4);
                size_t idx = size_t(&c - &cells[0]);
                if (c.sol.status == SolveStatus::Empty) {
                    EXPECT_EQ(hits[gc[idx].pivots], 0u) << instance_name(in) << " " << subtype_name(t) << " " << c.label;
                }
                for (auto& S : sample_subalgebras(c, 8)) {
                    EXPECT_TRUE(is_subalgebra(g, S));
                    if (t == SubType::Abelian) {
                        EXPECT_TRUE(is_abelian(g, S));
                    }
                    if (t == SubType::Aff) {
                        EXPECT_FALSE(is_abelian(g, S));
                    }
                    EXPECT_EQ(S.pivots(), gc[idx].pivots);
                }
            }
        }
    }
}

TEST(Product, CertificatesSurviveBruteForce) {
    for (auto& in : search_sample()) {
        LieAlgebra g = make(in);
        ParacomplexSearch s(g);
        for (DecompKind k : {DecompKind::R2R2, DecompKind::AffR2, DecompKind::AffAff}) {
            auto r = s.run(k);
            ASSERT_NE(r.status, SearchStatus::Undecided) << instance_name(in) << " " << kind_name(k);
            if (r.status == SearchStatus::Found) {
                auto ty = decomposition_type(g, *r.cert.decomposition);
                EXPECT_EQ(ty.kind, k);
                continue;
            }
            auto oc = oracle_recheck_search(g, r, k);
            EXPECT_EQ(oc.violations, 0u) << instance_name(in) << " " << kind_name(k) << " " << oc.first_violation;
        }
    }
}

TEST(Product, ForcedVectorOnPrimedD4) {
    for (Q l : {Q(0), Q(1, 2), Q(1), Q(2)}) {
        LieAlgebra g = make(Family::D4p_lambda, {l});
        auto c = forced_vector_certificate(g, e(3), SubType::Any);
        EXPECT_EQ(c.kind, CertKind::ForcedVector) << to_string(l);
        EXPECT_EQ(c.cells.size(), 3u);
        EXPECT_EQ(oracle_recheck(g, c, SubType::Any).violations, 0u);
    }
    // and a vector that is not forced
    auto c = forced_vector_certificate(make(Family::D4p_lambda, {Q(1)}), e(0), SubType::Any);
    EXPECT_EQ(c.kind, CertKind::Undecided);
}

TEST(Product, ConfinementInDerivedAlgebra) {
    LieAlgebra g = make(Family::R4_gen, {});
    auto c = confinement_certificate(g, derived(g).vectors(), SubType::Abelian);
    EXPECT_EQ(c.kind, CertKind::Confinement);
    auto o = oracle_recheck(g, c, SubType::Abelian);
    EXPECT_GT(o.visited, 0u);
    EXPECT_EQ(o.violations, 0u);
}

TEST(Product, AffSubalgebrasAreNormalized) {
    LieAlgebra g = make(Family::H4, {});
    auto r = aff_subalgebra_search(g);
    ASSERT_EQ(r.status, SolveStatus::Parametrized);
    for (auto& [u, v] : r.samples) EXPECT_EQ(g.bracket(u, v), v);
    EXPECT_EQ(aff_subalgebra_search(make(Family::N4, {})).status, SolveStatus::Empty);
}

TEST(Product, TablePcReplay) {
    auto rep = verify_table_pc(true);
    for (auto& i : rep.items) EXPECT_TRUE(i.ok) << i.id << ": " << i.detail;
    EXPECT_EQ(rep.errata(), 1u);
}

TEST(Product, TableOneThreeReplay) {
    auto rep = verify_table_13();
    for (auto& i : rep.items) EXPECT_TRUE(i.ok) << i.id << ": " << i.detail;
}

TEST(Product, SemidirectReplay) {
    auto rep = verify_semidirect_props();
    for (auto& i : rep.items) EXPECT_TRUE(i.ok) << i.id << ": " << i.detail;
}

// The g_alpha parameter map is checked at points beyond the replay set.
TEST(Product, GAlphaIdentifiesAcrossTheLine) {
    for (Q a : {Q(-3), Q(-2), Q(-3, 4), Q(-1, 4), Q(0), Q(1, 4), Q(3, 4), Q(5, 4), Q(5, 2), Q(7)}) {
        auto r = identify(make_g_alpha(a));
        EXPECT_EQ(r.instance, g_alpha_expected(a)) << to_string(a) << " -> " << instance_name(r.instance);
        EXPECT_TRUE(r.verified);
    }
}
