#include <gtest/gtest.h>

#include "lie4/dictionaries.hpp"
#include "lie4/replay.hpp"

using namespace lie4;

TEST(Dictionaries, MubarakzyanovG47IsH4) {
    ExternalName n{Source::Mubarakzyanov, "g4,7", {}};
    auto g = make_external(n);
    // [e2,e3] = e1, [e1,e4] = 2e1, [e2,e4] = e2, [e3,e4] = e2 + e3
    EXPECT_EQ(g.basis_bracket(1, 2), unit(4, 0));
    EXPECT_EQ(g.basis_bracket(0, 3), Q(2) * unit(4, 0));
    EXPECT_EQ(g.basis_bracket(2, 3), unit(4, 1) + unit(4, 2));
    EXPECT_EQ(identify(g).instance, (Instance{Family::H4, {}}));
}

TEST(Dictionaries, PrintedG410BreaksJacobi) {
    ExternalName n{Source::Mubarakzyanov, "g4,10", {}};
    auto defects = validate(make_external_printed(n));
    ASSERT_FALSE(defects.empty());
    EXPECT_EQ(identify(make_external(n)).instance, (Instance{Family::AffC, {}}));
}

TEST(Dictionaries, G42IsReciprocalParameter) {
    // Oracle: ad(-e4) has a simple eigenvalue alpha and a Jordan block at 1; dividing by alpha gives r4,1/alpha.
    for (Q a : {Q(2), Q(-1, 2), Q(3)}) {
        auto r = identify(make_external({Source::Mubarakzyanov, "g4,2", {a}}));
        EXPECT_EQ(r.instance, (Instance{Family::R4_lambda, {Q(1) / a}}));
    }
}

TEST(Dictionaries, G48SplitsAtMinusOne) {
    EXPECT_EQ(identify(make_external({Source::Mubarakzyanov, "g4,8", {-1}})).instance, (Instance{Family::D4, {}}));
    EXPECT_EQ(identify(make_external({Source::Mubarakzyanov, "g4,8", {0}})).instance,
              (Instance{Family::D4_lambda, {1}}));
    // h = 1 gives lambda = 1/2
    EXPECT_EQ(identify(make_external({Source::Mubarakzyanov, "g4,8", {1}})).instance,
              (Instance{Family::D4_lambda, {Q(1, 2)}}));
}

TEST(Dictionaries, SnowS10Psi) {
    for (auto [d, c] : std::vector<std::pair<Q, Q>>{{2, 3}, {Q(1, 2), 5}}) {
        auto src = make_external({Source::Snow, "S10", {d, c}});
        auto dst = make_external({Source::Snow, "S10", {1, 0}});
        EXPECT_TRUE(verify_isomorphism(src, dst, snow_s10_psi(d, c)));
    }
    // c = d degenerates psi
    EXPECT_EQ(det(snow_s10_psi(2, 2)), 0);
}

TEST(Dictionaries, SnowS10Diagonal) {
    EXPECT_EQ(identify(make_external({Source::Snow, "S10", {Q(1, 2), Q(1, 2)}})).instance,
              (Instance{Family::RxR3_lambda, {Q(1, 2)}}));
    EXPECT_EQ(identify(make_external({Source::Snow, "S10", {2, 2}})).instance,
              (Instance{Family::RxR3_lambda, {Q(1, 2)}}));
}

TEST(Dictionaries, SnowIrrationalPathsAreRefused) {
    for (auto n : std::vector<ExternalName>{{Source::Snow, "S7", {1, 1}}, {Source::Snow, "S11", {0, 3}}}) {
        try {
            make_external(n);
            ADD_FAILURE() << external_label(n);
        } catch (const Error& e) {
            EXPECT_EQ(e.code, Errc::IrrationalParameterPath);
        }
    }
}

TEST(Dictionaries, SnowS7RationalSamples) {
    EXPECT_EQ(identify(make_external({Source::Snow, "S7", {1, Q(1, 2)}})).instance,
              (Instance{Family::RxR3p_lambda, {1}}));
    EXPECT_EQ(identify(make_external({Source::Snow, "S7", {1, Q(5, 4)}})).instance,
              (Instance{Family::RxR3p_lambda, {Q(1, 2)}}));
    EXPECT_EQ(identify(make_external({Source::Snow, "S7", {0, 4}})).instance, (Instance{Family::RxR3p_lambda, {0}}));
}

TEST(Dictionaries, UnknownSeries) {
    try {
        dictionary_row(Source::Snow, "S12");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code, Errc::UnknownName);
    }
    try {
        make_external({Source::Dozias, "g4,1", {}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code, Errc::UnknownName);
    }
}

TEST(Dictionaries, ParameterRegion) {
    try {
        make_external({Source::Mubarakzyanov, "g4,5", {Q(1, 3), Q(1, 2)}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code, Errc::ConstraintViolation);
    }
}

TEST(Dictionaries, AppendixReplay) {
    auto r = verify_table_appendix2();
    for (auto& i : r.items) EXPECT_TRUE(i.ok) << i.id << ": " << i.detail;
    EXPECT_EQ(r.errata(), 6u);
}

TEST(Replay, CommutatorTable) {
    auto r = verify_table_comm();
    for (auto& i : r.items) EXPECT_TRUE(i.ok) << i.id << ": " << i.detail;
}

TEST(Replay, MatrixRealizations) {
    auto r = verify_table_appendix1();
    for (auto& i : r.items) EXPECT_TRUE(i.ok) << i.id << ": " << i.detail;
    EXPECT_GE(r.items.size(), 12u);
}
