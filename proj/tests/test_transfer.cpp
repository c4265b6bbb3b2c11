#include "doctest.h"
#include "helpers.hpp"
#include "lsg/fixtures.hpp"
#include "lsg/transfer.hpp"

using namespace lsg;
using lsg::testing::points_of;

TEST_CASE("pushforward along the identity is the identity") {
    GroupoidPtr q = pair_groupoid(fixtures::c4());
    GroupoidMorphism id = GroupoidMorphism::identity(q);
    for (const WideSubgroupoid& h : enumerate_wide(q, q->space()->all_points())) {
        CHECK(pushforward(id, h) == h);
        CHECK(pullback(id, h) == h);
    }
}

TEST_CASE("pullback of the full groupoid is full") {
    GroupoidPtr q = bundle_of_groups(fixtures::s2(), fixtures::z2());
    GroupoidMorphism a = anchor(q);
    WideSubgroupoid full_pair = WideSubgroupoid::full(a.cod, a.cod->space()->all_points());
    CHECK(pullback(a, full_pair) == WideSubgroupoid::full(q, q->space()->all_points()));
}

TEST_CASE("the anchor flattens vertex groups onto the diagonal") {
    GroupoidPtr q = bundle_of_groups(fixtures::d2(), fixtures::z2());
    GroupoidMorphism a = anchor(q);
    WideSubgroupoid image = pushforward(a, inn(q));
    CHECK(image.arrows == a.cod->identity_arrows());
}

TEST_CASE("anchor of a pair groupoid is an isomorphism onto itself") {
    GroupoidPtr q = pair_groupoid(fixtures::s2());
    GroupoidMorphism a = anchor(q);
    CHECK(*a.cod == *q);
    for (int g = 0; g < q->arrow_count(); ++g) CHECK(a.arrow_map[g] == g);
}

TEST_CASE("non-identity-on-objects morphisms are rejected by transfer") {
    // collapse morphism from the pair groupoid on D2 to the one-point one
    SpacePtr d2 = fixtures::d2();
    SpacePtr pt = FinSpace::validate({{"x", {"x"}}});
    GroupoidPtr q = pair_groupoid(d2);
    GroupoidPtr one = pair_groupoid(pt);
    std::vector<PointId> omap = {0, 0};
    std::vector<ArrowId> amap(q->arrow_count(), 0);
    GroupoidMorphism collapse(q, one, omap, amap);
    CHECK_THROWS_AS(pushforward(collapse, WideSubgroupoid::full(q, d2->all_points())),
                    NotIdentityOnObjects);
}

TEST_CASE("section lifts preserve bottom and top") {
    GroupoidPtr q = bundle_of_groups(fixtures::s2(), fixtures::z2());
    GroupoidMorphism a = anchor(q);
    CHECK(pushforward_section(a, bottom_section(q)) == bottom_section(a.cod));
    CHECK(pullback_section(a, top_section(a.cod)) == top_section(q));
}

TEST_CASE("the anchor image of the c1 section relates star components") {
    TopGroupoid sym = fixtures::sym2();
    SpacePtr c4 = sym.base()->space();
    LocalSubgroupoid s = c1_local(sym, fixtures::sym2_cover());
    GroupoidMorphism a = anchor(sym.base());
    LocalEquivRel ler(pushforward_section(a, s));

    // at the open points the germ relation is trivial
    CHECK(ler.classes_at(c4->point("x1")).size() == 1);
    // at y1 the component germ is transitive on minup(y1)
    auto blocks = ler.classes_at(c4->point("y1"));
    REQUIRE(blocks.size() == 1);
    CHECK(blocks[0] == c4->minup(c4->point("y1")));
}

TEST_CASE("anchor image of loc(SYM2) has two-element-fibre classes") {
    SymGroupoid sym = fixtures::sym2_data();
    LocalSubgroupoid s = loc(WideSubgroupoid::full(sym.groupoid,
                                                   sym.groupoid->space()->all_points()));
    GroupoidMorphism a = anchor(sym.groupoid);
    LocalEquivRel ler(pushforward_section(a, s));
    SpacePtr c4 = sym.groupoid->space();
    // SYM2 is transitive, so each germ relation is total on its neighborhood
    for (int x = 0; x < c4->size(); ++x) {
        auto blocks = ler.classes_at(x);
        REQUIRE(blocks.size() == 1);
        CHECK(blocks[0] == c4->minup(x));
    }
}

TEST_CASE("adjunction equivalence holds pair by pair") {
    // identity morphism: both sides collapse to s <= r
    GroupoidPtr q = pair_groupoid(fixtures::c4());
    GroupoidMorphism id = GroupoidMorphism::identity(q);
    auto sections = enumerate_local(q);
    for (const auto& s : sections)
        for (const auto& r : sections) {
            CHECK(check_adjunction(id, s, r));
            CHECK(local_le(s, pullback_section(id, r)) == local_le(s, r));
        }
}

TEST_CASE("anchor adjunction, exhaustively over bundle sections") {
    for (const SpacePtr& sp : {fixtures::d2(), fixtures::s2(), fixtures::c4()}) {
        GroupoidPtr q = bundle_of_groups(sp, fixtures::z2());
        GroupoidMorphism a = anchor(q);
        auto dom_sections = enumerate_local(q);
        auto cod_sections = enumerate_local(a.cod);
        CHECK(dom_sections.size() > 0);
        for (const auto& s : dom_sections)
            for (const auto& r : cod_sections) {
                CHECK(check_adjunction(a, s, r));
                CHECK(local_le(pushforward_section(a, s), r) ==
                      local_le(s, pullback_section(a, r)));
            }
    }
}

TEST_CASE("push and pull are monotone on stalks and satisfy unit/counit") {
    GroupoidPtr q = bundle_of_groups(fixtures::s2(), fixtures::z2());
    GroupoidMorphism a = anchor(q);
    IndexSet all = q->space()->all_points();
    auto dom_wides = enumerate_wide(q, all);
    auto cod_wides = enumerate_wide(a.cod, all);
    for (const auto& h : dom_wides) {
        CHECK(h.le(pullback(a, pushforward(a, h))));
        for (const auto& k : dom_wides)
            if (h.le(k)) CHECK(pushforward(a, h).le(pushforward(a, k)));
    }
    for (const auto& k : cod_wides) {
        CHECK(pushforward(a, pullback(a, k)).le(k));
        for (const auto& l : cod_wides)
            if (k.le(l)) CHECK(pullback(a, k).le(pullback(a, l)));
    }
}

TEST_CASE("anchor images are local equivalence relations") {
    GroupoidPtr q = bundle_of_groups(fixtures::c4(), fixtures::z2());
    GroupoidMorphism a = anchor(q);
    for (const LocalSubgroupoid& s : enumerate_local(q))
        CHECK_NOTHROW(LocalEquivRel(pushforward_section(a, s)));

    // and sections over non-pair groupoids are rejected
    CHECK_THROWS_AS(LocalEquivRel(bottom_section(q)), InvalidInput);
}
