#include "doctest.h"
#include "lsg/fixtures.hpp"
#include "lsg/gdf.hpp"
#include "lsg/reports.hpp"

using namespace lsg;

namespace {

bool same_doc(const GdfDocument& a, const GdfDocument& b) {
    if (!(*a.space == *b.space) || !(*a.groupoid == *b.groupoid)) return false;
    if (a.topology.has_value() != b.topology.has_value()) return false;
    if (a.topology && !(*a.topology->arrow_space() == *b.topology->arrow_space()))
        return false;
    if (a.wides.size() != b.wides.size() || a.covers.size() != b.covers.size() ||
        a.atlases.size() != b.atlases.size() ||
        a.connections.size() != b.connections.size() ||
        a.geodesics.size() != b.geodesics.size() || a.morphisms.size() != b.morphisms.size())
        return false;
    for (size_t i = 0; i < a.wides.size(); ++i)
        if (a.wides[i].first != b.wides[i].first ||
            !(a.wides[i].second == b.wides[i].second))
            return false;
    for (size_t i = 0; i < a.covers.size(); ++i) {
        if (a.covers[i].first != b.covers[i].first) return false;
        if (a.covers[i].second.members.size() != b.covers[i].second.members.size())
            return false;
        for (size_t j = 0; j < a.covers[i].second.members.size(); ++j)
            if (!(a.covers[i].second.members[j].members ==
                  b.covers[i].second.members[j].members))
                return false;
    }
    return true;
}

}  // namespace

TEST_CASE("an empty groupoid section defaults to the discrete groupoid") {
    GdfDocument doc = parse_gdf("[space]\nminup a = a\nminup b = b\n");
    CHECK(doc.space->size() == 2);
    CHECK(doc.groupoid->arrow_count() == 2);
    for (int g = 0; g < doc.groupoid->arrow_count(); ++g)
        CHECK(doc.groupoid->is_identity(g));
}

TEST_CASE("the sym2 fixture reparses to the bundled groupoid") {
    GdfDocument doc = parse_gdf(gen_fixture("sym2"));
    CHECK(*doc.groupoid == *fixtures::sym2_data().groupoid);
    REQUIRE(doc.topology.has_value());
    CHECK(*doc.topology->arrow_space() == *fixtures::sym2().arrow_space());
    CHECK(doc.covers.size() == 1);
}

TEST_CASE("parse errors carry line numbers") {
    std::string text = "[space]\nminup a = a\n\n[groupoid]\nf: a -> a\nid a = f\ninv f = f\n"
                       "compose f = f\n";  // malformed composition entry
    try {
        parse_gdf(text);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 8);
    }
}

TEST_CASE("unknown references and duplicate sections are rejected") {
    CHECK_THROWS_AS(parse_gdf("[space]\nminup a = a\n[space]\nminup a = a\n"), ParseError);
    CHECK_THROWS_AS(parse_gdf("[space]\nminup a = a\n[atlas t]\nchart = missing\n"),
                    InvalidInput);
    CHECK_THROWS_AS(parse_gdf("[space]\nminup a = b\n"), Error);
}

TEST_CASE("explicit groupoid tables parse and validate") {
    std::string text =
        "[space]\n"
        "minup a = a\n"
        "minup b = b\n"
        "[groupoid]\n"
        "ia: a -> a\n"
        "ib: b -> b\n"
        "f: a -> b\n"
        "g: b -> a\n"
        "id a = ia\n"
        "id b = ib\n"
        "inv ia = ia\ninv ib = ib\ninv f = g\ninv g = f\n"
        "compose ia ia = ia\ncompose ib ib = ib\ncompose ia f = f\ncompose f ib = f\n"
        "compose ib g = g\ncompose g ia = g\ncompose f g = ia\ncompose g f = ib\n"
        "[arrow-topology]\n"
        "minup ia = ia\nminup ib = ib\nminup f = f\nminup g = g\n";
    GdfDocument doc = parse_gdf(text);
    CHECK(doc.groupoid->arrow_count() == 4);
    CHECK_FALSE(doc.builder.has_value());
    REQUIRE(doc.topology.has_value());
    CHECK_FALSE(doc.topology_style.has_value());
    GdfDocument again = parse_gdf(print_gdf(doc));
    CHECK(print_gdf(doc) == print_gdf(again));

    // corrupting one inverse makes validation fail
    std::string bad = text;
    bad.replace(bad.find("inv f = g"), 9, "inv f = f");
    CHECK_THROWS_AS(parse_gdf(bad), InverseViolation);
}

TEST_CASE("round trip: parse . print . parse = parse") {
    for (const std::string& name : fixture_names()) {
        GdfDocument once = parse_gdf(gen_fixture(name));
        GdfDocument twice = parse_gdf(print_gdf(once));
        CHECK(same_doc(once, twice));
        CHECK(print_gdf(once) == print_gdf(twice));
    }
}

TEST_CASE("round trip through explicit tables, topologies and sections") {
    // exercise every section kind at once
    std::string text =
        "[space]\n"
        "minup o = o\n"
        "minup c = o c\n"
        "[groupoid]\n"
        "builder = product-z2\n"
        "[arrow-topology]\n"
        "style = product\n"
        "[wide w]\n"
        "carrier = o c\n"
        "arrows = e|o>c e|c>o\n"
        "[cover u]\n"
        "member = o\n"
        "member = o c\n"
        "[connection gam]\n"
        "gamma o c = r1|o>c\n"
        "[atlas at]\n"
        "chart = w\n"
        "[geodesics geo]\n"
        "cover = u\n"
        "geod 1 o c = o c\n"
        "geod 1 c o = c o\n"
        "[morphism flip]\n"
        "arrow e|o>c = r1|o>c\n"
        "arrow r1|o>c = e|o>c\n"
        "arrow e|c>o = r1|c>o\n"
        "arrow r1|c>o = e|c>o\n"
        "arrow r1|o>o = r1|o>o\n"
        "arrow r1|c>c = r1|c>c\n";
    GdfDocument doc = parse_gdf(text);
    CHECK(doc.wides.size() == 1);
    CHECK(doc.wides[0].second.arrows.count() == 4);  // identities added
    CHECK(doc.connections.size() == 1);
    CHECK(doc.morphisms.size() == 1);
    GdfDocument again = parse_gdf(print_gdf(doc));
    CHECK(same_doc(doc, again));
    CHECK(print_gdf(doc) == print_gdf(again));
}

TEST_CASE("reports are deterministic across thread counts") {
    GdfDocument doc = parse_gdf(gen_fixture("sym2"));
    ReportOptions one, four;
    four.threads = 4;
    CHECK(report_coherence(doc, one).text == report_coherence(doc, four).text);
    CHECK(report_c1(doc, one).text == report_c1(doc, four).text);
}

TEST_CASE("check output summarizes every declared object") {
    GdfDocument doc = parse_gdf(gen_fixture("z2bundle"));
    Report r = report_check(doc);
    CHECK(r.text.find("builder z2bundle") != std::string::npos);
    CHECK_FALSE(r.violation);
}

TEST_CASE("connection report covers flatness, transports and path locality") {
    std::string text =
        "[space]\n"
        "minup o = o\n"
        "minup c = o c\n"
        "[groupoid]\n"
        "builder = product-z2\n"
        "[arrow-topology]\n"
        "style = product\n"
        "[cover u]\n"
        "member = o\n"
        "member = o c\n"
        "[connection gam]\n"
        "gamma o c = r1|o>c\n"
        "[geodesics geo]\n"
        "cover = u\n"
        "geod 1 o c = o c\n"
        "geod 1 c o = c o\n";
    GdfDocument doc = parse_gdf(text);
    ReportOptions opt;
    Report r = report_connection(doc, opt);
    CHECK_FALSE(r.violation);
    CHECK(r.text.find("flat on X: yes") != std::string::npos);
    CHECK(r.text.find("gamma-path-local: yes") != std::string::npos);
    CHECK(r.text.find("c-gamma(Q|X): 4 arrows") != std::string::npos);
    CHECK(report_connection(doc, opt).text == r.text);
}

TEST_CASE("transfer report shows the anchor class structure") {
    GdfDocument doc = parse_gdf(gen_fixture("sym2"));
    ReportOptions opt;
    Report r = report_transfer(doc, opt);
    CHECK(r.text.find("at y1: {x1 x2 y1}") != std::string::npos);
    CHECK(r.text.find("at x1: {x1}") != std::string::npos);
}

TEST_CASE("coherence report with the glob oracle enabled") {
    GdfDocument doc = parse_gdf(gen_fixture("z2bundle"));
    ReportOptions opt;
    opt.oracle = true;
    Report r = report_coherence(doc, opt);
    CHECK(r.text.find("glob-oracle: match") != std::string::npos);
    CHECK(r.text.find("MISMATCH") == std::string::npos);

    // on SYM2 the oracle needs a raised arrow bound; the default refuses
    GdfDocument sym = parse_gdf(gen_fixture("sym2"));
    CHECK_THROWS_AS(report_coherence(sym, opt), TooLarge);
    opt.max_arrows = 28;
    CHECK(report_coherence(sym, opt).text.find("glob-oracle: match") != std::string::npos);
}
