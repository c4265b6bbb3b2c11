// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "lsg/fixtures.hpp"
#include "lsg/gdf.hpp"
#include "lsg/reports.hpp"
#include "lsg/transfer.hpp"

using namespace lsg;
using lsg::testing::all_covers;
using lsg::testing::points_of;

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::runtime_error(msg);
}

struct NamedGroupoid {
    std::string name;
    GroupoidPtr q;
};

// Fixtures for the order-theoretic criteria, all within the enumeration
// guard of 24 non-identity arrows.
std::vector<NamedGroupoid> small_fixtures() {
    std::vector<std::vector<PointId>> swap_action = {{0, 1}, {1, 0}};
    return {
        {"pair(D2)", pair_groupoid(fixtures::d2())},
        {"pair(S2)", pair_groupoid(fixtures::s2())},
        {"pair(C4)", pair_groupoid(fixtures::c4())},
        {"z2bundle(D2)", bundle_of_groups(fixtures::d2(), fixtures::z2())},
        {"z2bundle(S2)", bundle_of_groups(fixtures::s2(), fixtures::z2())},
        {"z2bundle(C4)", bundle_of_groups(fixtures::c4(), fixtures::z2())},
        {"z2xPair(S2)", product_with_pair(fixtures::z2(), fixtures::s2())},
        {"action(D2,z2)", action_groupoid(fixtures::d2(), fixtures::z2(), swap_action)},
    };
}

int nonid_count(const GroupoidPtr& q) {
    int n = 0;
    for (int g = 0; g < q->arrow_count(); ++g)
        if (!q->is_identity(g)) ++n;
    return n;
}

// A1: glob -| loc and the anchor adjunction, exhaustively.
void criterion_galois() {
    long pairs = 0;
    for (const auto& [name, q] : small_fixtures()) {
        require(nonid_count(q) <= 24, name + " exceeds the arrow guard");
        auto sections = enumerate_local(q);
        auto wides = enumerate_wide(q, q->space()->all_points());
        for (const auto& s : sections)
            for (const auto& h : wides) {
                require(local_le(s, loc(h)) == glob(s).le(h),
                        "glob -| loc fails on " + name);
                ++pairs;
            }
        GroupoidMorphism a = anchor(q);
        auto cod_sections = enumerate_local(a.cod);
        for (const auto& s : sections)
            for (const auto& r : cod_sections) {
                require(check_adjunction(a, s, r), "anchor adjunction fails on " + name);
                ++pairs;
            }
    }
    require(pairs > 1500, "adjunction check covered too little");
}

// A2: the glob fast path equals the defining intersection, on every fixture
// including the symmetry groupoid of the double cover.
void criterion_glob_oracle() {
    for (const auto& [name, q] : small_fixtures())
        for (const auto& s : enumerate_local(q))
            require(glob(s) == glob_oracle(s), "glob oracle mismatch on " + name);

    GroupoidPtr sym = fixtures::sym2_data().groupoid;
    long n = 0;
    for (const auto& s : enumerate_local(sym, 28)) {
        require(glob(s) == glob_oracle(s, 28), "glob oracle mismatch on SYM2");
        ++n;
    }
    require(n > 0, "no SYM2 sections enumerated");
}

// A3: glob(loc(Q)) = Inn(Q) over discrete spaces, strictly below Q when Q
// has cross arrows.
void criterion_discrete_inn() {
    std::vector<std::vector<PointId>> swap_action = {{0, 1}, {1, 0}};
    std::vector<NamedGroupoid> discrete_fixtures = {
        {"pair(D2)", pair_groupoid(fixtures::d2())},
        {"z2bundle(D2)", bundle_of_groups(fixtures::d2(), fixtures::z2())},
        {"action(D2,z2)", action_groupoid(fixtures::d2(), fixtures::z2(), swap_action)},
    };
    for (const auto& [name, q] : discrete_fixtures) {
        WideSubgroupoid full = WideSubgroupoid::full(q, q->space()->all_points());
        require(glob(loc(full)) == inn(q), "glob(loc(Q)) != inn(Q) on " + name);
    }
    GroupoidPtr pd2 = pair_groupoid(fixtures::d2());
    require(!(inn(pd2).arrows == pd2->all_arrows()),
            "expected inn strictly below the pair groupoid");
}

// A4: the presheaf of wide subgroupoids is a sheaf for bundles of groups and
// fails uniqueness for the pair groupoid of the discrete 2-point space.
void criterion_sheaf() {
    for (const SpacePtr& sp : {fixtures::d2(), fixtures::s2(), fixtures::c4()}) {
        require(presheaf_is_sheaf(bundle_of_groups(sp, fixtures::z2())).is_sheaf,
                "bundle presheaf should be a sheaf");
        require(presheaf_is_sheaf(bundle_of_groups(sp, FinGroup::cyclic(1))).is_sheaf,
                "discrete groupoid presheaf should be a sheaf");
    }
    SheafCheck check = presheaf_is_sheaf(pair_groupoid(fixtures::d2()));
    require(!check.is_sheaf, "pair(D2) presheaf should not be a sheaf");
    require(check.gluings.size() >= 2, "expected a uniqueness failure witness");
}

// A5: star connectivity of SYM2 and propriety of the restriction to the
// circle minus a closed point, both computed.
void criterion_sym2() {
    TopGroupoid sym = fixtures::sym2();
    require(is_star_connected(sym), "SYM2 should be star path connected");
    SpacePtr c4 = sym.base()->space();
    IndexSet u = points_of(c4, {"x1", "x2", "y1"});
    WideSubgroupoid c = c1(sym, u);
    IndexSet full = sym.base()->arrows_within(u);
    require(c.arrows.subset_of(full) && !(c.arrows == full),
            "c1 of the punctured circle should be proper");
}

// A6: generation along covers for stars and for transport subgroupoids.
void criterion_generation() {
    std::vector<TopGroupoid> star_connected = {
        indiscrete_arrow_topology(pair_groupoid(fixtures::i2())),
        pair_product_topology(pair_groupoid(fixtures::s2())),
        pair_product_topology(pair_groupoid(fixtures::c4())),
        fixtures::sym2(),
    };
    for (const TopGroupoid& q : star_connected) {
        require(is_star_connected(q), "fixture expected star connected");
        const SpacePtr& sp = q.base()->space();
        for (const auto& cover : all_covers(sp)) {
            IndexSet seed(q.base()->arrow_count());
            for (const IndexSet& u : cover) seed |= c1(q, u).arrows;
            require(generate(q.base(), sp->all_points(), seed).arrows ==
                        q.base()->all_arrows(),
                    "chart stars fail to generate");
        }
    }

    std::mt19937 rng(2024);
    for (const SpacePtr& sp : {fixtures::s2(), fixtures::c4()}) {
        GroupoidPtr q = product_with_pair(fixtures::z2(), sp);
        TopGroupoid top = product_arrow_topology(q);
        std::map<std::pair<PointId, PointId>, ArrowId> gamma;
        for (int x = 0; x < sp->size(); ++x)
            for (int y = x + 1; y < sp->size(); ++y)
                if (sp->comparable(x, y))
                    gamma[{x, y}] = q->arrow(fixtures::z2().elems[rng() % 2] + "|" +
                                             sp->name(x) + ">" + sp->name(y));
        PathConnection conn(top, std::move(gamma));
        WideSubgroupoid whole = c_gamma(conn, sp->all_points());
        for (const auto& cover : all_covers(sp)) {
            IndexSet seed(q->arrow_count());
            for (const IndexSet& u : cover) seed |= c_gamma(conn, u).arrows;
            require(generate(q, sp->all_points(), seed) == whole,
                    "chart transports fail to generate");
        }
    }
}

// A7: the coherence propositions, each as an executable check.
void criterion_coherence() {
    // glob(loc(H)) <= H, monotonicity, and glob(s|U) <= glob(s)|U
    for (const auto& [name, q] : small_fixtures()) {
        auto wides = enumerate_wide(q, q->space()->all_points());
        for (const auto& h : wides)
            require(glob(loc(h)).le(h), "glob(loc(H)) <= H fails on " + name);
        auto opens = q->space()->open_sets();
        for (const auto& s : enumerate_local(q))
            for (const IndexSet& u : opens) {
                if (u.empty()) continue;
                require(glob(restrict_local(s, u)).le(glob(s).restrict(u)),
                        "glob(s|U) <= glob(s)|U fails on " + name);
            }
    }

    // restriction properties of globally coherent sections
    GroupoidPtr pc4 = pair_groupoid(fixtures::c4());
    auto opens = pc4->space()->open_sets();
    auto covers = all_covers(pc4->space());
    for (const auto& s : enumerate_local(pc4)) {
        bool sgc = is_globally_coherent(s).ok;
        if (sgc) {
            for (const IndexSet& u : opens) {
                if (u.empty()) continue;
                require(is_globally_coherent(restrict_local(s, u)).ok,
                        "globally coherent restriction fails");
            }
            for (const auto& cover : covers) {
                WideSubgroupoid g = glob(s);
                IndexSet seed(pc4->arrow_count());
                for (const IndexSet& v : cover) seed |= g.restrict(v).arrows;
                require(generate(pc4, pc4->space()->all_points(), seed) == g,
                        "glob(s) not generated along a cover");
            }
        }
        for (const auto& cover : covers) {
            bool all_coherent = true;
            for (const IndexSet& v : cover)
                if (!is_coherent(restrict_local(s, v)).ok) all_coherent = false;
            if (all_coherent)
                require(is_coherent(s).ok, "cover of coherent restrictions, s incoherent");
            bool all_gt = true;
            for (const IndexSet& v : cover) {
                if (!is_globally_coherent(restrict_local(s, v)).ok) all_gt = false;
                for (const IndexSet& u : opens)
                    if (!u.empty() && u.subset_of(v) &&
                        !is_coherent(restrict_local(s, u)).ok)
                        all_gt = false;
            }
            if (all_gt)
                require(is_totally_coherent(s).ok,
                        "globally+totally coherent cover, s not totally coherent");
        }
    }

    // coherent iff generated along every cover
    for (const auto& [name, q] :
         {NamedGroupoid{"pair(C4)", pc4},
          NamedGroupoid{"z2bundle(C4)", bundle_of_groups(fixtures::c4(), fixtures::z2())}}) {
        for (const auto& h : enumerate_wide(q, q->space()->all_points())) {
            bool coherent = is_coherent_wide(h).ok;
            bool generated = true;
            for (const auto& cover : all_covers(q->space())) {
                IndexSet seed(q->arrow_count());
                for (const IndexSet& v : cover) seed |= h.restrict(v).arrows;
                if (!(generate(q, q->space()->all_points(), seed) == h)) generated = false;
            }
            require(coherent == generated, "cover-generation criterion fails on " + name);
        }
    }

    // glob of the c1 section is the star component, and the c1 atlas of a
    // path-local cover is globally adapted
    TopGroupoid sym = fixtures::sym2();
    Cover cov = fixtures::sym2_cover();
    LocalSubgroupoid c1s = c1_local(sym, cov);
    require(glob(c1s) == c1(sym, sym.base()->space()->all_points()),
            "glob(c1 section) != C1(Q)");
    require(is_path_local(sym, cov).ok, "SYM2 cover should be path local");
    Atlas c1a = c1_atlas(sym, cov);
    require(is_globally_adapted(c1a, c1s).ok, "path local c1 atlas not globally adapted");

    TopGroupoid ps2 = pair_product_topology(pair_groupoid(fixtures::s2()));
    SpacePtr s2 = ps2.base()->space();
    Cover two(s2, {OpenSet(s2, points_of(s2, {"o"})), OpenSet::whole(s2)});
    require(check_path_compatible(ps2, two), "S2 pair cover should be compatible");
    require(glob(c1_local(ps2, two)) == c1(ps2, s2->all_points()),
            "glob(c1 section) != C1(Q) on pair(S2)");
    if (is_path_local(ps2, two).ok)
        require(is_globally_adapted(c1_atlas(ps2, two), c1_local(ps2, two)).ok,
                "path local pair(S2) atlas not globally adapted");

    // glob of the transport section is the transport subgroupoid
    PathConnection conn = [&] {
        GroupoidPtr q = product_with_pair(fixtures::z2(), s2);
        TopGroupoid top = product_arrow_topology(q);
        std::map<std::pair<PointId, PointId>, ArrowId> gamma;
        gamma[{s2->point("o"), s2->point("c")}] = q->arrow("r1|o>c");
        return PathConnection(top, std::move(gamma));
    }();
    std::map<std::tuple<int, PointId, PointId>, Walk> geod;
    geod.emplace(std::make_tuple(1, s2->point("o"), s2->point("c")),
                 Walk(s2, {s2->point("o"), s2->point("c")}));
    geod.emplace(std::make_tuple(1, s2->point("c"), s2->point("o")),
                 Walk(s2, {s2->point("c"), s2->point("o")}));
    GeodesicStructure gs(two, std::move(geod));
    require(glob(c_gamma_local(conn, gs)) == c_gamma(conn, s2->all_points()),
            "glob(c_gamma section) != C_gamma(Q)");
    require(is_coherent_wide(c_gamma(conn, s2->all_points())).ok,
            "transport subgroupoid not coherent");
}

// A8: flatness agrees between two distinct spanning trees on randomized
// instances, and a seeded non-flat cycle is detected with a witness.
void criterion_flatness() {
    std::mt19937 rng(424242);
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        SpacePtr sp = (trial % 2 == 0) ? fixtures::c4() : fixtures::c8();
        int n = 2 + static_cast<int>(rng() % 3);
        FinGroup g = FinGroup::cyclic(n);
        GroupoidPtr q = product_with_pair(g, sp);
        TopGroupoid top = product_arrow_topology(q);
        std::map<std::pair<PointId, PointId>, ArrowId> gamma;
        for (int x = 0; x < sp->size(); ++x)
            for (int y = x + 1; y < sp->size(); ++y)
                if (sp->comparable(x, y))
                    gamma[{x, y}] = q->arrow(g.elems[rng() % n] + "|" + sp->name(x) + ">" +
                                             sp->name(y));
        PathConnection conn(top, std::move(gamma));
        for (const IndexSet& u : sp->open_sets()) {
            if (u.empty()) continue;
            FlatnessResult a = is_flat_on(conn, u, 0);
            FlatnessResult b = is_flat_on(conn, u, 1);
            require(a.flat == b.flat, "spanning trees disagree on flatness");
            ++checked;
        }
    }
    require(checked >= 100, "too few flatness instances");

    SpacePtr c4 = fixtures::c4();
    GroupoidPtr q = product_with_pair(fixtures::z2(), c4);
    TopGroupoid top = product_arrow_topology(q);
    std::map<std::pair<PointId, PointId>, ArrowId> gamma;
    for (int x = 0; x < c4->size(); ++x)
        for (int y = x + 1; y < c4->size(); ++y)
            if (c4->comparable(x, y))
                gamma[{x, y}] =
                    q->arrow(std::string(x == c4->point("x1") && y == c4->point("y1")
                                             ? "r1"
                                             : "e") +
                             "|" + c4->name(x) + ">" + c4->name(y));
    PathConnection seeded(top, std::move(gamma));
    FlatnessResult f = is_flat_on(seeded, c4->all_points());
    require(!f.flat, "seeded twist should break flatness");
    require(f.cycle.has_value(), "missing flatness witness");
    require(f.cycle->start() == f.cycle->end(), "witness is not a cycle");
    require(!(transport(seeded, *f.cycle) ==
              q->id(f.cycle->start())),
            "witness cycle has trivial transport");
}

// A9: trivialization onto the product groupoid wherever a section exists.
void criterion_trivialize() {
    struct Case {
        std::string name;
        TopGroupoid top;
        IndexSet u;
    };
    std::vector<Case> cases;
    TopGroupoid pi2 = indiscrete_arrow_topology(pair_groupoid(fixtures::i2()));
    cases.push_back({"pair(I2)", pi2, pi2.base()->space()->all_points()});
    TopGroupoid ps2 = pair_product_topology(pair_groupoid(fixtures::s2()));
    cases.push_back({"pair(S2)", ps2, ps2.base()->space()->all_points()});
    TopGroupoid pc4 = pair_product_topology(pair_groupoid(fixtures::c4()));
    cases.push_back({"pair(C4)", pc4, pc4.base()->space()->all_points()});
    TopGroupoid prod = product_arrow_topology(product_with_pair(fixtures::z2(), fixtures::s2()));
    cases.push_back({"z2xPair(S2)", prod, prod.base()->space()->all_points()});
    TopGroupoid sym = fixtures::sym2();
    SpacePtr c4 = sym.base()->space();
    cases.push_back({"SYM2 minus y2", sym, points_of(c4, {"x1", "x2", "y1"})});
    cases.push_back({"SYM2 minus y1", sym, points_of(c4, {"x1", "x2", "y2"})});

    int trivialized = 0;
    for (const Case& c : cases) {
        for (int x = c.u.first(); x >= 0; x = c.u.next(x)) {
            auto s = find_section(c.top, c.u, x);
            if (!s) continue;
            // trivialize() verifies the isomorphism arrow by arrow and the
            // continuity of both directions; it throws on any failure.
            Trivialization t = trivialize(c.top, c.u, *s);
            require(t.product.base()->arrow_count() == t.restricted.base()->arrow_count(),
                    "product and restriction sizes differ on " + c.name);
            ++trivialized;
        }
    }
    require(trivialized >= 10, "too few sections trivialized");

    // and the symmetry groupoid of the double cover has no global section
    require(!find_section(sym, c4->all_points(), c4->point("x1")).has_value(),
            "unexpected global section of SYM2");
}

// A10: reports are byte-identical across runs and thread counts.
void criterion_determinism() {
    std::vector<std::string> inputs = {gen_fixture("sym2"), gen_fixture("z2bundle"),
                                       gen_fixture("pair"), gen_fixture("c8")};
    for (const std::string& text : inputs) {
        GdfDocument doc = parse_gdf(text);
        for (int round = 0; round < 2; ++round) {
            ReportOptions one, four;
            four.threads = 4;
            require(report_check(doc).text == report_check(doc).text, "check not stable");
            require(report_coherence(doc, one).text == report_coherence(doc, four).text,
                    "coherence report depends on thread count");
            require(report_transfer(doc, one).text == report_transfer(doc, four).text,
                    "transfer report depends on thread count");
            if (doc.topology) {
                require(report_c1(doc, one).text == report_c1(doc, four).text,
                        "c1 report depends on thread count");
                require(report_star_connectivity(doc, one).text ==
                            report_star_connectivity(doc, four).text,
                        "star report depends on thread count");
            }
            if (doc.groupoid->arrow_count() <= 16)
                require(report_sheaf(doc, one).text == report_sheaf(doc, four).text,
                        "sheaf report depends on thread count");
        }
        require(print_gdf(parse_gdf(text)) == print_gdf(parse_gdf(text)),
                "printer not stable");
    }
}

}  // namespace

int main() {
    struct Criterion {
        const char* id;
        const char* name;
        std::function<void()> run;
    };
    std::vector<Criterion> criteria = {
        {"A1", "galois adjunctions (glob -| loc, anchor push -| pull)", criterion_galois},
        {"A2", "glob fast path = defining intersection", criterion_glob_oracle},
        {"A3", "discrete spaces: glob(loc(Q)) = inn(Q)", criterion_discrete_inn},
        {"A4", "sheaf dichotomy (bundles yes, pair(D2) no)", criterion_sheaf},
        {"A5", "SYM2 star connectivity and proper restriction", criterion_sym2},
        {"A6", "generation along covers (stars and transports)", criterion_generation},
        {"A7", "coherence suite", criterion_coherence},
        {"A8", "flatness: tree independence and seeded cycle", criterion_flatness},
        {"A9", "trivialization onto the product groupoid", criterion_trivialize},
        {"A10", "report determinism across runs and threads", criterion_determinism},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        try {
            c.run();
            std::printf("PASS %s %s\n", c.id, c.name);
        } catch (const std::exception& e) {
            std::printf("FAIL %s %s: %s\n", c.id, c.name, e.what());
            ++failures;
        }
    }
    return failures == 0 ? 0 : 1;
}
