#include "lsg/gdf.hpp"

#include <algorithm>
#include <sstream>

#include "lsg/fixtures.hpp"

namespace lsg {

namespace {

struct Line {
    int number;
    std::string text;
};

struct Section {
    int line;
    std::string kind;  // "space", "groupoid", "arrow-topology", "wide", ...
    std::string name;  // for named sections
    std::vector<Line> lines;
};

std::vector<std::string> tokens_of(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

void check_name_token(const std::string& tok, int line) {
    if (tok.find_first_of("=:[]#") != std::string::npos)
        throw ParseError(line, "name '" + tok + "' contains a reserved character");
}

// `key tokens... = value tokens...`; returns {lhs, rhs}.
std::pair<std::vector<std::string>, std::vector<std::string>> split_assignment(
    const Line& ln) {
    size_t eq = ln.text.find('=');
    if (eq == std::string::npos) throw ParseError(ln.number, "expected '='");
    return {tokens_of(ln.text.substr(0, eq)), tokens_of(ln.text.substr(eq + 1))};
}

std::vector<Section> split_sections(const std::string& text) {
    std::vector<Section> sections;
    std::istringstream is(text);
    std::string raw;
    int number = 0;
    while (std::getline(is, raw)) {
        ++number;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::vector<std::string> toks = tokens_of(raw);
        if (toks.empty()) continue;
        if (raw.find('[') != std::string::npos) {
            size_t open = raw.find('['), close = raw.find(']');
            if (close == std::string::npos || close < open)
                throw ParseError(number, "malformed section header");
            std::vector<std::string> head = tokens_of(raw.substr(open + 1, close - open - 1));
            if (head.empty()) throw ParseError(number, "empty section header");
            Section s;
            s.line = number;
            s.kind = head[0];
            if (head.size() > 1) s.name = head[1];
            if (head.size() > 2) throw ParseError(number, "too many tokens in section header");
            sections.push_back(std::move(s));
            continue;
        }
        if (sections.empty()) throw ParseError(number, "content before the first section");
        sections.back().lines.push_back({number, raw});
    }
    return sections;
}

SpacePtr parse_space(const Section& sec) {
    std::map<std::string, std::set<std::string>> raw;
    for (const Line& ln : sec.lines) {
        auto [lhs, rhs] = split_assignment(ln);
        if (lhs.size() != 2 || lhs[0] != "minup")
            throw ParseError(ln.number, "expected 'minup <point> = <points...>'");
        check_name_token(lhs[1], ln.number);
        if (raw.count(lhs[1])) throw ParseError(ln.number, "duplicate minup for " + lhs[1]);
        raw[lhs[1]] = std::set<std::string>(rhs.begin(), rhs.end());
    }
    if (raw.empty()) throw ParseError(sec.line, "space section is empty");
    return FinSpace::validate(raw);
}

GroupoidPtr builder_groupoid(const std::string& name, const SpacePtr& space, int line) {
    if (name == "discrete") return bundle_of_groups(space, FinGroup::cyclic(1));
    if (name == "pair") return pair_groupoid(space);
    if (name == "z2bundle") return bundle_of_groups(space, FinGroup::cyclic(2));
    if (name == "product-z2") return product_with_pair(FinGroup::cyclic(2), space);
    if (name == "product-z3") return product_with_pair(FinGroup::cyclic(3), space);
    if (name == "sym2") {
        if (!(*space == *fixtures::c4()))
            throw ParseError(line, "builder sym2 requires the c4 space");
        return fixtures::sym2_data().groupoid;
    }
    throw ParseError(line, "unknown builder '" + name + "'");
}

struct GroupoidParse {
    GroupoidPtr groupoid;
    std::optional<std::string> builder;
};

GroupoidParse parse_groupoid(const Section& sec, const SpacePtr& space) {
    std::vector<FinGroupoid::RawArrow> arrows;
    std::map<std::pair<std::string, std::string>, std::string> comp;
    std::map<std::string, std::string> id, inv;
    std::optional<std::string> builder;

    for (const Line& ln : sec.lines) {
        size_t colon = ln.text.find(':');
        size_t eq = ln.text.find('=');
        if (colon != std::string::npos && (eq == std::string::npos || colon < eq)) {
            // arrow declaration: name: src -> dst
            std::vector<std::string> name_toks = tokens_of(ln.text.substr(0, colon));
            std::vector<std::string> rest = tokens_of(ln.text.substr(colon + 1));
            if (name_toks.size() != 1 || rest.size() != 3 || rest[1] != "->")
                throw ParseError(ln.number, "expected '<name>: <src> -> <dst>'");
            check_name_token(name_toks[0], ln.number);
            arrows.push_back({name_toks[0], rest[0], rest[2]});
            continue;
        }
        auto [lhs, rhs] = split_assignment(ln);
        if (lhs.size() == 1 && lhs[0] == "builder" && rhs.size() == 1) {
            builder = rhs[0];
        } else if (lhs.size() == 2 && lhs[0] == "id" && rhs.size() == 1) {
            id[lhs[1]] = rhs[0];
        } else if (lhs.size() == 2 && lhs[0] == "inv" && rhs.size() == 1) {
            inv[lhs[1]] = rhs[0];
        } else if (lhs.size() == 3 && lhs[0] == "compose" && rhs.size() == 1) {
            comp[{lhs[1], lhs[2]}] = rhs[0];
        } else {
            throw ParseError(ln.number, "unrecognized groupoid line");
        }
    }
    if (builder) {
        if (!arrows.empty() || !comp.empty() || !id.empty() || !inv.empty())
            throw ParseError(sec.line, "builder groupoid cannot also list tables");
        return {builder_groupoid(*builder, space, sec.line), builder};
    }
    return {FinGroupoid::validate(space, arrows, comp, id, inv), std::nullopt};
}

IndexSet parse_point_set(const std::vector<std::string>& names, const SpacePtr& space,
                         int line) {
    IndexSet out(space->size());
    for (const std::string& n : names) {
        int p = space->try_point(n);
        if (p < 0) throw ParseError(line, "unknown point '" + n + "'");
        out.insert(p);
    }
    return out;
}

}  // namespace

const Cover& GdfDocument::cover(const std::string& name) const {
    for (const auto& [n, c] : covers)
        if (n == name) return c;
    throw InvalidInput("unknown cover '" + name + "'");
}

const WideSubgroupoid& GdfDocument::wide(const std::string& name) const {
    for (const auto& [n, w] : wides)
        if (n == name) return w;
    throw InvalidInput("unknown wide subgroupoid '" + name + "'");
}

GdfDocument parse_gdf(const std::string& text) {
    std::vector<Section> sections = split_sections(text);
    GdfDocument doc;

    auto count_kind = [&](const std::string& kind) {
        int n = 0;
        for (const Section& s : sections)
            if (s.kind == kind) ++n;
        return n;
    };
    for (const Section& s : sections) {
        static const std::set<std::string> known = {"space",   "groupoid",  "arrow-topology",
                                                    "wide",    "cover",     "atlas",
                                                    "connection", "geodesics", "morphism"};
        if (!known.count(s.kind)) throw ParseError(s.line, "unknown section '" + s.kind + "'");
        bool named = s.kind != "space" && s.kind != "groupoid" && s.kind != "arrow-topology";
        if (named && s.name.empty()) throw ParseError(s.line, s.kind + " section needs a name");
        if (!named && !s.name.empty())
            throw ParseError(s.line, s.kind + " section takes no name");
    }
    if (count_kind("space") != 1) throw ParseError(1, "exactly one [space] section required");
    if (count_kind("groupoid") > 1) throw ParseError(1, "at most one [groupoid] section");
    if (count_kind("arrow-topology") > 1)
        throw ParseError(1, "at most one [arrow-topology] section");

    for (const Section& s : sections)
        if (s.kind == "space") doc.space = parse_space(s);
    for (const Section& s : sections)
        if (s.kind == "groupoid") {
            GroupoidParse g = parse_groupoid(s, doc.space);
            doc.groupoid = g.groupoid;
            doc.builder = g.builder;
        }
    if (!doc.groupoid) {
        doc.groupoid = builder_groupoid("discrete", doc.space, 1);
        doc.builder = "discrete";
    }

    for (const Section& s : sections) {
        if (s.kind != "arrow-topology") continue;
        std::optional<std::string> style;
        std::map<std::string, std::set<std::string>> raw;
        for (const Line& ln : s.lines) {
            auto [lhs, rhs] = split_assignment(ln);
            if (lhs.size() == 1 && lhs[0] == "style" && rhs.size() == 1) {
                style = rhs[0];
            } else if (lhs.size() == 2 && lhs[0] == "minup") {
                raw[lhs[1]] = std::set<std::string>(rhs.begin(), rhs.end());
            } else {
                throw ParseError(ln.number, "unrecognized arrow-topology line");
            }
        }
        if (style && !raw.empty())
            throw ParseError(s.line, "style and explicit minups cannot be mixed");
        if (style) {
            doc.topology_style = style;
            if (*style == "discrete")
                doc.topology = discrete_arrow_topology(doc.groupoid);
            else if (*style == "indiscrete")
                doc.topology = indiscrete_arrow_topology(doc.groupoid);
            else if (*style == "pair-product")
                doc.topology = pair_product_topology(doc.groupoid);
            else if (*style == "product")
                doc.topology = product_arrow_topology(doc.groupoid);
            else if (*style == "sym2-quotient") {
                if (doc.builder != std::optional<std::string>("sym2"))
                    throw ParseError(s.line, "sym2-quotient topology requires builder sym2");
                doc.topology = fixtures::sym2();
            } else {
                throw ParseError(s.line, "unknown topology style '" + *style + "'");
            }
        } else {
            doc.topology = TopGroupoid::validate(doc.groupoid, FinSpace::validate(raw));
        }
    }

    auto check_fresh = [&](const std::string& name, int line) {
        for (const auto& [n, w] : doc.wides)
            if (n == name) throw ParseError(line, "duplicate name '" + name + "'");
        for (const auto& [n, c] : doc.covers)
            if (n == name) throw ParseError(line, "duplicate name '" + name + "'");
    };

    for (const Section& s : sections) {
        if (s.kind != "wide") continue;
        check_fresh(s.name, s.line);
        std::optional<IndexSet> carrier;
        IndexSet arrows(doc.groupoid->arrow_count());
        for (const Line& ln : s.lines) {
            auto [lhs, rhs] = split_assignment(ln);
            if (lhs.size() == 1 && lhs[0] == "carrier") {
                carrier = parse_point_set(rhs, doc.space, ln.number);
            } else if (lhs.size() == 1 && lhs[0] == "arrows") {
                for (const std::string& n : rhs) {
                    int a = doc.groupoid->try_arrow(n);
                    if (a < 0) throw ParseError(ln.number, "unknown arrow '" + n + "'");
                    arrows.insert(a);
                }
            } else {
                throw ParseError(ln.number, "unrecognized wide-subgroupoid line");
            }
        }
        if (!carrier) throw ParseError(s.line, "wide section needs a carrier");
        for (int x = carrier->first(); x >= 0; x = carrier->next(x))
            arrows.insert(doc.groupoid->id(x));
        doc.wides.emplace_back(s.name, WideSubgroupoid(doc.groupoid, *carrier, arrows));
    }

    for (const Section& s : sections) {
        if (s.kind != "cover") continue;
        check_fresh(s.name, s.line);
        std::vector<OpenSet> members;
        for (const Line& ln : s.lines) {
            auto [lhs, rhs] = split_assignment(ln);
            if (lhs.size() == 1 && lhs[0] == "member")
                members.emplace_back(doc.space, parse_point_set(rhs, doc.space, ln.number));
            else
                throw ParseError(ln.number, "unrecognized cover line");
        }
        doc.covers.emplace_back(s.name, Cover(doc.space, std::move(members)));
    }

    for (const Section& s : sections) {
        if (s.kind != "connection") continue;
        if (!doc.topology) throw ParseError(s.line, "connection requires an arrow topology");
        std::map<std::pair<PointId, PointId>, ArrowId> gamma;
        for (const Line& ln : s.lines) {
            auto [lhs, rhs] = split_assignment(ln);
            if (lhs.size() != 3 || lhs[0] != "gamma" || rhs.size() != 1)
                throw ParseError(ln.number, "expected 'gamma <x> <y> = <arrow>'");
            int x = doc.space->try_point(lhs[1]), y = doc.space->try_point(lhs[2]);
            int a = doc.groupoid->try_arrow(rhs[0]);
            if (x < 0 || y < 0) throw ParseError(ln.number, "unknown point");
            if (a < 0) throw ParseError(ln.number, "unknown arrow '" + rhs[0] + "'");
            gamma[{x, y}] = a;
        }
        doc.connections.emplace_back(s.name, PathConnection(*doc.topology, std::move(gamma)));
    }

    for (const Section& s : sections) {
        if (s.kind != "atlas") continue;
        std::vector<std::string> names;
        std::vector<WideSubgroupoid> charts;
        for (const Line& ln : s.lines) {
            auto [lhs, rhs] = split_assignment(ln);
            if (lhs.size() != 1 || lhs[0] != "chart" || rhs.size() != 1)
                throw ParseError(ln.number, "expected 'chart = <wide-name>'");
            names.push_back(rhs[0]);
            charts.push_back(doc.wide(rhs[0]));
        }
        doc.atlases.emplace_back(
            s.name, GdfAtlas{std::move(names), Atlas(doc.groupoid, std::move(charts))});
    }

    for (const Section& s : sections) {
        if (s.kind != "geodesics") continue;
        std::optional<std::string> cover_name;
        std::map<std::tuple<int, PointId, PointId>, Walk> geod;
        std::vector<Line> geod_lines;
        for (const Line& ln : s.lines) {
            auto [lhs, rhs] = split_assignment(ln);
            if (lhs.size() == 1 && lhs[0] == "cover" && rhs.size() == 1)
                cover_name = rhs[0];
            else if (lhs.size() == 4 && lhs[0] == "geod")
                geod_lines.push_back(ln);
            else
                throw ParseError(ln.number, "unrecognized geodesics line");
        }
        if (!cover_name) throw ParseError(s.line, "geodesics section needs a cover");
        const Cover& cov = doc.cover(*cover_name);
        for (const Line& ln : geod_lines) {
            auto [lhs, rhs] = split_assignment(ln);
            int chart = -1;
            try {
                chart = std::stoi(lhs[1]);
            } catch (...) {
                throw ParseError(ln.number, "chart index must be a number");
            }
            int x = doc.space->try_point(lhs[2]), y = doc.space->try_point(lhs[3]);
            if (x < 0 || y < 0) throw ParseError(ln.number, "unknown point");
            std::vector<PointId> verts;
            for (const std::string& n : rhs) {
                int v = doc.space->try_point(n);
                if (v < 0) throw ParseError(ln.number, "unknown point '" + n + "'");
                verts.push_back(v);
            }
            geod.emplace(std::make_tuple(chart, x, y), Walk(doc.space, std::move(verts)));
        }
        doc.geodesics.emplace_back(
            s.name, GdfGeodesics{*cover_name, GeodesicStructure(cov, std::move(geod))});
    }

    for (const Section& s : sections) {
        if (s.kind != "morphism") continue;
        std::vector<PointId> omap(doc.space->size());
        for (int x = 0; x < doc.space->size(); ++x) omap[x] = x;
        std::vector<ArrowId> amap(doc.groupoid->arrow_count(), -1);
        for (const Line& ln : s.lines) {
            auto [lhs, rhs] = split_assignment(ln);
            if (lhs.size() != 2 || lhs[0] != "arrow" || rhs.size() != 1)
                throw ParseError(ln.number, "expected 'arrow <g> = <h>'");
            int g = doc.groupoid->try_arrow(lhs[1]), h = doc.groupoid->try_arrow(rhs[0]);
            if (g < 0 || h < 0) throw ParseError(ln.number, "unknown arrow");
            amap[g] = h;
        }
        for (int g = 0; g < doc.groupoid->arrow_count(); ++g)
            if (amap[g] < 0) amap[g] = g;  // unspecified arrows map to themselves
        doc.morphisms.emplace_back(
            s.name, GroupoidMorphism(doc.groupoid, doc.groupoid, omap, amap));
    }

    return doc;
}

std::string print_gdf(const GdfDocument& doc) {
    std::ostringstream os;
    const FinSpace& sp = *doc.space;
    const GroupoidPtr& q = doc.groupoid;

    os << "[space]\n";
    for (int x = 0; x < sp.size(); ++x)
        os << "minup " << sp.name(x) << " = " << sp.format_points(sp.minup(x)) << "\n";

    os << "\n[groupoid]\n";
    if (doc.builder) {
        os << "builder = " << *doc.builder << "\n";
    } else {
        for (int g = 0; g < q->arrow_count(); ++g)
            os << q->arrow_name(g) << ": " << sp.name(q->src(g)) << " -> "
               << sp.name(q->dst(g)) << "\n";
        for (int x = 0; x < sp.size(); ++x)
            os << "id " << sp.name(x) << " = " << q->arrow_name(q->id(x)) << "\n";
        for (int g = 0; g < q->arrow_count(); ++g)
            os << "inv " << q->arrow_name(g) << " = " << q->arrow_name(q->inv(g)) << "\n";
        for (int g = 0; g < q->arrow_count(); ++g)
            for (int h = 0; h < q->arrow_count(); ++h)
                if (q->composable(g, h))
                    os << "compose " << q->arrow_name(g) << " " << q->arrow_name(h) << " = "
                       << q->arrow_name(q->comp(g, h)) << "\n";
    }

    if (doc.topology) {
        os << "\n[arrow-topology]\n";
        if (doc.topology_style) {
            os << "style = " << *doc.topology_style << "\n";
        } else {
            const FinSpace& arr = *doc.topology->arrow_space();
            for (int g = 0; g < arr.size(); ++g)
                os << "minup " << arr.name(g) << " = " << arr.format_points(arr.minup(g))
                   << "\n";
        }
    }

    for (const auto& [name, w] : doc.wides) {
        os << "\n[wide " << name << "]\n";
        os << "carrier = " << sp.format_points(w.carrier) << "\n";
        os << "arrows = " << q->format_arrows(w.arrows) << "\n";
    }
    for (const auto& [name, c] : doc.covers) {
        os << "\n[cover " << name << "]\n";
        for (const OpenSet& m : c.members)
            os << "member = " << sp.format_points(m.members) << "\n";
    }
    for (const auto& [name, conn] : doc.connections) {
        os << "\n[connection " << name << "]\n";
        for (int x = 0; x < sp.size(); ++x)
            for (int y = x + 1; y < sp.size(); ++y)
                if (sp.comparable(x, y))
                    os << "gamma " << sp.name(x) << " " << sp.name(y) << " = "
                       << q->arrow_name(conn.gamma(x, y)) << "\n";
    }
    for (const auto& [name, a] : doc.atlases) {
        os << "\n[atlas " << name << "]\n";
        for (const std::string& chart : a.chart_names) os << "chart = " << chart << "\n";
    }
    for (const auto& [name, g] : doc.geodesics) {
        os << "\n[geodesics " << name << "]\n";
        os << "cover = " << g.cover_name << "\n";
        const Cover& cov = g.structure.cover();
        for (size_t i = 0; i < cov.members.size(); ++i)
            for (const IndexSet& block : sp.components(cov.members[i].members))
                for (int x = block.first(); x >= 0; x = block.next(x))
                    for (int y = block.first(); y >= 0; y = block.next(y)) {
                        const Walk& w = g.structure.geod(static_cast<int>(i), x, y);
                        os << "geod " << i << " " << sp.name(x) << " " << sp.name(y) << " =";
                        for (PointId v : w.vertices) os << " " << sp.name(v);
                        os << "\n";
                    }
    }
    for (const auto& [name, m] : doc.morphisms) {
        os << "\n[morphism " << name << "]\n";
        for (int g = 0; g < q->arrow_count(); ++g)
            os << "arrow " << q->arrow_name(g) << " = " << q->arrow_name(m.arrow_map[g])
               << "\n";
    }
    return os.str();
}

std::vector<std::string> fixture_names() {
    return {"d2", "s2", "c4", "c8", "pair", "z2bundle", "sym2"};
}

std::string gen_fixture(const std::string& name) {
    GdfDocument doc;
    auto space_only = [&](SpacePtr sp) {
        doc.space = std::move(sp);
        doc.groupoid = builder_groupoid("discrete", doc.space, 0);
        doc.builder = "discrete";
    };
    if (name == "d2") {
        space_only(fixtures::d2());
    } else if (name == "s2") {
        space_only(fixtures::s2());
    } else if (name == "c4") {
        space_only(fixtures::c4());
    } else if (name == "c8") {
        space_only(fixtures::c8());
    } else if (name == "pair") {
        doc.space = fixtures::d2();
        doc.groupoid = pair_groupoid(doc.space);
        doc.builder = "pair";
    } else if (name == "z2bundle") {
        doc.space = fixtures::d2();
        doc.groupoid = bundle_of_groups(doc.space, fixtures::z2());
        doc.builder = "z2bundle";
        doc.topology_style = "discrete";
        doc.topology = discrete_arrow_topology(doc.groupoid);
    } else if (name == "sym2") {
        doc.space = fixtures::c4();
        doc.groupoid = fixtures::sym2_data().groupoid;
        doc.builder = "sym2";
        doc.topology_style = "sym2-quotient";
        doc.topology = fixtures::sym2();
        doc.covers.emplace_back("charts", fixtures::sym2_cover());
    } else {
        throw InvalidInput("unknown fixture '" + name + "'");
    }
    return print_gdf(doc);
}

}  // namespace lsg
