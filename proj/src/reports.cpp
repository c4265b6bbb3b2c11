#include "lsg/reports.hpp"

#include <sstream>

#include "lsg/parallel.hpp"
#include "lsg/transfer.hpp"

namespace lsg {

namespace {

std::string yesno(bool b) { return b ? "yes" : "no"; }

void require_topology(const GdfDocument& doc) {
    if (!doc.topology) throw InvalidInput("this report requires an [arrow-topology] section");
}

std::string germ_lines(const GdfDocument& doc, const LocalSubgroupoid& s,
                       const std::string& indent) {
    std::ostringstream os;
    const FinSpace& sp = *doc.space;
    for (int x = s.domain().first(); x >= 0; x = s.domain().next(x))
        os << indent << "germ " << sp.name(x) << " = {"
           << doc.groupoid->format_arrows(s.rep_arrows(x)) << "}\n";
    return os.str();
}

}  // namespace

Report report_check(const GdfDocument& doc) {
    std::ostringstream os;
    os << "check: ok\n";
    os << "space: " << doc.space->size() << " points\n";
    os << "groupoid: " << doc.groupoid->arrow_count() << " arrows";
    if (doc.builder) os << " (builder " << *doc.builder << ")";
    os << "\n";
    if (doc.topology) {
        os << "arrow-topology: present";
        if (doc.topology_style) os << " (" << *doc.topology_style << ")";
        os << "\n";
    }
    for (const auto& [name, w] : doc.wides)
        os << "wide " << name << ": " << w.arrows.count() << " arrows over {"
           << doc.space->format_points(w.carrier) << "}\n";
    for (const auto& [name, c] : doc.covers)
        os << "cover " << name << ": " << c.members.size() << " members\n";
    for (const auto& [name, a] : doc.atlases)
        os << "atlas " << name << ": " << a.atlas.charts.size() << " charts\n";
    for (const auto& [name, c] : doc.connections) {
        (void)c;
        os << "connection " << name << "\n";
    }
    for (const auto& [name, g] : doc.geodesics)
        os << "geodesics " << name << " over cover " << g.cover_name << "\n";
    for (const auto& [name, m] : doc.morphisms) {
        (void)m;
        os << "morphism " << name << "\n";
    }
    return {os.str(), false};
}

Report report_c1(const GdfDocument& doc, const ReportOptions& opt) {
    require_topology(doc);
    const TopGroupoid& top = *doc.topology;
    std::ostringstream os;
    bool violation = false;

    bool connected = is_star_connected(top);
    os << "star-connected: " << yesno(connected) << "\n";
    WideSubgroupoid whole = c1(top, doc.space->all_points());
    os << "c1(Q|X): " << whole.arrows.count() << " arrows = {"
       << doc.groupoid->format_arrows(whole.arrows) << "}\n";

    for (const auto& [name, cov] : doc.covers) {
        auto witness = path_compatible_witness(top, cov);
        os << "cover " << name << ": path-compatible: " << yesno(!witness) << "\n";
        if (witness) {
            violation = true;
            if (opt.witness) {
                const FinSpace& sp = *doc.space;
                IndexSet within = doc.groupoid->arrows_within(sp.minup(witness->x));
                WideSubgroupoid a = c1(top, cov.members[witness->chart_i].members);
                WideSubgroupoid b = c1(top, cov.members[witness->chart_j].members);
                os << "  witness: charts " << witness->chart_i << "," << witness->chart_j
                   << " at " << sp.name(witness->x) << ": {"
                   << doc.groupoid->format_arrows(a.arrows & within) << "} vs {"
                   << doc.groupoid->format_arrows(b.arrows & within) << "}\n";
            }
            continue;
        }
        LocalSubgroupoid section = c1_local(top, cov);
        os << germ_lines(doc, section, "  ");
        CheckResult pl = is_path_local(top, cov, opt.max_points);
        os << "  path-local: " << yesno(pl.ok) << "\n";
        if (!pl.ok) {
            violation = true;
            if (opt.witness) os << "  witness: " << pl.witness << "\n";
        }
    }
    return {os.str(), violation};
}

Report report_star_connectivity(const GdfDocument& doc, const ReportOptions&) {
    require_topology(doc);
    const TopGroupoid& top = *doc.topology;
    std::ostringstream os;
    bool connected = is_star_connected(top);
    os << "star-connected: " << yesno(connected) << "\n";
    const FinSpace& sp = *doc.space;
    WideSubgroupoid whole = c1(top, sp.all_points());
    for (int x = 0; x < sp.size(); ++x) {
        IndexSet st = star(top, x);
        IndexSet component = whole.arrows & st;
        os << "star " << sp.name(x) << ": " << st.count() << " arrows, identity component "
           << component.count() << "\n";
    }
    return {os.str(), !connected};
}

Report report_coherence(const GdfDocument& doc, const ReportOptions& opt) {
    std::vector<WideSubgroupoid> wides;
    std::vector<LocalSubgroupoid> sections;
    std::vector<std::string> wide_labels, section_labels;

    for (const auto& [name, w] : doc.wides) {
        wides.push_back(w);
        wide_labels.push_back("wide " + name);
    }
    if (doc.topology) {
        wides.push_back(c1(*doc.topology, doc.space->all_points()));
        wide_labels.push_back("wide c1(Q)");
        for (const auto& [name, cov] : doc.covers) {
            if (check_path_compatible(*doc.topology, cov)) {
                sections.push_back(c1_local(*doc.topology, cov));
                section_labels.push_back("section c1(Q," + name + ")");
            }
        }
    }
    for (const auto& [name, a] : doc.atlases) {
        sections.push_back(a.atlas.section());
        section_labels.push_back("section " + name);
    }

    int rows = static_cast<int>(wides.size() + sections.size());
    std::vector<std::string> blocks = parallel_map<std::string>(rows, opt.threads, [&](int i) {
        std::ostringstream os;
        if (i < static_cast<int>(wides.size())) {
            const WideSubgroupoid& w = wides[i];
            CheckResult cw = is_coherent_wide(w);
            CheckResult lc = is_locally_coherent(w);
            os << wide_labels[i] << ": coherent=" << yesno(cw.ok)
               << " locally-coherent=" << yesno(lc.ok) << "\n";
            if (opt.witness && !cw.ok) os << "  witness: " << cw.witness << "\n";
            if (opt.witness && !lc.ok) os << "  witness: " << lc.witness << "\n";
            if (opt.oracle) {
                WideSubgroupoid fast = glob(loc(w));
                WideSubgroupoid slow = glob_oracle(loc(w), opt.max_arrows);
                os << "  glob-oracle: " << (fast == slow ? "match" : "MISMATCH") << "\n";
            }
        } else {
            const LocalSubgroupoid& s = sections[i - wides.size()];
            CheckResult c = is_coherent(s);
            CheckResult g = is_globally_coherent(s);
            CheckResult t = is_totally_coherent(s, opt.max_points);
            os << section_labels[i - wides.size()] << ": coherent=" << yesno(c.ok)
               << " globally-coherent=" << yesno(g.ok) << " totally-coherent=" << yesno(t.ok)
               << "\n";
            if (opt.witness && !c.ok) os << "  witness: " << c.witness << "\n";
            if (opt.witness && !g.ok) os << "  witness: " << g.witness << "\n";
            if (opt.witness && !t.ok) os << "  witness: " << t.witness << "\n";
            if (opt.oracle) {
                WideSubgroupoid fast = glob(s);
                WideSubgroupoid slow = glob_oracle(s, opt.max_arrows);
                os << "  glob-oracle: " << (fast == slow ? "match" : "MISMATCH") << "\n";
            }
        }
        return os.str();
    });

    std::ostringstream os;
    bool violation = false;
    for (const std::string& b : blocks) {
        os << b;
        if (b.find("=no") != std::string::npos || b.find("MISMATCH") != std::string::npos)
            violation = true;
    }
    if (rows == 0) os << "nothing to check\n";
    return {os.str(), violation};
}

Report report_connection(const GdfDocument& doc, const ReportOptions& opt) {
    require_topology(doc);
    std::ostringstream os;
    bool violation = false;
    const FinSpace& sp = *doc.space;

    for (const auto& [name, conn] : doc.connections) {
        os << "connection " << name << ":\n";
        WideSubgroupoid cg = c_gamma(conn, sp.all_points());
        os << "  c-gamma(Q|X): " << cg.arrows.count() << " arrows = {"
           << doc.groupoid->format_arrows(cg.arrows) << "}\n";
        FlatnessResult whole = is_flat_on(conn, sp.all_points());
        os << "  flat on X: " << yesno(whole.flat) << "\n";
        if (!whole.flat && opt.witness) {
            os << "  cycle:";
            for (PointId v : whole.cycle->vertices) os << " " << sp.name(v);
            os << "\n";
        }
        for (const auto& [gname, gs] : doc.geodesics) {
            os << "  geodesics " << gname << " (cover " << gs.cover_name << "):\n";
            const Cover& cov = gs.structure.cover();
            bool all_flat = true;
            for (size_t i = 0; i < cov.members.size(); ++i) {
                FlatnessResult f = is_flat_on(conn, cov.members[i].members);
                os << "    chart " << i << ": flat " << yesno(f.flat) << "\n";
                if (!f.flat) {
                    all_flat = false;
                    violation = true;
                    if (opt.witness) {
                        os << "      cycle:";
                        for (PointId v : f.cycle->vertices) os << " " << sp.name(v);
                        os << "\n";
                    }
                }
            }
            if (!all_flat) continue;
            try {
                LocalSubgroupoid s = c_gamma_local(conn, gs.structure);
                os << germ_lines(doc, s, "    ");
                CheckResult pl = is_gamma_path_local(conn, cov, opt.max_points);
                os << "    gamma-path-local: " << yesno(pl.ok) << "\n";
                if (!pl.ok) {
                    violation = true;
                    if (opt.witness) os << "    witness: " << pl.witness << "\n";
                }
            } catch (const OverlapMismatch& e) {
                violation = true;
                os << "    overlap mismatch: " << e.what() << "\n";
            }
        }
    }
    if (doc.connections.empty()) os << "no connections declared\n";
    return {os.str(), violation};
}

Report report_transfer(const GdfDocument& doc, const ReportOptions&) {
    std::ostringstream os;
    const FinSpace& sp = *doc.space;
    GroupoidMorphism a = anchor(doc.groupoid);

    std::vector<std::pair<std::string, LocalSubgroupoid>> sections;
    if (doc.topology)
        for (const auto& [name, cov] : doc.covers)
            if (check_path_compatible(*doc.topology, cov))
                sections.emplace_back("c1(Q," + name + ")", c1_local(*doc.topology, cov));
    for (const auto& [name, at] : doc.atlases) sections.emplace_back(name, at.atlas.section());
    for (const auto& [name, w] : doc.wides)
        if (w.carrier == sp.all_points()) sections.emplace_back("loc(" + name + ")", loc(w));

    for (const auto& [name, s] : sections) {
        os << "section " << name << ": anchor pushforward classes\n";
        LocalEquivRel ler(pushforward_section(a, s));
        for (int x = s.domain().first(); x >= 0; x = s.domain().next(x)) {
            os << "  at " << sp.name(x) << ":";
            for (const IndexSet& block : ler.classes_at(x))
                os << " {" << sp.format_points(block) << "}";
            os << "\n";
        }
    }
    if (sections.empty()) os << "no sections declared\n";
    return {os.str(), false};
}

Report report_sheaf(const GdfDocument& doc, const ReportOptions& opt) {
    std::ostringstream os;
    SheafCheck check = presheaf_is_sheaf(doc.groupoid, opt.max_arrows);
    os << "sheaf: " << yesno(check.is_sheaf) << "\n";
    if (!check.is_sheaf && opt.witness) {
        const FinSpace& sp = *doc.space;
        os << "  open {" << sp.format_points(check.open_u) << "}\n";
        os << "  compatible family:\n";
        for (const auto& [x, arrows] : check.family)
            os << "    at " << sp.name(x) << ": {" << doc.groupoid->format_arrows(arrows)
               << "}\n";
        if (check.gluings.empty()) {
            os << "  no wide subgroupoid glues this family\n";
        } else {
            os << "  " << check.gluings.size() << " distinct gluings:\n";
            for (const IndexSet& g : check.gluings)
                os << "    {" << doc.groupoid->format_arrows(g) << "}\n";
        }
    }
    return {os.str(), !check.is_sheaf};
}

}  // namespace lsg
