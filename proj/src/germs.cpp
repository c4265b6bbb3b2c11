#include "lsg/germs.hpp"

#include <algorithm>
#include <functional>

namespace lsg {

Germ::Germ(GroupoidPtr g, PointId x, WideSubgroupoid r)
    : groupoid(std::move(g)), basepoint(x), rep(std::move(r)) {
    if (!(rep.carrier == groupoid->space()->minup(x)))
        throw PointNotInCarrier("germ representative at " + groupoid->space()->name(x) +
                                " must live on minup of the basepoint");
}

Germ germ_of(const WideSubgroupoid& h, PointId x) {
    if (!h.carrier.contains(x))
        throw PointNotInCarrier(h.parent->space()->name(x) + " not in the carrier");
    return Germ(h.parent, x, h.restrict(h.parent->space()->minup(x)));
}

bool stalk_le(const Germ& a, const Germ& b) {
    if (a.basepoint != b.basepoint || !same_groupoid(a.groupoid, b.groupoid))
        throw BasepointMismatch("stalk_le across different stalks");
    return a.rep.arrows.subset_of(b.rep.arrows);
}

LocalSubgroupoid::LocalSubgroupoid(GroupoidPtr parent, IndexSet domain,
                                   std::vector<IndexSet> rep_arrows)
    : parent_(std::move(parent)), domain_(std::move(domain)), rep_(std::move(rep_arrows)) {
    const FinSpace& sp = *parent_->space();
    if (!sp.is_open(domain_)) throw InvalidInput("section domain is not open");
    if (static_cast<int>(rep_.size()) != sp.size())
        throw InvalidInput("section representative table has the wrong size");
    for (int x = domain_.first(); x >= 0; x = domain_.next(x)) {
        // Validates wideness and closure of the representative.
        WideSubgroupoid check(parent_, sp.minup(x), rep_[x]);
        for (int y = sp.minup(x).first(); y >= 0; y = sp.minup(x).next(y)) {
            IndexSet expected = rep_[x] & parent_->arrows_within(sp.minup(y));
            if (!(rep_[y] == expected))
                throw InvalidInput("section is not continuous between " + sp.name(x) + " and " +
                                   sp.name(y));
        }
    }
}

const IndexSet& LocalSubgroupoid::rep_arrows(PointId x) const {
    if (!domain_.contains(x))
        throw PointNotInCarrier(parent_->space()->name(x) + " outside the section domain");
    return rep_[x];
}

Germ LocalSubgroupoid::at(PointId x) const {
    return Germ(parent_, x, WideSubgroupoid(parent_, parent_->space()->minup(x), rep_arrows(x)));
}

bool LocalSubgroupoid::operator==(const LocalSubgroupoid& other) const {
    if (!same_groupoid(parent_, other.parent_) || domain_ != other.domain_) return false;
    for (int x = domain_.first(); x >= 0; x = domain_.next(x))
        if (rep_[x] != other.rep_[x]) return false;
    return true;
}

LocalSubgroupoid loc(const WideSubgroupoid& g) {
    const FinSpace& sp = *g.parent->space();
    std::vector<IndexSet> reps(sp.size());
    for (int x = g.carrier.first(); x >= 0; x = g.carrier.next(x))
        reps[x] = g.arrows & g.parent->arrows_within(sp.minup(x));
    return LocalSubgroupoid(g.parent, g.carrier, std::move(reps));
}

bool local_le(const LocalSubgroupoid& s, const LocalSubgroupoid& t) {
    if (!same_groupoid(s.parent(), t.parent()) || s.domain() != t.domain())
        throw BasepointMismatch("local_le across different domains");
    for (int x = s.domain().first(); x >= 0; x = s.domain().next(x))
        if (!s.rep_arrows(x).subset_of(t.rep_arrows(x))) return false;
    return true;
}

LocalSubgroupoid restrict_local(const LocalSubgroupoid& s, const IndexSet& open_subset) {
    if (!open_subset.subset_of(s.domain()))
        throw CarrierMismatch("restriction target leaves the section domain");
    const FinSpace& sp = *s.parent()->space();
    std::vector<IndexSet> reps(sp.size());
    for (int x = open_subset.first(); x >= 0; x = open_subset.next(x))
        reps[x] = s.rep_arrows(x);  // minup(x) is unchanged inside an open subset
    return LocalSubgroupoid(s.parent(), open_subset, std::move(reps));
}

LocalSubgroupoid bottom_section(const GroupoidPtr& q) {
    return loc(WideSubgroupoid::discrete(q, q->space()->all_points()));
}

LocalSubgroupoid top_section(const GroupoidPtr& q) {
    return loc(WideSubgroupoid::full(q, q->space()->all_points()));
}

Atlas::Atlas(GroupoidPtr parent_, std::vector<WideSubgroupoid> charts_)
    : parent(std::move(parent_)), charts(std::move(charts_)) {
    const FinSpace& sp = *parent->space();
    IndexSet covered(sp.size());
    for (const auto& chart : charts) {
        if (!same_groupoid(chart.parent, parent))
            throw NotAnAtlas("chart over a different groupoid");
        covered |= chart.carrier;
    }
    if (!(covered == sp.all_points())) throw NotAnAtlas("charts do not cover the space");
    for (size_t i = 0; i < charts.size(); ++i)
        for (size_t j = i + 1; j < charts.size(); ++j) {
            IndexSet overlap = charts[i].carrier & charts[j].carrier;
            for (int x = overlap.first(); x >= 0; x = overlap.next(x)) {
                const IndexSet& up = sp.minup(x);
                IndexSet a = charts[i].arrows & parent->arrows_within(up);
                IndexSet b = charts[j].arrows & parent->arrows_within(up);
                if (a != b)
                    throw CompViolation(static_cast<int>(i), static_cast<int>(j), sp.name(x));
            }
        }
}

LocalSubgroupoid Atlas::section() const {
    const FinSpace& sp = *parent->space();
    std::vector<IndexSet> reps(sp.size());
    IndexSet assigned(sp.size());
    for (const auto& chart : charts)
        for (int x = chart.carrier.first(); x >= 0; x = chart.carrier.next(x)) {
            if (assigned.contains(x)) continue;  // Comp makes any choice agree
            reps[x] = chart.arrows & parent->arrows_within(sp.minup(x));
            assigned.insert(x);
        }
    return LocalSubgroupoid(parent, sp.all_points(), std::move(reps));
}

LocalSubgroupoid from_atlas(const GroupoidPtr& q, std::vector<WideSubgroupoid> charts) {
    return Atlas(q, std::move(charts)).section();
}

bool atlases_compatible(const Atlas& a, const Atlas& b) {
    if (!same_groupoid(a.parent, b.parent)) return false;
    const FinSpace& sp = *a.parent->space();
    for (const auto& ca : a.charts)
        for (const auto& cb : b.charts) {
            IndexSet overlap = ca.carrier & cb.carrier;
            for (int x = overlap.first(); x >= 0; x = overlap.next(x)) {
                const IndexSet& up = sp.minup(x);
                if (!((ca.arrows & a.parent->arrows_within(up)) ==
                      (cb.arrows & a.parent->arrows_within(up))))
                    return false;
            }
        }
    return true;
}

WideSubgroupoid glob(const LocalSubgroupoid& s) {
    IndexSet seed(s.parent()->arrow_count());
    for (int x = s.domain().first(); x >= 0; x = s.domain().next(x)) seed |= s.rep_arrows(x);
    return generate(s.parent(), s.domain(), seed);
}

WideSubgroupoid glob_oracle(const LocalSubgroupoid& s, int max_nonid_arrows) {
    std::optional<WideSubgroupoid> acc;
    for (const WideSubgroupoid& h : enumerate_wide(s.parent(), s.domain(), max_nonid_arrows)) {
        if (!local_le(s, loc(h))) continue;
        acc = acc ? acc->meet(h) : h;
    }
    if (!acc) throw Error(Error::Code::internal, "no wide subgroupoid dominates the section");
    return *acc;
}

WideSubgroupoid glob_atlas(const Atlas& a) {
    IndexSet seed(a.parent->arrow_count());
    IndexSet carrier(a.parent->space()->size());
    for (const auto& chart : a.charts) {
        seed |= chart.arrows;
        carrier |= chart.carrier;
    }
    return generate(a.parent, carrier, seed);
}

bool refines(const Atlas& b, const Atlas& a) {
    for (const auto& cb : b.charts) {
        bool witnessed = false;
        for (const auto& ca : a.charts) {
            if (!cb.carrier.subset_of(ca.carrier)) continue;
            if (ca.restrict(cb.carrier) == cb) {
                witnessed = true;
                break;
            }
        }
        if (!witnessed) return false;
    }
    return true;
}

Atlas minup_atlas(const LocalSubgroupoid& s) {
    const FinSpace& sp = *s.parent()->space();
    std::vector<WideSubgroupoid> charts;
    for (int x = s.domain().first(); x >= 0; x = s.domain().next(x))
        charts.emplace_back(s.parent(), sp.minup(x), s.rep_arrows(x));
    return Atlas(s.parent(), std::move(charts));
}

WideSubgroupoid glob_via_refinements(const Atlas& a, long max_selectors) {
    const FinSpace& sp = *a.parent->space();
    std::vector<std::vector<int>> containing(sp.size());
    for (size_t i = 0; i < a.charts.size(); ++i)
        for (int x = a.charts[i].carrier.first(); x >= 0; x = a.charts[i].carrier.next(x))
            containing[x].push_back(static_cast<int>(i));

    long total = 1;
    for (int x = 0; x < sp.size(); ++x) {
        total *= static_cast<long>(containing[x].size());
        if (total > max_selectors)
            throw TooLarge("refinement selector count", static_cast<int>(max_selectors));
    }

    std::optional<WideSubgroupoid> acc;
    std::vector<int> pick(sp.size(), 0);
    for (long code = 0; code < total; ++code) {
        long c = code;
        for (int x = 0; x < sp.size(); ++x) {
            pick[x] = containing[x][c % containing[x].size()];
            c /= static_cast<long>(containing[x].size());
        }
        IndexSet seed(a.parent->arrow_count());
        for (int x = 0; x < sp.size(); ++x)
            seed |= a.charts[pick[x]].arrows & a.parent->arrows_within(sp.minup(x));
        WideSubgroupoid g = generate(a.parent, sp.all_points(), seed);
        acc = acc ? acc->meet(g) : g;
    }
    return *acc;
}

// ---- coherence suite ----------------------------------------------------

namespace {

// First point where s(x) is not below loc(glob(s))(x), with formatting.
CheckResult le_with_witness(const LocalSubgroupoid& s, const LocalSubgroupoid& t,
                            const std::string& relation) {
    const FinSpace& sp = *s.parent()->space();
    for (int x = s.domain().first(); x >= 0; x = s.domain().next(x)) {
        IndexSet extra = s.rep_arrows(x) - t.rep_arrows(x);
        if (!extra.empty())
            return {false, relation + " fails at " + sp.name(x) + ": extra arrows {" +
                               s.parent()->format_arrows(extra) + "}"};
    }
    return {true, ""};
}

}  // namespace

CheckResult is_coherent(const LocalSubgroupoid& s) {
    return le_with_witness(s, loc(glob(s)), "s <= loc(glob(s))");
}

CheckResult is_globally_coherent(const LocalSubgroupoid& s) {
    LocalSubgroupoid lg = loc(glob(s));
    CheckResult below = le_with_witness(s, lg, "s <= loc(glob(s))");
    if (!below.ok) return below;
    return le_with_witness(lg, s, "loc(glob(s)) <= s");
}

CheckResult is_totally_coherent(const LocalSubgroupoid& s, int max_points) {
    const FinSpace& sp = *s.parent()->space();
    if (sp.size() > max_points) throw TooLarge("point count", max_points);
    for (const IndexSet& u : sp.open_sets()) {
        if (u.empty() || !u.subset_of(s.domain())) continue;
        CheckResult r = is_coherent(restrict_local(s, u));
        if (!r.ok)
            return {false, "restriction to {" + sp.format_points(u) + "} not coherent: " +
                               r.witness};
    }
    return {true, ""};
}

CheckResult is_locally_coherent(const WideSubgroupoid& h) { return is_coherent(loc(h)); }

CheckResult is_coherent_wide(const WideSubgroupoid& h) {
    WideSubgroupoid gl = glob(loc(h));
    if (gl == h) return {true, ""};
    IndexSet missing = h.arrows - gl.arrows;
    return {false, "glob(loc(H)) drops arrows {" + h.parent->format_arrows(missing) + "}"};
}

CheckResult is_globally_adapted(const Atlas& a, const LocalSubgroupoid& s) {
    WideSubgroupoid gs = glob(s);
    WideSubgroupoid ga = glob_atlas(a);
    if (gs == ga) return {true, ""};
    IndexSet extra = ga.arrows - gs.arrows;
    return {false, "glob(atlas) exceeds glob(s) by {" + a.parent->format_arrows(extra) + "}"};
}

// ---- sheaf checker -------------------------------------------------------

SheafCheck presheaf_is_sheaf(const GroupoidPtr& q, int max_nonid_arrows, long max_families) {
    const FinSpace& sp = *q->space();
    SheafCheck out;
    for (const IndexSet& u : sp.open_sets()) {
        if (u.empty()) continue;
        std::vector<int> points = u.members();
        std::vector<std::vector<WideSubgroupoid>> choices;
        long families = 1;
        for (int x : points) {
            choices.push_back(enumerate_wide(q, sp.minup(x), max_nonid_arrows));
            families *= static_cast<long>(choices.back().size());
            if (families > max_families)
                throw TooLarge("compatible family count", static_cast<int>(max_families));
        }
        std::vector<WideSubgroupoid> glue_candidates = enumerate_wide(q, u, max_nonid_arrows);

        std::vector<size_t> pick(points.size(), 0);
        for (long code = 0; code < families; ++code) {
            long c = code;
            for (size_t k = 0; k < points.size(); ++k) {
                pick[k] = static_cast<size_t>(c % choices[k].size());
                c /= static_cast<long>(choices[k].size());
            }
            bool compatible = true;
            for (size_t k = 0; k < points.size() && compatible; ++k)
                for (size_t l = k + 1; l < points.size() && compatible; ++l) {
                    IndexSet overlap = sp.minup(points[k]) & sp.minup(points[l]);
                    const IndexSet within = q->arrows_within(overlap);
                    if (!((choices[k][pick[k]].arrows & within) ==
                          (choices[l][pick[l]].arrows & within)))
                        compatible = false;
                }
            if (!compatible) continue;

            std::vector<IndexSet> gluings;
            for (const WideSubgroupoid& g : glue_candidates) {
                bool matches = true;
                for (size_t k = 0; k < points.size() && matches; ++k)
                    if (!((g.arrows & q->arrows_within(sp.minup(points[k]))) ==
                          choices[k][pick[k]].arrows))
                        matches = false;
                if (matches) gluings.push_back(g.arrows);
            }
            if (gluings.size() != 1) {
                out.is_sheaf = false;
                out.open_u = u;
                for (size_t k = 0; k < points.size(); ++k)
                    out.family.emplace_back(points[k], choices[k][pick[k]].arrows);
                out.gluings = std::move(gluings);
                return out;
            }
        }
    }
    return out;
}

// ---- brute-force section enumeration ------------------------------------

std::vector<LocalSubgroupoid> enumerate_local(const GroupoidPtr& q, const IndexSet& domain,
                                              int max_nonid_arrows, long max_sections) {
    const FinSpace& sp = *q->space();
    std::vector<int> points = domain.members();
    std::vector<std::vector<WideSubgroupoid>> choices;
    for (int x : points) choices.push_back(enumerate_wide(q, sp.minup(x), max_nonid_arrows));

    std::vector<LocalSubgroupoid> out;
    std::vector<size_t> pick(points.size());
    std::function<void(size_t)> assign = [&](size_t k) {
        if (k == points.size()) {
            if (static_cast<long>(out.size()) >= max_sections)
                throw TooLarge("section count", static_cast<int>(max_sections));
            std::vector<IndexSet> reps(sp.size());
            for (size_t i = 0; i < points.size(); ++i) reps[points[i]] = choices[i][pick[i]].arrows;
            out.emplace_back(q, domain, std::move(reps));
            return;
        }
        for (size_t c = 0; c < choices[k].size(); ++c) {
            pick[k] = c;
            bool consistent = true;
            for (size_t prev = 0; prev < k && consistent; ++prev) {
                int xp = points[prev], xk = points[k];
                const WideSubgroupoid& hp = choices[prev][pick[prev]];
                const WideSubgroupoid& hk = choices[k][c];
                if (sp.minup(xp).contains(xk) &&
                    !(hk.arrows == (hp.arrows & q->arrows_within(sp.minup(xk)))))
                    consistent = false;
                if (sp.minup(xk).contains(xp) &&
                    !(hp.arrows == (hk.arrows & q->arrows_within(sp.minup(xp)))))
                    consistent = false;
            }
            if (consistent) assign(k + 1);
        }
    };
    assign(0);
    return out;
}

std::vector<LocalSubgroupoid> enumerate_local(const GroupoidPtr& q, int max_nonid_arrows,
                                              long max_sections) {
    return enumerate_local(q, q->space()->all_points(), max_nonid_arrows, max_sections);
}

}  // namespace lsg
