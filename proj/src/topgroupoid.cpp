#include "lsg/topgroupoid.hpp"

#include <algorithm>
#include <functional>

namespace lsg {

TopGroupoid TopGroupoid::validate(GroupoidPtr base, SpacePtr arrow_space) {
    const FinGroupoid& q = *base;
    const FinSpace& obj = *q.space();
    const FinSpace& arr = *arrow_space;

    if (arr.size() != q.arrow_count())
        throw InvalidInput("arrow space size differs from arrow count");
    for (int g = 0; g < q.arrow_count(); ++g)
        if (arr.name(g) != q.arrow_name(g))
            throw InvalidInput("arrow space names do not match arrow names");

    for (int g = 0; g < q.arrow_count(); ++g) {
        const IndexSet& up = arr.minup(g);
        for (int h = up.first(); h >= 0; h = up.next(h)) {
            if (!obj.minup(q.src(g)).contains(q.src(h)))
                throw NotContinuous("src at arrow " + q.arrow_name(g));
            if (!obj.minup(q.dst(g)).contains(q.dst(h)))
                throw NotContinuous("dst at arrow " + q.arrow_name(g));
            if (!arr.minup(q.inv(g)).contains(q.inv(h)))
                throw NotContinuous("inv at arrow " + q.arrow_name(g));
        }
    }
    for (int x = 0; x < obj.size(); ++x) {
        const IndexSet& up = obj.minup(x);
        for (int y = up.first(); y >= 0; y = up.next(y))
            if (!arr.minup(q.id(x)).contains(q.id(y)))
                throw NotContinuous("id at object " + obj.name(x));
    }
    for (int g = 0; g < q.arrow_count(); ++g)
        for (int h = 0; h < q.arrow_count(); ++h) {
            if (!q.composable(g, h)) continue;
            ArrowId gh = q.comp(g, h);
            const IndexSet& upg = arr.minup(g);
            const IndexSet& uph = arr.minup(h);
            for (int g2 = upg.first(); g2 >= 0; g2 = upg.next(g2))
                for (int h2 = uph.first(); h2 >= 0; h2 = uph.next(h2)) {
                    if (!q.composable(g2, h2)) continue;
                    if (!arr.minup(gh).contains(q.comp(g2, h2)))
                        throw NotContinuous("comp at (" + q.arrow_name(g) + ", " +
                                            q.arrow_name(h) + ")");
                }
        }

    TopGroupoid out;
    out.base_ = std::move(base);
    out.arrow_space_ = std::move(arrow_space);
    return out;
}

namespace {

TopGroupoid from_minups(const GroupoidPtr& q,
                        const std::function<IndexSet(ArrowId)>& minup_of) {
    std::map<std::string, std::set<std::string>> raw;
    for (int g = 0; g < q->arrow_count(); ++g) {
        std::set<std::string> up;
        IndexSet m = minup_of(g);
        for (int h = m.first(); h >= 0; h = m.next(h)) up.insert(q->arrow_name(h));
        raw[q->arrow_name(g)] = std::move(up);
    }
    return TopGroupoid::validate(q, FinSpace::validate(raw));
}

}  // namespace

TopGroupoid discrete_arrow_topology(const GroupoidPtr& q) {
    return from_minups(q, [&](ArrowId g) {
        IndexSet m(q->arrow_count());
        m.insert(g);
        return m;
    });
}

TopGroupoid indiscrete_arrow_topology(const GroupoidPtr& q) {
    return from_minups(q, [&](ArrowId) { return q->all_arrows(); });
}

TopGroupoid pair_product_topology(const GroupoidPtr& pair_q) {
    const FinSpace& sp = *pair_q->space();
    return from_minups(pair_q, [&](ArrowId g) {
        IndexSet m(pair_q->arrow_count());
        const IndexSet& us = sp.minup(pair_q->src(g));
        const IndexSet& ud = sp.minup(pair_q->dst(g));
        for (int x = us.first(); x >= 0; x = us.next(x))
            for (int y = ud.first(); y >= 0; y = ud.next(y))
                m.insert(pair_q->arrow(sp.name(x) + ">" + sp.name(y)));
        return m;
    });
}

TopGroupoid product_arrow_topology(const GroupoidPtr& prod_q) {
    const FinSpace& sp = *prod_q->space();
    return from_minups(prod_q, [&](ArrowId a) {
        const std::string& name = prod_q->arrow_name(a);
        std::string slice = name.substr(0, name.find('|'));
        IndexSet m(prod_q->arrow_count());
        const IndexSet& us = sp.minup(prod_q->src(a));
        const IndexSet& ud = sp.minup(prod_q->dst(a));
        for (int y = us.first(); y >= 0; y = us.next(y))
            for (int z = ud.first(); z >= 0; z = ud.next(z))
                m.insert(prod_q->arrow(slice + "|" + sp.name(y) + ">" + sp.name(z)));
        return m;
    });
}

TopGroupoid slice_arrow_topology(const GroupoidPtr& q) {
    const FinSpace& sp = *q->space();
    return from_minups(q, [&](ArrowId a) {
        const std::string& name = q->arrow_name(a);
        size_t dot = name.rfind('.');
        if (dot == std::string::npos)
            throw InvalidInput("slice topology needs 'point.element' arrow names");
        std::string suffix = name.substr(dot);
        IndexSet m(q->arrow_count());
        const IndexSet& up = sp.minup(q->src(a));
        for (int y = up.first(); y >= 0; y = up.next(y))
            m.insert(q->arrow(sp.name(y) + suffix));
        return m;
    });
}

Cover::Cover(SpacePtr space_, std::vector<OpenSet> members_)
    : space(std::move(space_)), members(std::move(members_)) {
    IndexSet covered(space->size());
    for (const OpenSet& u : members) covered |= u.members;
    if (!(covered == space->all_points())) throw InvalidInput("cover does not cover the space");
}

IndexSet star(const TopGroupoid& q, PointId x) {
    if (x < 0 || x >= q.base()->space()->size()) throw UnknownObject(std::to_string(x));
    return q.base()->star_arrows(x);
}

WideSubgroupoid c1(const TopGroupoid& q, const IndexSet& u) {
    const FinGroupoid& base = *q.base();
    IndexSet acc(base.arrow_count());
    IndexSet within = base.arrows_within(u);
    for (int x = u.first(); x >= 0; x = u.next(x)) {
        IndexSet star_u = base.star_arrows(x) & within;
        for (const IndexSet& block : q.arrow_space()->components(star_u)) {
            if (block.contains(base.id(x))) {
                acc |= block;
                break;
            }
        }
    }
    return WideSubgroupoid(q.base(), u, acc);
}

bool is_star_connected(const TopGroupoid& q) {
    return c1(q, q.base()->space()->all_points()).arrows == q.base()->all_arrows();
}

std::optional<PathWitness> path_compatible_witness(const TopGroupoid& q, const Cover& u) {
    const FinSpace& sp = *q.base()->space();
    std::vector<WideSubgroupoid> chart_c1;
    chart_c1.reserve(u.members.size());
    for (const OpenSet& m : u.members) chart_c1.push_back(c1(q, m.members));
    for (size_t i = 0; i < u.members.size(); ++i)
        for (size_t j = i + 1; j < u.members.size(); ++j) {
            IndexSet overlap = u.members[i].members & u.members[j].members;
            for (int x = overlap.first(); x >= 0; x = overlap.next(x)) {
                IndexSet within = q.base()->arrows_within(sp.minup(x));
                if (!((chart_c1[i].arrows & within) == (chart_c1[j].arrows & within)))
                    return PathWitness{static_cast<int>(i), static_cast<int>(j), x};
            }
        }
    return std::nullopt;
}

bool check_path_compatible(const TopGroupoid& q, const Cover& u) {
    return !path_compatible_witness(q, u).has_value();
}

Atlas c1_atlas(const TopGroupoid& q, const Cover& u) {
    if (auto w = path_compatible_witness(q, u)) {
        const FinSpace& sp = *q.base()->space();
        IndexSet within = q.base()->arrows_within(sp.minup(w->x));
        WideSubgroupoid a = c1(q, u.members[w->chart_i].members);
        WideSubgroupoid b = c1(q, u.members[w->chart_j].members);
        throw NotPathCompatible(w->chart_i, w->chart_j, sp.name(w->x),
                                "{" + q.base()->format_arrows(a.arrows & within) + "} vs {" +
                                    q.base()->format_arrows(b.arrows & within) + "}");
    }
    std::vector<WideSubgroupoid> charts;
    charts.reserve(u.members.size());
    for (const OpenSet& m : u.members) charts.push_back(c1(q, m.members));
    return Atlas(q.base(), std::move(charts));
}

LocalSubgroupoid c1_local(const TopGroupoid& q, const Cover& u) {
    return c1_atlas(q, u).section();
}

CheckResult is_path_local(const TopGroupoid& q, const Cover& cov, int max_points) {
    const FinSpace& sp = *q.base()->space();
    if (sp.size() > max_points) throw TooLarge("point count", max_points);
    LocalSubgroupoid section = c1_local(q, cov);  // requires path compatibility

    std::vector<WideSubgroupoid> chart_c1;
    for (const OpenSet& m : cov.members) chart_c1.push_back(c1(q, m.members));

    for (const IndexSet& u : sp.open_sets()) {
        if (u.empty()) continue;
        for (size_t i = 0; i < cov.members.size(); ++i)
            for (size_t j = 0; j < cov.members.size(); ++j) {
                IndexSet uj_cap = cov.members[j].members & u;
                IndexSet overlap = cov.members[i].members & uj_cap;
                if (overlap.empty()) continue;
                WideSubgroupoid cj = c1(q, uj_cap);
                for (int x = overlap.first(); x >= 0; x = overlap.next(x)) {
                    IndexSet within = q.base()->arrows_within(sp.minup(x));
                    if (!((chart_c1[i].arrows & within) == (cj.arrows & within)))
                        return {false, "open {" + sp.format_points(u) + "}, charts " +
                                           std::to_string(i) + "," + std::to_string(j) +
                                           " at " + sp.name(x)};
                }
            }
        // The germ condition holds on this open set, so the restriction
        // identity must hold as well; assert it.
        LocalSubgroupoid lhs = restrict_local(section, u);
        std::vector<IndexSet> reps(sp.size());
        IndexSet assigned(sp.size());
        for (size_t j = 0; j < cov.members.size(); ++j) {
            IndexSet uj_cap = cov.members[j].members & u;
            if (uj_cap.empty()) continue;
            WideSubgroupoid cj = c1(q, uj_cap);
            for (int x = uj_cap.first(); x >= 0; x = uj_cap.next(x)) {
                if (assigned.contains(x)) continue;
                reps[x] = cj.arrows & q.base()->arrows_within(sp.minup(x));
                assigned.insert(x);
            }
        }
        LocalSubgroupoid rhs(q.base(), u, std::move(reps));
        if (!(lhs == rhs))
            throw Error(Error::Code::internal,
                        "path-local germ condition held but the restriction identity failed");
    }
    return {true, ""};
}

PartialMorphism::PartialMorphism(GroupoidPtr q_, IndexSet from, IndexSet to,
                                 std::vector<PointId> omap, std::vector<ArrowId> amap)
    : q(std::move(q_)),
      from_points(std::move(from)),
      to_points(std::move(to)),
      object_map(std::move(omap)),
      arrow_map(std::move(amap)) {
    const FinSpace& sp = *q->space();
    if (!sp.is_open(from_points) || !sp.is_open(to_points))
        throw InvalidInput("partial morphism endpoints must be open");
    IndexSet dom_arrows = q->arrows_within(from_points);
    for (int x = from_points.first(); x >= 0; x = from_points.next(x))
        if (object_map[x] < 0 || !to_points.contains(object_map[x]))
            throw NotARetraction("object image of " + sp.name(x) + " is outside the target");
    for (int g = dom_arrows.first(); g >= 0; g = dom_arrows.next(g)) {
        ArrowId fg = arrow_map[g];
        if (fg < 0) throw NotARetraction("arrow " + q->arrow_name(g) + " has no image");
        if (q->src(fg) != object_map[q->src(g)] || q->dst(fg) != object_map[q->dst(g)])
            throw NotARetraction("endpoints not preserved at " + q->arrow_name(g));
        if (arrow_map[q->inv(g)] != q->inv(fg))
            throw NotARetraction("inverse not preserved at " + q->arrow_name(g));
        for (int h = dom_arrows.first(); h >= 0; h = dom_arrows.next(h))
            if (q->composable(g, h) && arrow_map[q->comp(g, h)] != q->comp(fg, arrow_map[h]))
                throw NotARetraction("composition not preserved at (" + q->arrow_name(g) + ", " +
                                     q->arrow_name(h) + ")");
    }
    for (int x = from_points.first(); x >= 0; x = from_points.next(x))
        if (arrow_map[q->id(x)] != q->id(object_map[x]))
            throw NotARetraction("identity not preserved at " + sp.name(x));
}

void PartialMorphism::require_retraction() const {
    const FinSpace& sp = *q->space();
    if (!to_points.subset_of(from_points))
        throw NotARetraction("target is not contained in the source");
    for (int x = to_points.first(); x >= 0; x = to_points.next(x))
        if (object_map[x] != x) throw NotARetraction("not the identity at " + sp.name(x));
    IndexSet to_arrows = q->arrows_within(to_points);
    for (int g = to_arrows.first(); g >= 0; g = to_arrows.next(g))
        if (arrow_map[g] != g)
            throw NotARetraction("not the identity on arrow " + q->arrow_name(g));
}

void PartialMorphism::require_continuous(const TopGroupoid& top) const {
    const FinSpace& sp = *q->space();
    const FinSpace& arr = *top.arrow_space();
    for (int x = from_points.first(); x >= 0; x = from_points.next(x)) {
        IndexSet up = sp.minup(x) & from_points;
        for (int y = up.first(); y >= 0; y = up.next(y))
            if (!sp.minup(object_map[x]).contains(object_map[y]))
                throw NotContinuous("object retraction at " + sp.name(x));
    }
    IndexSet dom_arrows = q->arrows_within(from_points);
    for (int g = dom_arrows.first(); g >= 0; g = dom_arrows.next(g)) {
        IndexSet up = arr.minup(g) & dom_arrows;
        for (int h = up.first(); h >= 0; h = up.next(h))
            if (!arr.minup(arrow_map[g]).contains(arrow_map[h]))
                throw NotContinuous("arrow retraction at " + q->arrow_name(g));
    }
}

bool check_retraction_criterion(const TopGroupoid& q, const Cover& u,
                                const std::vector<RetractionDatum>& data) {
    const FinSpace& sp = *q.base()->space();
    auto find_datum = [&](int i, int j, PointId x) -> const RetractionDatum* {
        for (const RetractionDatum& d : data)
            if (d.chart_i == i && d.chart_j == j && d.x == x) return &d;
        return nullptr;
    };
    for (size_t i = 0; i < u.members.size(); ++i)
        for (size_t j = i + 1; j < u.members.size(); ++j) {
            IndexSet overlap = u.members[i].members & u.members[j].members;
            for (int x = overlap.first(); x >= 0; x = overlap.next(x)) {
                const RetractionDatum* d =
                    find_datum(static_cast<int>(i), static_cast<int>(j), x);
                if (!d)
                    throw InvalidInput("missing retraction datum for charts " +
                                       std::to_string(i) + "," + std::to_string(j) + " at " +
                                       sp.name(x));
                const IndexSet& w = sp.minup(x);
                if (!(d->r_i.to_points == w) || !(d->r_j.to_points == w) ||
                    !(d->r_i.from_points == u.members[i].members) ||
                    !(d->r_j.from_points == u.members[j].members))
                    throw NotARetraction("retraction endpoints do not match the charts");
                d->r_i.require_retraction();
                d->r_j.require_retraction();
                d->r_i.require_continuous(q);
                d->r_j.require_continuous(q);
            }
        }
    if (path_compatible_witness(q, u))
        throw Error(Error::Code::internal,
                    "retraction criterion held but the cover is not path compatible");
    return true;
}

PartialMorphism covering_retraction(const TopGroupoid& q, const IndexSet& u,
                                    const std::vector<ArrowId>& section, const IndexSet& w,
                                    const std::vector<PointId>& rho) {
    const GroupoidPtr& base = q.base();
    const FinSpace& sp = *base->space();
    std::vector<PointId> omap(sp.size(), -1);
    std::vector<ArrowId> amap(base->arrow_count(), -1);
    for (int x = u.first(); x >= 0; x = u.next(x)) omap[x] = rho[x];
    IndexSet dom_arrows = base->arrows_within(u);
    for (int g = dom_arrows.first(); g >= 0; g = dom_arrows.next(g)) {
        PointId y = base->src(g), z = base->dst(g);
        ArrowId leg = base->comp(base->inv(section[rho[y]]), section[y]);
        leg = base->comp(leg, g);
        leg = base->comp(leg, base->inv(section[z]));
        amap[g] = base->comp(leg, section[rho[z]]);
    }
    return PartialMorphism(base, u, w, std::move(omap), std::move(amap));
}

std::optional<std::vector<ArrowId>> find_section(const TopGroupoid& q, const IndexSet& u,
                                                 PointId x) {
    const GroupoidPtr& base = q.base();
    const FinSpace& sp = *base->space();
    if (!u.contains(x)) throw UnknownObject("basepoint outside the open set");
    std::vector<int> points = u.members();
    std::vector<std::vector<ArrowId>> candidates(points.size());
    for (size_t k = 0; k < points.size(); ++k) {
        for (int g = 0; g < base->arrow_count(); ++g)
            if (base->src(g) == x && base->dst(g) == points[k]) candidates[k].push_back(g);
        if (candidates[k].empty()) return std::nullopt;
    }
    std::vector<int> at(sp.size(), -1);
    for (size_t k = 0; k < points.size(); ++k) at[points[k]] = static_cast<int>(k);

    std::vector<ArrowId> chosen(sp.size(), -1);
    std::function<bool(size_t)> assign = [&](size_t k) -> bool {
        if (k == points.size()) return true;
        PointId y = points[k];
        for (ArrowId g : candidates[k]) {
            chosen[y] = g;
            bool ok = true;
            for (size_t prev = 0; prev <= k && ok; ++prev) {
                PointId z = points[prev];
                if (sp.minup(y).contains(z) &&
                    !q.arrow_space()->minup(chosen[y]).contains(chosen[z]))
                    ok = false;
                if (sp.minup(z).contains(y) &&
                    !q.arrow_space()->minup(chosen[z]).contains(chosen[y]))
                    ok = false;
            }
            if (ok && assign(k + 1)) return true;
        }
        chosen[y] = -1;
        return false;
    };
    if (!assign(0)) return std::nullopt;
    return chosen;
}

TopGroupoid restrict_top(const TopGroupoid& q, const IndexSet& u) {
    GroupoidPtr restricted = full_restrict(q.base(), OpenSet(q.base()->space(), u));
    SpacePtr arr = subspace(q.arrow_space(), q.base()->arrows_within(u));
    return TopGroupoid::validate(restricted, arr);
}

Trivialization trivialize(const TopGroupoid& q, const IndexSet& u,
                          const std::vector<ArrowId>& section) {
    const GroupoidPtr& base = q.base();
    const FinSpace& sp = *base->space();
    PointId x = base->src(section[u.first()]);
    for (int y = u.first(); y >= 0; y = u.next(y)) {
        if (base->src(section[y]) != x || base->dst(section[y]) != y)
            throw InvalidInput("section arrows must run from one basepoint to each point");
        IndexSet up = sp.minup(y) & u;
        for (int y2 = up.first(); y2 >= 0; y2 = up.next(y2))
            if (!q.arrow_space()->minup(section[y]).contains(section[y2]))
                throw NotContinuous("section of dst at " + sp.name(y));
    }

    TopGroupoid restricted = restrict_top(q, u);

    // Vertex group of Q at x; its subspace arrow topology enters through the
    // ambient minups intersected with the vertex set.
    IndexSet vertex(base->arrow_count());
    for (int g = 0; g < base->arrow_count(); ++g)
        if (base->src(g) == x && base->dst(g) == x) vertex.insert(g);

    // Product groupoid Q(x) x (U x U) with arrow names "v|y>z".
    SpacePtr usub = subspace(base->space(), u);
    auto nm = [&](ArrowId v, PointId y, PointId z) {
        return base->arrow_name(v) + "|" + sp.name(y) + ">" + sp.name(z);
    };
    std::vector<FinGroupoid::RawArrow> raw;
    std::map<std::pair<std::string, std::string>, std::string> comp;
    std::map<std::string, std::string> id, inv;
    std::vector<int> vs = vertex.members();
    std::vector<int> us = u.members();
    for (int v : vs)
        for (int y : us)
            for (int z : us) raw.push_back({nm(v, y, z), sp.name(y), sp.name(z)});
    for (int y : us) id[sp.name(y)] = nm(base->id(x), y, y);
    for (int v : vs)
        for (int y : us)
            for (int z : us) {
                inv[nm(v, y, z)] = nm(base->inv(v), z, y);
                for (int v2 : vs)
                    for (int w : us)
                        comp[{nm(v, y, z), nm(v2, z, w)}] = nm(base->comp(v, v2), y, w);
            }
    GroupoidPtr product_base = FinGroupoid::validate(usub, raw, comp, id, inv);

    std::map<std::string, std::set<std::string>> arr_raw;
    for (int v : vs)
        for (int y : us)
            for (int z : us) {
                std::set<std::string> up;
                const IndexSet vmin = q.arrow_space()->minup(v) & vertex;
                for (int v2 = vmin.first(); v2 >= 0; v2 = vmin.next(v2)) {
                    IndexSet yup = sp.minup(y) & u;
                    IndexSet zup = sp.minup(z) & u;
                    for (int y2 = yup.first(); y2 >= 0; y2 = yup.next(y2))
                        for (int z2 = zup.first(); z2 >= 0; z2 = zup.next(z2))
                            up.insert(nm(v2, y2, z2));
                }
                arr_raw[nm(v, y, z)] = std::move(up);
            }
    TopGroupoid product = TopGroupoid::validate(product_base, FinSpace::validate(arr_raw));

    // phi(g) = (s(y) g s(z)^-1, (y, z)); psi is its pointwise inverse.
    const GroupoidPtr& rq = restricted.base();
    std::vector<PointId> omap(rq->space()->size());
    for (int p = 0; p < rq->space()->size(); ++p)
        omap[p] = product_base->space()->point(rq->space()->name(p));
    std::vector<ArrowId> amap(rq->arrow_count());
    for (int g = 0; g < rq->arrow_count(); ++g) {
        ArrowId ag = base->arrow(rq->arrow_name(g));
        PointId y = base->src(ag), z = base->dst(ag);
        ArrowId v = base->comp(base->comp(section[y], ag), base->inv(section[z]));
        amap[g] = product_base->arrow(nm(v, y, z));
    }
    std::vector<PointId> omap_inv(product_base->space()->size());
    for (int p = 0; p < product_base->space()->size(); ++p)
        omap_inv[p] = rq->space()->point(product_base->space()->name(p));
    std::vector<ArrowId> amap_inv(product_base->arrow_count(), -1);
    for (int g = 0; g < rq->arrow_count(); ++g) {
        if (amap_inv[amap[g]] != -1)
            throw Error(Error::Code::internal, "trivialization is not injective");
        amap_inv[amap[g]] = g;
    }
    for (int g = 0; g < product_base->arrow_count(); ++g)
        if (amap_inv[g] < 0)
            throw Error(Error::Code::internal, "trivialization is not surjective");

    try {
        GroupoidMorphism iso(rq, product_base, omap, amap);
        GroupoidMorphism back(product_base, rq, omap_inv, amap_inv);
        // Continuity of the arrow maps, both ways.
        (void)ContMap(restricted.arrow_space(), product.arrow_space(), amap);
        (void)ContMap(product.arrow_space(), restricted.arrow_space(), amap_inv);
        return Trivialization{std::move(restricted), std::move(product), std::move(iso),
                              std::move(back)};
    } catch (const InvalidInput& e) {
        throw Error(Error::Code::internal, std::string("trivialization is not an iso: ") +
                                               e.what());
    }
}

}  // namespace lsg
