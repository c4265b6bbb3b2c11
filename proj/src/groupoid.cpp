#include "lsg/groupoid.hpp"

#include <algorithm>
#include <sstream>

namespace lsg {

GroupoidPtr FinGroupoid::validate(
    SpacePtr space, const std::vector<RawArrow>& arrows,
    const std::map<std::pair<std::string, std::string>, std::string>& comp,
    const std::map<std::string, std::string>& id, const std::map<std::string, std::string>& inv) {
    FinGroupoid q;
    q.space_ = std::move(space);

    for (const auto& a : arrows) q.names_.push_back(a.name);
    std::sort(q.names_.begin(), q.names_.end());
    if (std::adjacent_find(q.names_.begin(), q.names_.end()) != q.names_.end())
        throw InvalidInput("duplicate arrow name");

    auto arrow_index = [&](const std::string& name) -> ArrowId {
        auto it = std::lower_bound(q.names_.begin(), q.names_.end(), name);
        if (it == q.names_.end() || *it != name) throw InvalidInput("unknown arrow: " + name);
        return static_cast<ArrowId>(it - q.names_.begin());
    };

    int m = q.arrow_count();
    q.src_.assign(m, -1);
    q.dst_.assign(m, -1);
    for (const auto& a : arrows) {
        ArrowId g = arrow_index(a.name);
        q.src_[g] = q.space_->point(a.src);
        q.dst_[g] = q.space_->point(a.dst);
    }

    q.comp_.assign(m, std::vector<ArrowId>(m, -1));
    for (const auto& [pair, result] : comp) {
        ArrowId g = arrow_index(pair.first), h = arrow_index(pair.second);
        if (q.dst_[g] != q.src_[h])
            throw EndpointMismatch("composition given for non-composable pair (" + pair.first +
                                   ", " + pair.second + ")");
        q.comp_[g][h] = arrow_index(result);
    }
    for (ArrowId g = 0; g < m; ++g)
        for (ArrowId h = 0; h < m; ++h) {
            if (q.dst_[g] != q.src_[h]) continue;
            ArrowId c = q.comp_[g][h];
            if (c < 0)
                throw EndpointMismatch("missing composition of (" + q.names_[g] + ", " +
                                       q.names_[h] + ")");
            if (q.src_[c] != q.src_[g] || q.dst_[c] != q.dst_[h])
                throw EndpointMismatch("composite " + q.names_[c] + " of (" + q.names_[g] + ", " +
                                       q.names_[h] + ") has wrong endpoints");
        }

    q.id_.assign(q.space_->size(), -1);
    for (const auto& [obj, name] : id) {
        PointId x = q.space_->point(obj);
        ArrowId g = arrow_index(name);
        if (q.src_[g] != x || q.dst_[g] != x)
            throw UnitViolation("id(" + obj + ") = " + name + " is not a loop at " + obj);
        q.id_[x] = g;
    }
    for (PointId x = 0; x < q.space_->size(); ++x)
        if (q.id_[x] < 0) throw UnitViolation("missing identity at " + q.space_->name(x));
    for (ArrowId g = 0; g < m; ++g) {
        if (q.comp_[q.id_[q.src_[g]]][g] != g)
            throw UnitViolation("id(src) * " + q.names_[g] + " differs from " + q.names_[g]);
        if (q.comp_[g][q.id_[q.dst_[g]]] != g)
            throw UnitViolation(q.names_[g] + " * id(dst) differs from " + q.names_[g]);
    }

    q.inv_.assign(m, -1);
    for (const auto& [name, iname] : inv) q.inv_[arrow_index(name)] = arrow_index(iname);
    for (ArrowId g = 0; g < m; ++g) {
        ArrowId ig = q.inv_[g];
        if (ig < 0) throw InverseViolation("missing inverse of " + q.names_[g]);
        if (q.src_[ig] != q.dst_[g] || q.dst_[ig] != q.src_[g])
            throw InverseViolation("inverse of " + q.names_[g] + " has wrong endpoints");
        if (q.comp_[g][ig] != q.id_[q.src_[g]] || q.comp_[ig][g] != q.id_[q.dst_[g]])
            throw InverseViolation(q.names_[g] + " * " + q.names_[ig] + " is not an identity");
    }

    for (ArrowId g = 0; g < m; ++g)
        for (ArrowId h = 0; h < m; ++h) {
            if (q.dst_[g] != q.src_[h]) continue;
            for (ArrowId k = 0; k < m; ++k) {
                if (q.dst_[h] != q.src_[k]) continue;
                if (q.comp_[q.comp_[g][h]][k] != q.comp_[g][q.comp_[h][k]])
                    throw AssociativityViolation("(" + q.names_[g] + ", " + q.names_[h] + ", " +
                                                 q.names_[k] + ")");
            }
        }

    return std::make_shared<const FinGroupoid>(std::move(q));
}

ArrowId FinGroupoid::arrow(const std::string& name) const {
    int g = try_arrow(name);
    if (g < 0) throw InvalidInput("unknown arrow: " + name);
    return g;
}

int FinGroupoid::try_arrow(const std::string& name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return -1;
    return static_cast<int>(it - names_.begin());
}

ArrowId FinGroupoid::comp(ArrowId g, ArrowId h) const {
    if (!composable(g, h))
        throw EndpointMismatch("compose(" + names_[g] + ", " + names_[h] + ")");
    return comp_[g][h];
}

IndexSet FinGroupoid::identity_arrows() const {
    IndexSet out(arrow_count());
    for (ArrowId g : id_) out.insert(g);
    return out;
}

IndexSet FinGroupoid::arrows_within(const IndexSet& points) const {
    IndexSet out(arrow_count());
    for (ArrowId g = 0; g < arrow_count(); ++g)
        if (points.contains(src_[g]) && points.contains(dst_[g])) out.insert(g);
    return out;
}

IndexSet FinGroupoid::star_arrows(PointId x) const {
    IndexSet out(arrow_count());
    for (ArrowId g = 0; g < arrow_count(); ++g)
        if (src_[g] == x) out.insert(g);
    return out;
}

IndexSet FinGroupoid::loop_arrows() const {
    IndexSet out(arrow_count());
    for (ArrowId g = 0; g < arrow_count(); ++g)
        if (src_[g] == dst_[g]) out.insert(g);
    return out;
}

std::string FinGroupoid::format_arrows(const IndexSet& arrows) const {
    std::ostringstream os;
    bool sep = false;
    for (int g = arrows.first(); g >= 0; g = arrows.next(g)) {
        if (sep) os << " ";
        os << names_[g];
        sep = true;
    }
    return os.str();
}

bool same_groupoid(const GroupoidPtr& a, const GroupoidPtr& b) {
    return a.get() == b.get() || *a == *b;
}

WideSubgroupoid::WideSubgroupoid(GroupoidPtr parent_, IndexSet carrier_, IndexSet arrows_)
    : parent(std::move(parent_)), carrier(std::move(carrier_)), arrows(std::move(arrows_)) {
    const FinGroupoid& q = *parent;
    if (!q.space()->is_open(carrier))
        throw CarrierMismatch("carrier {" + q.space()->format_points(carrier) + "} is not open");
    for (int g = arrows.first(); g >= 0; g = arrows.next(g))
        if (!carrier.contains(q.src(g)) || !carrier.contains(q.dst(g)))
            throw CarrierMismatch("arrow " + q.arrow_name(g) + " leaves the carrier");
    for (int x = carrier.first(); x >= 0; x = carrier.next(x))
        if (!arrows.contains(q.id(x)))
            throw InvalidInput("not wide: missing identity at " + q.space()->name(x));
    for (int g = arrows.first(); g >= 0; g = arrows.next(g)) {
        if (!arrows.contains(q.inv(g)))
            throw InvalidInput("not closed under inverse at " + q.arrow_name(g));
        for (int h = arrows.first(); h >= 0; h = arrows.next(h))
            if (q.composable(g, h) && !arrows.contains(q.comp(g, h)))
                throw InvalidInput("not closed under composition at (" + q.arrow_name(g) + ", " +
                                   q.arrow_name(h) + ")");
    }
}

WideSubgroupoid WideSubgroupoid::discrete(const GroupoidPtr& q, const IndexSet& carrier) {
    IndexSet ids(q->arrow_count());
    for (int x = carrier.first(); x >= 0; x = carrier.next(x)) ids.insert(q->id(x));
    return WideSubgroupoid(q, carrier, ids);
}

WideSubgroupoid WideSubgroupoid::full(const GroupoidPtr& q, const IndexSet& carrier) {
    return WideSubgroupoid(q, carrier, q->arrows_within(carrier));
}

bool WideSubgroupoid::le(const WideSubgroupoid& other) const {
    if (!same_groupoid(parent, other.parent) || carrier != other.carrier)
        throw CarrierMismatch("le: different parents or carriers");
    return arrows.subset_of(other.arrows);
}

WideSubgroupoid WideSubgroupoid::meet(const WideSubgroupoid& other) const {
    if (!same_groupoid(parent, other.parent) || carrier != other.carrier)
        throw CarrierMismatch("meet: different parents or carriers");
    return WideSubgroupoid(parent, carrier, arrows & other.arrows);
}

WideSubgroupoid WideSubgroupoid::restrict(const IndexSet& open_subset) const {
    if (!open_subset.subset_of(carrier))
        throw CarrierMismatch("restriction target is not contained in the carrier");
    if (!parent->space()->is_open(open_subset))
        throw CarrierMismatch("restriction target is not open");
    return WideSubgroupoid(parent, open_subset, arrows & parent->arrows_within(open_subset));
}

GroupoidPtr full_restrict(const GroupoidPtr& q, const OpenSet& u) {
    SpacePtr sub = subspace(q->space(), u.members);
    std::vector<FinGroupoid::RawArrow> raw;
    std::map<std::pair<std::string, std::string>, std::string> comp;
    std::map<std::string, std::string> id, inv;

    IndexSet kept = q->arrows_within(u.members);
    for (int g = kept.first(); g >= 0; g = kept.next(g))
        raw.push_back({q->arrow_name(g), q->space()->name(q->src(g)), q->space()->name(q->dst(g))});
    for (int g = kept.first(); g >= 0; g = kept.next(g)) {
        inv[q->arrow_name(g)] = q->arrow_name(q->inv(g));
        for (int h = kept.first(); h >= 0; h = kept.next(h))
            if (q->composable(g, h))
                comp[{q->arrow_name(g), q->arrow_name(h)}] = q->arrow_name(q->comp(g, h));
    }
    for (int x = u.members.first(); x >= 0; x = u.members.next(x))
        id[q->space()->name(x)] = q->arrow_name(q->id(x));
    return FinGroupoid::validate(sub, raw, comp, id, inv);
}

WideSubgroupoid generate(const GroupoidPtr& q, const IndexSet& carrier, const IndexSet& seed) {
    IndexSet acc(q->arrow_count());
    for (int x = carrier.first(); x >= 0; x = carrier.next(x)) acc.insert(q->id(x));
    for (int g = seed.first(); g >= 0; g = seed.next(g)) {
        if (!carrier.contains(q->src(g)) || !carrier.contains(q->dst(g)))
            throw CarrierMismatch("seed arrow " + q->arrow_name(g) + " leaves the carrier");
        acc.insert(g);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> mem = acc.members();
        for (int g : mem) {
            if (!acc.contains(q->inv(g))) {
                acc.insert(q->inv(g));
                grew = true;
            }
        }
        for (int g : mem)
            for (int h : mem) {
                if (!q->composable(g, h)) continue;
                int c = q->comp(g, h);
                if (!acc.contains(c)) {
                    acc.insert(c);
                    grew = true;
                }
            }
    }
    return WideSubgroupoid(q, carrier, acc);
}

std::vector<WideSubgroupoid> enumerate_wide(const GroupoidPtr& q, const IndexSet& carrier,
                                            int max_nonid_arrows) {
    IndexSet within = q->arrows_within(carrier);
    std::vector<int> univ;
    for (int g = within.first(); g >= 0; g = within.next(g))
        if (!q->is_identity(g)) univ.push_back(g);
    int m = static_cast<int>(univ.size());
    if (m > max_nonid_arrows) throw TooLarge("non-identity arrow count", max_nonid_arrows);

    auto closure = [&](const IndexSet& positions) {
        IndexSet seed(q->arrow_count());
        for (int i = positions.first(); i >= 0; i = positions.next(i)) seed.insert(univ[i]);
        IndexSet closed = generate(q, carrier, seed).arrows;
        IndexSet out(m);
        for (int i = 0; i < m; ++i)
            if (closed.contains(univ[i])) out.insert(i);
        return out;
    };

    // Ganter next-closure over the closure operator induced by `generate`.
    std::vector<IndexSet> closed_sets;
    IndexSet a = closure(IndexSet(m));
    closed_sets.push_back(a);
    while (true) {
        bool advanced = false;
        for (int i = m - 1; i >= 0; --i) {
            if (a.contains(i)) {
                a.erase(i);
                continue;
            }
            IndexSet c = a;
            c.insert(i);
            IndexSet b = closure(c);
            bool lectic = true;
            for (int j = b.first(); j >= 0 && j < i; j = b.next(j))
                if (!a.contains(j)) {
                    lectic = false;
                    break;
                }
            if (lectic) {
                a = b;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
        closed_sets.push_back(a);
    }

    std::sort(closed_sets.begin(), closed_sets.end());
    std::vector<WideSubgroupoid> out;
    out.reserve(closed_sets.size());
    for (const IndexSet& positions : closed_sets) {
        IndexSet arrows(q->arrow_count());
        for (int x = carrier.first(); x >= 0; x = carrier.next(x)) arrows.insert(q->id(x));
        for (int i = positions.first(); i >= 0; i = positions.next(i)) arrows.insert(univ[i]);
        out.emplace_back(q, carrier, arrows);
    }
    return out;
}

// ---- builders ----------------------------------------------------------

GroupoidPtr pair_groupoid(const SpacePtr& space) {
    std::vector<FinGroupoid::RawArrow> raw;
    std::map<std::pair<std::string, std::string>, std::string> comp;
    std::map<std::string, std::string> id, inv;
    auto nm = [&](int x, int y) { return space->name(x) + ">" + space->name(y); };
    int n = space->size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) raw.push_back({nm(x, y), space->name(x), space->name(y)});
    for (int x = 0; x < n; ++x) {
        id[space->name(x)] = nm(x, x);
        for (int y = 0; y < n; ++y) {
            inv[nm(x, y)] = nm(y, x);
            for (int z = 0; z < n; ++z) comp[{nm(x, y), nm(y, z)}] = nm(x, z);
        }
    }
    return FinGroupoid::validate(space, raw, comp, id, inv);
}

GroupoidPtr bundle_of_groups(const SpacePtr& space, const std::vector<FinGroup>& fibres) {
    if (static_cast<int>(fibres.size()) != space->size())
        throw InvalidInput("bundle_of_groups: one fibre group per point required");
    std::vector<FinGroupoid::RawArrow> raw;
    std::map<std::pair<std::string, std::string>, std::string> comp;
    std::map<std::string, std::string> id, inv;
    for (int x = 0; x < space->size(); ++x) {
        const FinGroup& g = fibres[x];
        g.validate();
        auto nm = [&](int a) { return space->name(x) + "." + g.elems[a]; };
        for (int a = 0; a < g.size(); ++a) {
            raw.push_back({nm(a), space->name(x), space->name(x)});
            inv[nm(a)] = nm(g.inverse(a));
            for (int b = 0; b < g.size(); ++b) comp[{nm(a), nm(b)}] = nm(g.mult[a][b]);
        }
        id[space->name(x)] = nm(g.identity());
    }
    return FinGroupoid::validate(space, raw, comp, id, inv);
}

GroupoidPtr bundle_of_groups(const SpacePtr& space, const FinGroup& fibre) {
    return bundle_of_groups(space, std::vector<FinGroup>(space->size(), fibre));
}

GroupoidPtr action_groupoid(const SpacePtr& space, const FinGroup& omega,
                            const std::vector<std::vector<PointId>>& action) {
    omega.validate();
    int n = space->size();
    if (static_cast<int>(action.size()) != n)
        throw InvalidInput("action table must cover every point");
    for (int p = 0; p < n; ++p) {
        if (action[p][omega.identity()] != p)
            throw InvalidInput("identity acts nontrivially at " + space->name(p));
        for (int g = 0; g < omega.size(); ++g)
            for (int h = 0; h < omega.size(); ++h)
                if (action[action[p][g]][h] != action[p][omega.mult[g][h]])
                    throw InvalidInput("action is not associative at " + space->name(p));
    }
    for (int g = 0; g < omega.size(); ++g) {
        std::vector<PointId> assign(n);
        for (int p = 0; p < n; ++p) assign[p] = action[p][g];
        ContMap check(space, space, assign);  // throws NotContinuous when invalid
    }

    std::vector<FinGroupoid::RawArrow> raw;
    std::map<std::pair<std::string, std::string>, std::string> comp;
    std::map<std::string, std::string> id, inv;
    auto nm = [&](int p, int g) { return space->name(p) + "." + omega.elems[g]; };
    for (int p = 0; p < n; ++p) {
        id[space->name(p)] = nm(p, omega.identity());
        for (int g = 0; g < omega.size(); ++g) {
            raw.push_back({nm(p, g), space->name(p), space->name(action[p][g])});
            inv[nm(p, g)] = nm(action[p][g], omega.inverse(g));
            for (int h = 0; h < omega.size(); ++h)
                comp[{nm(p, g), nm(action[p][g], h)}] = nm(p, omega.mult[g][h]);
        }
    }
    return FinGroupoid::validate(space, raw, comp, id, inv);
}

GroupoidPtr product_with_pair(const FinGroup& g, const SpacePtr& u) {
    g.validate();
    std::vector<FinGroupoid::RawArrow> raw;
    std::map<std::pair<std::string, std::string>, std::string> comp;
    std::map<std::string, std::string> id, inv;
    auto nm = [&](int a, int y, int z) {
        return g.elems[a] + "|" + u->name(y) + ">" + u->name(z);
    };
    int n = u->size();
    for (int a = 0; a < g.size(); ++a)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) raw.push_back({nm(a, y, z), u->name(y), u->name(z)});
    for (int y = 0; y < n; ++y) id[u->name(y)] = nm(g.identity(), y, y);
    for (int a = 0; a < g.size(); ++a)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                inv[nm(a, y, z)] = nm(g.inverse(a), z, y);
                for (int b = 0; b < g.size(); ++b)
                    for (int w = 0; w < n; ++w)
                        comp[{nm(a, y, z), nm(b, z, w)}] = nm(g.mult[a][b], y, w);
            }
    return FinGroupoid::validate(u, raw, comp, id, inv);
}

SymGroupoid sym_groupoid(const ContMap& p, const FinGroup& omega,
                         const std::vector<std::vector<PointId>>& action) {
    omega.validate();
    const SpacePtr& total = p.dom;
    const SpacePtr& base = p.cod;
    if (!p.surjective()) throw InvalidInput("sym_groupoid: projection is not surjective");
    int ne = total->size();
    if (static_cast<int>(action.size()) != ne)
        throw InvalidInput("sym_groupoid: action table must cover the total space");

    for (int e = 0; e < ne; ++e)
        for (int g = 0; g < omega.size(); ++g) {
            if (p(action[e][g]) != p(e))
                throw NotEquivariant("action moves " + total->name(e) + " across fibres");
            if (g != omega.identity() && action[e][g] == e)
                throw NonFreeAction(omega.elems[g] + " fixes " + total->name(e));
        }

    // Fibres must be single orbits, so each arrow corresponds to exactly one
    // group element once a base point of the fibre is fixed.
    std::vector<std::vector<PointId>> fibre(base->size());
    for (int e = 0; e < ne; ++e) fibre[p(e)].push_back(e);
    std::vector<int> elem_of(ne, -1);  // e = rep . elem_of[e]
    for (int b = 0; b < base->size(); ++b) {
        if (fibre[b].empty()) throw InvalidInput("empty fibre over " + base->name(b));
        PointId rep = fibre[b].front();
        for (PointId e : fibre[b]) {
            for (int g = 0; g < omega.size(); ++g)
                if (action[rep][g] == e) elem_of[e] = g;
            if (elem_of[e] < 0)
                throw NonFreeAction("fibre over " + base->name(b) + " is not a single orbit");
        }
    }

    // Arrow (b, b', w) is the equivariant map sending rep_b . g to
    // (rep_b' . w) . g.
    auto nm = [&](int b, int b2, int w) {
        return base->name(b) + ">" + base->name(b2) + "~" + omega.elems[w];
    };
    std::vector<FinGroupoid::RawArrow> raw;
    std::map<std::string, std::vector<PointId>> maps;
    for (int b = 0; b < base->size(); ++b)
        for (int b2 = 0; b2 < base->size(); ++b2)
            for (int w = 0; w < omega.size(); ++w) {
                raw.push_back({nm(b, b2, w), base->name(b), base->name(b2)});
                std::vector<PointId> f(ne, -1);
                PointId target_rep = fibre[b2].front();
                for (PointId e : fibre[b]) f[e] = action[action[target_rep][w]][elem_of[e]];
                maps[nm(b, b2, w)] = std::move(f);
            }

    auto find_arrow = [&](int b, int b2, const std::vector<PointId>& f) {
        for (int w = 0; w < omega.size(); ++w)
            if (maps[nm(b, b2, w)] == f) return nm(b, b2, w);
        throw Error(Error::Code::internal, "sym_groupoid: fibre map without arrow");
    };

    std::map<std::pair<std::string, std::string>, std::string> comp;
    std::map<std::string, std::string> id, inv;
    for (int b = 0; b < base->size(); ++b) {
        std::vector<PointId> idmap(ne, -1);
        for (PointId e : fibre[b]) idmap[e] = e;
        id[base->name(b)] = find_arrow(b, b, idmap);
    }
    for (const auto& [name1, f1] : maps) {
        // invert
        int b = -1, b2 = -1;
        for (int e = 0; e < ne; ++e)
            if (f1[e] >= 0) {
                b = p(e);
                b2 = p(f1[e]);
                break;
            }
        std::vector<PointId> finv(ne, -1);
        for (int e = 0; e < ne; ++e)
            if (f1[e] >= 0) finv[f1[e]] = e;
        inv[name1] = find_arrow(b2, b, finv);
        for (const auto& [name2, f2] : maps) {
            int c = -1, c2 = -1;
            for (int e = 0; e < ne; ++e)
                if (f2[e] >= 0) {
                    c = p(e);
                    c2 = p(f2[e]);
                    break;
                }
            if (c != b2) continue;
            std::vector<PointId> composite(ne, -1);
            for (int e = 0; e < ne; ++e)
                if (f1[e] >= 0) composite[e] = f2[f1[e]];
            comp[{name1, name2}] = find_arrow(b, c2, composite);
        }
    }

    SymGroupoid out;
    out.groupoid = FinGroupoid::validate(base, raw, comp, id, inv);
    out.arrow_fibre_map.resize(out.groupoid->arrow_count());
    for (const auto& [name, f] : maps) out.arrow_fibre_map[out.groupoid->arrow(name)] = f;
    return out;
}

WideSubgroupoid inn(const GroupoidPtr& q) {
    return WideSubgroupoid(q, q->space()->all_points(), q->loop_arrows());
}

GroupoidMorphism::GroupoidMorphism(GroupoidPtr dom_, GroupoidPtr cod_,
                                   std::vector<PointId> object_map_,
                                   std::vector<ArrowId> arrow_map_)
    : dom(std::move(dom_)),
      cod(std::move(cod_)),
      object_map(std::move(object_map_)),
      arrow_map(std::move(arrow_map_)) {
    if (static_cast<int>(object_map.size()) != dom->space()->size() ||
        static_cast<int>(arrow_map.size()) != dom->arrow_count())
        throw InvalidInput("morphism maps are not total");
    for (ArrowId g = 0; g < dom->arrow_count(); ++g) {
        ArrowId fg = arrow_map[g];
        if (cod->src(fg) != object_map[dom->src(g)] || cod->dst(fg) != object_map[dom->dst(g)])
            throw InvalidInput("morphism does not preserve endpoints at " + dom->arrow_name(g));
        if (arrow_map[dom->inv(g)] != cod->inv(fg))
            throw InvalidInput("morphism does not preserve inverse at " + dom->arrow_name(g));
        for (ArrowId h = 0; h < dom->arrow_count(); ++h)
            if (dom->composable(g, h) &&
                arrow_map[dom->comp(g, h)] != cod->comp(fg, arrow_map[h]))
                throw InvalidInput("morphism does not preserve composition at (" +
                                   dom->arrow_name(g) + ", " + dom->arrow_name(h) + ")");
    }
    for (PointId x = 0; x < dom->space()->size(); ++x)
        if (arrow_map[dom->id(x)] != cod->id(object_map[x]))
            throw InvalidInput("morphism does not preserve identity at " + dom->space()->name(x));
}

GroupoidMorphism GroupoidMorphism::identity(const GroupoidPtr& q) {
    std::vector<PointId> omap(q->space()->size());
    std::vector<ArrowId> amap(q->arrow_count());
    for (size_t i = 0; i < omap.size(); ++i) omap[i] = static_cast<PointId>(i);
    for (size_t i = 0; i < amap.size(); ++i) amap[i] = static_cast<ArrowId>(i);
    return GroupoidMorphism(q, q, std::move(omap), std::move(amap));
}

bool GroupoidMorphism::identity_on_objects() const {
    if (!(*dom->space() == *cod->space())) return false;
    for (PointId x = 0; x < dom->space()->size(); ++x)
        if (object_map[x] != x) return false;
    return true;
}

}  // namespace lsg
