#include "lsg/connections.hpp"

#include <algorithm>

namespace lsg {

Walk::Walk(SpacePtr space_, std::vector<PointId> vertices_)
    : space(std::move(space_)), vertices(std::move(vertices_)) {
    if (vertices.empty()) throw InvalidInput("walk must have at least one vertex");
    for (size_t k = 0; k + 1 < vertices.size(); ++k)
        if (!space->comparable(vertices[k], vertices[k + 1]))
            throw NonComparableStep(space->name(vertices[k]) + " -> " +
                                    space->name(vertices[k + 1]));
}

Walk Walk::reversed() const {
    std::vector<PointId> v(vertices.rbegin(), vertices.rend());
    return Walk(space, std::move(v));
}

Walk Walk::then(const Walk& other) const {
    if (end() != other.start()) throw InvalidInput("walk concatenation endpoints do not meet");
    std::vector<PointId> v = vertices;
    v.insert(v.end(), other.vertices.begin() + 1, other.vertices.end());
    return Walk(space, std::move(v));
}

bool Walk::inside(const IndexSet& points) const {
    for (PointId v : vertices)
        if (!points.contains(v)) return false;
    return true;
}

PathConnection::PathConnection(TopGroupoid groupoid,
                               std::map<std::pair<PointId, PointId>, ArrowId> gamma)
    : groupoid_(std::move(groupoid)), gamma_(std::move(gamma)) {
    const GroupoidPtr& q = groupoid_.base();
    const FinSpace& sp = *q->space();
    for (const auto& [pair, g] : gamma_) {
        auto [x, y] = pair;
        if (!sp.comparable(x, y))
            throw InvalidInput("gamma given on non-comparable pair (" + sp.name(x) + ", " +
                               sp.name(y) + ")");
        if (q->src(g) != x || q->dst(g) != y)
            throw InvalidInput("gamma(" + sp.name(x) + ", " + sp.name(y) +
                               ") is not an arrow between those points");
    }
    for (int x = 0; x < sp.size(); ++x) {
        auto it = gamma_.find({x, x});
        if (it != gamma_.end() && it->second != q->id(x))
            throw InvalidInput("gamma(" + sp.name(x) + ", " + sp.name(x) +
                               ") must be the identity");
        gamma_[{x, x}] = q->id(x);
    }
    for (int x = 0; x < sp.size(); ++x)
        for (int y = 0; y < sp.size(); ++y) {
            if (x == y || !sp.comparable(x, y)) continue;
            auto fwd = gamma_.find({x, y});
            auto rev = gamma_.find({y, x});
            if (fwd == gamma_.end() && rev == gamma_.end())
                throw MissingGamma("(" + sp.name(x) + ", " + sp.name(y) + ")");
            if (fwd != gamma_.end() && rev != gamma_.end()) {
                if (rev->second != q->inv(fwd->second))
                    throw InvalidInput("gamma(" + sp.name(y) + ", " + sp.name(x) +
                                       ") is not the inverse of gamma(" + sp.name(x) + ", " +
                                       sp.name(y) + ")");
            } else if (fwd != gamma_.end()) {
                gamma_[{y, x}] = q->inv(fwd->second);
            }
        }
}

ArrowId PathConnection::gamma(PointId x, PointId y) const {
    auto it = gamma_.find({x, y});
    if (it == gamma_.end())
        throw NonComparableStep(groupoid_.base()->space()->name(x) + " -> " +
                                groupoid_.base()->space()->name(y));
    return it->second;
}

IndexSet PathConnection::elementary_within(const IndexSet& points) const {
    IndexSet out(groupoid_.base()->arrow_count());
    for (const auto& [pair, g] : gamma_)
        if (points.contains(pair.first) && points.contains(pair.second)) out.insert(g);
    return out;
}

ArrowId transport(const PathConnection& conn, const Walk& w) {
    const GroupoidPtr& q = conn.groupoid().base();
    if (!(*w.space == *q->space()))
        throw InvalidInput("walk lives on a different space than the connection");
    ArrowId acc = q->id(w.vertices.front());
    for (size_t k = 0; k + 1 < w.vertices.size(); ++k)
        acc = q->comp(acc, conn.gamma(w.vertices[k], w.vertices[k + 1]));
    return acc;
}

WideSubgroupoid c_gamma(const PathConnection& conn, const IndexSet& u) {
    const GroupoidPtr& q = conn.groupoid().base();
    WideSubgroupoid generated = generate(q, u, conn.elementary_within(u));

    // Walk characterization: close the elementary transports under
    // composition only (reverse walks supply the inverses).  Both routes
    // must agree.
    IndexSet walks = conn.elementary_within(u);
    for (int x = u.first(); x >= 0; x = u.next(x)) walks.insert(q->id(x));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> mem = walks.members();
        for (int g : mem)
            for (int h : mem) {
                if (!q->composable(g, h)) continue;
                int c = q->comp(g, h);
                if (!walks.contains(c)) {
                    walks.insert(c);
                    grew = true;
                }
            }
    }
    if (!(walks == generated.arrows))
        throw Error(Error::Code::internal,
                    "walk transports disagree with the generated subgroupoid");
    return generated;
}

FlatnessResult is_flat_on(const PathConnection& conn, const IndexSet& u, int tree_seed) {
    const GroupoidPtr& q = conn.groupoid().base();
    const FinSpace& sp = *q->space();

    for (const IndexSet& block : sp.components(u)) {
        std::vector<int> nodes = block.members();
        auto neighbors = [&](int v) {
            std::vector<int> out;
            for (int w : nodes)
                if (w != v && sp.comparable(v, w)) out.push_back(w);
            if (tree_seed != 0) std::reverse(out.begin(), out.end());
            return out;
        };

        // tree_seed 0: breadth-first from the least node; otherwise
        // depth-first from the greatest, with reversed neighbor order.
        int root = tree_seed == 0 ? nodes.front() : nodes.back();
        std::vector<int> parent(sp.size(), -1);
        std::vector<bool> in_tree(sp.size(), false);
        std::vector<int> order{root};
        in_tree[root] = true;
        if (tree_seed == 0) {
            for (size_t head = 0; head < order.size(); ++head)
                for (int w : neighbors(order[head]))
                    if (!in_tree[w]) {
                        parent[w] = order[head];
                        in_tree[w] = true;
                        order.push_back(w);
                    }
        } else {
            std::vector<int> stack{root};
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : neighbors(v))
                    if (!in_tree[w]) {
                        parent[w] = v;
                        in_tree[w] = true;
                        order.push_back(w);
                        stack.push_back(w);
                    }
            }
        }

        // transports along tree paths from the root
        std::vector<ArrowId> to(sp.size(), -1);
        to[root] = q->id(root);
        for (int v : order)
            if (v != root) to[v] = q->comp(to[parent[v]], conn.gamma(parent[v], v));

        auto tree_path = [&](int v) {
            std::vector<PointId> path;
            for (int w = v; w >= 0; w = parent[w]) {
                path.push_back(w);
                if (w == root) break;
            }
            std::reverse(path.begin(), path.end());
            return path;
        };

        for (int a = block.first(); a >= 0; a = block.next(a))
            for (int b = block.next(a); b >= 0; b = block.next(b)) {
                if (!sp.comparable(a, b)) continue;
                if (parent[a] == b || parent[b] == a) continue;  // tree edge
                ArrowId around = q->comp(q->comp(to[a], conn.gamma(a, b)), q->inv(to[b]));
                if (around != q->id(root)) {
                    std::vector<PointId> cyc = tree_path(a);
                    cyc.push_back(b);
                    std::vector<PointId> back = tree_path(b);
                    std::reverse(back.begin(), back.end());
                    cyc.insert(cyc.end(), back.begin() + 1, back.end());
                    return {false, Walk(q->space(), std::move(cyc))};
                }
            }
    }
    return {true, std::nullopt};
}

GeodesicStructure::GeodesicStructure(Cover cover,
                                     std::map<std::tuple<int, PointId, PointId>, Walk> geod)
    : cover_(std::move(cover)), geod_(std::move(geod)) {
    const FinSpace& sp = *cover_.space;
    for (const auto& [key, walk] : geod_) {
        auto [i, x, y] = key;
        if (i < 0 || i >= static_cast<int>(cover_.members.size()))
            throw InvalidInput("geodesic chart index out of range");
        if (walk.start() != x || walk.end() != y)
            throw InvalidInput("geodesic endpoints disagree with its key");
        if (!walk.inside(cover_.members[i].members))
            throw InvalidInput("geodesic leaves its chart");
    }
    for (size_t i = 0; i < cover_.members.size(); ++i) {
        for (const IndexSet& block : sp.components(cover_.members[i].members)) {
            for (int x = block.first(); x >= 0; x = block.next(x))
                for (int y = block.first(); y >= 0; y = block.next(y)) {
                    auto key = std::make_tuple(static_cast<int>(i), x, y);
                    if (geod_.find(key) == geod_.end()) {
                        if (x == y)
                            geod_.emplace(key, Walk(cover_.space, {x}));
                        else
                            throw InvalidInput("missing geodesic in chart " + std::to_string(i) +
                                               " from " + sp.name(x) + " to " + sp.name(y));
                    }
                }
        }
    }
    // overlap agreement
    for (size_t i = 0; i < cover_.members.size(); ++i)
        for (size_t j = i + 1; j < cover_.members.size(); ++j) {
            IndexSet overlap = cover_.members[i].members & cover_.members[j].members;
            for (int x = overlap.first(); x >= 0; x = overlap.next(x))
                for (int y = overlap.first(); y >= 0; y = overlap.next(y)) {
                    auto a = geod_.find({static_cast<int>(i), x, y});
                    auto b = geod_.find({static_cast<int>(j), x, y});
                    if (a != geod_.end() && b != geod_.end() &&
                        a->second.vertices != b->second.vertices)
                        throw InvalidInput("geodesics disagree on the overlap of charts " +
                                           std::to_string(i) + " and " + std::to_string(j));
                }
        }
}

const Walk& GeodesicStructure::geod(int chart, PointId x, PointId y) const {
    auto it = geod_.find({chart, x, y});
    if (it == geod_.end()) throw InvalidInput("no geodesic for that chart and pair");
    return it->second;
}

Atlas c_gamma_atlas(const PathConnection& conn, const GeodesicStructure& gs) {
    const GroupoidPtr& q = conn.groupoid().base();
    const FinSpace& sp = *q->space();
    const Cover& cov = gs.cover();

    for (size_t i = 0; i < cov.members.size(); ++i) {
        FlatnessResult f = is_flat_on(conn, cov.members[i].members);
        if (!f.flat)
            throw NotFlat(static_cast<int>(i),
                          "cycle through " + sp.name(f.cycle->vertices.front()));
    }
    std::vector<WideSubgroupoid> charts;
    charts.reserve(cov.members.size());
    for (const OpenSet& m : cov.members) charts.push_back(c_gamma(conn, m.members));
    for (size_t i = 0; i < charts.size(); ++i)
        for (size_t j = i + 1; j < charts.size(); ++j) {
            IndexSet overlap = cov.members[i].members & cov.members[j].members;
            for (int x = overlap.first(); x >= 0; x = overlap.next(x)) {
                IndexSet within = q->arrows_within(sp.minup(x));
                if (!((charts[i].arrows & within) == (charts[j].arrows & within)))
                    throw OverlapMismatch(static_cast<int>(i), static_cast<int>(j), sp.name(x));
            }
        }
    return Atlas(q, std::move(charts));
}

LocalSubgroupoid c_gamma_local(const PathConnection& conn, const GeodesicStructure& gs) {
    return c_gamma_atlas(conn, gs).section();
}

CheckResult is_gamma_path_local(const PathConnection& conn, const Cover& cov, int max_points) {
    const GroupoidPtr& q = conn.groupoid().base();
    const FinSpace& sp = *q->space();
    if (sp.size() > max_points) throw TooLarge("point count", max_points);

    std::vector<WideSubgroupoid> chart_cg;
    for (const OpenSet& m : cov.members) chart_cg.push_back(c_gamma(conn, m.members));

    for (const IndexSet& u : sp.open_sets()) {
        if (u.empty()) continue;
        for (size_t i = 0; i < cov.members.size(); ++i)
            for (size_t j = 0; j < cov.members.size(); ++j) {
                IndexSet uj_cap = cov.members[j].members & u;
                IndexSet overlap = cov.members[i].members & uj_cap;
                if (overlap.empty()) continue;
                WideSubgroupoid cj = c_gamma(conn, uj_cap);
                for (int x = overlap.first(); x >= 0; x = overlap.next(x)) {
                    IndexSet within = q->arrows_within(sp.minup(x));
                    if (!((chart_cg[i].arrows & within) == (cj.arrows & within)))
                        return {false, "open {" + sp.format_points(u) + "}, charts " +
                                           std::to_string(i) + "," + std::to_string(j) + " at " +
                                           sp.name(x)};
                }
            }
    }
    return {true, ""};
}

}  // namespace lsg
