#include "lsg/finspace.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace lsg {

SpacePtr FinSpace::validate(const std::map<std::string, std::set<std::string>>& raw_minup) {
    FinSpace s;
    for (const auto& [name, _] : raw_minup) s.names_.push_back(name);
    std::sort(s.names_.begin(), s.names_.end());

    std::map<std::string, PointId> index;
    for (int i = 0; i < s.size(); ++i) index[s.names_[i]] = i;

    s.minup_.assign(s.size(), IndexSet(s.size()));
    for (const auto& [name, up] : raw_minup) {
        PointId p = index.at(name);
        for (const auto& member : up) {
            auto it = index.find(member);
            if (it == index.end()) throw UnknownPoint(member);
            s.minup_[p].insert(it->second);
        }
    }

    for (int x = 0; x < s.size(); ++x) {
        if (!s.minup_[x].contains(x))
            throw AxiomViolation(s.names_[x], s.names_[x], "x not in minup(x)");
        for (int y = s.minup_[x].first(); y >= 0; y = s.minup_[x].next(y)) {
            if (!s.minup_[y].subset_of(s.minup_[x]))
                throw AxiomViolation(s.names_[x], s.names_[y],
                                     "minup(y) not contained in minup(x) although y in minup(x)");
        }
    }
    return std::make_shared<const FinSpace>(std::move(s));
}

PointId FinSpace::point(const std::string& name) const {
    int p = try_point(name);
    if (p < 0) throw UnknownPoint(name);
    return p;
}

int FinSpace::try_point(const std::string& name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return -1;
    return static_cast<int>(it - names_.begin());
}

bool FinSpace::is_open(const IndexSet& members) const {
    for (int x = members.first(); x >= 0; x = members.next(x))
        if (!minup_[x].subset_of(members)) return false;
    return true;
}

std::vector<IndexSet> FinSpace::open_sets(int bound) const {
    // Depth-first over membership decisions; including x forces minup(x),
    // excluding x blocks any later point whose minup contains x.  Each open
    // set is reached by exactly one decision path.
    std::vector<IndexSet> out;
    std::function<void(int, IndexSet, IndexSet)> walk = [&](int p, IndexSet acc,
                                                            IndexSet excluded) {
        if (p == size()) {
            if (static_cast<int>(out.size()) >= bound) throw TooLarge("open set count", bound);
            out.push_back(acc);
            return;
        }
        if (acc.contains(p)) {
            walk(p + 1, acc, excluded);
            return;
        }
        IndexSet ex = excluded;
        ex.insert(p);
        walk(p + 1, acc, ex);
        if ((minup_[p] & excluded).empty()) walk(p + 1, acc | minup_[p], excluded);
    };
    walk(0, IndexSet(size()), IndexSet(size()));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IndexSet> FinSpace::components(const IndexSet& open_subset) const {
    std::vector<IndexSet> blocks;
    IndexSet seen(size());
    for (int x = open_subset.first(); x >= 0; x = open_subset.next(x)) {
        if (seen.contains(x)) continue;
        IndexSet block(size());
        std::vector<int> stack{x};
        block.insert(x);
        seen.insert(x);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = open_subset.first(); v >= 0; v = open_subset.next(v)) {
                if (!block.contains(v) && comparable(u, v)) {
                    block.insert(v);
                    seen.insert(v);
                    stack.push_back(v);
                }
            }
        }
        blocks.push_back(block);
    }
    return blocks;
}

std::string FinSpace::format_points(const IndexSet& members) const {
    std::ostringstream os;
    bool sep = false;
    for (int x = members.first(); x >= 0; x = members.next(x)) {
        if (sep) os << " ";
        os << names_[x];
        sep = true;
    }
    return os.str();
}

OpenSet::OpenSet(SpacePtr sp, IndexSet m) : space(std::move(sp)), members(std::move(m)) {
    if (!space->is_open(members))
        throw InvalidInput("not an open set: {" + space->format_points(members) + "}");
}

ContMap::ContMap(SpacePtr d, SpacePtr c, std::vector<PointId> assign)
    : dom(std::move(d)), cod(std::move(c)), assignment(std::move(assign)) {
    if (static_cast<int>(assignment.size()) != dom->size())
        throw InvalidInput("ContMap assignment not total");
    for (int x = 0; x < dom->size(); ++x) {
        const IndexSet& up = dom->minup(x);
        for (int y = up.first(); y >= 0; y = up.next(y)) {
            if (!cod->minup(assignment[x]).contains(assignment[y]))
                throw NotContinuous("image of " + dom->name(y) + " leaves minup(" +
                                    cod->name(assignment[x]) + ")");
        }
    }
}

ContMap ContMap::from_names(SpacePtr d, SpacePtr c,
                            const std::map<std::string, std::string>& assign) {
    std::vector<PointId> v(d->size(), -1);
    for (const auto& [from, to] : assign) v[d->point(from)] = c->point(to);
    for (int x = 0; x < d->size(); ++x)
        if (v[x] < 0) throw InvalidInput("ContMap missing image of " + d->name(x));
    return ContMap(std::move(d), std::move(c), std::move(v));
}

IndexSet ContMap::image(const IndexSet& s) const {
    IndexSet out(cod->size());
    for (int x = s.first(); x >= 0; x = s.next(x)) out.insert(assignment[x]);
    return out;
}

IndexSet ContMap::preimage(const IndexSet& s) const {
    IndexSet out(dom->size());
    for (int x = 0; x < dom->size(); ++x)
        if (s.contains(assignment[x])) out.insert(x);
    return out;
}

bool ContMap::surjective() const { return image(dom->all_points()) == cod->all_points(); }

SpacePtr product_space(const SpacePtr& a, const SpacePtr& b) {
    std::map<std::string, std::set<std::string>> raw;
    for (int x = 0; x < a->size(); ++x) {
        for (int y = 0; y < b->size(); ++y) {
            std::set<std::string> up;
            const IndexSet& ux = a->minup(x);
            const IndexSet& uy = b->minup(y);
            for (int x2 = ux.first(); x2 >= 0; x2 = ux.next(x2))
                for (int y2 = uy.first(); y2 >= 0; y2 = uy.next(y2))
                    up.insert(a->name(x2) + "|" + b->name(y2));
            raw[a->name(x) + "|" + b->name(y)] = std::move(up);
        }
    }
    return FinSpace::validate(raw);
}

namespace {

std::vector<int> class_of_point(const SpacePtr& a,
                                const std::vector<std::vector<std::string>>& classes) {
    std::vector<int> cls(a->size(), -1);
    for (size_t c = 0; c < classes.size(); ++c) {
        if (classes[c].empty()) throw InvalidPartition("empty class");
        for (const auto& name : classes[c]) {
            PointId p = a->point(name);
            if (cls[p] >= 0) throw InvalidPartition(name + " appears in two classes");
            cls[p] = static_cast<int>(c);
        }
    }
    for (int p = 0; p < a->size(); ++p)
        if (cls[p] < 0) throw InvalidPartition(a->name(p) + " not covered");
    return cls;
}

std::vector<std::string> class_names(const std::vector<std::vector<std::string>>& classes) {
    std::vector<std::string> names(classes.size());
    for (size_t c = 0; c < classes.size(); ++c)
        names[c] = *std::min_element(classes[c].begin(), classes[c].end());
    return names;
}

}  // namespace

SpacePtr quotient_space(const SpacePtr& a, const std::vector<std::vector<std::string>>& classes) {
    std::vector<int> cls = class_of_point(a, classes);
    std::vector<std::string> names = class_names(classes);
    int n = static_cast<int>(classes.size());

    // neighbor[c] = classes met by the minups of members of c; the minimal
    // neighborhood in the quotient is the reachability closure of this
    // relation (the quotient topology of an Alexandrov space is Alexandrov).
    std::vector<IndexSet> neighbor(n, IndexSet(n));
    for (int p = 0; p < a->size(); ++p) {
        const IndexSet& up = a->minup(p);
        for (int q = up.first(); q >= 0; q = up.next(q)) neighbor[cls[p]].insert(cls[q]);
    }

    std::map<std::string, std::set<std::string>> raw;
    for (int c = 0; c < n; ++c) {
        IndexSet reach(n);
        reach.insert(c);
        bool grew = true;
        while (grew) {
            grew = false;
            for (int d = reach.first(); d >= 0; d = reach.next(d)) {
                IndexSet merged = reach | neighbor[d];
                if (merged != reach) {
                    reach = merged;
                    grew = true;
                }
            }
        }
        std::set<std::string> up;
        for (int d = reach.first(); d >= 0; d = reach.next(d)) up.insert(names[d]);
        raw[names[c]] = std::move(up);
    }
    return FinSpace::validate(raw);
}

ContMap quotient_projection(const SpacePtr& a,
                            const std::vector<std::vector<std::string>>& classes) {
    SpacePtr q = quotient_space(a, classes);
    std::vector<int> cls = class_of_point(a, classes);
    std::vector<std::string> names = class_names(classes);
    std::vector<PointId> assign(a->size());
    for (int p = 0; p < a->size(); ++p) assign[p] = q->point(names[cls[p]]);
    return ContMap(a, q, std::move(assign));
}

SpacePtr subspace(const SpacePtr& a, const IndexSet& members) {
    std::map<std::string, std::set<std::string>> raw;
    for (int x = members.first(); x >= 0; x = members.next(x)) {
        std::set<std::string> up;
        IndexSet restricted = a->minup(x) & members;
        for (int y = restricted.first(); y >= 0; y = restricted.next(y)) up.insert(a->name(y));
        raw[a->name(x)] = std::move(up);
    }
    return FinSpace::validate(raw);
}

bool homeomorphic(const FinSpace& a, const FinSpace& b) {
    if (a.size() != b.size()) return false;
    int n = a.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) {
            IndexSet mapped(n);
            const IndexSet& up = a.minup(x);
            for (int y = up.first(); y >= 0; y = up.next(y)) mapped.insert(perm[y]);
            ok = mapped == b.minup(perm[x]);
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace lsg
