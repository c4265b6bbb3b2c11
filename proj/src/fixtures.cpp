#include "lsg/fixtures.hpp"

#include <algorithm>

namespace lsg::fixtures {

SpacePtr d2() {
    return FinSpace::validate({{"a", {"a"}}, {"b", {"b"}}});
}

SpacePtr s2() {
    return FinSpace::validate({{"o", {"o"}}, {"c", {"o", "c"}}});
}

SpacePtr i2() {
    return FinSpace::validate({{"p", {"p", "q"}}, {"q", {"p", "q"}}});
}

SpacePtr c4() {
    return FinSpace::validate({{"x1", {"x1"}},
                               {"x2", {"x2"}},
                               {"y1", {"x1", "x2", "y1"}},
                               {"y2", {"x1", "x2", "y2"}}});
}

SpacePtr c8() {
    return FinSpace::validate({{"u1", {"u1"}},
                               {"u2", {"u2"}},
                               {"u3", {"u3"}},
                               {"u4", {"u4"}},
                               {"c1", {"c1", "u1", "u2"}},
                               {"c2", {"c2", "u2", "u3"}},
                               {"c3", {"c3", "u3", "u4"}},
                               {"c4", {"c4", "u4", "u1"}}});
}

FinGroup z2() { return FinGroup::cyclic(2); }

ContMap double_cover() {
    return ContMap::from_names(c8(), c4(),
                               {{"u1", "x1"},
                                {"u2", "x2"},
                                {"u3", "x1"},
                                {"u4", "x2"},
                                {"c1", "y1"},
                                {"c2", "y2"},
                                {"c3", "y1"},
                                {"c4", "y2"}});
}

std::vector<std::vector<PointId>> antipodal_action() {
    SpacePtr e = c8();
    std::map<std::string, std::string> sigma = {{"u1", "u3"}, {"u3", "u1"}, {"u2", "u4"},
                                                {"u4", "u2"}, {"c1", "c3"}, {"c3", "c1"},
                                                {"c2", "c4"}, {"c4", "c2"}};
    std::vector<std::vector<PointId>> action(e->size(), std::vector<PointId>(2));
    for (int p = 0; p < e->size(); ++p) {
        action[p][0] = p;
        action[p][1] = e->point(sigma.at(e->name(p)));
    }
    return action;
}

SymGroupoid sym2_data() { return sym_groupoid(double_cover(), z2(), antipodal_action()); }

TopGroupoid sym2() {
    SymGroupoid sym = sym2_data();
    ContMap p = double_cover();
    const SpacePtr& e = p.dom;
    std::vector<std::vector<PointId>> action = antipodal_action();

    // Arrow space: quotient of C8 x C8 by the diagonal antipodal action,
    // renamed along the class-to-arrow bijection.
    SpacePtr ee = product_space(e, e);
    std::vector<std::vector<std::string>> classes;
    std::set<std::string> taken;
    for (int a = 0; a < e->size(); ++a)
        for (int b = 0; b < e->size(); ++b) {
            std::string n1 = e->name(a) + "|" + e->name(b);
            if (taken.count(n1)) continue;
            std::string n2 = e->name(action[a][1]) + "|" + e->name(action[b][1]);
            taken.insert(n1);
            taken.insert(n2);
            classes.push_back({n1, n2});
        }
    SpacePtr quot = quotient_space(ee, classes);

    // Class [(a, b)] corresponds to the unique equivariant bijection sending
    // a to b.
    const GroupoidPtr& q = sym.groupoid;
    auto arrow_of_pair = [&](PointId a, PointId b) -> ArrowId {
        for (int g = 0; g < q->arrow_count(); ++g)
            if (sym.arrow_fibre_map[g][a] == b) return g;
        throw Error(Error::Code::internal, "no arrow for fibre pair");
    };
    auto class_point_to_arrow = [&](const std::string& class_name) -> ArrowId {
        size_t bar = class_name.find('|');
        PointId a = e->point(class_name.substr(0, bar));
        PointId b = e->point(class_name.substr(bar + 1));
        return arrow_of_pair(a, b);
    };

    std::map<std::string, std::set<std::string>> raw;
    for (int cp = 0; cp < quot->size(); ++cp) {
        std::set<std::string> up;
        const IndexSet& m = quot->minup(cp);
        for (int d = m.first(); d >= 0; d = m.next(d))
            up.insert(q->arrow_name(class_point_to_arrow(quot->name(d))));
        raw[q->arrow_name(class_point_to_arrow(quot->name(cp)))] = std::move(up);
    }
    return TopGroupoid::validate(q, FinSpace::validate(raw));
}

Cover sym2_cover() {
    SpacePtr base = c4();
    IndexSet no_y1 = base->all_points();
    no_y1.erase(base->point("y1"));
    IndexSet no_y2 = base->all_points();
    no_y2.erase(base->point("y2"));
    return Cover(base, {OpenSet(base, no_y1), OpenSet(base, no_y2)});
}

}  // namespace lsg::fixtures
