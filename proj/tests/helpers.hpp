#ifndef LSG_TEST_HELPERS_HPP
#define LSG_TEST_HELPERS_HPP

#include <vector>

#include "lsg/finspace.hpp"

namespace lsg::testing {

// Every cover of the space by distinct nonempty open sets.
inline std::vector<std::vector<IndexSet>> all_covers(const SpacePtr& sp) {
    std::vector<IndexSet> opens;
    for (const IndexSet& u : sp->open_sets())
        if (!u.empty()) opens.push_back(u);
    std::vector<std::vector<IndexSet>> covers;
    for (long mask = 1; mask < (1L << opens.size()); ++mask) {
        IndexSet covered(sp->size());
        std::vector<IndexSet> members;
        for (size_t i = 0; i < opens.size(); ++i)
            if (mask & (1L << i)) {
                members.push_back(opens[i]);
                covered |= opens[i];
            }
        if (covered == sp->all_points()) covers.push_back(std::move(members));
    }
    return covers;
}

inline IndexSet points_of(const SpacePtr& sp, const std::vector<std::string>& names) {
    IndexSet out(sp->size());
    for (const auto& n : names) out.insert(sp->point(n));
    return out;
}

}  // namespace lsg::testing

#endif
