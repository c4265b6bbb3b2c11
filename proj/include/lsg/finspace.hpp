#ifndef LSG_FINSPACE_HPP
#define LSG_FINSPACE_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "lsg/bitset.hpp"
#include "lsg/errors.hpp"

namespace lsg {

using PointId = int;

class FinSpace;
using SpacePtr = std::shared_ptr<const FinSpace>;

// Finite Alexandrov space, encoded by the minimal open neighborhood minup(x)
// of every point.  Open sets are exactly the up-closed subsets and are always
// derived, never stored.  Points are interned sorted by name, so index order
// is the canonical (lexicographic) order everywhere downstream.
class FinSpace {
public:
    // Checks both axioms: x in minup(x), and y in minup(x) implies
    // minup(y) subset of minup(x).  Throws AxiomViolation naming the first
    // failing pair.
    static SpacePtr validate(const std::map<std::string, std::set<std::string>>& raw_minup);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(PointId p) const { return names_[p]; }
    PointId point(const std::string& name) const;      // throws UnknownPoint
    int try_point(const std::string& name) const;      // -1 when absent
    const IndexSet& minup(PointId p) const { return minup_[p]; }
    IndexSet all_points() const { return IndexSet::full(size()); }

    bool is_open(const IndexSet& members) const;
    bool comparable(PointId x, PointId y) const {
        return minup_[x].contains(y) || minup_[y].contains(x);
    }

    // Every open set, in canonical order (includes the empty set and X).
    // Guarded: throws TooLarge when there would be more than `bound` opens.
    std::vector<IndexSet> open_sets(int bound = 1 << 14) const;

    // Blocks of the comparability graph restricted to an open set, each block
    // an IndexSet, ordered by smallest member.
    std::vector<IndexSet> components(const IndexSet& open_subset) const;

    std::string format_points(const IndexSet& members) const;

    bool operator==(const FinSpace& other) const {
        return names_ == other.names_ && minup_ == other.minup_;
    }

private:
    std::vector<std::string> names_;
    std::vector<IndexSet> minup_;
};

// Open subset of a space; validated up-closed on construction.
struct OpenSet {
    SpacePtr space;
    IndexSet members;

    OpenSet(SpacePtr sp, IndexSet m);
    static OpenSet whole(SpacePtr sp) { return OpenSet(sp, sp->all_points()); }
};

// Point map between spaces, validated Alexandrov-continuous:
// f(minup(x)) subset of minup(f(x)) for every x.
struct ContMap {
    SpacePtr dom, cod;
    std::vector<PointId> assignment;

    ContMap(SpacePtr d, SpacePtr c, std::vector<PointId> assign);
    static ContMap from_names(SpacePtr d, SpacePtr c,
                              const std::map<std::string, std::string>& assign);

    PointId operator()(PointId p) const { return assignment[p]; }
    IndexSet image(const IndexSet& s) const;
    IndexSet preimage(const IndexSet& s) const;
    bool surjective() const;
};

// Componentwise minimal neighborhoods; point names are "a|b".
SpacePtr product_space(const SpacePtr& a, const SpacePtr& b);

// Finest Alexandrov topology making the class projection continuous.  Each
// class is named after its lexicographically least member.  Throws
// InvalidPartition unless `classes` partitions the points of `a`.
SpacePtr quotient_space(const SpacePtr& a, const std::vector<std::vector<std::string>>& classes);
ContMap quotient_projection(const SpacePtr& a,
                            const std::vector<std::vector<std::string>>& classes);

// Subspace topology on an arbitrary subset: minup_S(x) = minup(x) & S.
// For open subsets this agrees with the ambient minups.
SpacePtr subspace(const SpacePtr& a, const IndexSet& members);

// Exhaustive search for a minup-preserving bijection (sizes <= ~8).
bool homeomorphic(const FinSpace& a, const FinSpace& b);

}  // namespace lsg

#endif
