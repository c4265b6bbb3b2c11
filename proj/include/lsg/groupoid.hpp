#ifndef LSG_GROUPOID_HPP
#define LSG_GROUPOID_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lsg/finspace.hpp"
#include "lsg/group.hpp"

namespace lsg {

using ArrowId = int;

class FinGroupoid;
using GroupoidPtr = std::shared_ptr<const FinGroupoid>;

// Finite groupoid over the whole point set of a FinSpace, with explicit
// composition, identity and inverse tables.  The composition convention is
// diagrammatic: comp(g, h) means "g then h", so for g: x -> y and h: y -> z
// the composite runs x -> z.  Arrows are interned sorted by name.
class FinGroupoid {
public:
    struct RawArrow {
        std::string name, src, dst;
    };

    // Full axiom check: endpoints, units, inverses, associativity on every
    // composable triple.  The first witness is reported.
    static GroupoidPtr validate(
        SpacePtr space, const std::vector<RawArrow>& arrows,
        const std::map<std::pair<std::string, std::string>, std::string>& comp,
        const std::map<std::string, std::string>& id,
        const std::map<std::string, std::string>& inv);

    const SpacePtr& space() const { return space_; }
    int arrow_count() const { return static_cast<int>(names_.size()); }
    const std::string& arrow_name(ArrowId g) const { return names_[g]; }
    ArrowId arrow(const std::string& name) const;  // throws on unknown name
    int try_arrow(const std::string& name) const;  // -1 when absent

    PointId src(ArrowId g) const { return src_[g]; }
    PointId dst(ArrowId g) const { return dst_[g]; }
    bool composable(ArrowId g, ArrowId h) const { return dst_[g] == src_[h]; }
    ArrowId comp(ArrowId g, ArrowId h) const;  // throws unless composable
    ArrowId id(PointId x) const { return id_[x]; }
    ArrowId inv(ArrowId g) const { return inv_[g]; }
    bool is_identity(ArrowId g) const { return id_[src_[g]] == g; }

    IndexSet all_arrows() const { return IndexSet::full(arrow_count()); }
    IndexSet identity_arrows() const;
    // Arrows with both endpoints inside the given point set.
    IndexSet arrows_within(const IndexSet& points) const;
    // All arrows with source x (the star of the groupoid at x).
    IndexSet star_arrows(PointId x) const;
    // All loops (union of the vertex groups).
    IndexSet loop_arrows() const;

    std::string format_arrows(const IndexSet& arrows) const;

    bool operator==(const FinGroupoid& other) const {
        return *space_ == *other.space_ && names_ == other.names_ && src_ == other.src_ &&
               dst_ == other.dst_ && comp_ == other.comp_ && id_ == other.id_ &&
               inv_ == other.inv_;
    }

private:
    SpacePtr space_;
    std::vector<std::string> names_;
    std::vector<PointId> src_, dst_;
    std::vector<std::vector<ArrowId>> comp_;  // -1 when not composable
    std::vector<ArrowId> id_;                 // per point
    std::vector<ArrowId> inv_;
};

bool same_groupoid(const GroupoidPtr& a, const GroupoidPtr& b);

// Arrow subset over an open carrier, containing all carrier identities and
// closed under composition and inverse.  The parent groupoid stays ambient;
// restriction only shrinks the carrier.
struct WideSubgroupoid {
    GroupoidPtr parent;
    IndexSet carrier;
    IndexSet arrows;

    WideSubgroupoid(GroupoidPtr parent_, IndexSet carrier_, IndexSet arrows_);

    static WideSubgroupoid discrete(const GroupoidPtr& q, const IndexSet& carrier);
    static WideSubgroupoid full(const GroupoidPtr& q, const IndexSet& carrier);

    bool le(const WideSubgroupoid& other) const;          // inclusion, same carrier
    WideSubgroupoid meet(const WideSubgroupoid& other) const;
    WideSubgroupoid restrict(const IndexSet& open_subset) const;  // H|V

    bool operator==(const WideSubgroupoid& other) const {
        return same_groupoid(parent, other.parent) && carrier == other.carrier &&
               arrows == other.arrows;
    }
};

// Materializes the full subgroupoid Q|U as a standalone groupoid over the
// subspace on U (arrow names are kept).
GroupoidPtr full_restrict(const GroupoidPtr& q, const OpenSet& u);

// Least wide subgroupoid of Q|carrier containing the seed arrows; worklist
// saturation under composition, inverse and carrier identities.
WideSubgroupoid generate(const GroupoidPtr& q, const IndexSet& carrier, const IndexSet& seed);

// All wide subgroupoids of Q|carrier via Next-Closure over the non-identity
// arrows, in lectic order.  Guarded: refuses more than `max_nonid_arrows`
// candidate arrows.
std::vector<WideSubgroupoid> enumerate_wide(const GroupoidPtr& q, const IndexSet& carrier,
                                            int max_nonid_arrows = 24);

// ---- builders ----------------------------------------------------------

// X x X with (x,y)(y,z) = (x,z); arrow names "x>y".
GroupoidPtr pair_groupoid(const SpacePtr& space);

// Disjoint fibre groups, one per point; arrow names "x.g".
GroupoidPtr bundle_of_groups(const SpacePtr& space, const std::vector<FinGroup>& fibres);
GroupoidPtr bundle_of_groups(const SpacePtr& space, const FinGroup& fibre);

// Right action groupoid X x Omega; arrow (x, g): x -> x.g named "x.g".
// `action[p][g]` is p acted on by element g.
GroupoidPtr action_groupoid(const SpacePtr& space, const FinGroup& omega,
                            const std::vector<std::vector<PointId>>& action);

// G x (U x U) with (g,(y,z))(h,(z,w)) = (gh,(y,w)); arrow names "g|y>z".
GroupoidPtr product_with_pair(const FinGroup& g, const SpacePtr& u);

// Symmetry groupoid of a finite covering-like projection: arrows over (b, b')
// are the Omega-equivariant bijections between the fibres.  Requires p
// surjective, the action free with orbits equal to fibres, and p invariant
// under the action.  `arrow_fibre_map[a]` sends each point of the source
// fibre to its image (-1 off the fibre).
struct SymGroupoid {
    GroupoidPtr groupoid;
    std::vector<std::vector<PointId>> arrow_fibre_map;
};
SymGroupoid sym_groupoid(const ContMap& p, const FinGroup& omega,
                         const std::vector<std::vector<PointId>>& action);

// Union of the vertex groups, as a wide subgroupoid over the whole space.
WideSubgroupoid inn(const GroupoidPtr& q);

// Structure-preserving map of groupoids; functoriality is validated.
struct GroupoidMorphism {
    GroupoidPtr dom, cod;
    std::vector<PointId> object_map;
    std::vector<ArrowId> arrow_map;

    GroupoidMorphism(GroupoidPtr dom_, GroupoidPtr cod_, std::vector<PointId> object_map_,
                     std::vector<ArrowId> arrow_map_);

    static GroupoidMorphism identity(const GroupoidPtr& q);

    bool identity_on_objects() const;
};

}  // namespace lsg

#endif
