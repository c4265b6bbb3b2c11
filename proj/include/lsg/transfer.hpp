#ifndef LSG_TRANSFER_HPP
#define LSG_TRANSFER_HPP

#include "lsg/germs.hpp"
#include "lsg/groupoid.hpp"

namespace lsg {

// Image and preimage of wide subgroupoids along an identity-on-objects
// morphism.  Naming follows the arrow direction: pushforward carries
// subgroupoids of the domain forward, pullback carries subgroupoids of the
// codomain back.
WideSubgroupoid pushforward(const GroupoidMorphism& phi, const WideSubgroupoid& h);
WideSubgroupoid pullback(const GroupoidMorphism& phi, const WideSubgroupoid& k);

// Sectionwise lifts; continuity of the result is revalidated on construction.
LocalSubgroupoid pushforward_section(const GroupoidMorphism& phi, const LocalSubgroupoid& s);
LocalSubgroupoid pullback_section(const GroupoidMorphism& phi, const LocalSubgroupoid& r);

// The anchor g -> (src(g), dst(g)) into the pair groupoid of the object
// space.
GroupoidMorphism anchor(const GroupoidPtr& q);

// Evaluates s <= pullback(r) and pushforward(s) <= r; true iff both sides of
// the adjunction equivalence agree for this pair.
bool check_adjunction(const GroupoidMorphism& phi, const LocalSubgroupoid& s,
                      const LocalSubgroupoid& r);

// Local subgroupoid of a pair groupoid; each germ representative is an
// equivalence relation on the minimal neighborhood of its basepoint.
struct LocalEquivRel {
    LocalSubgroupoid section;

    explicit LocalEquivRel(LocalSubgroupoid s);

    // Blocks of the germ relation at x, ordered by least member.
    std::vector<IndexSet> classes_at(PointId x) const;
};

bool is_pair_groupoid(const GroupoidPtr& q);

}  // namespace lsg

#endif
