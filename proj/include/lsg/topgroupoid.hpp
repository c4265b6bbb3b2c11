#ifndef LSG_TOPGROUPOID_HPP
#define LSG_TOPGROUPOID_HPP

#include <optional>
#include <tuple>
#include <vector>

#include "lsg/germs.hpp"
#include "lsg/groupoid.hpp"

namespace lsg {

// Groupoid with an Alexandrov topology on the arrow set.  The arrow space
// points are the arrow names, in the same canonical order, and src, dst,
// inv, id and comp are all validated continuous.
class TopGroupoid {
public:
    static TopGroupoid validate(GroupoidPtr base, SpacePtr arrow_space);

    const GroupoidPtr& base() const { return base_; }
    const SpacePtr& arrow_space() const { return arrow_space_; }

    // Comparability of two arrows in the arrow space.
    bool comparable(ArrowId g, ArrowId h) const { return arrow_space_->comparable(g, h); }

private:
    TopGroupoid() = default;
    GroupoidPtr base_;
    SpacePtr arrow_space_;
};

TopGroupoid discrete_arrow_topology(const GroupoidPtr& q);
// Valid only over an indiscrete object space.
TopGroupoid indiscrete_arrow_topology(const GroupoidPtr& q);
// Product topology on a pair groupoid built by pair_groupoid().
TopGroupoid pair_product_topology(const GroupoidPtr& pair_q);
// Discrete group slices times the pair product topology, for groupoids built
// by product_with_pair().
TopGroupoid product_arrow_topology(const GroupoidPtr& prod_q);
// One slice per group element, each homeomorphic to its base neighborhood;
// for groupoids with "point.element" arrow names (bundles, action
// groupoids).  Over a discrete space this is the discrete topology.
TopGroupoid slice_arrow_topology(const GroupoidPtr& q);

// Indexed open cover of the object space.
struct Cover {
    SpacePtr space;
    std::vector<OpenSet> members;

    Cover(SpacePtr space_, std::vector<OpenSet> members_);
};

// Star of Q at x: all arrows with source x; the subspace topology is the
// restriction of the arrow space.
IndexSet star(const TopGroupoid& q, PointId x);

// Star identity path components over Q|U: for each x in U, the connected
// component of id(x) inside the star of Q|U at x.  The result is returned as
// a wide subgroupoid, whose construction asserts the closure properties.
WideSubgroupoid c1(const TopGroupoid& q, const IndexSet& u);

bool is_star_connected(const TopGroupoid& q);

// First (i, j, x) with c1(Q,U_i)|minup(x) != c1(Q,U_j)|minup(x), if any.
struct PathWitness {
    int chart_i, chart_j;
    PointId x;
};
std::optional<PathWitness> path_compatible_witness(const TopGroupoid& q, const Cover& u);
bool check_path_compatible(const TopGroupoid& q, const Cover& u);

// Section of the c1 germs over a path-compatible cover; throws
// NotPathCompatible otherwise.
LocalSubgroupoid c1_local(const TopGroupoid& q, const Cover& u);
Atlas c1_atlas(const TopGroupoid& q, const Cover& u);

// Path locality: for every open U and all charts i, j and x in the triple
// overlap, c1(Q,U_i)|minup(x) = c1(Q, U_j & U)|minup(x).  Exhaustive over
// open sets, guarded by the point count.
CheckResult is_path_local(const TopGroupoid& q, const Cover& u, int max_points = 12);

// Groupoid map defined on Q|from into Q|to inside one ambient groupoid.
struct PartialMorphism {
    GroupoidPtr q;
    IndexSet from_points, to_points;
    std::vector<PointId> object_map;  // indexed by point, -1 off from_points
    std::vector<ArrowId> arrow_map;   // indexed by arrow, -1 off Q|from

    PartialMorphism(GroupoidPtr q_, IndexSet from, IndexSet to, std::vector<PointId> omap,
                    std::vector<ArrowId> amap);

    // Retraction laws: to subset of from, identity on Q|to.
    void require_retraction() const;
    // Arrow-space continuity with respect to a given topology.
    void require_continuous(const TopGroupoid& top) const;
};

struct RetractionDatum {
    int chart_i, chart_j;
    PointId x;
    PartialMorphism r_i, r_j;
};

// Validates each retraction pair (onto Q|minup(x)) and confirms that path
// compatibility follows, cross-checking it directly.
bool check_retraction_criterion(const TopGroupoid& q, const Cover& u,
                                const std::vector<RetractionDatum>& data);

// Covering retraction r(g) = s(ry)^-1 s(y) g s(z)^-1 s(rz) induced by a
// continuous section s over U and an object retraction rho: U -> W.
PartialMorphism covering_retraction(const TopGroupoid& q, const IndexSet& u,
                                    const std::vector<ArrowId>& section, const IndexSet& w,
                                    const std::vector<PointId>& rho);

// Continuous section s: U -> star(Q, x) of dst, if one exists; exhaustive
// search in canonical order.  section[y] is the arrow x -> y.
std::optional<std::vector<ArrowId>> find_section(const TopGroupoid& q, const IndexSet& u,
                                                 PointId x);

// Q|U trivialized onto the product of the vertex group at x with the pair
// groupoid of U, via phi(g) = (s(y) g s(z)^-1, (y,z)).  The isomorphism is
// verified arrow by arrow, including continuity both ways.
struct Trivialization {
    TopGroupoid restricted;   // Q|U with the subspace arrow topology
    TopGroupoid product;      // Q(x) x (U x U)
    GroupoidMorphism iso;     // restricted -> product
    GroupoidMorphism inverse; // product -> restricted
};
Trivialization trivialize(const TopGroupoid& q, const IndexSet& u,
                          const std::vector<ArrowId>& section);

// The restriction Q|U as a topological groupoid (open arrow subspace).
TopGroupoid restrict_top(const TopGroupoid& q, const IndexSet& u);

}  // namespace lsg

#endif
