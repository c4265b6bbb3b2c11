#ifndef LSG_GERMS_HPP
#define LSG_GERMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "lsg/groupoid.hpp"

namespace lsg {

// Germ of wide subgroupoids at a point.  The canonical representative is the
// restriction to the minimal open neighborhood of the basepoint, so germ
// equality is plain representative equality.
struct Germ {
    GroupoidPtr groupoid;
    PointId basepoint;
    WideSubgroupoid rep;  // carrier is exactly minup(basepoint)

    Germ(GroupoidPtr g, PointId x, WideSubgroupoid r);

    bool operator==(const Germ& other) const {
        return basepoint == other.basepoint && rep == other.rep;
    }
};

// [U, H]_x for x in U = carrier(H).
Germ germ_of(const WideSubgroupoid& h, PointId x);

// s(x1) <= s(x2): representative inclusion at a shared basepoint.
bool stalk_le(const Germ& a, const Germ& b);

// Continuous section of the germ sheaf over an open domain.  Stored as one
// canonical representative arrow set per domain point; continuity means
// rep(y) = rep(x)|minup(y) whenever y lies in minup(x).
class LocalSubgroupoid {
public:
    LocalSubgroupoid(GroupoidPtr parent, IndexSet domain, std::vector<IndexSet> rep_arrows);

    const GroupoidPtr& parent() const { return parent_; }
    const IndexSet& domain() const { return domain_; }
    const IndexSet& rep_arrows(PointId x) const;
    Germ at(PointId x) const;

    bool operator==(const LocalSubgroupoid& other) const;

private:
    GroupoidPtr parent_;
    IndexSet domain_;
    std::vector<IndexSet> rep_;
};

// loc(G): the section x -> [carrier, G]_x over the carrier of G.
LocalSubgroupoid loc(const WideSubgroupoid& g);

// Pointwise order on sections over the same domain.
bool local_le(const LocalSubgroupoid& s, const LocalSubgroupoid& t);

LocalSubgroupoid restrict_local(const LocalSubgroupoid& s, const IndexSet& open_subset);

// Bottom (discrete germs) section over the whole space.
LocalSubgroupoid bottom_section(const GroupoidPtr& q);
LocalSubgroupoid top_section(const GroupoidPtr& q);

// Chart family whose members agree germwise on overlaps; Comp is validated
// at the minimal neighborhoods, which decides the existential condition
// exactly.  Throws CompViolation(i, j, x) on the first disagreement.
struct Atlas {
    GroupoidPtr parent;
    std::vector<WideSubgroupoid> charts;

    Atlas(GroupoidPtr parent_, std::vector<WideSubgroupoid> charts_);

    LocalSubgroupoid section() const;
};

LocalSubgroupoid from_atlas(const GroupoidPtr& q, std::vector<WideSubgroupoid> charts);
bool atlases_compatible(const Atlas& a, const Atlas& b);

// glob(s): least wide subgroupoid H with s <= loc(H); computed as the
// closure of the union of the germ representatives.
WideSubgroupoid glob(const LocalSubgroupoid& s);

// Defining-intersection oracle for glob: meets every enumerated wide H of
// the parent with s <= loc(H).  Exponential; only used to cross-check.
WideSubgroupoid glob_oracle(const LocalSubgroupoid& s, int max_nonid_arrows = 24);

// Subgroupoid generated by all charts of an atlas.
WideSubgroupoid glob_atlas(const Atlas& a);

// b refines a: every chart of b is a restriction of some chart of a.
bool refines(const Atlas& b, const Atlas& a);

// The atlas {(minup(x), s(x).rep) : x} of minimal-neighborhood charts.
Atlas minup_atlas(const LocalSubgroupoid& s);

// Intersection of glob over every minup-chart refinement of `a` obtained by
// choosing, per point, a chart containing it.  Guarded by the number of
// selector functions.
WideSubgroupoid glob_via_refinements(const Atlas& a, long max_selectors = 1 << 20);

// ---- coherence suite ----------------------------------------------------

struct CheckResult {
    bool ok;
    std::string witness;  // empty when ok
};

CheckResult is_coherent(const LocalSubgroupoid& s);           // s <= loc(glob(s))
CheckResult is_globally_coherent(const LocalSubgroupoid& s);  // s = loc(glob(s))
CheckResult is_totally_coherent(const LocalSubgroupoid& s, int max_points = 12);
CheckResult is_locally_coherent(const WideSubgroupoid& h);  // loc(h) coherent
CheckResult is_coherent_wide(const WideSubgroupoid& h);     // h = glob(loc(h))
CheckResult is_globally_adapted(const Atlas& a, const LocalSubgroupoid& s);

// ---- sheaf checker -------------------------------------------------------

struct SheafCheck {
    bool is_sheaf = true;
    // witness fields, populated when is_sheaf is false:
    IndexSet open_u;
    std::vector<std::pair<PointId, IndexSet>> family;  // compatible germ family
    std::vector<IndexSet> gluings;                     // 0 or >= 2 of them
};

// Quantifies gluing over the minimal cover {minup(x) : x in U} of every open
// U; every Alexandrov cover refines that one, so this decides the sheaf
// condition for the presheaf of wide subgroupoids.
SheafCheck presheaf_is_sheaf(const GroupoidPtr& q, int max_nonid_arrows = 24,
                             long max_families = 200000);

// ---- brute-force section enumeration ------------------------------------

// All continuous sections over the given open domain, by per-point wide
// subgroupoid choices filtered through the continuity constraint.
std::vector<LocalSubgroupoid> enumerate_local(const GroupoidPtr& q, const IndexSet& domain,
                                              int max_nonid_arrows = 24,
                                              long max_sections = 100000);
std::vector<LocalSubgroupoid> enumerate_local(const GroupoidPtr& q, int max_nonid_arrows = 24,
                                              long max_sections = 100000);

}  // namespace lsg

#endif
