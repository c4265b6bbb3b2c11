#include "lsg/transfer.hpp"

namespace lsg {

namespace {

void require_identity_on_objects(const GroupoidMorphism& phi) {
    if (!phi.identity_on_objects())
        throw NotIdentityOnObjects("transfer requires a morphism over a fixed object space");
}

}  // namespace

WideSubgroupoid pushforward(const GroupoidMorphism& phi, const WideSubgroupoid& h) {
    require_identity_on_objects(phi);
    if (!same_groupoid(phi.dom, h.parent))
        throw CarrierMismatch("pushforward: subgroupoid lives over a different groupoid");
    IndexSet image(phi.cod->arrow_count());
    for (int g = h.arrows.first(); g >= 0; g = h.arrows.next(g)) image.insert(phi.arrow_map[g]);
    return WideSubgroupoid(phi.cod, h.carrier, image);
}

WideSubgroupoid pullback(const GroupoidMorphism& phi, const WideSubgroupoid& k) {
    require_identity_on_objects(phi);
    if (!same_groupoid(phi.cod, k.parent))
        throw CarrierMismatch("pullback: subgroupoid lives over a different groupoid");
    IndexSet preimage(phi.dom->arrow_count());
    IndexSet within = phi.dom->arrows_within(k.carrier);
    for (int g = within.first(); g >= 0; g = within.next(g))
        if (k.arrows.contains(phi.arrow_map[g])) preimage.insert(g);
    return WideSubgroupoid(phi.dom, k.carrier, preimage);
}

LocalSubgroupoid pushforward_section(const GroupoidMorphism& phi, const LocalSubgroupoid& s) {
    require_identity_on_objects(phi);
    const FinSpace& sp = *phi.dom->space();
    std::vector<IndexSet> reps(sp.size());
    for (int x = s.domain().first(); x >= 0; x = s.domain().next(x)) {
        IndexSet image(phi.cod->arrow_count());
        const IndexSet& rep = s.rep_arrows(x);
        for (int g = rep.first(); g >= 0; g = rep.next(g)) image.insert(phi.arrow_map[g]);
        reps[x] = image;
    }
    return LocalSubgroupoid(phi.cod, s.domain(), std::move(reps));
}

LocalSubgroupoid pullback_section(const GroupoidMorphism& phi, const LocalSubgroupoid& r) {
    require_identity_on_objects(phi);
    const FinSpace& sp = *phi.dom->space();
    std::vector<IndexSet> reps(sp.size());
    for (int x = r.domain().first(); x >= 0; x = r.domain().next(x)) {
        IndexSet preimage(phi.dom->arrow_count());
        IndexSet within = phi.dom->arrows_within(sp.minup(x));
        for (int g = within.first(); g >= 0; g = within.next(g))
            if (r.rep_arrows(x).contains(phi.arrow_map[g])) preimage.insert(g);
        reps[x] = preimage;
    }
    return LocalSubgroupoid(phi.dom, r.domain(), std::move(reps));
}

GroupoidMorphism anchor(const GroupoidPtr& q) {
    GroupoidPtr pair = pair_groupoid(q->space());
    const FinSpace& sp = *q->space();
    std::vector<PointId> omap(sp.size());
    for (int x = 0; x < sp.size(); ++x) omap[x] = x;
    std::vector<ArrowId> amap(q->arrow_count());
    for (int g = 0; g < q->arrow_count(); ++g)
        amap[g] = pair->arrow(sp.name(q->src(g)) + ">" + sp.name(q->dst(g)));
    return GroupoidMorphism(q, pair, std::move(omap), std::move(amap));
}

bool check_adjunction(const GroupoidMorphism& phi, const LocalSubgroupoid& s,
                      const LocalSubgroupoid& r) {
    require_identity_on_objects(phi);
    bool lhs = local_le(s, pullback_section(phi, r));
    bool rhs = local_le(pushforward_section(phi, s), r);
    return lhs == rhs;
}

bool is_pair_groupoid(const GroupoidPtr& q) {
    return *q == *pair_groupoid(q->space());
}

LocalEquivRel::LocalEquivRel(LocalSubgroupoid s) : section(std::move(s)) {
    if (!is_pair_groupoid(section.parent()))
        throw InvalidInput("local equivalence relation must live over the pair groupoid");
}

std::vector<IndexSet> LocalEquivRel::classes_at(PointId x) const {
    const GroupoidPtr& pair = section.parent();
    const FinSpace& sp = *pair->space();
    const IndexSet& rep = section.rep_arrows(x);
    const IndexSet& up = sp.minup(x);
    std::vector<IndexSet> blocks;
    IndexSet seen(sp.size());
    for (int y = up.first(); y >= 0; y = up.next(y)) {
        if (seen.contains(y)) continue;
        IndexSet block(sp.size());
        for (int z = up.first(); z >= 0; z = up.next(z))
            if (rep.contains(pair->arrow(sp.name(y) + ">" + sp.name(z)))) {
                block.insert(z);
                seen.insert(z);
            }
        blocks.push_back(block);
    }
    return blocks;
}

}  // namespace lsg
