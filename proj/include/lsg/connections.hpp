#ifndef LSG_CONNECTIONS_HPP
#define LSG_CONNECTIONS_HPP

#include <map>
#include <optional>
#include <vector>

#include "lsg/topgroupoid.hpp"

namespace lsg {

// Walk on the specialization order: consecutive vertices are comparable.
struct Walk {
    SpacePtr space;
    std::vector<PointId> vertices;  // nonempty

    Walk(SpacePtr space_, std::vector<PointId> vertices_);

    PointId start() const { return vertices.front(); }
    PointId end() const { return vertices.back(); }
    Walk reversed() const;
    Walk then(const Walk& other) const;  // concatenation, endpoints must meet
    bool inside(const IndexSet& points) const;
};

// Elementary transport assignment on comparable ordered pairs, extended
// multiplicatively to walks.  gamma(x,x) = id(x) and gamma(y,x) is forced to
// the inverse of gamma(x,y); totality on comparable pairs is validated.
class PathConnection {
public:
    // `gamma` gives an arrow of Q(x, y) for ordered comparable pairs; missing
    // reverses are auto-filled with inverses, the diagonal with identities.
    PathConnection(TopGroupoid groupoid, std::map<std::pair<PointId, PointId>, ArrowId> gamma);

    const TopGroupoid& groupoid() const { return groupoid_; }
    ArrowId gamma(PointId x, PointId y) const;  // throws NonComparableStep

    // All elementary transport arrows with both endpoints inside `points`.
    IndexSet elementary_within(const IndexSet& points) const;

private:
    TopGroupoid groupoid_;
    std::map<std::pair<PointId, PointId>, ArrowId> gamma_;
};

// Composite gamma(x0,x1) * ... * gamma(x_{n-1},x_n); the length-0 walk maps
// to the identity.
ArrowId transport(const PathConnection& conn, const Walk& w);

// C_Gamma(Q|U): every walk transport inside U.  Computed as the closure of
// the elementary transports; the walk characterization is checked against it
// in the test suite.
WideSubgroupoid c_gamma(const PathConnection& conn, const IndexSet& u);

// Walk-independence of transport inside U, decided per comparability
// component by checking that every fundamental cycle of a spanning tree has
// identity transport.  `tree_seed` selects between distinct spanning trees
// (0 = breadth-first, 1 = depth-first with reversed neighbor order).
struct FlatnessResult {
    bool flat;
    std::optional<Walk> cycle;  // offending cycle when not flat
};
FlatnessResult is_flat_on(const PathConnection& conn, const IndexSet& u, int tree_seed = 0);

// Chosen canonical walks per chart: one walk for each ordered pair of points
// lying in the same comparability component of a chart.
class GeodesicStructure {
public:
    GeodesicStructure(Cover cover, std::map<std::tuple<int, PointId, PointId>, Walk> geod);

    const Cover& cover() const { return cover_; }
    const Walk& geod(int chart, PointId x, PointId y) const;

private:
    Cover cover_;
    std::map<std::tuple<int, PointId, PointId>, Walk> geod_;
};

// c_Gamma(Q, U): the section of C_Gamma germs over the cover of a geodesic
// structure.  Requires flatness on every chart (NotFlat) and validates the
// overlap germ equality (OverlapMismatch).
LocalSubgroupoid c_gamma_local(const PathConnection& conn, const GeodesicStructure& gs);
Atlas c_gamma_atlas(const PathConnection& conn, const GeodesicStructure& gs);

// Gamma path locality, exhaustive over open sets (guarded).
CheckResult is_gamma_path_local(const PathConnection& conn, const Cover& cov,
                                int max_points = 12);

}  // namespace lsg

#endif
