#ifndef LSG_FIXTURES_HPP
#define LSG_FIXTURES_HPP

#include "lsg/connections.hpp"
#include "lsg/topgroupoid.hpp"
#include "lsg/transfer.hpp"

namespace lsg::fixtures {

SpacePtr d2();  // two-point discrete space {a, b}
SpacePtr s2();  // Sierpinski space {o, c}, minup(c) = {o, c}
SpacePtr i2();  // two-point indiscrete space {p, q}
SpacePtr c4();  // minimal circle model {x1, x2, y1, y2}
SpacePtr c8();  // octagon circle model {u1..u4, c1..c4}

FinGroup z2();

// The double covering p: C8 -> C4 wrapping twice, and the antipodal deck
// action of Z/2 on C8.  The covering property is verified by the test
// suite, not assumed here.
ContMap double_cover();
std::vector<std::vector<PointId>> antipodal_action();

// Symmetry groupoid of the double cover, over C4.
SymGroupoid sym2_data();

// SYM2 with its arrow topology, the quotient topology of (C8 x C8)/Z2
// carried across the class-to-arrow bijection.
TopGroupoid sym2();

// The two-chart cover {C4 minus y1, C4 minus y2}.
Cover sym2_cover();

}  // namespace lsg::fixtures

#endif
