#ifndef LSG_GROUP_HPP
#define LSG_GROUP_HPP

#include <string>
#include <vector>

#include "lsg/errors.hpp"

namespace lsg {

// Plain finite group by multiplication table; only used to feed the groupoid
// builders (bundles, action groupoids, product groupoids, symmetry groupoids).
struct FinGroup {
    std::vector<std::string> elems;       // elems[0] is the identity
    std::vector<std::vector<int>> mult;   // mult[a][b] = a*b

    int size() const { return static_cast<int>(elems.size()); }
    int identity() const { return 0; }

    int inverse(int a) const {
        for (int b = 0; b < size(); ++b)
            if (mult[a][b] == 0) return b;
        throw InvalidInput("group element " + elems[a] + " has no inverse");
    }

    void validate() const {
        int n = size();
        for (int a = 0; a < n; ++a) {
            if (mult[a][0] != a || mult[0][a] != a)
                throw UnitViolation("group identity fails at " + elems[a]);
            inverse(a);
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (mult[mult[a][b]][c] != mult[a][mult[b][c]])
                        throw AssociativityViolation("group triple (" + elems[a] + "," +
                                                     elems[b] + "," + elems[c] + ")");
        }
    }

    static FinGroup cyclic(int n) {
        FinGroup g;
        g.elems.push_back("e");
        for (int i = 1; i < n; ++i) g.elems.push_back("r" + std::to_string(i));
        g.mult.assign(n, std::vector<int>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) g.mult[a][b] = (a + b) % n;
        return g;
    }
};

}  // namespace lsg

#endif
