#include "lsg/search.hpp"

#include <functional>
#include <sstream>

#include "lsg/germs.hpp"

namespace lsg {

namespace {

// All labeled Alexandrov spaces on points p1..pn, by direct enumeration of
// candidate minup assignments (each point picks a subset containing it).
void each_space(int n, const std::function<void(const SpacePtr&)>& visit) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("p" + std::to_string(i + 1));
    std::vector<int> masks(n);
    std::function<void(int)> assign = [&](int i) {
        if (i == n) {
            std::map<std::string, std::set<std::string>> raw;
            for (int k = 0; k < n; ++k) {
                std::set<std::string> up;
                for (int j = 0; j < n; ++j)
                    if (masks[k] & (1 << j)) up.insert(names[j]);
                raw[names[k]] = std::move(up);
            }
            try {
                visit(FinSpace::validate(raw));
            } catch (const AxiomViolation&) {
            }
            return;
        }
        for (int m = 0; m < (1 << n); ++m) {
            if (!(m & (1 << i))) continue;
            masks[i] = m;
            assign(i + 1);
        }
    };
    assign(0);
}

}  // namespace

SearchResult search_global_coherence_failure(int max_points, const ReportOptions& opt) {
    std::ostringstream os;
    SearchResult result;
    long spaces_seen = 0, sections_seen = 0;

    for (int n = 1; n <= max_points && !result.found; ++n) {
        long spaces_n = 0, sections_n = 0;
        each_space(n, [&](const SpacePtr& sp) {
            if (result.found) return;
            ++spaces_n;
            GroupoidPtr q = pair_groupoid(sp);
            for (const LocalSubgroupoid& s : enumerate_local(q, opt.max_arrows)) {
                ++sections_n;
                CheckResult g = is_globally_coherent(s);
                if (!g.ok) {
                    result.found = true;
                    os << "failure found on " << n << " points\n";
                    os << "space:\n";
                    for (int x = 0; x < sp->size(); ++x)
                        os << "  minup " << sp->name(x) << " = "
                           << sp->format_points(sp->minup(x)) << "\n";
                    os << "section germs over the pair groupoid:\n";
                    for (int x = 0; x < sp->size(); ++x)
                        os << "  germ " << sp->name(x) << " = {"
                           << q->format_arrows(s.rep_arrows(x)) << "}\n";
                    if (opt.witness) os << "witness: " << g.witness << "\n";
                    return;
                }
            }
        });
        spaces_seen += spaces_n;
        sections_seen += sections_n;
        if (!result.found)
            os << "no failure on " << n << " points (" << spaces_n << " spaces, " << sections_n
               << " sections)\n";
    }
    if (!result.found)
        os << "no global-coherence failure up to " << max_points << " points (" << spaces_seen
           << " spaces, " << sections_seen << " sections)\n";
    result.text = os.str();
    return result;
}

}  // namespace lsg
