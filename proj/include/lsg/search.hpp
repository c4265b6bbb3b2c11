#ifndef LSG_SEARCH_HPP
#define LSG_SEARCH_HPP

#include <string>

#include "lsg/reports.hpp"

namespace lsg {

struct SearchResult {
    bool found = false;
    std::string text;
};

// Exhaustive search for a local subgroupoid that fails global coherence,
// over pair groupoids of every labeled Alexandrov space with at most
// `max_points` points.  Sections are enumerated per space; the first failure
// in canonical order is reported with its witness.
SearchResult search_global_coherence_failure(int max_points, const ReportOptions& opt);

}  // namespace lsg

#endif
