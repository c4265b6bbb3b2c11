#ifndef LSG_REPORTS_HPP
#define LSG_REPORTS_HPP

#include <string>

#include "lsg/gdf.hpp"

namespace lsg {

struct ReportOptions {
    int threads = 1;
    int max_points = 12;   // guard for open-set enumerations
    int max_arrows = 24;   // guard for enumerate_wide-backed oracles
    bool oracle = false;   // cross-check glob against the intersection oracle
    bool witness = true;   // print witnesses for failing properties
};

struct Report {
    std::string text;
    bool violation = false;  // a property came out false (exit code 1)
};

Report report_check(const GdfDocument& doc);
Report report_c1(const GdfDocument& doc, const ReportOptions& opt);
Report report_star_connectivity(const GdfDocument& doc, const ReportOptions& opt);
Report report_coherence(const GdfDocument& doc, const ReportOptions& opt);
Report report_connection(const GdfDocument& doc, const ReportOptions& opt);
Report report_transfer(const GdfDocument& doc, const ReportOptions& opt);
Report report_sheaf(const GdfDocument& doc, const ReportOptions& opt);

}  // namespace lsg

#endif
