#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lsg/reports.hpp"
#include "lsg/search.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw lsg::InvalidInput("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int exit_code_for(const lsg::Error& e) {
    return e.code == lsg::Error::Code::too_large ? 3 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"local subgroupoids of finite topological groupoids"};
    app.require_subcommand(1);

    lsg::ReportOptions opt;
    app.add_option("--threads", opt.threads, "worker threads for independent checks");
    app.add_option("--max-points", opt.max_points, "guard bound for open-set enumeration");
    app.add_option("--max-arrows", opt.max_arrows,
                   "guard bound for wide-subgroupoid enumeration");
    app.add_flag("--oracle", opt.oracle, "cross-check glob against the intersection oracle");
    app.add_flag("--witness,!--no-witness", opt.witness,
                 "print witnesses for failing properties (default on)");

    std::string input;
    CLI::App* check = app.add_subcommand("check", "validate a GDF file");
    check->fallthrough();
    check->add_option("file", input, "GDF file, or - for stdin")->required();

    std::string kind;
    CLI::App* report = app.add_subcommand("report", "run a report on a GDF file");
    report->fallthrough();
    report
        ->add_option("kind", kind,
                     "c1 | star-connectivity | coherence | connection | transfer | sheaf")
        ->required()
        ->check(CLI::IsMember(
            {"c1", "star-connectivity", "coherence", "connection", "transfer", "sheaf"}));
    report->add_option("file", input, "GDF file, or - for stdin")->required();

    std::string what;
    int search_points = 4;
    CLI::App* search = app.add_subcommand("search", "exhaustive counterexample search");
    search->fallthrough();
    search->add_option("what", what, "global-coherence-failure")
        ->required()
        ->check(CLI::IsMember({"global-coherence-failure"}));
    search->add_option("--points", search_points, "maximum space size to search");

    std::string fixture;
    std::string out_path;
    CLI::App* gen = app.add_subcommand("gen", "write a bundled fixture as GDF");
    gen->fallthrough();
    gen->add_option("fixture", fixture, "d2 | s2 | c4 | c8 | pair | z2bundle | sym2")
        ->required();
    gen->add_option("-o,--output", out_path, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) {
            lsg::GdfDocument doc = lsg::parse_gdf(read_input(input));
            lsg::Report r = lsg::report_check(doc);
            std::cout << r.text;
            return r.violation ? 1 : 0;
        }
        if (report->parsed()) {
            lsg::GdfDocument doc = lsg::parse_gdf(read_input(input));
            lsg::Report r;
            if (kind == "c1")
                r = lsg::report_c1(doc, opt);
            else if (kind == "star-connectivity")
                r = lsg::report_star_connectivity(doc, opt);
            else if (kind == "coherence")
                r = lsg::report_coherence(doc, opt);
            else if (kind == "connection")
                r = lsg::report_connection(doc, opt);
            else if (kind == "transfer")
                r = lsg::report_transfer(doc, opt);
            else
                r = lsg::report_sheaf(doc, opt);
            std::cout << r.text;
            return r.violation ? 1 : 0;
        }
        if (search->parsed()) {
            lsg::SearchResult r = lsg::search_global_coherence_failure(search_points, opt);
            std::cout << r.text;
            return r.found ? 1 : 0;
        }
        if (gen->parsed()) {
            std::string text = lsg::gen_fixture(fixture);
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(out_path);
                if (!out) throw lsg::InvalidInput("cannot write " + out_path);
                out << text;
            }
            return 0;
        }
    } catch (const lsg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
