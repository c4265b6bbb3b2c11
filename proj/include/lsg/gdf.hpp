#ifndef LSG_GDF_HPP
#define LSG_GDF_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lsg/connections.hpp"
#include "lsg/topgroupoid.hpp"

namespace lsg {

// Parsed and validated groupoid description file.  The format is
// line-oriented: `[section]` headers, `key = value` lines, `g: x -> y`
// arrow declarations and `#` comments.
struct GdfAtlas {
    std::vector<std::string> chart_names;  // referenced [wide] sections
    Atlas atlas;
};

struct GdfGeodesics {
    std::string cover_name;
    GeodesicStructure structure;
};

struct GdfDocument {
    SpacePtr space;
    GroupoidPtr groupoid;  // the discrete groupoid when no section is given
    std::optional<std::string> builder;         // builder invocation, if used
    std::optional<std::string> topology_style;  // named arrow topology, if used
    std::optional<TopGroupoid> topology;

    std::vector<std::pair<std::string, WideSubgroupoid>> wides;
    std::vector<std::pair<std::string, Cover>> covers;
    std::vector<std::pair<std::string, GdfAtlas>> atlases;
    std::vector<std::pair<std::string, PathConnection>> connections;
    std::vector<std::pair<std::string, GdfGeodesics>> geodesics;
    std::vector<std::pair<std::string, GroupoidMorphism>> morphisms;

    const Cover& cover(const std::string& name) const;
    const WideSubgroupoid& wide(const std::string& name) const;
};

// Throws ParseError with a line number on malformed input; domain validation
// failures surface as the corresponding domain errors.
GdfDocument parse_gdf(const std::string& text);

// Canonical printer; parse(print(parse(t))) equals parse(t).
std::string print_gdf(const GdfDocument& doc);

// Bundled fixture generators for the CLI `gen` command:
// d2, s2, c4, c8, pair, z2bundle, sym2.
std::string gen_fixture(const std::string& name);
std::vector<std::string> fixture_names();

}  // namespace lsg

#endif
