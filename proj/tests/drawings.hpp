#pragma once

// Drawn pictures of small models, transcribed label by label, and a reader
// for the DOT text the emitter produces.

#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace drawings {

using Edge = std::pair<std::string, std::string>;

struct Drawing {
    std::vector<std::string> nodes;
    std::set<Edge> edges;
};

inline const Drawing quiver_2_3{
    {"13", "14", "15", "24", "25", "35"},
    {{"13", "14"}, {"14", "15"}, {"14", "24"}, {"15", "25"}, {"24", "25"}, {"25", "35"}},
};

// Also the drawing of Module(2,3).
inline const Drawing quiver_3_3{
    {"135", "136", "137", "146", "147", "157", "246", "247", "257", "357"},
    {{"135", "136"}, {"136", "137"}, {"136", "146"}, {"137", "147"}, {"146", "147"}, {"147", "157"},
     {"146", "246"}, {"147", "247"}, {"157", "257"}, {"246", "247"}, {"247", "257"}, {"257", "357"}},
};

// Derived window a_0 in [1, 3] of the d = 2, n = 3 model.
inline const Drawing derived_2_3{
    {"135", "136", "137", "146", "147", "157", "246", "247", "248", "257", "258", "268", "357", "358", "359", "368",
     "369", "379"},
    {{"135", "136"}, {"136", "146"}, {"146", "147"}, {"147", "157"}, {"136", "137"}, {"137", "147"},
     {"246", "247"}, {"247", "257"}, {"257", "258"}, {"258", "268"}, {"247", "248"}, {"248", "258"},
     {"357", "358"}, {"358", "368"}, {"368", "369"}, {"369", "379"}, {"358", "359"}, {"359", "369"},
     {"146", "246"}, {"157", "257"}, {"147", "247"}, {"257", "357"}, {"268", "368"}, {"258", "358"}},
};

// Same window drawn with cluster labels; the top row repeats the bottom one.
inline const std::map<std::string, std::string> cluster_window_labels{
    {"359", "135"}, {"369", "136"}, {"379", "137"}};

inline const Drawing almost_positive_2_3{
    {"135", "136", "137", "146", "147", "157", "246", "247", "257", "248", "258", "268", "357", "358", "368", "468"},
    {{"135", "136"}, {"136", "137"}, {"136", "146"}, {"137", "147"}, {"146", "147"}, {"147", "157"}, {"146", "246"},
     {"147", "247"}, {"157", "257"}, {"246", "247"}, {"247", "257"}, {"257", "357"}, {"247", "248"}, {"248", "258"},
     {"258", "268"}, {"257", "258"}, {"357", "358"}, {"258", "358"}, {"268", "368"}, {"368", "468"}},
};

// Irreducible in the full subcategory of the derived category but absent
// from the almost positive drawing; it is drawn in the derived window.
inline const Edge almost_positive_undrawn{"358", "368"};

struct Dot {
    std::map<std::string, std::string> labels;  // node id -> label
    std::set<Edge> edges;                       // by node id without commas
};

inline std::string strip_commas(std::string id)
{
    std::erase(id, ',');
    return id;
}

inline Dot read_dot(const std::string& text)
{
    static const std::regex node(R"re(^\s*"([0-9,]+)" \[label="([^"]*)"\];$)re");
    static const std::regex edge(R"re(^\s*"([0-9,]+)" -> "([0-9,]+)";$)re");
    Dot out;
    std::istringstream in(text);
    std::string line;
    std::smatch m;
    while (std::getline(in, line)) {
        if (std::regex_match(line, m, node)) out.labels[strip_commas(m[1])] = m[2];
        else if (std::regex_match(line, m, edge)) out.edges.emplace(strip_commas(m[1]), strip_commas(m[2]));
    }
    return out;
}

inline std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace drawings
