#include "hicat/emit.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hicat {

namespace {

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string set_id(const RigidSet& s)
{
    std::string out;
    for (const auto& t : s.summands) {
        if (!out.empty()) out += ' ';
        out += to_label(t);
    }
    return out;
}

int entry_sum(const IndexTuple& t) { return std::accumulate(t.entries().begin(), t.entries().end(), 0); }

// Mesh coordinates: x grows with the entry sum, y with the spread.
std::pair<int, int> mesh_position(const IndexTuple& t, int base_sum)
{
    int d = static_cast<int>(t.size()) - 1;
    return {entry_sum(t) - base_sum, t.back() - t.front() - 2 * d};
}

std::string tikz_name(const IndexTuple& t)
{
    std::string out = "v";
    for (int x : t.entries()) out += "_" + std::to_string(x);
    return out;
}

std::string tikz_graph(const std::vector<IndexTuple>& nodes,
                       const std::vector<std::pair<std::size_t, std::size_t>>& edges)
{
    std::ostringstream out;
    int base = nodes.empty() ? 0 : entry_sum(nodes.front());
    for (const auto& t : nodes) base = std::min(base, entry_sum(t));
    out << "\\begin{tikzpicture}\n";
    for (const auto& t : nodes) {
        auto [x, y] = mesh_position(t, base);
        out << "\\node(" << tikz_name(t) << ") at (" << x << "," << y << ") {$" << to_label(t) << "$};\n";
    }
    for (auto [s, t] : edges) {
        out << "\\draw[->] (" << tikz_name(nodes[s]) << ") -- (" << tikz_name(nodes[t]) << ");\n";
    }
    out << "\\end{tikzpicture}\n";
    return out.str();
}

std::vector<std::pair<std::size_t, std::size_t>> quiver_edges(const Quiver& q)
{
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    auto index = [&](const IndexTuple& t) {
        return static_cast<std::size_t>(std::lower_bound(q.vertices.begin(), q.vertices.end(), t) - q.vertices.begin());
    };
    for (const auto& a : q.arrows) edges.emplace_back(index(a.source), index(a.target));
    std::sort(edges.begin(), edges.end());
    return edges;
}

}  // namespace

EmitFormat parse_emit_format(std::string_view text)
{
    if (text == "dot") return EmitFormat::Dot;
    if (text == "tikz") return EmitFormat::Tikz;
    if (text == "json") return EmitFormat::Json;
    throw std::invalid_argument("unknown format '" + std::string(text) + "'");
}

EmitContent parse_emit_content(std::string_view text)
{
    if (text == "quiver") return EmitContent::Quiver;
    if (text == "category") return EmitContent::Category;
    if (text == "mutation-graph") return EmitContent::MutationGraph;
    if (text == "exangle") return EmitContent::Exangle;
    if (text == "report") return EmitContent::Report;
    throw std::invalid_argument("unknown content '" + std::string(text) + "'");
}

ArrowPolicy parse_arrow_policy(std::string_view text)
{
    if (text == "all") return ArrowPolicy::AllNonzero;
    if (text == "irreducible") return ArrowPolicy::IrreducibleOnly;
    throw std::invalid_argument("unknown arrow policy '" + std::string(text) + "'");
}

void validate(const EmitSpec& spec)
{
    bool ok = true;
    switch (spec.content) {
    case EmitContent::Quiver:
    case EmitContent::Category:
    case EmitContent::MutationGraph: break;
    case EmitContent::Exangle:
    case EmitContent::Report: ok = spec.format == EmitFormat::Json; break;
    }
    if (!ok) throw std::invalid_argument("exangles and reports are emitted as json only");
}

std::vector<std::pair<std::size_t, std::size_t>> arrows(const CategoryModel& model, ArrowPolicy policy)
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t count = model.size();
    for (std::size_t x = 0; x < count; ++x) {
        for (std::size_t y : model.hom_out(x)) {
            if (x == y) continue;
            bool keep = true;
            if (policy == ArrowPolicy::IrreducibleOnly) {
                for (std::size_t z : model.hom_out(x)) {
                    if (z != x && z != y && model.hom(z, y) && model.comp(x, z, y)) {
                        keep = false;
                        break;
                    }
                }
            }
            if (keep) out.emplace_back(x, y);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string dot_quiver(const Quiver& q)
{
    std::ostringstream out;
    out << "digraph {\n";
    for (const auto& v : q.vertices) out << "  " << quoted(to_key(v)) << " [label=" << quoted(to_label(v)) << "];\n";
    for (auto [s, t] : quiver_edges(q)) {
        out << "  " << quoted(to_key(q.vertices[s])) << " -> " << quoted(to_key(q.vertices[t])) << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string dot_category(const CategoryModel& model, ArrowPolicy policy, const LabelFn& label)
{
    const auto& objs = model.objects();
    std::vector<std::size_t> order(objs.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return objs[i] < objs[j]; });
    std::ostringstream out;
    out << "digraph {\n";
    for (std::size_t i : order) {
        out << "  " << quoted(to_key(objs[i])) << " [label=" << quoted(label ? label(objs[i]) : to_label(objs[i]))
            << "];\n";
    }
    for (auto [s, t] : arrows(model, policy)) {
        out << "  " << quoted(to_key(objs[s])) << " -> " << quoted(to_key(objs[t])) << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string dot_cluster_window(int d, int n, IntRange window)
{
    const int m = n + 2 * d + 1;
    auto model = CategoryModel::derived_window(d, n, window);
    return dot_category(model, ArrowPolicy::IrreducibleOnly,
                        [m](const IndexTuple& t) { return to_label(normalize_cyclic(t.span(), m)); });
}

std::string dot_mutation_graph(const MutationGraph& g)
{
    std::ostringstream out;
    out << "graph {\n";
    for (const auto& s : g.nodes) out << "  " << quoted(set_id(s)) << ";\n";
    for (const auto& e : g.edges) {
        out << "  " << quoted(set_id(g.nodes[e.from])) << " -- " << quoted(set_id(g.nodes[e.to]))
            << " [label=" << quoted(to_label(e.removed) + "/" + to_label(e.added)) << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string tikz_quiver(const Quiver& q) { return tikz_graph(q.vertices, quiver_edges(q)); }

std::string tikz_category(const CategoryModel& model, ArrowPolicy policy)
{
    return tikz_graph(model.objects(), arrows(model, policy));
}

std::string tikz_mutation_graph(const MutationGraph& g)
{
    std::ostringstream out;
    const std::size_t count = g.nodes.size();
    out << "\\begin{tikzpicture}\n";
    for (std::size_t i = 0; i < count; ++i) {
        out << "\\node(s" << i << ") at ({360*" << i << "/" << count << "}:" << 1 + count / 4 << ") {\\tiny $"
            << set_id(g.nodes[i]) << "$};\n";
    }
    for (const auto& e : g.edges) out << "\\draw (s" << e.from << ") -- (s" << e.to << ");\n";
    out << "\\end{tikzpicture}\n";
    return out.str();
}

void write_output(const std::filesystem::path& path, std::string_view text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        if (!std::cout) throw std::runtime_error("failed to write to stdout");
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open " + path.string() + " for writing");
    file << text;
    if (!file.flush()) throw std::runtime_error("failed to write " + path.string());
}

}  // namespace hicat
