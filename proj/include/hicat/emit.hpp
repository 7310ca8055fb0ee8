#pragma once

// Deterministic DOT and TikZ renderings of quivers, categories and mutation
// graphs. Node ids are comma-joined entries in lexicographic order.

#include "hicat/category.hpp"
#include "hicat/rigid.hpp"

#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hicat {

enum class EmitFormat { Dot, Tikz, Json };
enum class EmitContent { Quiver, Category, MutationGraph, Exangle, Report };
enum class ArrowPolicy { AllNonzero, IrreducibleOnly };

struct EmitSpec {
    EmitFormat format = EmitFormat::Dot;
    EmitContent content = EmitContent::Category;
    ArrowPolicy policy = ArrowPolicy::IrreducibleOnly;
};

EmitFormat parse_emit_format(std::string_view text);
EmitContent parse_emit_content(std::string_view text);
/// all | irreducible
ArrowPolicy parse_arrow_policy(std::string_view text);

/// Throws std::invalid_argument for pairings with no rendering.
void validate(const EmitSpec& spec);

/// Index pairs (source, target), sorted. Irreducible arrows are nonzero
/// homs between distinct objects that are no nonzero composite of two
/// non-identity basis morphisms.
std::vector<std::pair<std::size_t, std::size_t>> arrows(const CategoryModel& model, ArrowPolicy policy);

using LabelFn = std::function<std::string(const IndexTuple&)>;

std::string dot_quiver(const Quiver& q);
std::string dot_category(const CategoryModel& model, ArrowPolicy policy, const LabelFn& label = {});
/// Derived window drawn with cluster labels (entries reduced mod n + 2d + 1).
std::string dot_cluster_window(int d, int n, IntRange window);
std::string dot_mutation_graph(const MutationGraph& g);

std::string tikz_quiver(const Quiver& q);
std::string tikz_category(const CategoryModel& model, ArrowPolicy policy);
std::string tikz_mutation_graph(const MutationGraph& g);

/// Writes `text` to `path`, or to stdout when path is empty or "-".
void write_output(const std::filesystem::path& path, std::string_view text);

}  // namespace hicat
