#include "doctest.h"
#include "drawings.hpp"
#include "helpers.hpp"

#include "hicat/emit.hpp"
#include "hicat/quotient.hpp"
#include "hicat/rigid.hpp"
#include "hicat/serialize.hpp"
#include "hicat/verify.hpp"

#include <algorithm>

using namespace hicat;

namespace {

std::string golden(const std::string& name) { return drawings::slurp(std::string(HICAT_GOLDEN_DIR) + "/" + name); }

std::set<std::string> node_ids(const drawings::Dot& dot)
{
    std::set<std::string> out;
    for (const auto& [id, label] : dot.labels) out.insert(id);
    return out;
}

std::set<std::string> as_set(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_SUITE("emit") {

TEST_CASE("quivers match the drawings")
{
    auto q2 = drawings::read_dot(dot_quiver(build_quiver(2, 3)));
    CHECK(node_ids(q2) == as_set(drawings::quiver_2_3.nodes));
    CHECK(q2.edges == drawings::quiver_2_3.edges);
    auto q3 = drawings::read_dot(dot_quiver(build_quiver(3, 3)));
    CHECK(node_ids(q3) == as_set(drawings::quiver_3_3.nodes));
    CHECK(q3.edges == drawings::quiver_3_3.edges);
}

TEST_CASE("irreducible arrows of Module(2,3) form the quiver")
{
    auto dot = drawings::read_dot(dot_category(CategoryModel::module(2, 3), ArrowPolicy::IrreducibleOnly));
    CHECK(dot.edges.size() == 12);
    CHECK(dot.edges == drawings::quiver_3_3.edges);
}

TEST_CASE("derived window and its cluster labels")
{
    auto window = CategoryModel::derived_window(2, 3, IntRange{1, 3});
    auto dot = drawings::read_dot(dot_category(window, ArrowPolicy::IrreducibleOnly));
    CHECK(node_ids(dot) == as_set(drawings::derived_2_3.nodes));
    CHECK(dot.edges == drawings::derived_2_3.edges);

    auto cluster = drawings::read_dot(dot_cluster_window(2, 3, IntRange{1, 3}));
    CHECK(cluster.edges == drawings::derived_2_3.edges);
    for (const auto& [id, label] : cluster.labels) {
        auto renamed = drawings::cluster_window_labels.find(id);
        CHECK(label == (renamed == drawings::cluster_window_labels.end() ? id : renamed->second));
    }
}

TEST_CASE("almost positive drawing plus one undrawn arrow")
{
    auto model = CategoryModel::almost_positive(2, 3);
    auto dot = drawings::read_dot(dot_category(model, ArrowPolicy::IrreducibleOnly));
    CHECK(node_ids(dot) == as_set(drawings::almost_positive_2_3.nodes));
    std::set<drawings::Edge> extra;
    std::set_difference(dot.edges.begin(), dot.edges.end(), drawings::almost_positive_2_3.edges.begin(),
                        drawings::almost_positive_2_3.edges.end(), std::inserter(extra, extra.end()));
    CHECK(std::includes(dot.edges.begin(), dot.edges.end(), drawings::almost_positive_2_3.edges.begin(),
                        drawings::almost_positive_2_3.edges.end()));
    CHECK(extra == std::set<drawings::Edge>{drawings::almost_positive_undrawn});

    // The arrow is irreducible in the ambient derived category as well.
    auto derived = CategoryModel::derived_window(2, 3, IntRange{1, 4});
    auto ambient = drawings::read_dot(dot_category(derived, ArrowPolicy::IrreducibleOnly));
    CHECK(ambient.edges.count(drawings::almost_positive_undrawn) == 1);
    CHECK(model.hom_dim(T("358"), T("368")) == 1);
}

TEST_CASE("irreducible arrows do not factor")
{
    for (auto kind : kAllKinds) {
        auto model = CategoryModel::make(kind, 2, 2);
        CAPTURE(model.name());
        auto all = arrows(model, ArrowPolicy::AllNonzero);
        auto irr = arrows(model, ArrowPolicy::IrreducibleOnly);
        CHECK(std::includes(all.begin(), all.end(), irr.begin(), irr.end()));
        std::size_t nonzero = 0;
        for (std::size_t x = 0; x < model.size(); ++x) {
            for (std::size_t y = 0; y < model.size(); ++y) nonzero += x != y && model.hom(x, y);
        }
        CHECK(all.size() == nonzero);
        for (auto [x, y] : irr) {
            for (std::size_t z = 0; z < model.size(); ++z) {
                if (z == x || z == y) continue;
                CHECK_FALSE((model.hom(x, z) && model.hom(z, y) && model.comp(x, z, y)));
            }
        }
    }
}

TEST_CASE("golden renderings")
{
    CHECK(dot_quiver(build_quiver(2, 3)) == golden("quiver_2_3.dot"));
    CHECK(dot_quiver(build_quiver(3, 3)) == golden("quiver_3_3.dot"));
    CHECK(tikz_quiver(build_quiver(3, 3)) == golden("quiver_3_3.tex"));
    CHECK(dot_category(CategoryModel::module(2, 3), ArrowPolicy::IrreducibleOnly) == golden("module_2_3.dot"));
    CHECK(dot_category(CategoryModel::almost_positive(2, 3), ArrowPolicy::IrreducibleOnly) ==
          golden("almost_positive_2_3.dot"));
    CHECK(dot_category(CategoryModel::derived_window(2, 3, IntRange{1, 3}), ArrowPolicy::IrreducibleOnly) ==
          golden("derived_2_3.dot"));
    CHECK(dot_cluster_window(2, 3, IntRange{1, 3}) == golden("cluster_window_2_3.dot"));
}

TEST_CASE("renderings are deterministic")
{
    auto model = CategoryModel::cluster(2, 3);
    CHECK(dot_category(model, ArrowPolicy::AllNonzero) == dot_category(CategoryModel::cluster(2, 3), ArrowPolicy::AllNonzero));
    CHECK(tikz_category(model, ArrowPolicy::IrreducibleOnly) == tikz_category(model, ArrowPolicy::IrreducibleOnly));
    auto g = mutation_graph(CategoryModel::almost_positive(2, 2));
    CHECK(tikz_mutation_graph(g) == tikz_mutation_graph(mutation_graph(CategoryModel::almost_positive(2, 2))));
    CHECK(dot_mutation_graph(g) == dot_mutation_graph(mutation_graph(CategoryModel::almost_positive(2, 2))));
}

TEST_CASE("emit options")
{
    CHECK(parse_emit_format("tikz") == EmitFormat::Tikz);
    CHECK(parse_emit_content("mutation-graph") == EmitContent::MutationGraph);
    CHECK(parse_arrow_policy("all") == ArrowPolicy::AllNonzero);
    CHECK_THROWS(parse_emit_format("svg"));
    CHECK_THROWS(parse_arrow_policy("some"));
    CHECK_NOTHROW(validate({EmitFormat::Tikz, EmitContent::Category, ArrowPolicy::AllNonzero}));
    CHECK_NOTHROW(validate({EmitFormat::Json, EmitContent::Exangle, ArrowPolicy::AllNonzero}));
    CHECK_THROWS_AS(validate({EmitFormat::Dot, EmitContent::Exangle, ArrowPolicy::AllNonzero}), std::invalid_argument);
    CHECK_THROWS_AS(validate({EmitFormat::Tikz, EmitContent::Report, ArrowPolicy::AllNonzero}), std::invalid_argument);
}

TEST_CASE("json forms")
{
    auto model = CategoryModel::module(1, 3);
    auto j = to_json(model);
    CHECK(j["kind"] == "module");
    CHECK(j["objects"].size() == 6);
    CHECK(j["objects"][0] == Json::array({1, 3}));
    CHECK(j["hom"]["1,4"] == Json::array({"1,4", "1,5", "2,4", "2,5"}));
    CHECK(j["ext"]["2,4"] == Json::array({"1,3"}));

    auto q = to_json(quotient(model, projinj_ideal(model)));
    CHECK(q["zero_objects"] == Json::array({Json::array({1, 5})}));
    CHECK(q.contains("killed"));

    auto e = to_json(realize(CategoryModel::module(2, 3), T("246"), T("135")));
    CHECK(e["A"] == Json::array({1, 3, 5}));
    CHECK(e["middles"] == Json::parse("[[[1,3,6]],[[1,4,6]]]"));
    CHECK(e["differentials"].size() == 3);

    auto r = to_json(verify_equiv_module_ap(1, 2));
    CHECK(r["theorem"] == "equiv");
    CHECK(r["pass"] == true);

    auto back = Json::parse(to_json(mutation_graph(CategoryModel::cluster(1, 2))).dump());
    CHECK(back["nodes"].size() == 5);
    CHECK(back["edges"].size() == 5);
}

}
