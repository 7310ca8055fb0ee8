#include "hicat/serialize.hpp"

namespace hicat {

namespace {

Json adjacency(const CategoryModel& model, bool ext)
{
    Json out = Json::object();
    const auto& objs = model.objects();
    for (std::size_t x = 0; x < objs.size(); ++x) {
        Json row = Json::array();
        for (std::size_t y = 0; y < objs.size(); ++y) {
            if (ext ? model.ext(x, y) : model.hom(x, y)) row.push_back(to_key(objs[y]));
        }
        out[to_key(objs[x])] = std::move(row);
    }
    return out;
}

Json path_json(const QuiverPath& p) { return {{"start", to_json(p.start)}, {"first", p.first}, {"second", p.second}}; }

}  // namespace

Json to_json(const IndexTuple& t) { return Json(t.entries()); }

Json to_json(const std::vector<IndexTuple>& ts)
{
    Json out = Json::array();
    for (const auto& t : ts) out.push_back(to_json(t));
    return out;
}

Json to_json(const Quiver& q)
{
    Json arrows = Json::array();
    for (const auto& a : q.arrows) {
        arrows.push_back({{"source", to_json(a.source)}, {"target", to_json(a.target)}, {"direction", a.direction}});
    }
    Json relations = Json::array();
    for (const auto& r : q.relations) {
        relations.push_back({{"lhs", path_json(r.lhs)}, {"rhs", r.rhs ? path_json(*r.rhs) : Json(nullptr)}});
    }
    return {{"d", q.d}, {"n", q.n}, {"vertices", to_json(q.vertices)}, {"arrows", arrows}, {"relations", relations}};
}

Json to_json(const CategoryModel& model)
{
    Json out = {{"kind", std::string(cli_name(model.kind()))}, {"name", model.name()}, {"d", model.d()}, {"n", model.n()}};
    if (auto w = model.window()) out["window"] = {w->lo, w->hi};
    out["objects"] = to_json(model.objects());
    out["hom"] = adjacency(model, false);
    out["ext"] = adjacency(model, true);
    return out;
}

Json to_json(const QuotientModel& q)
{
    Json out = to_json(q.view);
    out["ideal"] = q.ideal.name;
    out["base"] = q.base.name();
    Json killed = Json::array();
    for (const auto& [s, t] : q.killed) killed.push_back({to_json(s), to_json(t)});
    out["killed"] = std::move(killed);
    out["zero_objects"] = to_json(q.zero_objects);
    return out;
}

Json to_json(const MorphismMatrix& m)
{
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"source", to_json(m.source)}, {"target", to_json(m.target)},
            {"entries", m.entries}};
}

Json to_json(const Exangle& e)
{
    Json middles = Json::array();
    for (const auto& term : e.middles) middles.push_back(to_json(term));
    Json diffs = Json::array();
    for (const auto& d : e.differentials) diffs.push_back(to_json(d));
    return {{"model", e.model.name()}, {"A", to_json(e.a_end)}, {"B", to_json(e.b_end)}, {"middles", middles},
            {"differentials", diffs}};
}

Json to_json(const RigidSet& s) { return to_json(s.summands); }

Json to_json(const Mutation& m)
{
    Json exchange = Json::array();
    for (const auto& e : m.exchange) exchange.push_back(to_json(e));
    return {{"removed", to_json(m.removed)}, {"added", to_json(m.added)}, {"result", to_json(m.result)},
            {"exchange", exchange}};
}

Json to_json(const MutationGraph& g)
{
    Json nodes = Json::array();
    for (const auto& s : g.nodes) nodes.push_back(to_json(s));
    Json edges = Json::array();
    for (const auto& e : g.edges) {
        edges.push_back({{"from", e.from}, {"to", e.to}, {"removed", to_json(e.removed)}, {"added", to_json(e.added)}});
    }
    return {{"nodes", nodes}, {"edges", edges}, {"frozen", g.frozen}};
}

Json to_json(const VerificationReport& r)
{
    Json counters = Json::object();
    for (const auto& [name, value] : r.counters) counters[name] = value;
    return {{"theorem", r.theorem},
            {"subject", r.subject},
            {"d", r.d},
            {"n", r.n},
            {"pass", r.pass},
            {"skipped", r.skipped},
            {"counters", counters},
            {"counterexample", r.counterexample ? Json(*r.counterexample) : Json(nullptr)},
            {"notes", r.notes},
            {"seconds", r.seconds}};
}

}  // namespace hicat
