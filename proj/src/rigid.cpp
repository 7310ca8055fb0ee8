#include "hicat/rigid.hpp"

#include "hicat/quotient.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

namespace hicat {

namespace {

std::string set_key(const RigidSet& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.summands.size(); ++i) {
        if (i) out += ' ';
        out += to_label(s.summands[i]);
    }
    return out + "}";
}

RigidSet without(const RigidSet& s, const std::vector<IndexTuple>& removed, ModelKind kind)
{
    RigidSet out{kind, {}};
    for (const auto& t : s.summands) {
        if (std::find(removed.begin(), removed.end(), t) == removed.end()) out.summands.push_back(t);
    }
    return out;
}

// Greedy matching of exangle lists up to gauge; order-insensitive.
bool same_exangle_lists(const std::vector<Exangle>& xs, const std::vector<Exangle>& ys)
{
    if (xs.size() != ys.size()) return false;
    std::vector<bool> used(ys.size(), false);
    for (const auto& x : xs) {
        bool found = false;
        for (std::size_t j = 0; j < ys.size() && !found; ++j) {
            if (!used[j] && same_up_to_gauge(x, ys[j])) {
                used[j] = true;
                found = true;
            }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace

bool RigidSet::contains(const IndexTuple& t) const
{
    return std::binary_search(summands.begin(), summands.end(), t);
}

RigidSet make_rigid_set(const CategoryModel& model, std::vector<IndexTuple> summands)
{
    for (const auto& t : summands) model.index_of(t);
    std::sort(summands.begin(), summands.end());
    summands.erase(std::unique(summands.begin(), summands.end()), summands.end());
    return {model.kind(), std::move(summands)};
}

RigidityIndex::RigidityIndex(CategoryModel model) : model_(std::move(model))
{
    const std::size_t count = model_.size();
    if (count > kMaxRigidObjects) {
        throw std::length_error(model_.name() + " has " + std::to_string(count) +
                                " objects; rigid-set enumeration supports at most " +
                                std::to_string(kMaxRigidObjects));
    }
    conflicts_.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            if (model_.ext(i, j) || model_.ext(j, i)) conflicts_[i].set(j);
        }
    }
}

RigidityIndex::Mask RigidityIndex::mask_of(const RigidSet& s) const
{
    Mask mask;
    for (const auto& t : s.summands) mask.set(model_.index_of(t));
    return mask;
}

RigidSet RigidityIndex::set_of(const Mask& mask) const
{
    RigidSet s{model_.kind(), {}};
    for (std::size_t i = mask._Find_first(); i < kMaxRigidObjects; i = mask._Find_next(i)) {
        s.summands.push_back(model_.objects()[i]);
    }
    return s;
}

bool RigidityIndex::is_rigid(const Mask& s) const
{
    for (std::size_t i = s._Find_first(); i < kMaxRigidObjects; i = s._Find_next(i)) {
        if ((conflicts_[i] & s).any()) return false;
    }
    return true;
}

bool RigidityIndex::is_maximal_rigid(const Mask& s) const
{
    if (!is_rigid(s)) return false;
    const std::size_t count = model_.size();
    for (std::size_t i = 0; i < count; ++i) {
        if (!s.test(i) && !conflicts_[i].test(i) && (conflicts_[i] & s).none()) return false;
    }
    return true;
}

std::vector<RigidSet> RigidityIndex::maximal_rigid() const
{
    const std::size_t count = model_.size();
    // Bron-Kerbosch with pivoting on the compatibility graph.
    std::vector<Mask> compatible(count);
    Mask all;
    for (std::size_t i = 0; i < count; ++i) {
        if (conflicts_[i].test(i)) continue;
        all.set(i);
    }
    for (std::size_t i = 0; i < count; ++i) {
        compatible[i] = all & ~conflicts_[i];
        compatible[i].reset(i);
    }
    std::vector<RigidSet> out;
    auto recurse = [&](auto&& self, Mask chosen, Mask candidates, Mask excluded) -> void {
        if (candidates.none() && excluded.none()) {
            out.push_back(set_of(chosen));
            return;
        }
        Mask pool = candidates | excluded;
        std::size_t pivot = 0;
        std::size_t best = 0;
        bool have_pivot = false;
        for (std::size_t u = pool._Find_first(); u < kMaxRigidObjects; u = pool._Find_next(u)) {
            std::size_t c = (candidates & compatible[u]).count();
            if (!have_pivot || c > best) {
                pivot = u;
                best = c;
                have_pivot = true;
            }
        }
        Mask branch = candidates & ~compatible[pivot];
        for (std::size_t v = branch._Find_first(); v < kMaxRigidObjects; v = branch._Find_next(v)) {
            Mask next = chosen;
            next.set(v);
            self(self, next, candidates & compatible[v], excluded & compatible[v]);
            candidates.reset(v);
            excluded.set(v);
        }
    };
    recurse(recurse, Mask{}, all, Mask{});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Exangle> RigidityIndex::exchange_exangles(const RigidSet& t, const IndexTuple& x) const
{
    if (!t.contains(x)) {
        throw std::invalid_argument("exchange_exangles: (" + to_key(x) + ") is not a summand of " + set_key(t));
    }
    const std::size_t xi = model_.index_of(x);
    Mask rest = mask_of(t);
    rest.reset(xi);
    Mask whole = mask_of(t);
    std::vector<Exangle> out;
    for (std::size_t y = 0; y < model_.size(); ++y) {
        if (whole.test(y) || conflicts_[y].test(y) || (conflicts_[y] & rest).any()) continue;
        for (auto [b, a] : {std::pair{xi, y}, std::pair{y, xi}}) {
            if (!model_.ext(b, a)) continue;
            Exangle e = realize(model_, model_.objects()[b], model_.objects()[a]);
            bool inside = true;
            for (const auto& middle : e.middles) {
                for (const auto& s : middle) inside = inside && rest.test(model_.index_of(s));
            }
            if (inside) out.push_back(std::move(e));
        }
    }
    return out;
}

std::optional<Mutation> RigidityIndex::mutate(const RigidSet& t, const IndexTuple& x) const
{
    Mask whole = mask_of(t);
    if (!is_maximal_rigid(whole)) {
        throw std::invalid_argument("mutate: " + set_key(t) + " is not maximal rigid in " + model_.name());
    }
    if (!t.contains(x)) {
        throw std::invalid_argument("mutate: (" + to_key(x) + ") is not a summand of " + set_key(t));
    }
    const std::size_t xi = model_.index_of(x);
    Mask rest = whole;
    rest.reset(xi);
    // Objects compatible with T \ {X}; a replacement must conflict with all others.
    Mask open;
    for (std::size_t z = 0; z < model_.size(); ++z) {
        if (!rest.test(z) && !conflicts_[z].test(z) && (conflicts_[z] & rest).none()) open.set(z);
    }
    std::vector<std::size_t> found;
    for (std::size_t y = open._Find_first(); y < kMaxRigidObjects; y = open._Find_next(y)) {
        if (y == xi) continue;
        Mask others = open;
        others.reset(y);
        if ((others & ~conflicts_[y]).none()) found.push_back(y);
    }
    if (found.empty()) return std::nullopt;
    if (found.size() > 1) {
        std::vector<IndexTuple> candidates;
        for (std::size_t y : found) candidates.push_back(model_.objects()[y]);
        throw AmbiguousMutation("mutate: several replacements for (" + to_key(x) + ") in " + set_key(t),
                                std::move(candidates));
    }
    Mask next = rest;
    next.set(found.front());
    Mutation result{set_of(next), x, model_.objects()[found.front()], {}};
    for (auto& e : exchange_exangles(t, x)) {
        if (e.a_end == result.added || e.b_end == result.added) result.exchange.push_back(std::move(e));
    }
    return result;
}

bool is_rigid(const CategoryModel& model, const std::vector<IndexTuple>& summands)
{
    for (const auto& x : summands) {
        for (const auto& y : summands) {
            if (model.ext_dim(x, y)) return false;
        }
    }
    return true;
}

std::vector<RigidSet> maximal_rigid(const CategoryModel& model) { return RigidityIndex(model).maximal_rigid(); }

std::vector<Exangle> exchange_exangles(const CategoryModel& model, const RigidSet& t, const IndexTuple& x)
{
    return RigidityIndex(model).exchange_exangles(t, x);
}

std::optional<Mutation> mutate(const CategoryModel& model, const RigidSet& t, const IndexTuple& x)
{
    return RigidityIndex(model).mutate(t, x);
}

std::map<std::size_t, long long> size_histogram(const std::vector<RigidSet>& sets)
{
    std::map<std::size_t, long long> out;
    for (const auto& s : sets) ++out[s.summands.size()];
    return out;
}

VerificationReport cardinality_check(const CategoryModel& model)
{
    auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.theorem = "cardinality";
    report.subject = model.name();
    report.d = model.d();
    report.n = model.n();
    const auto sets = maximal_rigid(model);
    const auto histogram = size_histogram(sets);
    for (const auto& [size, count] : histogram) {
        report.count("maximal rigid sets with " + std::to_string(size) + " summands", count);
    }
    if (histogram.size() > 1) {
        auto smaller = std::find_if(sets.begin(), sets.end(), [&](const RigidSet& s) {
            return s.summands.size() == histogram.begin()->first;
        });
        report.fail("maximal rigid sets of unequal size in " + model.name() + ", e.g. " + set_key(*smaller) +
                    " has " + std::to_string(smaller->summands.size()) + " summands, the largest have " +
                    std::to_string(histogram.rbegin()->first));
    } else if (!histogram.empty()) {
        report.notes.push_back("every maximal rigid set has " + std::to_string(histogram.begin()->first) +
                               " summands");
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

MutationGraph mutation_graph(const CategoryModel& model)
{
    RigidityIndex index(model);
    MutationGraph g;
    g.nodes = index.maximal_rigid();
    std::map<RigidSet, std::size_t> position;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) position.emplace(g.nodes[i], i);
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        for (const auto& x : g.nodes[i].summands) {
            auto mu = index.mutate(g.nodes[i], x);
            if (!mu) {
                ++g.frozen;
                continue;
            }
            std::size_t j = position.at(mu->result);
            if (i < j) g.edges.push_back({i, j, x, mu->added});
        }
    }
    std::sort(g.edges.begin(), g.edges.end(),
              [](const MutationEdge& a, const MutationEdge& b) { return std::pair{a.from, a.to} < std::pair{b.from, b.to}; });
    return g;
}

namespace {

// Mutation at every summand of every set commutes with the label map
// `to_target` (which drops summands absent from the target model).
void match_mutations(VerificationReport& report, const std::string& tag, const RigidityIndex& source,
                     const std::vector<RigidSet>& source_sets, const RigidityIndex& target,
                     const std::function<RigidSet(const RigidSet&)>& to_target,
                     const std::function<Exangle(const Exangle&)>& exangle_image)
{
    for (const auto& t : source_sets) {
        RigidSet image = to_target(t);
        for (const auto& x : t.summands) {
            if (!target.model().contains(x)) {
                if (source.mutate(t, x)) {
                    report.fail(tag + ": summand (" + to_key(x) + ") of " + set_key(t) +
                                " vanishes in the quotient but is mutable");
                }
                report.count(tag + " quotient-zero summands");
                continue;
            }
            std::vector<Exangle> mapped;
            for (const auto& e : source.exchange_exangles(t, x)) mapped.push_back(exangle_image(e));
            auto expected = target.exchange_exangles(image, x);
            report.count(tag + " exchange exangles compared", static_cast<long long>(expected.size()));
            if (!same_exangle_lists(mapped, expected)) {
                report.fail(tag + ": exchange exangles differ at (" + to_key(x) + ") in " + set_key(t));
            }
            try {
                auto mu_source = source.mutate(t, x);
                auto mu_target = target.mutate(image, x);
                if (mu_source.has_value() != mu_target.has_value() ||
                    (mu_source && (to_target(mu_source->result) != mu_target->result ||
                                   mu_source->added != mu_target->added))) {
                    report.fail(tag + ": mutation at (" + to_key(x) + ") of " + set_key(t) +
                                " is not intertwined");
                }
                report.count(tag + (mu_source ? " mutations matched" : " frozen summands matched"));
            } catch (const AmbiguousMutation& err) {
                report.fail(tag + ": " + err.what());
            }
        }
    }
}

void check_involution(VerificationReport& report, const RigidityIndex& index, const std::vector<RigidSet>& sets)
{
    for (const auto& t : sets) {
        for (const auto& x : t.summands) {
            auto mu = index.mutate(t, x);
            if (!mu) continue;
            auto back = index.mutate(mu->result, mu->added);
            report.count(index.model().name() + " involution checks");
            if (!back || back->result != t || back->added != x) {
                report.fail("mutation in " + index.model().name() + " at (" + to_key(x) + ") of " + set_key(t) +
                            " is not an involution");
            }
        }
    }
}

}  // namespace

VerificationReport correspondence_check(int d, int n)
{
    auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.theorem = "correspondence";
    report.d = d;
    report.n = n;
    report.subject = "(" + std::to_string(d) + "," + std::to_string(n) + ")";

    const auto module = CategoryModel::module(d, n + 1);
    const auto ap = CategoryModel::almost_positive(d, n);
    const auto rf = CategoryModel::relative_f(d, n);
    const auto cluster = CategoryModel::cluster(d, n);
    const auto q_module = quotient(module, projinj_ideal(module));
    const auto q_rf = quotient(rf, injproj_ideal(rf));

    RigidityIndex module_index(module);
    RigidityIndex ap_index(ap);
    RigidityIndex rf_index(rf);

    const auto tilting = module_index.maximal_rigid();
    const auto ap_sets = ap_index.maximal_rigid();
    const auto rf_sets = rf_index.maximal_rigid();
    const auto cluster_sets = RigidityIndex(cluster).maximal_rigid();
    report.count("tilting sets", static_cast<long long>(tilting.size()));
    report.count("almost-positive maximal rigid sets", static_cast<long long>(ap_sets.size()));
    report.count("relative-F maximal rigid sets", static_cast<long long>(rf_sets.size()));

    const auto& zero = q_module.zero_objects;
    std::vector<RigidSet> images;
    for (const auto& t : tilting) {
        for (const auto& p : zero) {
            if (!t.contains(p)) report.fail("tilting set " + set_key(t) + " misses projective-injective (" + to_key(p) + ")");
        }
        images.push_back(without(t, zero, ModelKind::AlmostPositive));
    }
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
        report.fail("two tilting sets have the same image in the projective-injective quotient");
    }
    if (images != ap_sets) {
        report.fail("images of tilting sets differ from the almost-positive maximal rigid sets");
    }
    if (rf_sets != std::vector<RigidSet>(ap_sets.begin(), ap_sets.end())) {
        report.fail("relative-F maximal rigid sets differ from the almost-positive ones");
    }
    if (cluster_sets != rf_sets) {
        report.fail("cluster maximal rigid sets differ from the relative-F ones");
    }

    for (const auto& [size, count] : size_histogram(ap_sets)) {
        report.count("maximal rigid sets with " + std::to_string(size) + " summands", count);
    }

    auto relabel = [](ModelKind kind, const std::vector<IndexTuple>& drop) {
        return [kind, drop](const RigidSet& s) { return without(s, drop, kind); };
    };
    match_mutations(report, "projinj", module_index, tilting, ap_index, relabel(ModelKind::AlmostPositive, zero),
                    [&](const Exangle& e) { return image(q_module, e); });
    match_mutations(report, "injproj", rf_index, rf_sets, ap_index, relabel(ModelKind::AlmostPositive, {}),
                    [&](const Exangle& e) { return image(q_rf, e); });

    check_involution(report, module_index, tilting);
    check_involution(report, ap_index, ap_sets);
    check_involution(report, rf_index, rf_sets);

    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace hicat
