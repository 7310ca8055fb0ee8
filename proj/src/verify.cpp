#include "hicat/verify.hpp"

#include "hicat/exangle.hpp"
#include "hicat/quotient.hpp"
#include "hicat/rigid.hpp"

#include <chrono>
#include <cstdlib>
#include <future>
#include <sstream>
#include <stdexcept>

namespace hicat {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

VerificationReport begin(std::string theorem, std::string subject, int d, int n)
{
    VerificationReport r;
    r.theorem = std::move(theorem);
    r.subject = std::move(subject);
    r.d = d;
    r.n = n;
    return r;
}

std::string point(int d, int n) { return "(" + std::to_string(d) + "," + std::to_string(n) + ")"; }

std::string pair_text(const IndexTuple& b, const IndexTuple& a)
{
    return "(B,A) = (" + to_key(b) + "; " + to_key(a) + ")";
}

// Quotient view against a target model with the same tuple labels.
void compare_quotient(VerificationReport& report, const QuotientModel& q, const CategoryModel& target)
{
    const auto& view = q.view;
    if (view.objects() != target.objects()) {
        std::string witness;
        for (const auto& t : view.objects()) {
            if (!target.contains(t)) {
                witness = "(" + to_key(t) + ") survives in " + view.name() + " but is not in " + target.name();
                break;
            }
        }
        for (const auto& t : target.objects()) {
            if (!witness.empty()) break;
            if (!view.contains(t)) witness = "(" + to_key(t) + ") of " + target.name() + " is zero in " + view.name();
        }
        report.fail(witness.empty() ? "object lists differ in order" : witness);
        return;
    }
    const std::size_t count = view.size();
    report.count("objects matched", static_cast<long long>(count));
    const auto& objs = view.objects();
    for (std::size_t b = 0; b < count; ++b) {
        for (std::size_t a = 0; a < count; ++a) {
            report.count("hom pairs compared");
            if (view.hom(b, a) != target.hom(b, a)) {
                report.fail("hom differs at " + pair_text(objs[b], objs[a]) + ": quotient " +
                            std::to_string(view.hom(b, a)) + ", target " + std::to_string(target.hom(b, a)));
            }
            report.count("ext pairs compared");
            if (view.ext(b, a) != target.ext(b, a)) {
                report.fail("ext differs at " + pair_text(objs[b], objs[a]) + ": quotient " +
                            std::to_string(view.ext(b, a)) + ", target " + std::to_string(target.ext(b, a)));
            }
        }
    }
    for (std::size_t x = 0; x < count; ++x) {
        for (std::size_t y : target.hom_out(x)) {
            for (std::size_t z : target.hom_out(y)) {
                report.count("composites compared");
                if (view.comp(x, y, z) != target.comp(x, y, z)) {
                    report.fail("composite differs for (" + to_key(objs[x]) + ") -> (" + to_key(objs[y]) + ") -> (" +
                                to_key(objs[z]) + ")");
                }
            }
        }
    }
    for (std::size_t b = 0; b < count; ++b) {
        for (std::size_t a = 0; a < count; ++a) {
            if (!target.ext(b, a) || !view.ext(b, a)) continue;
            Exangle mapped = image(q, realize(q.base, objs[b], objs[a]));
            Exangle expected = realize(target, objs[b], objs[a]);
            report.count("exangles compared");
            if (!same_up_to_gauge(mapped, expected)) {
                report.fail("exangle differs at " + pair_text(objs[b], objs[a]));
            }
        }
    }
}

bool in_model(const CategoryModel& model, const IndexTuple& t) { return model.contains(t); }

std::optional<IndexTuple> try_shift(const CategoryModel& model, const IndexTuple& t)
{
    switch (model.kind()) {
    case ModelKind::DerivedWindow: return shift_derived(t, model.n(), model.d());
    case ModelKind::Cluster: return shift_cluster(t, model.modulus());
    default: return std::nullopt;
    }
}

}  // namespace

Grid Grid::parse(std::string_view text)
{
    Grid g;
    std::string s(text);
    std::istringstream in(s);
    std::string field;
    int index = 0;
    while (std::getline(in, field, ':')) {
        if (!field.empty()) {
            std::size_t used = 0;
            long long value = std::stoll(field, &used);
            if (used != field.size() || value < 0) throw std::invalid_argument("bad grid field '" + field + "'");
            if (index == 0) g.dmax = static_cast<int>(value);
            else if (index == 1) g.nmax = static_cast<int>(value);
            else if (index == 2) g.objmax = static_cast<std::size_t>(value);
            else throw std::invalid_argument("grid has more than three fields: " + s);
        }
        ++index;
    }
    return g;
}

Grid Grid::from_env()
{
    const char* env = std::getenv("HICAT_GRID");
    return env ? parse(env) : Grid{};
}

std::string_view to_string(Theorem t)
{
    switch (t) {
    case Theorem::Equivalence: return "equiv";
    case Theorem::FExangles: return "f-exangles";
    case Theorem::Main2: return "main2";
    case Theorem::Sanity: return "sanity";
    case Theorem::Correspondence: return "correspondence";
    case Theorem::Cardinality: return "cardinality";
    }
    return "?";
}

Theorem parse_theorem(std::string_view text)
{
    for (auto t : {Theorem::Equivalence, Theorem::FExangles, Theorem::Main2, Theorem::Sanity,
                   Theorem::Correspondence, Theorem::Cardinality}) {
        if (text == to_string(t)) return t;
    }
    throw std::invalid_argument("unknown theorem '" + std::string(text) + "'");
}

VerificationReport verify_equiv_module_ap(int d, int n)
{
    auto start = Clock::now();
    auto report = begin("equiv", point(d, n), d, n);
    const auto module = CategoryModel::module(d, n + 1);
    const auto q = quotient(module, projinj_ideal(module));
    const auto ap = CategoryModel::almost_positive(d, n);
    if (q.view.objects() != gen_nonconsec(n + 2 * d + 1, d)) {
        report.fail("nonzero objects of " + q.view.name() + " are not the non-consecutive tuples N(" +
                    std::to_string(n + 2 * d + 1) + "," + std::to_string(d) + ")");
    }
    compare_quotient(report, q, ap);
    report.seconds = since(start);
    return report;
}

VerificationReport verify_main2(int d, int n)
{
    auto start = Clock::now();
    auto report = begin("main2", point(d, n), d, n);
    const auto rf = CategoryModel::relative_f(d, n);
    const auto q = quotient(rf, injproj_ideal(rf));
    compare_quotient(report, q, CategoryModel::almost_positive(d, n));
    report.seconds = since(start);
    return report;
}

VerificationReport verify_F_exangles(int d, int n)
{
    auto start = Clock::now();
    auto report = begin("f-exangles", point(d, n), d, n);
    const auto cluster = CategoryModel::cluster(d, n);
    const auto rf = CategoryModel::relative_f(d, n);
    const int m = cluster.modulus();
    const auto shifted_projectives =
        object_ideal(cluster, "shifted projectives", [m](const IndexTuple& t) { return t.back() == m; });
    const auto& objs = cluster.objects();
    for (std::size_t b = 0; b < objs.size(); ++b) {
        for (std::size_t a = 0; a < objs.size(); ++a) {
            if (!cluster.ext(b, a)) continue;
            report.count("ext pairs scanned");
            const auto& bt = objs[b];
            const auto& at = objs[a];
            const IndexTuple target = shift_cluster(at, m);
            if (!cluster.hom_dim(bt, target)) {
                report.fail("connecting morphism vanishes at " + pair_text(bt, at));
                continue;
            }
            const bool factors = factors_through(cluster, cluster.basis(bt, target), shifted_projectives);
            const bool expected = intertwines(at, bt);
            report.count(factors ? "distinguished" : "not distinguished");
            if (factors != expected) {
                report.fail("connecting morphism at " + pair_text(bt, at) +
                            (factors ? " factors through a shifted projective but A does not intertwine B"
                                     : " does not factor through a shifted projective although A intertwines B"));
            }
            if (rf.ext(b, a) != factors) {
                report.fail("relative-F ext disagrees with the factorization at " + pair_text(bt, at));
            }
        }
    }
    report.seconds = since(start);
    return report;
}

VerificationReport verify_model_sanity(const CategoryModel& model)
{
    auto start = Clock::now();
    auto report = begin("sanity", model.name(), model.d(), model.n());
    const auto& objs = model.objects();
    const std::size_t count = model.size();

    for (std::size_t x = 0; x < count; ++x) {
        if (!model.hom(x, x)) {
            report.fail("no identity on (" + to_key(objs[x]) + ")");
            continue;
        }
        for (std::size_t y : model.hom_out(x)) {
            if (!model.comp(x, x, y) || !model.comp(x, y, y)) {
                report.fail("identity does not act trivially on (" + to_key(objs[x]) + ") -> (" + to_key(objs[y]) + ")");
            }
        }
    }

    std::optional<std::string> witness;
    for (std::size_t x = 0; x < count; ++x) {
        for (std::size_t y : model.hom_out(x)) {
            for (std::size_t z : model.hom_out(y)) {
                if (model.hom(x, z) && !model.comp(x, y, z)) {
                    report.count("zero composites with nonzero hom");
                    if (!witness) {
                        witness = "(" + to_key(objs[x]) + ") -> (" + to_key(objs[y]) + ") -> (" + to_key(objs[z]) +
                                  ") composes to zero although the outer hom space is nonzero";
                    }
                }
                for (std::size_t w : model.hom_out(z)) {
                    report.count("associativity quadruples");
                    bool left = model.comp(y, z, w) && model.comp(x, y, w);
                    bool right = model.comp(x, y, z) && model.comp(x, z, w);
                    if (left != right) {
                        report.fail("composition not associative on (" + to_key(objs[x]) + ", " + to_key(objs[y]) +
                                    ", " + to_key(objs[z]) + ", " + to_key(objs[w]) + ")");
                    }
                }
            }
        }
    }
    if (witness) report.notes.push_back("non-commuting witness: " + *witness);

    if (model.kind() == ModelKind::DerivedWindow || model.kind() == ModelKind::Cluster) {
        std::vector<std::optional<IndexTuple>> shifted(count);
        for (std::size_t x = 0; x < count; ++x) {
            auto s = try_shift(model, objs[x]);
            if (s && in_model(model, *s)) shifted[x] = s;
        }
        for (std::size_t x = 0; x < count; ++x) {
            if (!shifted[x]) continue;
            std::size_t sx = model.index_of(*shifted[x]);
            for (std::size_t y = 0; y < count; ++y) {
                if (!shifted[y]) continue;
                std::size_t sy = model.index_of(*shifted[y]);
                report.count("shift pairs");
                if (model.hom(x, y) != model.hom(sx, sy) || model.ext(x, y) != model.ext(sx, sy)) {
                    report.fail("shift changes hom or ext at " + pair_text(objs[x], objs[y]));
                }
            }
        }
        if (model.kind() == ModelKind::Cluster) {
            const int m = model.modulus();
            for (std::size_t x = 0; x < count; ++x) {
                std::size_t rx = model.index_of(normalize_cyclic(offset(objs[x].span(), 1), m));
                for (std::size_t y = 0; y < count; ++y) {
                    std::size_t ry = model.index_of(normalize_cyclic(offset(objs[y].span(), 1), m));
                    report.count("rotation pairs");
                    if (model.hom(x, y) != model.hom(rx, ry) || model.ext(x, y) != model.ext(rx, ry)) {
                        report.fail("rotation changes hom or ext at " + pair_text(objs[x], objs[y]));
                    }
                }
            }
        }
    }

    for (std::size_t b = 0; b < count; ++b) {
        for (std::size_t a = 0; a < count; ++a) {
            if (!model.ext(b, a)) continue;
            Exangle e = realize(model, objs[b], objs[a]);
            report.count("exangles realized");
            if (!is_complex(e)) report.fail("realized exangle is not a complex at " + pair_text(objs[b], objs[a]));
            auto exact = hom_exactness_report(model, e);
            report.count("exactness checks", static_cast<long long>(exact.checks.size()));
            if (!exact.pass()) report.fail("hom sequence not exact at " + pair_text(objs[b], objs[a]));
        }
    }
    report.seconds = since(start);
    return report;
}

std::size_t grid_cost(Theorem t, int d, int n)
{
    const auto nonconsec = [&] { return gen_nonconsec(n + 2 * d + 1, d).size(); };
    switch (t) {
    case Theorem::Equivalence:
    case Theorem::Correspondence: return gen_modset(n + 2 * d + 1, d).size();
    case Theorem::FExangles:
    case Theorem::Main2:
    case Theorem::Sanity:
    case Theorem::Cardinality: return nonconsec();
    }
    return 0;
}

namespace {

VerificationReport sanity_point(int d, int n, std::size_t objmax)
{
    auto start = Clock::now();
    auto report = begin("sanity", point(d, n), d, n);
    for (auto kind : {ModelKind::Module, ModelKind::DerivedWindow, ModelKind::Cluster, ModelKind::AlmostPositive,
                      ModelKind::RelativeF}) {
        auto model = CategoryModel::make(kind, d, n);
        if (model.size() > objmax) {
            report.notes.push_back(model.name() + " skipped: " + std::to_string(model.size()) + " objects");
            continue;
        }
        auto part = verify_model_sanity(model);
        report.absorb(part, model.name() + ": ");
    }
    report.seconds = since(start);
    return report;
}

VerificationReport cardinality_point(int d, int n)
{
    auto start = Clock::now();
    auto report = begin("cardinality", point(d, n), d, n);
    for (auto kind : {ModelKind::Cluster, ModelKind::AlmostPositive}) {
        auto part = cardinality_check(CategoryModel::make(kind, d, n));
        report.absorb(part, part.subject + ": ");
    }
    report.seconds = since(start);
    return report;
}

VerificationReport run_point_bounded(Theorem t, int d, int n, std::size_t objmax)
{
    switch (t) {
    case Theorem::Equivalence: return verify_equiv_module_ap(d, n);
    case Theorem::FExangles: return verify_F_exangles(d, n);
    case Theorem::Main2: return verify_main2(d, n);
    case Theorem::Sanity: return sanity_point(d, n, objmax);
    case Theorem::Correspondence: return correspondence_check(d, n);
    case Theorem::Cardinality: return cardinality_point(d, n);
    }
    throw std::logic_error("unhandled theorem");
}

}  // namespace

VerificationReport run_point(Theorem t, int d, int n)
{
    return run_point_bounded(t, d, n, Grid{}.objmax);
}

std::vector<VerificationReport> run_grid(Theorem t, const Grid& grid)
{
    std::vector<std::future<VerificationReport>> jobs;
    for (int d = 1; d <= grid.dmax; ++d) {
        for (int n = 1; n <= grid.nmax; ++n) {
            std::size_t cost = grid_cost(t, d, n);
            if (cost > grid.objmax || (t == Theorem::Correspondence && cost > kMaxRigidObjects)) {
                std::promise<VerificationReport> skipped;
                auto r = begin(std::string(to_string(t)), point(d, n), d, n);
                r.skipped = true;
                r.notes.push_back("skipped: " + std::to_string(cost) + " objects exceed the bound");
                skipped.set_value(std::move(r));
                jobs.push_back(skipped.get_future());
                continue;
            }
            jobs.push_back(std::async(std::launch::async, run_point_bounded, t, d, n, grid.objmax));
        }
    }
    std::vector<VerificationReport> out;
    for (auto& job : jobs) out.push_back(job.get());
    return out;
}

}  // namespace hicat
