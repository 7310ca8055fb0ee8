// hicat: command-line access to the higher type-A category models.
// Exit codes: 0 success or pass, 1 verification failure, 2 usage error.

#include "hicat/emit.hpp"
#include "hicat/serialize.hpp"
#include "hicat/verify.hpp"

#include "CLI11.hpp"

#include <iomanip>
#include <iostream>
#include <sstream>

using namespace hicat;

namespace {

constexpr int kUsageError = 2;

struct ModelArgs {
    std::string model = "module";
    int d = 1;
    int n = 1;
    std::string window;

    void attach(CLI::App* app)
    {
        app->add_option("--model", model, "module|derived|cluster|almost-positive|relative-f")
            ->check(CLI::IsMember({"module", "derived", "cluster", "almost-positive", "relative-f"}));
        app->add_option("--d", d, "Dimension parameter d >= 1")->check(CLI::PositiveNumber);
        app->add_option("--n", n, "Rank parameter n >= 1")->check(CLI::PositiveNumber);
        app->add_option("--window", window, "LO:HI range for a_0 (derived; cluster emit view)");
    }

    std::optional<IntRange> range() const
    {
        if (window.empty()) return std::nullopt;
        auto colon = window.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("window must be LO:HI");
        return IntRange{std::stoi(window.substr(0, colon)), std::stoi(window.substr(colon + 1))};
    }

    CategoryModel build() const
    {
        auto kind = parse_model_kind(model);
        auto w = range();
        if (w && kind != ModelKind::DerivedWindow) throw std::invalid_argument("--window applies to the derived model");
        return CategoryModel::make(kind, d, n, w);
    }
};

std::string pad(const std::string& s, std::size_t width)
{
    return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

std::string summary_table(const std::vector<VerificationReport>& reports)
{
    std::ostringstream out;
    out << pad("theorem", 16) << pad("point", 10) << pad("result", 8) << "seconds\n";
    for (const auto& r : reports) {
        std::string result = r.skipped ? "skip" : (r.pass ? "pass" : "FAIL");
        out << pad(r.theorem, 16) << pad(r.subject, 10) << pad(result, 8) << std::fixed << std::setprecision(3)
            << r.seconds << "\n";
        if (!r.pass && r.counterexample) out << "  counterexample: " << *r.counterexample << "\n";
    }
    return out.str();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Higher type-A category models: objects, exangles, quotients, verification and mutation"};
    app.require_subcommand(1);

    ModelArgs common;
    std::string from;
    std::string to;
    std::string format = "text";
    std::string out_path;

    auto* objects = app.add_subcommand("objects", "List indecomposable objects");
    common.attach(objects);
    objects->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    objects->add_option("--out", out_path, "Output file (default stdout)");

    auto* count = app.add_subcommand("count", "Number of indecomposable objects");
    common.attach(count);

    auto* hom = app.add_subcommand("hom", "dim Hom(X_from, X_to)");
    common.attach(hom);
    hom->add_option("--from", from, "Source tuple")->required();
    hom->add_option("--to", to, "Target tuple")->required();

    auto* ext = app.add_subcommand("ext", "dim E(X_from, X_to), the extensions realized by X_to -> ... -> X_from");
    common.attach(ext);
    ext->add_option("--from", from, "Tuple B")->required();
    ext->add_option("--to", to, "Tuple A")->required();

    auto* exangle = app.add_subcommand("exangle", "Distinguished exangle X_to -> E_d -> ... -> E_1 -> X_from as JSON");
    common.attach(exangle);
    exangle->add_option("--from", from, "Tuple B")->required();
    exangle->add_option("--to", to, "Tuple A")->required();
    exangle->add_option("--out", out_path, "Output file (default stdout)");

    auto* quotient_cmd = app.add_subcommand("quotient", "Ideal quotient as JSON (module: projective-injectives; "
                                                        "relative-f: injective-to-projective arrows)");
    common.attach(quotient_cmd);
    quotient_cmd->add_option("--out", out_path, "Output file (default stdout)");

    std::string theorem = "equiv";
    std::string grid_text;
    auto* verify = app.add_subcommand("verify", "Exhaustive verification over a grid of (d, n)");
    verify->add_option("--theorem", theorem, "equiv|f-exangles|main2|sanity|correspondence|cardinality")
        ->check(CLI::IsMember({"equiv", "f-exangles", "main2", "sanity", "correspondence", "cardinality"}));
    verify->add_option("--grid", grid_text, "DMAX:NMAX:OBJMAX (default 3:4:200, or HICAT_GRID)");
    verify->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", out_path, "Output file (default stdout)");

    auto* rigid = app.add_subcommand("rigid", "Maximal rigid sets");
    common.attach(rigid);
    rigid->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    bool count_only = false;
    rigid->add_flag("--count", count_only, "Print only the number of sets");

    std::string set_text;
    std::string at;
    auto* mutate_cmd = app.add_subcommand("mutate", "Mutate a maximal rigid set at one summand");
    common.attach(mutate_cmd);
    mutate_cmd->add_option("--set", set_text, "Summands separated by spaces or semicolons, e.g. \"13 14 15\"")
        ->required();
    mutate_cmd->add_option("--at", at, "Summand to replace")->required();

    std::string content = "category";
    std::string arrow_policy = "irreducible";
    auto* emit_cmd = app.add_subcommand("emit", "Render a quiver, category or mutation graph");
    common.attach(emit_cmd);
    emit_cmd->add_option("--content", content, "quiver|category|mutation-graph|exangle|report")
        ->check(CLI::IsMember({"quiver", "category", "mutation-graph", "exangle", "report"}));
    emit_cmd->add_option("--format", format, "dot|tikz|json")->check(CLI::IsMember({"dot", "tikz", "json"}));
    emit_cmd->add_option("--arrows", arrow_policy, "irreducible|all")->check(CLI::IsMember({"irreducible", "all"}));
    emit_cmd->add_option("--from", from, "Tuple B (exangle content)");
    emit_cmd->add_option("--to", to, "Tuple A (exangle content)");
    emit_cmd->add_option("--theorem", theorem, "Theorem for report content");
    emit_cmd->add_option("--out", out_path, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        if (*objects) {
            auto model = common.build();
            if (format == "json") {
                write_output(out_path, to_json(model).dump(2) + "\n");
            } else {
                std::string text;
                for (const auto& t : model.objects()) text += to_label(t) + "\n";
                write_output(out_path, text);
            }
        } else if (*count) {
            std::cout << common.build().size() << "\n";
        } else if (*hom) {
            std::cout << common.build().hom_dim(parse_tuple(from), parse_tuple(to)) << "\n";
        } else if (*ext) {
            std::cout << common.build().ext_dim(parse_tuple(from), parse_tuple(to)) << "\n";
        } else if (*exangle) {
            auto e = realize(common.build(), parse_tuple(from), parse_tuple(to));
            write_output(out_path, to_json(e).dump(2) + "\n");
        } else if (*quotient_cmd) {
            auto model = common.build();
            IdealSpec ideal = model.kind() == ModelKind::RelativeF ? injproj_ideal(model) : projinj_ideal(model);
            write_output(out_path, to_json(quotient(model, ideal)).dump(2) + "\n");
        } else if (*verify) {
            Grid grid = grid_text.empty() ? Grid::from_env() : Grid::parse(grid_text);
            auto reports = run_grid(parse_theorem(theorem), grid);
            if (format == "json") {
                Json all = Json::array();
                for (const auto& r : reports) all.push_back(to_json(r));
                write_output(out_path, all.dump(2) + "\n");
            } else {
                write_output(out_path, summary_table(reports));
            }
            bool pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
            return pass ? 0 : 1;
        } else if (*rigid) {
            auto sets = maximal_rigid(common.build());
            if (count_only) {
                std::cout << sets.size() << "\n";
            } else if (format == "json") {
                Json all = Json::array();
                for (const auto& s : sets) all.push_back(to_json(s));
                std::cout << all.dump(2) << "\n";
            } else {
                for (const auto& s : sets) {
                    std::string line;
                    for (const auto& t : s.summands) line += (line.empty() ? "" : " ") + to_label(t);
                    std::cout << line << "\n";
                }
            }
        } else if (*mutate_cmd) {
            auto model = common.build();
            std::vector<IndexTuple> summands;
            std::string token;
            std::istringstream in(set_text);
            while (in >> token) {
                std::istringstream parts(token);
                std::string part;
                while (std::getline(parts, part, ';')) {
                    if (!part.empty()) summands.push_back(parse_tuple(part));
                }
            }
            auto result = mutate(model, make_rigid_set(model, summands), parse_tuple(at));
            std::cout << (result ? to_json(*result).dump(2) : std::string("null")) << "\n";
        } else if (*emit_cmd) {
            EmitSpec spec{parse_emit_format(format == "text" ? "dot" : format), parse_emit_content(content),
                          parse_arrow_policy(arrow_policy)};
            validate(spec);
            std::string text;
            switch (spec.content) {
            case EmitContent::Quiver: {
                auto q = build_quiver(common.d, common.n);
                text = spec.format == EmitFormat::Dot    ? dot_quiver(q)
                       : spec.format == EmitFormat::Tikz ? tikz_quiver(q)
                                                         : to_json(q).dump(2) + "\n";
                break;
            }
            case EmitContent::Category: {
                auto kind = parse_model_kind(common.model);
                if (kind == ModelKind::Cluster && common.range()) {
                    if (spec.format != EmitFormat::Dot) throw std::invalid_argument("windowed cluster view is dot only");
                    text = dot_cluster_window(common.d, common.n, *common.range());
                    break;
                }
                auto model = common.build();
                text = spec.format == EmitFormat::Dot    ? dot_category(model, spec.policy)
                       : spec.format == EmitFormat::Tikz ? tikz_category(model, spec.policy)
                                                         : to_json(model).dump(2) + "\n";
                break;
            }
            case EmitContent::MutationGraph: {
                auto g = mutation_graph(common.build());
                text = spec.format == EmitFormat::Dot    ? dot_mutation_graph(g)
                       : spec.format == EmitFormat::Tikz ? tikz_mutation_graph(g)
                                                         : to_json(g).dump(2) + "\n";
                break;
            }
            case EmitContent::Exangle:
                if (from.empty() || to.empty()) throw std::invalid_argument("exangle content needs --from and --to");
                text = to_json(realize(common.build(), parse_tuple(from), parse_tuple(to))).dump(2) + "\n";
                break;
            case EmitContent::Report:
                text = to_json(run_point(parse_theorem(theorem), common.d, common.n)).dump(2) + "\n";
                break;
            }
            write_output(out_path, text);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return 0;
}
