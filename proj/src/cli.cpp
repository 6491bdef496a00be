#include "muig/cli.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "muig/bubble.hpp"
#include "muig/cliquewidth.hpp"
#include "muig/error.hpp"
#include "muig/gen.hpp"
#include "muig/io.hpp"
#include "muig/maxcut.hpp"

namespace muig {

namespace {

using nlohmann::json;

// A check run by the command failed (exit code 2).
class CheckFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Report {
    std::string subcommand;
    json inputs = json::object();
    json parameters = json::object();
    json result = json::object();
    std::string human;
};

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string describe(const Violation& v) {
    std::string s = "condition " + to_string(v.condition);
    if (v.column) s += " column " + std::to_string(v.column);
    if (v.row) s += " row " + std::to_string(v.row);
    return s + ": " + v.message;
}

// Model JSON, or a .muir representation that is turned into a model first.
UBubbleModel load_model(const std::string& path, bool validate = true) {
    const std::string text = read_file(path);
    UBubbleModel model;
    if (ends_with(path, ".muir")) {
        model = build_model(parse_muir(text));
    } else {
        json doc;
        try {
            doc = json::parse(text);
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what());
        }
        model = model_from_json(doc);
    }
    if (validate) {
        const auto violations = validate_model(model);
        if (!violations.empty()) throw ValidationError("invalid model: " + describe(violations.front()));
    }
    return model;
}

json cut_json(const Cut& cut) { return cut.members; }

std::string join_ids(const std::vector<VertexId>& ids) {
    std::string s;
    for (VertexId v : ids) s += (s.empty() ? "" : " ") + std::to_string(v);
    return s;
}

std::vector<double> parse_weights(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw ValidationError("bad kind weight '" + item + "'");
        }
    }
    if (out.size() != 4) throw ValidationError("--kinds takes four comma-separated weights");
    return out;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Mixed unit interval graphs: bubble models, exact MaxCut, clique-width expressions", "muig"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    bool as_json = false;
    unsigned parallel = 1;
    app.add_flag("--json", as_json, "Print a machine-readable JSON report");
    app.add_option("--parallel", parallel, "Worker threads for border-cut enumeration")->check(CLI::Range(1u, 256u));

    std::string input, output, algo = "dp", method = "columns", kinds;
    std::size_t threshold = 0;
    bool with_cut = false, per_component = false, debug_properties = false, as_model = false;
    GenParams gp;

    auto* c_build = app.add_subcommand("build-model", "Build a bubble model from a .muir representation");
    c_build->add_option("input", input, "Representation (.muir)")->required();
    c_build->add_option("-o,--output", output, "Model JSON output (default: stdout)");
    c_build->add_flag("--per-component", per_component, "Build gap-separated parts separately");
    c_build->add_flag("--debug-properties", debug_properties, "Check construction properties after every step");

    auto* c_maxcut = app.add_subcommand("maxcut", "Maximum cut of a model");
    c_maxcut->add_option("input", input, "Model JSON or .muir")->required();
    c_maxcut->add_option("--algo", algo, "brute, dp or bounded")->check(CLI::IsMember({"brute", "dp", "bounded"}));
    c_maxcut->add_option("--threshold", threshold, "Heavy column threshold (default ceil(sqrt n))");
    c_maxcut->add_flag("--with-cut", with_cut, "Also report a maximum cut");

    auto* c_cwd = app.add_subcommand("cwd", "Build a clique-width expression");
    c_cwd->add_option("input", input, "Model JSON or .muir")->required();
    c_cwd->add_option("--method", method, "columns or groups")->check(CLI::IsMember({"columns", "groups"}));
    c_cwd->add_option("-o,--output", output, "S-expression output (default: stdout)");

    auto* c_eval = app.add_subcommand("eval-expr", "Evaluate an S-expression");
    c_eval->add_option("input", input, "Expression file")->required();

    auto* c_bounds = app.add_subcommand("bounds", "Structural parameters and clique-width upper bounds");
    c_bounds->add_option("input", input, "Model JSON or .muir")->required();

    auto* c_verify = app.add_subcommand("verify", "Validate a model and check the interval round trip");
    c_verify->add_option("input", input, "Model JSON or .muir")->required();

    auto* c_gen = app.add_subcommand("gen", "Random representation");
    c_gen->add_option("--n", gp.n, "Vertex count")->required()->check(CLI::PositiveNumber);
    c_gen->add_option("--seed", gp.seed, "Random seed")->required();
    c_gen->add_option("--grid", gp.grid, "Left endpoints are multiples of 1/grid")->check(CLI::PositiveNumber);
    c_gen->add_option("--kinds", kinds, "Weights of ++,+-,-+,-- (comma separated)");
    c_gen->add_option("--twin-rate", gp.twin_rate, "Probability of copying an earlier interval")
        ->check(CLI::Range(0.0, 1.0));
    c_gen->add_option("--window", gp.window, "Left endpoints lie in [0, window) (bounds the column count)")
        ->check(CLI::NonNegativeNumber);
    c_gen->add_option("-o,--output", output, "Output file (default: stdout)");
    c_gen->add_flag("--model", as_model, "Write the built model JSON instead of the representation");

    auto* c_counter = app.add_subcommand("counterexample", "MaxCut instance refuting the published recurrence");
    c_counter->add_flag("--with-cut", with_cut, "Also report the witness cut");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    const auto started = std::chrono::steady_clock::now();
    Report rep;
    try {
        if (c_build->parsed()) {
            rep.subcommand = "build-model";
            rep.inputs["representation"] = input;
            rep.parameters = {{"per_component", per_component}, {"debug_properties", debug_properties}};
            const Representation r = parse_muir(read_file(input));
            BuildOptions opts;
            opts.per_component = per_component;
            opts.debug_properties = debug_properties;
            const UBubbleModel model = build_model(r, opts);
            if (const auto v = validate_model(model); !v.empty())
                throw CheckFailure("constructed model is invalid: " + describe(v.front()));
            const std::string text = model_to_json(model).dump(2) + "\n";
            rep.result = {{"columns", model.column_count()},
                          {"rows", model.row_count()},
                          {"vertices", model.vertex_count()}};
            if (!output.empty()) {
                write_file(output, text);
                rep.result["output"] = output;
                rep.human = "model with " + std::to_string(model.column_count()) + " columns and " +
                            std::to_string(model.row_count()) + " rows written to " + output + "\n";
            } else {
                rep.result["model"] = model_to_json(model);
                rep.human = text;
            }
        } else if (c_maxcut->parsed()) {
            rep.subcommand = "maxcut";
            rep.inputs["model"] = input;
            rep.parameters = {{"algo", algo}, {"with_cut", with_cut}};
            const UBubbleModel model = load_model(input);
            std::optional<Cut> cut;
            if (algo == "brute") {
                Cut witness;
                rep.result["value"] = maxcut_bruteforce(graph_of_model(model), witness);
                rep.result["threshold"] = nullptr;
                rep.result["parts"] = nullptr;
                if (with_cut) cut = witness;
            } else if (algo == "dp") {
                rep.parameters["threshold"] = threshold ? json(threshold) : json(nullptr);
                MaxCutOptions opts;
                opts.threshold = threshold;
                opts.with_cut = with_cut;
                opts.parallel = parallel;
                MaxCutResult r = maxcut(model, opts);
                rep.result["value"] = r.value;
                rep.result["threshold"] = r.threshold;
                rep.result["parts"] = r.parts;
                cut = std::move(r.cut);
            } else {
                MaxCutResult r = maxcut_bounded_columns(model, with_cut);
                rep.result["value"] = r.value;
                rep.result["threshold"] = nullptr;
                rep.result["parts"] = r.parts;
                cut = std::move(r.cut);
            }
            rep.result["algo"] = algo;
            rep.human = "maxcut " + rep.result["value"].dump() + " (" + algo + ")\n";
            if (cut) {
                const std::size_t size = cut_size(graph_of_model(model), *cut);
                if (static_cast<std::int64_t>(size) != rep.result["value"].get<std::int64_t>())
                    throw CheckFailure("witness cut has size " + std::to_string(size));
                rep.result["cut"] = cut_json(*cut);
                rep.human += "cut " + join_ids(cut->members) + "\n";
            }
        } else if (c_cwd->parsed()) {
            rep.subcommand = "cwd";
            rep.inputs["model"] = input;
            rep.parameters["method"] = method;
            const UBubbleModel model = load_model(input);
            const CwdExpression expr = method == "columns" ? build_expr_columns(model) : build_expr_groups(model);
            const std::size_t bound =
                method == "columns" ? model.column_count() + 3 : group_structure(model).phi + 2;
            const std::size_t width = expr.width();
            if (width > bound) throw CheckFailure("expression width exceeds its bound");
            rep.result = {{"method", method}, {"width", width}, {"bound", bound}, {"nodes", expr.size()}};
            const std::string text = expr.empty() ? std::string() : to_sexpr(expr);
            if (!output.empty()) {
                write_file(output, text);
                rep.result["output"] = output;
                rep.human = "width " + std::to_string(width) + " (bound " + std::to_string(bound) + "), " +
                            std::to_string(expr.size()) + " nodes written to " + output + "\n";
            } else {
                rep.result["expression"] = text;
                rep.human = text;
            }
        } else if (c_eval->parsed()) {
            rep.subcommand = "eval-expr";
            rep.inputs["expression"] = input;
            const EvalResult r = eval_expression(parse_sexpr(read_file(input)));
            json edges = json::array();
            for (const auto& [u, v] : r.graph.edges()) edges.push_back({u, v});
            rep.result = {{"vertices", r.graph.vertices()},
                          {"n", r.graph.n()},
                          {"m", r.graph.m()},
                          {"width", r.width},
                          {"edges", std::move(edges)}};
            rep.human = std::to_string(r.graph.n()) + " vertices, " + std::to_string(r.graph.m()) + " edges, width " +
                        std::to_string(r.width) + "\n";
        } else if (c_bounds->parsed()) {
            rep.subcommand = "bounds";
            rep.inputs["model"] = input;
            const BoundsReport b = cwd_upper_bounds(load_model(input));
            rep.result = {{"k", b.k},
                          {"r", b.r},
                          {"alpha", b.alpha},
                          {"omega", b.omega},
                          {"phi", b.phi},
                          {"bounds",
                           {{"columns", b.columns_bound},
                            {"rows", b.rows_bound},
                            {"alpha", b.alpha_bound},
                            {"groups", b.groups_bound},
                            {"clique", b.clique_bound}}},
                          {"best", b.best}};
            std::ostringstream h;
            h << "k=" << b.k << " r=" << b.r << " alpha=" << b.alpha << " omega=" << b.omega << " phi=" << b.phi << "\n"
              << "cwd <= " << b.best << " (k+3=" << b.columns_bound << ", 2r+2=" << b.rows_bound
              << ", 2alpha+3=" << b.alpha_bound << ", phi+2=" << b.groups_bound << ", omega+1=" << b.clique_bound
              << ")\n";
            rep.human = h.str();
        } else if (c_verify->parsed()) {
            rep.subcommand = "verify";
            rep.inputs["model"] = input;
            const UBubbleModel model = load_model(input, false);
            const auto violations = validate_model(model);
            json list = json::array();
            for (const auto& v : violations)
                list.push_back({{"condition", to_string(v.condition)},
                                {"column", v.column},
                                {"row", v.row},
                                {"message", v.message}});
            bool roundtrip = false;
            if (violations.empty())
                roundtrip = graph_of_representation(model_to_intervals(model)) == graph_of_model(model);
            const bool ok = violations.empty() && roundtrip;
            rep.result = {{"valid", violations.empty()}, {"violations", list}, {"roundtrip", roundtrip}, {"ok", ok}};
            rep.human = ok ? "ok\n" : "FAILED\n";
            for (const auto& v : violations) rep.human += describe(v) + "\n";
            if (violations.empty() && !roundtrip) rep.human += "interval round trip changes the graph\n";
        } else if (c_gen->parsed()) {
            rep.subcommand = "gen";
            if (!kinds.empty()) {
                const auto w = parse_weights(kinds);
                std::copy(w.begin(), w.end(), gp.kind_weights.begin());
            }
            rep.parameters = {{"n", gp.n},          {"seed", gp.seed},   {"grid", gp.grid},
                              {"kinds", gp.kind_weights}, {"twin_rate", gp.twin_rate}, {"window", gp.window},
                              {"model", as_model}};
            const Representation r = random_representation(gp);
            const UBubbleModel model = build_model(r);
            const std::string text = as_model ? model_to_json(model).dump(2) + "\n" : write_muir(r);
            rep.result = {{"intervals", r.intervals.size()},
                          {"columns", model.column_count()},
                          {"rows", model.row_count()}};
            if (!output.empty()) {
                write_file(output, text);
                rep.result["output"] = output;
                rep.human = std::to_string(r.intervals.size()) + " intervals written to " + output + "\n";
            } else {
                rep.result["text"] = text;
                rep.human = text;
            }
        } else if (c_counter->parsed()) {
            rep.subcommand = "counterexample";
            rep.parameters["with_cut"] = with_cut;
            const CounterexampleReport r = counterexample(with_cut);
            rep.result = {{"bruteforce", r.bruteforce},
                          {"dp", r.dp},
                          {"bounded", r.bounded},
                          {"claimed", r.claimed},
                          {"example_cut", cut_json(r.example_cut)},
                          {"example_cut_size", r.example_cut_size}};
            std::ostringstream h;
            h << "brute=" << r.bruteforce << " dp=" << r.dp << " bounded=" << r.bounded << " claimed=" << r.claimed
              << "\n"
              << "example cut {" << join_ids(r.example_cut.members) << "} has size " << r.example_cut_size << "\n";
            if (r.witness) {
                rep.result["cut"] = cut_json(*r.witness);
                h << "dp witness {" << join_ids(r.witness->members) << "}\n";
            }
            rep.human = h.str();
            if (static_cast<std::int64_t>(r.bruteforce) != r.dp) throw CheckFailure("brute force and DP disagree");
        }
    } catch (const PropertyViolation& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const CheckFailure& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }

    const double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    if (as_json) {
        json doc = {{"subcommand", rep.subcommand},
                    {"version", kVersion},
                    {"inputs", rep.inputs},
                    {"parameters", rep.parameters},
                    {"result", rep.result},
                    {"elapsed_ms", elapsed}};
        out << doc.dump(2) << "\n";
    } else {
        out << rep.human;
    }
    if (rep.subcommand == "verify" && !rep.result["ok"].get<bool>()) return 2;
    return 0;
}

} // namespace muig
