#include "lbcolor/cli.hpp"

#include <chrono>
#include <ostream>

#include "CLI11.hpp"
#include "lbcolor/codec.hpp"
#include "lbcolor/generators.hpp"
#include "lbcolor/solve.hpp"

namespace lbcolor {

namespace {

struct SolveArgs {
    std::string input;
    std::string solver = "auto";
    std::string objective = "decide";
    bool clique_general = false;
    std::uint64_t seed = 0;
};

struct GenerateArgs {
    std::string source;
    std::string variant;
};

struct CheckArgs {
    std::string input;
    std::string coloring;
};

Objective objective_of(const std::string& name) {
    if (name == "maximize") return Objective::maximize;
    if (name == "minimize") return Objective::minimize;
    return Objective::decide;
}

int fail(std::ostream& out, std::ostream& err, const std::string& message, const std::string& solver = {}) {
    Json doc;
    doc["status"] = "error";
    doc["error"] = message;
    if (!solver.empty()) doc["solver_used"] = solver;
    out << doc.dump(2) << '\n';
    err << "error: " << message << '\n';
    return 2;
}

int run_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
    Instance inst;
    try {
        inst = read_instance_file(args.input);
    } catch (const Error& e) {
        return fail(out, err, e.what());
    }
    const Objective objective = objective_of(args.objective);
    std::string solver = args.solver;
    try {
        if (solver == "auto") solver = auto_solver(inst, objective, args.clique_general);
        const auto start = std::chrono::steady_clock::now();
        const SolveOutcome outcome = run_solver(inst, solver, objective, args.clique_general);
        const auto stop = std::chrono::steady_clock::now();
        Json doc = outcome_to_json(outcome);
        doc["solver_used"] = solver;
        doc["elapsed_ms"] = std::chrono::duration<double, std::milli>(stop - start).count();
        out << doc.dump(2) << '\n';
        return outcome.feasible() ? 0 : 1;
    } catch (const Error& e) {
        return fail(out, err, e.what(), solver);
    }
}

int run_generate(const GenerateArgs& args, std::ostream& out, std::ostream& err) {
    try {
        const SourceProblem src = source_from_json(parse_json_file(args.source));
        out << generated_to_json(generate(src, args.variant)).dump(2) << '\n';
        return 0;
    } catch (const Error& e) {
        return fail(out, err, e.what());
    }
}

int run_check(const CheckArgs& args, std::ostream& out, std::ostream& err) {
    try {
        const Instance inst = read_instance_file(args.input);
        const Coloring col = coloring_from_json(parse_json_file(args.coloring));
        const ValidityReport report = validate_coloring(inst, col);
        Json doc;
        doc["valid"] = report.ok;
        doc["violation"] = to_string(report.kind);
        doc["message"] = report.message;
        out << doc.dump(2) << '\n';
        if (report.ok) return 0;
        err << report.message << '\n';
        return 1;
    } catch (const Error& e) {
        return fail(out, err, e.what());
    }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weighted locally bounded list coloring: solvers, generators and a checker"};
    app.require_subcommand(1);

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "Solve an instance document");
    solve_cmd->add_option("--input", solve.input, "Instance JSON")->required();
    std::vector<std::string> solvers{"auto"};
    for (const auto& name : solver_names()) solvers.push_back(name);
    solve_cmd->add_option("--solver", solve.solver, "Solver name")->check(CLI::IsMember(solvers));
    solve_cmd->add_option("--objective", solve.objective, "decide, maximize or minimize")
        ->check(CLI::IsMember({"decide", "maximize", "minimize"}));
    solve_cmd->add_flag("--clique-general", solve.clique_general,
                        "split-singular: allow lists and weights on the clique side");
    solve_cmd->add_option("--seed", solve.seed, "Seed for randomized tie-breaking (all solvers are deterministic)");

    GenerateArgs generate;
    auto* gen_cmd = app.add_subcommand("generate", "Build an instance from a source problem");
    gen_cmd->add_option("--source", generate.source, "Source problem JSON")->required();
    gen_cmd->add_option("--variant", generate.variant, "Construction variant");

    CheckArgs check;
    auto* check_cmd = app.add_subcommand("check", "Validate a coloring against an instance");
    check_cmd->add_option("--input", check.input, "Instance JSON")->required();
    check_cmd->add_option("--coloring", check.coloring, "Coloring JSON or solve output")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    if (solve_cmd->parsed()) return run_solve(solve, out, err);
    if (gen_cmd->parsed()) return run_generate(generate, out, err);
    return run_check(check, out, err);
}

}  // namespace lbcolor
