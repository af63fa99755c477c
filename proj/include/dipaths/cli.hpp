#ifndef DIPATHS_CLI_HPP
#define DIPATHS_CLI_HPP

#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dipaths/coloring.hpp"
#include "dipaths/dot.hpp"
#include "dipaths/errors.hpp"
#include "dipaths/generate.hpp"
#include "dipaths/io.hpp"
#include "dipaths/kernel.hpp"
#include "dipaths/multicut.hpp"
#include "dipaths/verify.hpp"

namespace dipaths::cli {

namespace detail {

inline Instance load_instance(const std::string& file, std::istream& in) {
    if (file == "-") return parse_instance(in);
    std::ifstream f(file);
    if (!f) throw Error(ErrorCode::ParseError, "cannot open '" + file + "'");
    return parse_instance(f);
}

inline Solution load_solution(const std::string& file, std::istream& in) {
    if (file == "-") return parse_solution(in);
    std::ifstream f(file);
    if (!f) throw Error(ErrorCode::ParseError, "cannot open '" + file + "'");
    return parse_solution(f);
}

struct SolveOptions {
    std::string file = "-";
    int root = -1;       // override, -1 keeps the instance root
    std::string format = "plain";
    bool pretty = false;

    bool want_pretty() const { return pretty || format == "pretty"; }
};

inline void add_solver_options(CLI::App* sub, SolveOptions& opt) {
    sub->add_option("file", opt.file, "instance file, or - for stdin");
    sub->add_option("--root", opt.root, "root the passes at this vertex");
    sub->add_option("--format", opt.format, "output format: plain or pretty")
        ->check(CLI::IsMember({"plain", "pretty"}));
    sub->add_flag("--pretty", opt.pretty, "shorthand for --format pretty");
}

inline Solution solve_color(const Instance& inst, int root) {
    DirectedTree tree = inst.tree();
    std::vector<Dipath> paths = inst.paths(tree);
    ColoringResult res = color_dipaths(tree, paths, root);
    Solution sol;
    sol.kind = SolutionKind::color;
    sol.declared_omega = res.omega;
    sol.declared_colors = res.num_colors;
    for (std::size_t i = 0; i < paths.size(); ++i)
        sol.colors.push_back({static_cast<int>(i), res.color[i]});
    return sol;
}

inline Solution solve_multicut(const Instance& inst, int root) {
    DirectedTree tree = inst.tree();
    std::vector<Dipath> paths = inst.paths(tree);
    RootedTree rooted = root_tree(tree, root);
    PathIndex index = index_paths(rooted, paths);
    MulticutCertificate cert = multicut(rooted, index);
    Solution sol;
    sol.kind = SolutionKind::multicut;
    sol.picks = cert.stable_set;
    sol.cuts = cert.cut;
    return sol;
}

inline Solution solve_kernel(const Instance& inst, int root) {
    DirectedTree tree = inst.tree();
    std::vector<Dipath> paths = inst.paths(tree);
    RootedTree rooted = root_tree(tree, root);
    PathIndex index = index_paths(rooted, paths);
    PriorityRelation rel = inst.priorities(paths, index);
    KernelResult res = kernel(rooted, index, rel);
    Solution sol;
    sol.kind = SolutionKind::kernel;
    sol.keeps = res.kernel;
    std::vector<char> kept(paths.size(), 0);
    for (int k : res.kernel) kept[k] = 1;
    for (std::size_t q = 0; q < paths.size(); ++q)
        if (!kept[q])
            sol.witnesses.push_back({static_cast<int>(q), res.witness[q].arc,
                                     res.witness[q].keeper});
    return sol;
}

inline void print_pretty(const Solution& sol, std::ostream& out) {
    switch (sol.kind) {
        case SolutionKind::color:
            out << "path  color\n";
            for (auto [p, c] : sol.colors)
                out << std::left << std::setw(6) << p << c << "\n";
            out << "colors used: " << sol.declared_colors
                << "  (maximum arc load: " << sol.declared_omega << ")\n";
            break;
        case SolutionKind::multicut:
            out << "arc-disjoint dipaths (" << sol.picks.size() << "):";
            for (int p : sol.picks) out << " " << p;
            out << "\nmulticut arcs (" << sol.cuts.size() << "):";
            for (int a : sol.cuts) out << " " << a;
            out << "\n";
            break;
        case SolutionKind::kernel:
            out << "kernel (" << sol.keeps.size() << "):";
            for (int p : sol.keeps) out << " " << p;
            out << "\nexcluded  arc  dominated-by\n";
            for (auto [q, a, k] : sol.witnesses)
                out << std::left << std::setw(10) << q << std::setw(5) << a << k << "\n";
            break;
    }
}

}  // namespace detail

// The whole front end behind a stream interface so tests can drive it
// in-process. Exit codes: 0 success, 1 verification failure, 2 input error.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"coloring, multicut and kernel solvers for dipaths on a directed tree"};
    app.require_subcommand(1);

    detail::SolveOptions color_opt, multicut_opt, kernel_opt;
    CLI::App* color_cmd = app.add_subcommand("color", "minimum coloring of the dipaths");
    detail::add_solver_options(color_cmd, color_opt);
    CLI::App* multicut_cmd =
        app.add_subcommand("multicut", "maximum arc-disjoint dipaths and minimum multicut");
    detail::add_solver_options(multicut_cmd, multicut_opt);
    CLI::App* kernel_cmd =
        app.add_subcommand("kernel", "kernel of the oriented arc-intersection graph");
    detail::add_solver_options(kernel_cmd, kernel_opt);

    std::string verify_instance, verify_solution_file;
    CLI::App* verify_cmd = app.add_subcommand("verify", "re-check an emitted solution");
    verify_cmd->add_option("instance", verify_instance, "instance file, or - for stdin")
        ->required();
    verify_cmd->add_option("solution", verify_solution_file, "solution file, or - for stdin")
        ->required();

    GenConfig gen_cfg;
    std::string gen_shape = "random", gen_priority = "none";
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate a reproducible random instance");
    gen_cmd->add_option("--seed", gen_cfg.seed, "rng seed");
    gen_cmd->add_option("--n", gen_cfg.n, "vertex count");
    gen_cmd->add_option("--p", gen_cfg.p, "dipath count");
    gen_cmd->add_option("--shape", gen_shape, "tree shape")
        ->check(CLI::IsMember({"chain", "star", "random"}));
    gen_cmd->add_option("--priority", gen_priority, "priority block mode")
        ->check(CLI::IsMember({"none", "global", "arcs"}));
    gen_cmd->add_option("--root", gen_cfg.root, "root vertex written into the instance");

    std::string dot_file = "-", dot_solution;
    CLI::App* dot_cmd = app.add_subcommand("export-dot", "render instance (and solution) as DOT");
    dot_cmd->add_option("file", dot_file, "instance file, or - for stdin");
    dot_cmd->add_option("--solution", dot_solution, "solution file to highlight");

    std::vector<const char*> argv;
    argv.push_back("dipaths");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        for (auto [cmd, opt] : {std::pair{color_cmd, &color_opt},
                                std::pair{multicut_cmd, &multicut_opt},
                                std::pair{kernel_cmd, &kernel_opt}}) {
            if (!cmd->parsed()) continue;
            Instance inst = detail::load_instance(opt->file, in);
            int root = opt->root >= 0 ? opt->root : inst.root;
            Solution sol;
            if (cmd == color_cmd)
                sol = detail::solve_color(inst, root);
            else if (cmd == multicut_cmd)
                sol = detail::solve_multicut(inst, root);
            else
                sol = detail::solve_kernel(inst, root);
            if (opt->want_pretty())
                detail::print_pretty(sol, out);
            else
                emit_solution(sol, out);
            return 0;
        }
        if (verify_cmd->parsed()) {
            if (verify_instance == "-" && verify_solution_file == "-")
                throw Error(ErrorCode::ParseError, "only one verify input may come from stdin");
            Instance inst = detail::load_instance(verify_instance, in);
            Solution sol = detail::load_solution(verify_solution_file, in);
            VerifyOutcome res = verify_solution(inst, sol);
            for (const std::string& msg : res.problems) out << "problem: " << msg << "\n";
            out << (res.ok ? "verification OK\n" : "verification FAILED\n");
            return res.ok ? 0 : 1;
        }
        if (gen_cmd->parsed()) {
            gen_cfg.shape = gen_shape == "chain"  ? TreeShape::chain
                            : gen_shape == "star" ? TreeShape::star
                                                  : TreeShape::random_attach;
            gen_cfg.pmode = gen_priority == "global"
                                ? Instance::PriorityMode::global
                                : gen_priority == "arcs" ? Instance::PriorityMode::per_arc
                                                         : Instance::PriorityMode::none;
            emit_instance(generate_instance(gen_cfg), out);
            return 0;
        }
        if (dot_cmd->parsed()) {
            Instance inst = detail::load_instance(dot_file, in);
            if (!dot_solution.empty()) {
                Solution sol = detail::load_solution(dot_solution, in);
                export_dot(inst, &sol, out);
            } else {
                export_dot(inst, nullptr, out);
            }
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace dipaths::cli

#endif
