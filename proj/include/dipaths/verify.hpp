#ifndef DIPATHS_VERIFY_HPP
#define DIPATHS_VERIFY_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "dipaths/coloring.hpp"
#include "dipaths/errors.hpp"
#include "dipaths/io.hpp"
#include "dipaths/oracle.hpp"
#include "dipaths/tree.hpp"

namespace dipaths {

struct VerifyOutcome {
    bool ok = true;
    std::vector<std::string> problems;

    void fail(std::string msg) {
        ok = false;
        problems.push_back(std::move(msg));
    }
};

// Re-check an emitted solution against its instance. Structural properties
// (properness, coverage, disjointness, domination) are always checked;
// optimality is cross-checked against the exhaustive oracles only when the
// instance is small enough for them.
inline VerifyOutcome verify_solution(const Instance& inst, const Solution& sol) {
    VerifyOutcome out;
    DirectedTree tree = inst.tree();
    std::vector<Dipath> paths = inst.paths(tree);
    RootedTree rooted = root_tree(tree, inst.root);
    PathIndex index = index_paths(rooted, paths);
    int p = static_cast<int>(paths.size());
    bool small = p <= 14 && tree.arc_count() <= 18;

    auto check_ids = [&](const std::vector<int>& ids, int limit, const char* what) {
        std::vector<char> seen(std::max(limit, 1), 0);
        for (int id : ids) {
            if (id < 0 || id >= limit) {
                out.fail(std::string(what) + " " + std::to_string(id) + " out of range");
                return false;
            }
            if (seen[id]) {
                out.fail(std::string(what) + " " + std::to_string(id) + " repeated");
                return false;
            }
            seen[id] = 1;
        }
        return true;
    };

    switch (sol.kind) {
        case SolutionKind::color: {
            std::vector<int> color(p, -1);
            for (auto [pid, c] : sol.colors) {
                if (pid < 0 || pid >= p) {
                    out.fail("color record for unknown path " + std::to_string(pid));
                    return out;
                }
                if (color[pid] >= 0) {
                    out.fail("path " + std::to_string(pid) + " colored twice");
                    return out;
                }
                if (c < 0) {
                    out.fail("path " + std::to_string(pid) + " has negative color");
                    return out;
                }
                color[pid] = c;
            }
            for (int i = 0; i < p; ++i)
                if (color[i] < 0) out.fail("path " + std::to_string(i) + " is uncolored");
            if (!out.ok) return out;

            for (int a = 0; a < tree.arc_count(); ++a) {
                const auto& hits = index.by_arc[a];
                for (std::size_t i = 0; i < hits.size(); ++i)
                    for (std::size_t j = i + 1; j < hits.size(); ++j)
                        if (color[hits[i].path] == color[hits[j].path])
                            out.fail("arc " + std::to_string(a) + ": paths " +
                                     std::to_string(hits[i].path) + " and " +
                                     std::to_string(hits[j].path) + " share color " +
                                     std::to_string(color[hits[i].path]));
            }
            std::vector<int> distinct(color);
            std::sort(distinct.begin(), distinct.end());
            distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
            int used = p == 0 ? 0 : static_cast<int>(distinct.size());
            int omega = max_arc_load(index);
            if (sol.declared_omega >= 0 && sol.declared_omega != omega)
                out.fail("declared omega " + std::to_string(sol.declared_omega) +
                         " but the maximum arc load is " + std::to_string(omega));
            if (sol.declared_colors >= 0 && sol.declared_colors != used)
                out.fail("declared " + std::to_string(sol.declared_colors) + " colors but " +
                         std::to_string(used) + " are used");
            if (small && p <= 16) {
                int chi = oracle::exact_chromatic(oracle::build_intersection_graph(tree, paths));
                if (used != chi)
                    out.fail("uses " + std::to_string(used) + " colors, optimum is " +
                             std::to_string(chi));
            }
            break;
        }
        case SolutionKind::multicut: {
            if (!check_ids(sol.picks, p, "picked path") ||
                !check_ids(sol.cuts, tree.arc_count(), "cut arc"))
                return out;
            std::vector<char> used(tree.arc_count(), 0);
            for (int pid : sol.picks)
                for (int a : paths[pid].arcs) {
                    if (used[a])
                        out.fail("picked paths share arc " + std::to_string(a));
                    used[a] = 1;
                }
            std::vector<char> in_cut(tree.arc_count(), 0);
            for (int a : sol.cuts) in_cut[a] = 1;
            for (int i = 0; i < p; ++i) {
                bool hit = false;
                for (int a : paths[i].arcs)
                    if (in_cut[a]) hit = true;
                if (!hit) out.fail("path " + std::to_string(i) + " avoids every cut arc");
            }
            if (sol.picks.size() != sol.cuts.size())
                out.fail("stable set and cut have different sizes");
            if (small) {
                int alpha = oracle::exact_max_stable(oracle::build_intersection_graph(tree, paths));
                std::size_t cut = oracle::exact_min_multicut(tree, paths).size();
                if (sol.picks.size() != static_cast<std::size_t>(alpha))
                    out.fail("stable set has size " + std::to_string(sol.picks.size()) +
                             ", optimum is " + std::to_string(alpha));
                if (sol.cuts.size() != cut)
                    out.fail("cut has size " + std::to_string(sol.cuts.size()) + ", optimum is " +
                             std::to_string(cut));
            }
            break;
        }
        case SolutionKind::kernel: {
            if (inst.pmode == Instance::PriorityMode::none)
                throw Error(ErrorCode::InvalidInstance,
                            "kernel verification needs a priority block in the instance");
            PriorityRelation rel = inst.priorities(paths, index);
            if (!check_ids(sol.keeps, p, "kept path")) return out;
            std::vector<char> kept(p, 0);
            for (int pid : sol.keeps) kept[pid] = 1;
            std::vector<int> arc_owner(tree.arc_count(), -1);
            for (int pid : sol.keeps)
                for (int a : paths[pid].arcs) {
                    if (arc_owner[a] >= 0)
                        out.fail("kept paths share arc " + std::to_string(a));
                    arc_owner[a] = pid;
                }
            for (int q = 0; q < p; ++q) {
                if (kept[q]) continue;
                bool dominated = false;
                for (int a : paths[q].arcs) {
                    int k = arc_owner[a];
                    if (k >= 0 && rel.prefers(a, k, q)) dominated = true;
                }
                if (!dominated)
                    out.fail("path " + std::to_string(q) + " is not dominated by the kernel");
            }
            for (auto [q, a, k] : sol.witnesses) {
                if (q < 0 || q >= p || k < 0 || k >= p || a < 0 || a >= tree.arc_count()) {
                    out.fail("witness record out of range");
                    continue;
                }
                bool a_in_q = std::find(paths[q].arcs.begin(), paths[q].arcs.end(), a) !=
                              paths[q].arcs.end();
                bool a_in_k = std::find(paths[k].arcs.begin(), paths[k].arcs.end(), a) !=
                              paths[k].arcs.end();
                if (kept[q] || !kept[k] || !a_in_q || !a_in_k || !rel.prefers(a, k, q))
                    out.fail("witness for path " + std::to_string(q) + " does not hold");
            }
            break;
        }
    }
    return out;
}

}  // namespace dipaths

#endif
