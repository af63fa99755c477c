#ifndef DIPATHS_KERNEL_HPP
#define DIPATHS_KERNEL_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "dipaths/bipartite.hpp"
#include "dipaths/errors.hpp"
#include "dipaths/priority.hpp"
#include "dipaths/star.hpp"
#include "dipaths/steps.hpp"
#include "dipaths/tree.hpp"

namespace dipaths {

// Kernel-pass analogue of the bad sets: dipaths through the father arc that
// fail the stable-matching survival test at their star.
struct UninterestingSets {
    std::vector<std::vector<int>> uninteresting;  // sorted path ids per vertex

    bool contains(int v, int path) const {
        return std::binary_search(uninteresting[v].begin(), uninteresting[v].end(), path);
    }
};

struct KernelWitness {
    int arc = -1;
    int keeper = -1;
};

struct KernelResult {
    std::vector<int> kernel;              // path ids, sorted
    std::vector<KernelWitness> witness;   // per path; meaningful for excluded paths
};

// Preference orders at a star: the vertex standing for arc a ranks its edges
// by the priority order on a; dummy endpoints carry their single edge.
inline EdgePreferences star_preferences(const BipartiteMultigraph& B,
                                        const PriorityRelation& rel) {
    EdgePreferences prefs;
    prefs.left_order.resize(B.left_count());
    prefs.right_order.resize(B.right_count());
    for (int i = 0; i < B.left_count(); ++i) {
        prefs.left_order[i] = B.left_incidence(i);
        int a = B.left_arc(i);
        if (a >= 0)
            std::sort(prefs.left_order[i].begin(), prefs.left_order[i].end(), [&](int e1, int e2) {
                return rel.rank_at(a, B.edge(e1).path) < rel.rank_at(a, B.edge(e2).path);
            });
    }
    for (int j = 0; j < B.right_count(); ++j) {
        prefs.right_order[j] = B.right_incidence(j);
        int a = B.right_arc(j);
        if (a >= 0)
            std::sort(prefs.right_order[j].begin(), prefs.right_order[j].end(), [&](int e1, int e2) {
                return rel.rank_at(a, B.edge(e1).path) < rel.rank_at(a, B.edge(e2).path);
            });
    }
    return prefs;
}

// Upward pass: bottom-up, each dipath through the father arc is kept only if
// its edge lies in a stable matching of the star once all other father-arc
// edges are removed. Paths ending at v and paths already uninteresting below
// are settled without a test.
inline UninterestingSets compute_uninteresting_sets(const RootedTree& rooted,
                                                    const PathIndex& index,
                                                    const PriorityRelation& rel) {
    const DirectedTree& tree = rooted.tree;
    UninterestingSets us;
    us.uninteresting.assign(tree.vertex_count(), {});
    std::vector<int> stamp(index.path_count(), -1), ban(index.path_count(), -1);
    std::vector<int> scope;

    for (int v : rooted.order) {
        if (v == rooted.root) continue;
        const auto& qv = index.q_set(rooted, v);
        if (qv.empty()) continue;
        detail::gather_nonbad_below(rooted, index, us.uninteresting, v, stamp, ban, scope);

        BipartiteMultigraph B;
        EdgePreferences prefs;
        std::vector<int> edge_of_path(index.path_count(), -1);
        int pa = rooted.parent_arc[v];
        BipVertex x{Side::left, -1};
        if (!scope.empty()) {
            B = build_star_bipartite(tree, v, scope, index);
            prefs = star_preferences(B, rel);
            for (std::size_t i = 0; i < scope.size(); ++i) edge_of_path[scope[i]] = static_cast<int>(i);
            int xl = B.left_for_arc(pa), xr = B.right_for_arc(pa);
            if (xl >= 0) x = {Side::left, xl};
            if (xr >= 0) x = {Side::right, xr};
        }

        auto& out = us.uninteresting[v];
        for (const ArcHit& hit : qv) {
            steps::add();
            const Dipath& p = index.paths[hit.path];
            int below = detail::vertex_below_on_path(p, hit.pos, v);
            if (below < 0) continue;  // endpoint at v, always survives
            if (us.contains(below, hit.path)) {
                out.push_back(hit.path);
                continue;
            }
            if (!edge_survives_test(B, prefs, x, edge_of_path[hit.path]))
                out.push_back(hit.path);
        }
        std::sort(out.begin(), out.end());
    }
    return us;
}

// Downward pass: stable-match each star over the surviving dipaths. A dipath
// fixed at the father's star keeps its edge (the survival test guarantees
// every stable matching here contains it); all other non-uninteresting
// father-arc edges are dropped. Uninteresting edges stay in the graph: no
// stable matching picks them, and their blocking edges provide witnesses.
inline KernelResult kernel(const RootedTree& rooted, const PathIndex& index,
                           const PriorityRelation& rel, const UninterestingSets& us) {
    const DirectedTree& tree = rooted.tree;
    KernelResult result;
    result.witness.assign(index.path_count(), {});
    std::vector<char> fixed(index.path_count(), 0);
    std::vector<int> stamp(index.path_count(), -1), ban(index.path_count(), -1);
    std::vector<int> qstamp(index.path_count(), -1), qpos(index.path_count(), -1);
    std::vector<int> scope;

    for (auto it = rooted.order.rbegin(); it != rooted.order.rend(); ++it) {
        int v = *it;
        detail::gather_nonbad_below(rooted, index, us.uninteresting, v, stamp, ban, scope);
        int pa = rooted.parent_arc[v];
        for (const ArcHit& hit : index.q_set(rooted, v)) {
            steps::add();
            qstamp[hit.path] = v;
            qpos[hit.path] = hit.pos;
            if (stamp[hit.path] != v) {
                stamp[hit.path] = v;
                scope.push_back(hit.path);
            }
        }
        if (scope.empty()) continue;

        BipartiteMultigraph B = build_star_bipartite(tree, v, scope, index);
        EdgePreferences prefs = star_preferences(B, rel);
        int f_edge = -1;
        for (std::size_t i = 0; i < scope.size(); ++i) {
            if (!fixed[scope[i]]) continue;
            if (f_edge >= 0)
                throw Error(ErrorCode::InternalInvariantViolation, "two fixed dipaths in one star");
            f_edge = static_cast<int>(i);
        }

        // Father-arc edges: the fixed one stays, the edges that failed the
        // survival test right here stay dead in matchings but present (the
        // blocking structure wants them); everything else goes, including
        // paths already uninteresting further down.
        std::vector<char> alive(B.edge_count(), 1);
        int xl = pa >= 0 ? B.left_for_arc(pa) : -1;
        int xr = pa >= 0 ? B.right_for_arc(pa) : -1;
        bool has_x = xl >= 0 || xr >= 0;
        BipVertex x = xl >= 0 ? BipVertex{Side::left, xl} : BipVertex{Side::right, xr};
        if (has_x)
            for (int e : B.incidence(x)) {
                if (e == f_edge) continue;
                int pid = B.edge(e).path;
                if (!us.contains(v, pid)) {
                    alive[e] = 0;
                    continue;
                }
                if (qstamp[pid] != v)
                    throw Error(ErrorCode::InternalInvariantViolation,
                                "father-arc edge without a Q_v hit");
                int below = detail::vertex_below_on_path(index.paths[pid], qpos[pid], v);
                if (below >= 0 && us.contains(below, pid)) alive[e] = 0;
            }
        if (f_edge >= 0 && (!has_x || !B.incident(f_edge, x) || us.contains(v, scope[f_edge])))
            throw Error(ErrorCode::InternalInvariantViolation,
                        "fixed dipath must survive through the father arc");

        Matching M = stable_matching(B, prefs, &alive);
        if (f_edge >= 0 && !M.contains(f_edge))
            throw Error(ErrorCode::InternalInvariantViolation,
                        "stable matching dropped the fixed dipath");
        for (int e : M.edges) {
            if (has_x && B.incident(e, x) && e != f_edge)
                throw Error(ErrorCode::InternalInvariantViolation,
                            "stable matching picked a father-arc edge it must avoid");
            fixed[B.edge(e).path] = 1;
        }

        // Witnesses: an eligible edge left unmatched here stays out of the
        // kernel for good; its blocking edge names the dominating dipath.
        for (int e = 0; e < B.edge_count(); ++e) {
            if (!alive[e] || M.contains(e)) continue;
            int pid = B.edge(e).path;
            if (fixed[pid] || result.witness[pid].arc >= 0) continue;
            KernelWitness w;
            for (Side s : {Side::left, Side::right}) {
                BipVertex z = B.endpoint(e, s);
                int me = s == Side::left ? M.left_match[z.index] : M.right_match[z.index];
                int a = B.arc_of(z);
                if (me < 0 || a < 0) continue;
                if (rel.prefers(a, B.edge(me).path, pid)) {
                    w = {a, B.edge(me).path};
                    break;
                }
            }
            if (w.arc < 0)
                throw Error(ErrorCode::InternalInvariantViolation,
                            "unmatched eligible edge has no blocking edge");
            result.witness[pid] = w;
        }
    }

    for (int p = 0; p < index.path_count(); ++p)
        if (fixed[p]) result.kernel.push_back(p);

    std::vector<char> used(tree.arc_count(), 0);
    for (int p : result.kernel)
        for (int a : index.paths[p].arcs) {
            if (used[a])
                throw Error(ErrorCode::InternalInvariantViolation, "kernel dipaths share an arc");
            used[a] = 1;
        }
    for (int p = 0; p < index.path_count(); ++p) {
        if (fixed[p]) continue;
        const KernelWitness& w = result.witness[p];
        if (w.arc < 0 || !fixed[w.keeper] || !rel.prefers(w.arc, w.keeper, p))
            throw Error(ErrorCode::InternalInvariantViolation,
                        "excluded dipath lacks a dominating witness");
    }
    return result;
}

inline KernelResult kernel(const RootedTree& rooted, const PathIndex& index,
                           const PriorityRelation& rel) {
    return kernel(rooted, index, rel, compute_uninteresting_sets(rooted, index, rel));
}

}  // namespace dipaths

#endif
