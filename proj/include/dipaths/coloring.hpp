#ifndef DIPATHS_COLORING_HPP
#define DIPATHS_COLORING_HPP

#include <utility>
#include <vector>

#include "dipaths/bipartite.hpp"
#include "dipaths/errors.hpp"
#include "dipaths/star.hpp"
#include "dipaths/tree.hpp"

namespace dipaths {

struct ColoringResult {
    std::vector<int> color;  // per path id
    int num_colors = 0;
    int omega = 0;
};

// Maximum arc load: the largest number of dipaths through a single arc. This
// is the clique number of the arc-intersection graph.
inline int max_arc_load(const PathIndex& index) {
    std::size_t best = 0;
    for (const auto& hits : index.by_arc) best = std::max(best, hits.size());
    return static_cast<int>(best);
}

// Color all dipaths with exactly omega colors so that dipaths sharing an arc
// differ. Vertices are visited in BFS order from `start`; at each vertex the
// star's bipartite graph is edge-colored, keeping the colors of the paths
// that were colored at earlier vertices (their edges all hang off the arc
// back to the already-processed neighbor).
inline ColoringResult color_dipaths(const DirectedTree& tree, const std::vector<Dipath>& paths,
                                    int start = 0) {
    if (start < 0 || start >= tree.vertex_count())
        throw Error(ErrorCode::BadVertexId, "start vertex out of range");
    RootedTree rooted = root_tree(tree, start);
    PathIndex index = index_paths(rooted, paths);

    ColoringResult result;
    result.omega = max_arc_load(index);
    result.num_colors = result.omega;
    result.color.assign(paths.size(), -1);
    if (result.omega == 0) return result;

    std::vector<int> bfs = {start};
    {
        std::vector<char> seen(tree.vertex_count(), 0);
        seen[start] = 1;
        for (std::size_t qi = 0; qi < bfs.size(); ++qi)
            for (const IncidentArc& ia : tree.incident(bfs[qi])) {
                int w = tree.other_end(ia.arc, bfs[qi]);
                if (!seen[w]) {
                    seen[w] = 1;
                    bfs.push_back(w);
                }
            }
    }

    std::vector<int> scope;
    std::vector<std::pair<int, int>> precolored;
    for (int v : bfs) {
        if (index.by_vertex[v].empty()) continue;
        scope.clear();
        for (const VertexHit& hit : index.by_vertex[v]) scope.push_back(hit.path);
        BipartiteMultigraph B = build_star_bipartite(tree, v, scope, index);
        precolored.clear();
        for (std::size_t i = 0; i < scope.size(); ++i)
            if (result.color[scope[i]] >= 0)
                precolored.push_back({static_cast<int>(i), result.color[scope[i]]});
        std::vector<int> colors = edge_color_extend(B, result.omega, precolored);
        for (std::size_t i = 0; i < scope.size(); ++i) result.color[scope[i]] = colors[i];
    }

    for (int c : result.color)
        if (c < 0 || c >= result.omega)
            throw Error(ErrorCode::InternalInvariantViolation, "path left uncolored");
    return result;
}

}  // namespace dipaths

#endif
