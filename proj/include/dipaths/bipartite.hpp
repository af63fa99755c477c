#ifndef DIPATHS_BIPARTITE_HPP
#define DIPATHS_BIPARTITE_HPP

#include <algorithm>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dipaths/errors.hpp"
#include "dipaths/steps.hpp"

namespace dipaths {

enum class Side { left, right };

struct BipVertex {
    Side side;
    int index;

    bool operator==(const BipVertex& o) const { return side == o.side && index == o.index; }
};

struct BipEdge {
    int left;
    int right;
    int path;  // external tag (dipath id at a star), -1 when unused
};

// A bipartite multigraph. Vertices may carry an arc key (>= 0) tying them to
// a tree arc at a star; keyless vertices are the dummy endpoints of paths
// that start or end at the star center. Parallel edges are allowed.
class BipartiteMultigraph {
public:
    int add_left(int arc_key = -1) {
        left_arc_.push_back(arc_key);
        left_inc_.emplace_back();
        if (arc_key >= 0) arc_to_left_[arc_key] = static_cast<int>(left_arc_.size()) - 1;
        return static_cast<int>(left_arc_.size()) - 1;
    }

    int add_right(int arc_key = -1) {
        right_arc_.push_back(arc_key);
        right_inc_.emplace_back();
        if (arc_key >= 0) arc_to_right_[arc_key] = static_cast<int>(right_arc_.size()) - 1;
        return static_cast<int>(right_arc_.size()) - 1;
    }

    int add_edge(int l, int r, int path = -1) {
        int e = static_cast<int>(edges_.size());
        edges_.push_back({l, r, path});
        left_inc_[l].push_back(e);
        right_inc_[r].push_back(e);
        return e;
    }

    int left_count() const { return static_cast<int>(left_arc_.size()); }
    int right_count() const { return static_cast<int>(right_arc_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const BipEdge& edge(int e) const { return edges_[e]; }
    const std::vector<BipEdge>& edges() const { return edges_; }

    int left_arc(int i) const { return left_arc_[i]; }
    int right_arc(int j) const { return right_arc_[j]; }
    int arc_of(BipVertex v) const {
        return v.side == Side::left ? left_arc_[v.index] : right_arc_[v.index];
    }

    const std::vector<int>& left_incidence(int i) const { return left_inc_[i]; }
    const std::vector<int>& right_incidence(int j) const { return right_inc_[j]; }
    const std::vector<int>& incidence(BipVertex v) const {
        return v.side == Side::left ? left_inc_[v.index] : right_inc_[v.index];
    }

    int left_for_arc(int a) const {
        auto it = arc_to_left_.find(a);
        return it == arc_to_left_.end() ? -1 : it->second;
    }
    int right_for_arc(int a) const {
        auto it = arc_to_right_.find(a);
        return it == arc_to_right_.end() ? -1 : it->second;
    }
    // The star vertex standing for arc a, on whichever side it lives.
    BipVertex vertex_for_arc(int a) const {
        int i = left_for_arc(a);
        if (i >= 0) return {Side::left, i};
        int j = right_for_arc(a);
        if (j >= 0) return {Side::right, j};
        throw Error(ErrorCode::EdgeNotInGraph, "no vertex for arc " + std::to_string(a));
    }

    int degree(BipVertex v) const { return static_cast<int>(incidence(v).size()); }

    int max_degree() const {
        int d = 0;
        for (const auto& inc : left_inc_) d = std::max(d, static_cast<int>(inc.size()));
        for (const auto& inc : right_inc_) d = std::max(d, static_cast<int>(inc.size()));
        return d;
    }

    bool incident(int e, BipVertex v) const {
        const BipEdge& ed = edges_[e];
        return v.side == Side::left ? ed.left == v.index : ed.right == v.index;
    }

    BipVertex endpoint(int e, Side s) const {
        return s == Side::left ? BipVertex{Side::left, edges_[e].left}
                               : BipVertex{Side::right, edges_[e].right};
    }

    BipVertex other_endpoint(int e, BipVertex v) const {
        return v.side == Side::left ? BipVertex{Side::right, edges_[e].right}
                                    : BipVertex{Side::left, edges_[e].left};
    }

private:
    std::vector<int> left_arc_, right_arc_;
    std::vector<std::vector<int>> left_inc_, right_inc_;
    std::vector<BipEdge> edges_;
    std::unordered_map<int, int> arc_to_left_, arc_to_right_;
};

inline bool edge_alive(const std::vector<char>* alive, int e) {
    return alive == nullptr || (*alive)[e] != 0;
}

struct Matching {
    std::vector<int> edges;       // ascending edge ids
    std::vector<int> left_match;  // matched edge id per left vertex, -1 if exposed
    std::vector<int> right_match;

    int size() const { return static_cast<int>(edges.size()); }
    bool contains(int e) const { return std::binary_search(edges.begin(), edges.end(), e); }
};

namespace detail {

// Kuhn's augmenting-path matching over the alive subgraph, skipping banned
// vertices. Left vertices are tried in ascending order and adjacency lists in
// edge-id order, so results are deterministic.
inline Matching kuhn_matching(const BipartiteMultigraph& B, const std::vector<char>* alive,
                              int banned_left, int banned_right) {
    Matching m;
    m.left_match.assign(B.left_count(), -1);
    m.right_match.assign(B.right_count(), -1);
    std::vector<int> seen(B.right_count(), -1);
    int phase = 0;

    // Iterative DFS would obscure the augmenting structure; depth is bounded
    // by the matching size.
    auto augment = [&](auto&& self, int u) -> bool {
        for (int e : B.left_incidence(u)) {
            steps::add();
            if (!edge_alive(alive, e)) continue;
            int w = B.edge(e).right;
            if (w == banned_right || seen[w] == phase) continue;
            seen[w] = phase;
            if (m.right_match[w] == -1) {
                m.left_match[u] = e;
                m.right_match[w] = e;
                return true;
            }
            int u2 = B.edge(m.right_match[w]).left;
            if (self(self, u2)) {
                m.left_match[u] = e;
                m.right_match[w] = e;
                return true;
            }
        }
        return false;
    };

    for (int u = 0; u < B.left_count(); ++u) {
        if (u == banned_left) continue;
        ++phase;
        augment(augment, u);
    }
    for (int u = 0; u < B.left_count(); ++u)
        if (m.left_match[u] >= 0) m.edges.push_back(m.left_match[u]);
    std::sort(m.edges.begin(), m.edges.end());
    return m;
}

}  // namespace detail

// Maximum matching of the alive subgraph. With `forced_edge` given, returns a
// matching that contains it and is maximum among those (both endpoints of the
// forced edge are removed, the rest is matched, the edge is re-added).
inline Matching max_matching(const BipartiteMultigraph& B, int forced_edge = -1,
                             const std::vector<char>* alive = nullptr) {
    if (forced_edge < 0) return detail::kuhn_matching(B, alive, -1, -1);
    if (forced_edge >= B.edge_count() || !edge_alive(alive, forced_edge))
        throw Error(ErrorCode::EdgeNotInGraph, "forced edge " + std::to_string(forced_edge));
    const BipEdge& f = B.edge(forced_edge);
    Matching m = detail::kuhn_matching(B, alive, f.left, f.right);
    m.left_match[f.left] = forced_edge;
    m.right_match[f.right] = forced_edge;
    m.edges.insert(std::lower_bound(m.edges.begin(), m.edges.end(), forced_edge), forced_edge);
    return m;
}

// For each vertex, whether some maximum matching leaves it exposed. A vertex
// is avoidable iff it is exposed by M or an alternating path from an exposed
// vertex of its own side reaches it.
inline std::pair<std::vector<char>, std::vector<char>> avoidable_vertices(
    const BipartiteMultigraph& B, const Matching& M, const std::vector<char>* alive = nullptr) {
    std::vector<char> left_avoid(B.left_count(), 0), right_avoid(B.right_count(), 0);

    // Exposed lefts, walking non-matching edges left->right and matching
    // edges right->left: every left vertex reached can be freed.
    {
        std::vector<int> queue;
        std::vector<char> seen_r(B.right_count(), 0);
        for (int u = 0; u < B.left_count(); ++u)
            if (M.left_match[u] == -1) {
                left_avoid[u] = 1;
                queue.push_back(u);
            }
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (int e : B.left_incidence(u)) {
                steps::add();
                if (!edge_alive(alive, e) || e == M.left_match[u]) continue;
                int w = B.edge(e).right;
                if (seen_r[w]) continue;
                seen_r[w] = 1;
                int me = M.right_match[w];
                if (me >= 0 && !left_avoid[B.edge(me).left]) {
                    left_avoid[B.edge(me).left] = 1;
                    queue.push_back(B.edge(me).left);
                }
            }
        }
    }
    {
        std::vector<int> queue;
        std::vector<char> seen_l(B.left_count(), 0);
        for (int w = 0; w < B.right_count(); ++w)
            if (M.right_match[w] == -1) {
                right_avoid[w] = 1;
                queue.push_back(w);
            }
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int w = queue[qi];
            for (int e : B.right_incidence(w)) {
                steps::add();
                if (!edge_alive(alive, e) || e == M.right_match[w]) continue;
                int u = B.edge(e).left;
                if (seen_l[u]) continue;
                seen_l[u] = 1;
                int me = M.left_match[u];
                if (me >= 0 && !right_avoid[B.edge(me).right]) {
                    right_avoid[B.edge(me).right] = 1;
                    queue.push_back(B.edge(me).right);
                }
            }
        }
    }
    return {std::move(left_avoid), std::move(right_avoid)};
}

// Whether some maximum matching of the alive subgraph uses edge e. M must be
// maximum. Decided on the matching-oriented digraph: e is usable iff either
// endpoint can be freed by an alternating path, or e closes an alternating
// cycle.
inline bool edge_in_some_max_matching(const BipartiteMultigraph& B, const Matching& M, int e,
                                      const std::vector<char>* alive = nullptr) {
    if (e < 0 || e >= B.edge_count() || !edge_alive(alive, e))
        throw Error(ErrorCode::EdgeNotInGraph, "edge " + std::to_string(e));
    if (M.contains(e)) return true;
    int u = B.edge(e).left, w = B.edge(e).right;
    if (M.left_match[u] == -1 || M.right_match[w] == -1) return true;

    auto [left_avoid, right_avoid] = avoidable_vertices(B, M, alive);
    if (left_avoid[u] || right_avoid[w]) return true;

    // Alternating cycle: directed path w ~> u, matching edges right->left.
    std::vector<char> seen_l(B.left_count(), 0), seen_r(B.right_count(), 0);
    std::vector<int> queue;
    seen_r[w] = 1;
    queue.push_back(B.edge(M.right_match[w]).left);
    seen_l[queue.back()] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int u2 = queue[qi];
        if (u2 == u) return true;
        for (int e2 : B.left_incidence(u2)) {
            steps::add();
            if (!edge_alive(alive, e2) || e2 == M.left_match[u2]) continue;
            int w2 = B.edge(e2).right;
            if (seen_r[w2]) continue;
            seen_r[w2] = 1;
            int me = M.right_match[w2];
            if (me >= 0 && !seen_l[B.edge(me).left]) {
                seen_l[B.edge(me).left] = 1;
                queue.push_back(B.edge(me).left);
            }
        }
    }
    return seen_l[u];
}

struct VertexCover {
    std::vector<BipVertex> members;

    int size() const { return static_cast<int>(members.size()); }
    bool contains(BipVertex v) const {
        for (const BipVertex& m : members)
            if (m == v) return true;
        return false;
    }
};

namespace detail {

// Alternating reachability from the exposed vertices of side `from`, with an
// optional extra seed on the opposite side (stands in for the virtual vertex
// the anchored cover construction attaches to the anchor).
inline std::pair<std::vector<char>, std::vector<char>> alternating_reach(
    const BipartiteMultigraph& B, const Matching& M, const std::vector<char>* alive, Side from,
    int extra_seed_opposite = -1) {
    std::vector<char> vis_l(B.left_count(), 0), vis_r(B.right_count(), 0);
    std::vector<BipVertex> queue;
    if (from == Side::left) {
        for (int u = 0; u < B.left_count(); ++u)
            if (M.left_match[u] == -1) {
                vis_l[u] = 1;
                queue.push_back({Side::left, u});
            }
        if (extra_seed_opposite >= 0 && !vis_r[extra_seed_opposite]) {
            vis_r[extra_seed_opposite] = 1;
            queue.push_back({Side::right, extra_seed_opposite});
        }
    } else {
        for (int w = 0; w < B.right_count(); ++w)
            if (M.right_match[w] == -1) {
                vis_r[w] = 1;
                queue.push_back({Side::right, w});
            }
        if (extra_seed_opposite >= 0 && !vis_l[extra_seed_opposite]) {
            vis_l[extra_seed_opposite] = 1;
            queue.push_back({Side::left, extra_seed_opposite});
        }
    }
    // From the `from` side move along non-matching edges; from the other side
    // move along the matching edge only.
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        BipVertex v = queue[qi];
        if (v.side == from) {
            int mine = v.side == Side::left ? M.left_match[v.index] : M.right_match[v.index];
            for (int e : B.incidence(v)) {
                steps::add();
                if (!edge_alive(alive, e) || e == mine) continue;
                BipVertex o = B.other_endpoint(e, v);
                auto& vis = o.side == Side::left ? vis_l : vis_r;
                if (!vis[o.index]) {
                    vis[o.index] = 1;
                    queue.push_back(o);
                }
            }
        } else {
            int me = v.side == Side::left ? M.left_match[v.index] : M.right_match[v.index];
            if (me >= 0) {
                BipVertex o = B.other_endpoint(me, v);
                auto& vis = o.side == Side::left ? vis_l : vis_r;
                if (!vis[o.index]) {
                    vis[o.index] = 1;
                    queue.push_back(o);
                }
            }
        }
    }
    return {std::move(vis_l), std::move(vis_r)};
}

inline VertexCover konig_cover(const BipartiteMultigraph& B, const Matching& M,
                               const std::vector<char>* alive, Side u_side,
                               int extra_seed_opposite) {
    auto [vis_l, vis_r] = alternating_reach(B, M, alive, u_side, extra_seed_opposite);
    VertexCover cover;
    // C = (U minus reached) + (W intersect reached), U being the `u_side`.
    if (u_side == Side::left) {
        for (int u = 0; u < B.left_count(); ++u)
            if (!vis_l[u] && M.left_match[u] >= 0) cover.members.push_back({Side::left, u});
        for (int w = 0; w < B.right_count(); ++w)
            if (vis_r[w]) cover.members.push_back({Side::right, w});
    } else {
        for (int w = 0; w < B.right_count(); ++w)
            if (!vis_r[w] && M.right_match[w] >= 0) cover.members.push_back({Side::right, w});
        for (int u = 0; u < B.left_count(); ++u)
            if (vis_l[u]) cover.members.push_back({Side::left, u});
    }
    return cover;
}

}  // namespace detail

// Plain Konig minimum vertex cover built from a maximum matching M of the
// alive subgraph. |C| = |M|.
inline VertexCover min_vertex_cover(const BipartiteMultigraph& B, const Matching& M,
                                    const std::vector<char>* alive = nullptr) {
    return detail::konig_cover(B, M, alive, Side::left, -1);
}

// Minimum vertex cover that (i) contains the anchor x and (ii) contains the
// other endpoint of every x-incident edge lying in no maximum matching.
// Requires x to be covered by every maximum matching; M must be maximum.
inline VertexCover min_cover_with_anchor(const BipartiteMultigraph& B, const Matching& M,
                                         BipVertex x, const std::vector<char>* alive = nullptr) {
    int banned_l = x.side == Side::left ? x.index : -1;
    int banned_r = x.side == Side::right ? x.index : -1;
    Matching without = detail::kuhn_matching(B, alive, banned_l, banned_r);
    if (without.size() != M.size() - 1)
        throw Error(ErrorCode::AnchorNotInEveryMaxMatching,
                    "anchor is avoidable, the cover construction does not apply");
    // Seeding x on the W side plays the role of the virtual exposed neighbor:
    // it makes x reachable exactly as the augmentation would.
    Side u_side = x.side == Side::left ? Side::right : Side::left;
    return detail::konig_cover(B, M, alive, u_side, x.index);
}

// Strict per-vertex orders over incident edges, best first.
struct EdgePreferences {
    std::vector<std::vector<int>> left_order;
    std::vector<std::vector<int>> right_order;

    const std::vector<int>& order(BipVertex v) const {
        return v.side == Side::left ? left_order[v.index] : right_order[v.index];
    }
};

namespace detail {

inline void fill_ranks(const BipartiteMultigraph& B, const std::vector<std::vector<int>>& orders,
                       std::vector<int>& rank) {
    rank.assign(B.edge_count(), -1);
    for (const auto& list : orders)
        for (std::size_t k = 0; k < list.size(); ++k) {
            rank[list[k]] = static_cast<int>(k);
            steps::add();
        }
}

}  // namespace detail

// Deferred acceptance over the alive subgraph. Proposers run through their
// preference lists best-first; responders keep the best offer seen so far.
inline Matching stable_matching(const BipartiteMultigraph& B, const EdgePreferences& prefs,
                                const std::vector<char>* alive = nullptr,
                                Side proposers = Side::left) {
    int np = proposers == Side::left ? B.left_count() : B.right_count();
    int nr = proposers == Side::left ? B.right_count() : B.left_count();
    const auto& prop_orders = proposers == Side::left ? prefs.left_order : prefs.right_order;
    std::vector<int> resp_rank;
    detail::fill_ranks(B, proposers == Side::left ? prefs.right_order : prefs.left_order,
                       resp_rank);

    std::vector<int> held(nr, -1);
    std::vector<int> next(np, 0);
    std::vector<int> queue(np);
    for (int i = 0; i < np; ++i) queue[i] = i;

    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int i = queue[qi];
        while (next[i] < static_cast<int>(prop_orders[i].size())) {
            int e = prop_orders[i][next[i]];
            steps::add();
            if (!edge_alive(alive, e)) {
                ++next[i];
                continue;
            }
            int j = proposers == Side::left ? B.edge(e).right : B.edge(e).left;
            if (held[j] == -1) {
                held[j] = e;
                break;
            }
            if (resp_rank[e] < resp_rank[held[j]]) {
                int displaced = held[j];
                held[j] = e;
                int di = proposers == Side::left ? B.edge(displaced).left : B.edge(displaced).right;
                ++next[di];
                queue.push_back(di);
                break;
            }
            ++next[i];
        }
    }

    Matching m;
    m.left_match.assign(B.left_count(), -1);
    m.right_match.assign(B.right_count(), -1);
    for (int j = 0; j < nr; ++j)
        if (held[j] >= 0) {
            int e = held[j];
            m.edges.push_back(e);
            m.left_match[B.edge(e).left] = e;
            m.right_match[B.edge(e).right] = e;
        }
    std::sort(m.edges.begin(), m.edges.end());
    return m;
}

// The blocking-edge test: M is stable iff every alive non-matching edge e has
// a matched edge f at a shared vertex v with f preferred at v.
inline bool is_stable(const BipartiteMultigraph& B, const EdgePreferences& prefs,
                      const Matching& M, const std::vector<char>* alive = nullptr) {
    std::vector<int> lrank, rrank;
    detail::fill_ranks(B, prefs.left_order, lrank);
    detail::fill_ranks(B, prefs.right_order, rrank);
    for (int e = 0; e < B.edge_count(); ++e) {
        steps::add();
        if (!edge_alive(alive, e) || M.contains(e)) continue;
        int u = B.edge(e).left, w = B.edge(e).right;
        int fu = M.left_match[u], fw = M.right_match[w];
        bool blocked = (fu >= 0 && lrank[fu] < lrank[e]) || (fw >= 0 && rrank[fw] < rrank[e]);
        if (!blocked) return false;
    }
    return true;
}

// Whether e belongs to some stable matching of (B minus delta(u)) plus {e}.
// One run suffices: all stable matchings of that graph cover the same vertex
// set, and e is the only edge left at u.
inline bool edge_survives_test(const BipartiteMultigraph& B, const EdgePreferences& prefs,
                               BipVertex u, int e) {
    if (e < 0 || e >= B.edge_count() || !B.incident(e, u))
        throw Error(ErrorCode::EdgeNotIncident,
                    "edge " + std::to_string(e) + " is not incident to the chosen vertex");
    std::vector<char> alive(B.edge_count(), 1);
    for (int de : B.incidence(u)) alive[de] = 0;
    alive[e] = 1;
    Matching m = stable_matching(B, prefs, &alive);
    return m.contains(e);
}

// Proper edge coloring with at most palette_size colors, keeping the colors
// of the precolored edges (which must all hang off one common vertex and be
// pairwise distinct). A fresh coloring is built with the classic two-color
// chain exchange, then the palette is permuted onto the precolored targets.
inline std::vector<int> edge_color_extend(const BipartiteMultigraph& B, int palette_size,
                                          const std::vector<std::pair<int, int>>& precolored) {
    int E = B.edge_count();
    int delta = B.max_degree();
    if (palette_size < delta)
        throw Error(ErrorCode::PaletteTooSmall, "palette " + std::to_string(palette_size) +
                                                    " below max degree " + std::to_string(delta));
    std::vector<int> target(E, -1);
    std::vector<char> target_used(palette_size, 0);
    for (auto [e, c] : precolored) {
        if (e < 0 || e >= E) throw Error(ErrorCode::EdgeNotInGraph, "precolored edge " + std::to_string(e));
        if (c < 0 || c >= palette_size)
            throw Error(ErrorCode::PrecoloringConflict, "precolored color out of palette");
        if (target[e] >= 0) throw Error(ErrorCode::PrecoloringConflict, "edge precolored twice");
        if (target_used[c]) throw Error(ErrorCode::PrecoloringConflict, "color used twice");
        target[e] = c;
        target_used[c] = 1;
    }
    if (precolored.size() > 1) {
        BipVertex cand[2] = {B.endpoint(precolored[0].first, Side::left),
                             B.endpoint(precolored[0].first, Side::right)};
        bool shared = false;
        for (BipVertex v : cand) {
            bool all = true;
            for (auto [e, c] : precolored)
                if (!B.incident(e, v)) {
                    all = false;
                    break;
                }
            if (all) shared = true;
        }
        if (!shared)
            throw Error(ErrorCode::PrecoloringNotStarShaped,
                        "precolored edges do not share a vertex");
    }
    if (E == 0) return {};

    // Vertices of degree <= 1 never constrain a color choice; only the rest
    // get lookup tables and free lists, over the local palette 0..delta-1.
    int nl = B.left_count(), nr = B.right_count();
    std::vector<int> cid(nl + nr, -1);
    int nc = 0;
    for (int u = 0; u < nl; ++u)
        if (B.left_incidence(u).size() > 1) cid[u] = nc++;
    for (int w = 0; w < nr; ++w)
        if (B.right_incidence(w).size() > 1) cid[nl + w] = nc++;

    std::vector<int> color_edge(static_cast<std::size_t>(nc) * delta, -1);
    std::vector<int> nxt(static_cast<std::size_t>(nc) * delta, -1);
    std::vector<int> prv(static_cast<std::size_t>(nc) * delta, -1);
    std::vector<int> head(nc, -1);
    for (int z = 0; z < nc; ++z) {
        std::size_t base = static_cast<std::size_t>(z) * delta;
        head[z] = 0;
        for (int c = 0; c < delta; ++c) {
            nxt[base + c] = c + 1 < delta ? c + 1 : -1;
            prv[base + c] = c - 1;
            steps::add();
        }
    }

    auto take_color = [&](int z, int c, int e) {
        std::size_t base = static_cast<std::size_t>(z) * delta;
        color_edge[base + c] = e;
        if (prv[base + c] >= 0)
            nxt[base + prv[base + c]] = nxt[base + c];
        else
            head[z] = nxt[base + c];
        if (nxt[base + c] >= 0) prv[base + nxt[base + c]] = prv[base + c];
    };
    auto free_color = [&](int z, int c) {
        std::size_t base = static_cast<std::size_t>(z) * delta;
        color_edge[base + c] = -1;
        nxt[base + c] = head[z];
        prv[base + c] = -1;
        if (head[z] >= 0) prv[base + head[z]] = c;
        head[z] = c;
    };

    std::vector<int> fresh(E, -1);
    auto cid_of = [&](BipVertex v) {
        return cid[v.side == Side::left ? v.index : nl + v.index];
    };
    auto assign = [&](int e, int c) {
        fresh[e] = c;
        int zl = cid_of(B.endpoint(e, Side::left)), zr = cid_of(B.endpoint(e, Side::right));
        if (zl >= 0) take_color(zl, c, e);
        if (zr >= 0) take_color(zr, c, e);
    };

    std::vector<int> chain;
    for (int e = 0; e < E; ++e) {
        steps::add();
        int zx = cid_of(B.endpoint(e, Side::left));
        int zy = cid_of(B.endpoint(e, Side::right));
        if (zx < 0 && zy < 0) {
            assign(e, 0);
            continue;
        }
        if (zx < 0 || zy < 0) {
            assign(e, head[zx < 0 ? zy : zx]);
            continue;
        }
        int alpha = head[zx];
        if (color_edge[static_cast<std::size_t>(zy) * delta + alpha] == -1) {
            assign(e, alpha);
            continue;
        }
        int beta = head[zy];
        // Flip the alpha/beta chain starting at y; it cannot reach x, so
        // alpha becomes free at y while staying free at x.
        chain.clear();
        BipVertex cur = B.endpoint(e, Side::right);
        int want = alpha;
        while (true) {
            int z = cid_of(cur);
            if (z < 0) break;
            int ce = color_edge[static_cast<std::size_t>(z) * delta + want];
            if (ce < 0) break;
            chain.push_back(ce);
            cur = B.other_endpoint(ce, cur);
            want = want == alpha ? beta : alpha;
            steps::add();
        }
        for (int ce : chain) {
            int zl = cid_of(B.endpoint(ce, Side::left)), zr = cid_of(B.endpoint(ce, Side::right));
            if (zl >= 0) free_color(zl, fresh[ce]);
            if (zr >= 0) free_color(zr, fresh[ce]);
        }
        for (int ce : chain) {
            fresh[ce] = fresh[ce] == alpha ? beta : alpha;
            int zl = cid_of(B.endpoint(ce, Side::left)), zr = cid_of(B.endpoint(ce, Side::right));
            if (zl >= 0) take_color(zl, fresh[ce], ce);
            if (zr >= 0) take_color(zr, fresh[ce], ce);
            steps::add();
        }
        assign(e, alpha);
    }

    // Relabel the fresh colors onto the requested palette: precolored edges
    // pin their own images, the rest take the unused colors in order.
    std::vector<int> perm(delta, -1);
    for (auto [e, c] : precolored) {
        if (perm[fresh[e]] >= 0 && perm[fresh[e]] != c)
            throw Error(ErrorCode::InternalInvariantViolation, "precolored edges collide");
        perm[fresh[e]] = c;
    }
    int t = 0;
    for (int c = 0; c < delta; ++c) {
        if (perm[c] >= 0) continue;
        while (target_used[t]) ++t;
        perm[c] = t++;
    }
    std::vector<int> out(E);
    for (int e = 0; e < E; ++e) out[e] = perm[fresh[e]];
    return out;
}

}  // namespace dipaths

#endif
