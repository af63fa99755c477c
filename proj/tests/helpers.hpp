#ifndef DIPATHS_TEST_HELPERS_HPP
#define DIPATHS_TEST_HELPERS_HPP

#include <random>
#include <vector>

#include "dipaths/bipartite.hpp"
#include "dipaths/generate.hpp"
#include "dipaths/io.hpp"
#include "dipaths/tree.hpp"

#define REQUIRE_ERROR(expr, code_)                       \
    do {                                                 \
        try {                                            \
            (void)(expr);                                \
            FAIL("expected an error");                   \
        } catch (const dipaths::Error& e) {              \
            REQUIRE(e.code() == (code_));                \
        }                                                \
    } while (0)

namespace testutil {

struct TestInstance {
    dipaths::Instance inst;
    dipaths::DirectedTree tree;
    std::vector<dipaths::Dipath> paths;
    dipaths::RootedTree rooted;
    dipaths::PathIndex index;
};

inline TestInstance build(const dipaths::Instance& inst) {
    TestInstance t;
    t.inst = inst;
    t.tree = inst.tree();
    t.paths = inst.paths(t.tree);
    t.rooted = dipaths::root_tree(t.tree, inst.root);
    t.index = dipaths::index_paths(t.rooted, t.paths);
    return t;
}

// Mixed-shape corpus entry: seeds cycle through chain/star/random trees with
// varying sizes.
inline TestInstance random_instance(std::uint32_t seed, int max_n, int max_p,
                                    dipaths::Instance::PriorityMode pmode =
                                        dipaths::Instance::PriorityMode::none) {
    std::mt19937 pick(seed * 7919u + 13u);
    dipaths::GenConfig cfg;
    cfg.seed = seed;
    cfg.n = 2 + static_cast<int>(pick() % static_cast<unsigned>(max_n - 1));
    cfg.p = static_cast<int>(pick() % static_cast<unsigned>(max_p + 1));
    switch (pick() % 3u) {
        case 0: cfg.shape = dipaths::TreeShape::chain; break;
        case 1: cfg.shape = dipaths::TreeShape::star; break;
        default: cfg.shape = dipaths::TreeShape::random_attach; break;
    }
    cfg.pmode = pmode;
    cfg.root = static_cast<int>(pick() % static_cast<unsigned>(cfg.n));
    return build(dipaths::generate_instance(cfg));
}

// A random bipartite multigraph for the engine tests (no arc keys needed).
inline dipaths::BipartiteMultigraph random_bipartite(std::mt19937& rng, int max_side,
                                                     int max_edges) {
    dipaths::BipartiteMultigraph B;
    int nl = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_side));
    int nr = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_side));
    for (int i = 0; i < nl; ++i) B.add_left();
    for (int j = 0; j < nr; ++j) B.add_right();
    int m = static_cast<int>(rng() % static_cast<unsigned>(max_edges + 1));
    for (int e = 0; e < m; ++e)
        B.add_edge(static_cast<int>(rng() % static_cast<unsigned>(nl)),
                   static_cast<int>(rng() % static_cast<unsigned>(nr)));
    return B;
}

inline dipaths::EdgePreferences random_preferences(std::mt19937& rng,
                                                   const dipaths::BipartiteMultigraph& B) {
    dipaths::EdgePreferences prefs;
    prefs.left_order.resize(B.left_count());
    prefs.right_order.resize(B.right_count());
    for (int i = 0; i < B.left_count(); ++i) {
        prefs.left_order[i] = B.left_incidence(i);
        for (std::size_t k = prefs.left_order[i].size(); k > 1; --k)
            std::swap(prefs.left_order[i][k - 1], prefs.left_order[i][rng() % k]);
    }
    for (int j = 0; j < B.right_count(); ++j) {
        prefs.right_order[j] = B.right_incidence(j);
        for (std::size_t k = prefs.right_order[j].size(); k > 1; --k)
            std::swap(prefs.right_order[j][k - 1], prefs.right_order[j][rng() % k]);
    }
    return prefs;
}

inline dipaths::Matching matching_from_edges(const dipaths::BipartiteMultigraph& B,
                                             const std::vector<int>& edges) {
    dipaths::Matching m;
    m.edges = edges;
    std::sort(m.edges.begin(), m.edges.end());
    m.left_match.assign(B.left_count(), -1);
    m.right_match.assign(B.right_count(), -1);
    for (int e : edges) {
        m.left_match[B.edge(e).left] = e;
        m.right_match[B.edge(e).right] = e;
    }
    return m;
}

}  // namespace testutil

#endif
