// Walkthrough of the library API on the instance from demo/caterpillar.instance:
// build a tree, solve all three problems, print the results.
#include <iostream>

#include "dipaths/coloring.hpp"
#include "dipaths/kernel.hpp"
#include "dipaths/multicut.hpp"

int main() {
    using namespace dipaths;

    //      1 -> 0 <- 2        arcs point toward the center, then down a tail
    //           |
    //           v
    //           3 -> 4
    DirectedTree tree = DirectedTree::build(5, {{1, 0}, {2, 0}, {0, 3}, {3, 4}});
    std::vector<Dipath> paths;
    paths.push_back(resolve_dipath(tree, 1, 4, 0));
    paths.push_back(resolve_dipath(tree, 2, 3, 1));
    paths.push_back(resolve_dipath(tree, 3, 4, 2));

    ColoringResult coloring = color_dipaths(tree, paths);
    std::cout << "coloring with " << coloring.num_colors << " colors (max arc load "
              << coloring.omega << "):\n";
    for (std::size_t i = 0; i < paths.size(); ++i)
        std::cout << "  path " << i << " -> color " << coloring.color[i] << "\n";

    RootedTree rooted = root_tree(tree, 0);
    PathIndex index = index_paths(rooted, paths);
    MulticutCertificate cert = multicut(rooted, index);
    std::cout << "maximum arc-disjoint set:";
    for (int p : cert.stable_set) std::cout << " " << p;
    std::cout << "\nminimum multicut arcs:";
    for (int a : cert.cut) std::cout << " " << a;
    std::cout << "\n";

    PriorityRelation rel =
        validate_priorities(paths, index, make_global_priority({2, 0, 1}, 3));
    KernelResult k = kernel(rooted, index, rel);
    std::cout << "kernel:";
    for (int p : k.kernel) std::cout << " " << p;
    std::cout << "\n";
    for (std::size_t q = 0; q < paths.size(); ++q)
        if (k.witness[q].arc >= 0)
            std::cout << "  path " << q << " dominated on arc " << k.witness[q].arc
                      << " by path " << k.witness[q].keeper << "\n";
    return 0;
}
