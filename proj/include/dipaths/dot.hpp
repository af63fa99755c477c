#ifndef DIPATHS_DOT_HPP
#define DIPATHS_DOT_HPP

#include <ostream>
#include <string>
#include <vector>

#include "dipaths/io.hpp"
#include "dipaths/tree.hpp"

namespace dipaths {

// Graphviz rendering of an instance: the tree as solid arcs, every dipath as
// a dashed chain alongside. With a solution attached, colors follow the
// color classes, cut arcs turn red, kernel paths stay solid while the
// excluded ones fade.
inline void export_dot(const Instance& inst, const Solution* sol, std::ostream& out) {
    DirectedTree tree = inst.tree();
    std::vector<Dipath> paths = inst.paths(tree);

    static const char* kPalette[] = {"#e6194b", "#3cb44b", "#4363d8", "#f58231",
                                     "#911eb4", "#46f0f0", "#f032e6", "#9a6324",
                                     "#008080", "#808000", "#000075", "#800000"};
    const int kPaletteSize = 12;

    std::vector<char> in_cut(tree.arc_count(), 0);
    std::vector<char> kept(paths.size(), 0);
    std::vector<int> color_of(paths.size(), -1);
    if (sol != nullptr) {
        if (sol->kind == SolutionKind::multicut)
            for (int a : sol->cuts)
                if (a >= 0 && a < tree.arc_count()) in_cut[a] = 1;
        if (sol->kind == SolutionKind::kernel)
            for (int p : sol->keeps)
                if (p >= 0 && p < static_cast<int>(paths.size())) kept[p] = 1;
        if (sol->kind == SolutionKind::color)
            for (auto [p, c] : sol->colors)
                if (p >= 0 && p < static_cast<int>(paths.size())) color_of[p] = c;
    }

    out << "digraph dipaths {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle, fontsize=10];\n";
    for (int a = 0; a < tree.arc_count(); ++a) {
        out << "  v" << tree.tail(a) << " -> v" << tree.head(a) << " [label=\"a" << a << "\"";
        if (in_cut[a]) out << ", color=\"#d62728\", penwidth=3";
        out << "];\n";
    }
    for (std::size_t i = 0; i < paths.size(); ++i) {
        std::string color;
        std::string style = "dashed";
        if (sol != nullptr && sol->kind == SolutionKind::color && color_of[i] >= 0) {
            color = kPalette[color_of[i] % kPaletteSize];
        } else if (sol != nullptr && sol->kind == SolutionKind::kernel) {
            color = kept[i] ? "#2ca02c" : "#bbbbbb";
            if (kept[i]) style = "solid";
        } else if (sol != nullptr && sol->kind == SolutionKind::multicut) {
            bool picked = false;
            for (int p : sol->picks)
                if (p == static_cast<int>(i)) picked = true;
            color = picked ? "#2ca02c" : "#bbbbbb";
            if (picked) style = "solid";
        } else {
            color = kPalette[i % kPaletteSize];
        }
        const Dipath& p = paths[i];
        for (std::size_t k = 0; k + 1 < p.vertices.size(); ++k) {
            out << "  v" << p.vertices[k] << " -> v" << p.vertices[k + 1] << " [color=\"" << color
                << "\", style=" << style << ", penwidth=1.5, arrowsize=0.5";
            if (k == 0) out << ", taillabel=\"P" << i << "\", labelfontsize=8";
            out << "];\n";
        }
    }
    out << "}\n";
}

}  // namespace dipaths

#endif
