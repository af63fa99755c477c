#ifndef DIPATHS_IO_HPP
#define DIPATHS_IO_HPP

#include <array>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dipaths/errors.hpp"
#include "dipaths/priority.hpp"
#include "dipaths/tree.hpp"

namespace dipaths {

// In-memory form of an instance file. Paths are stored as explicit vertex
// sequences; `route` records are resolved during parsing, so emit() always
// writes the canonical form.
struct Instance {
    enum class PriorityMode { none, global, per_arc };

    int n = 0;
    std::vector<std::pair<int, int>> arcs;
    std::vector<std::vector<int>> path_vertices;
    int root = 0;
    PriorityMode pmode = PriorityMode::none;
    std::vector<int> rank;                      // best first, global mode
    std::vector<std::vector<int>> arc_orders;   // per arc id, per-arc mode

    bool operator==(const Instance&) const = default;

    DirectedTree tree() const { return DirectedTree::build(n, arcs); }

    std::vector<Dipath> paths(const DirectedTree& t) const {
        std::vector<Dipath> out;
        out.reserve(path_vertices.size());
        for (std::size_t i = 0; i < path_vertices.size(); ++i)
            out.push_back(make_dipath(t, static_cast<int>(i), path_vertices[i]));
        return out;
    }

    PriorityRelation priorities(const std::vector<Dipath>& paths, const PathIndex& index) const {
        if (pmode == PriorityMode::global)
            return validate_priorities(paths, index,
                                       make_global_priority(rank, static_cast<int>(paths.size())));
        if (pmode == PriorityMode::per_arc)
            return validate_priorities(paths, index, make_per_arc_priority(arc_orders));
        throw Error(ErrorCode::InvalidInstance, "instance carries no priority block");
    }
};

enum class SolutionKind { color, multicut, kernel };

struct Solution {
    SolutionKind kind = SolutionKind::color;
    std::vector<std::pair<int, int>> colors;      // (path, color)
    int declared_colors = -1;
    int declared_omega = -1;
    std::vector<int> picks;                       // stable set path ids
    std::vector<int> cuts;                        // cut arc ids
    std::vector<int> keeps;                       // kernel path ids
    std::vector<std::array<int, 3>> witnesses;    // (excluded, arc, keeper)

    bool operator==(const Solution&) const = default;
};

namespace detail {

inline std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

inline int parse_int(const std::string& tok, int line_no) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(line_no) + ": expected an integer, got '" + tok + "'");
    }
}

[[noreturn]] inline void fail(int line_no, const std::string& msg) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace detail

inline Instance parse_instance(std::istream& in) {
    Instance inst;
    bool have_header = false, have_vertices = false, have_root = false;
    std::vector<std::pair<int, std::vector<int>>> raw_paths;   // (line, vertices)
    std::vector<std::pair<int, std::pair<int, int>>> routes;   // (line, (src, dst))
    std::vector<std::pair<int, std::vector<int>>> arc_orders;  // (line, arc + ids)
    int rank_line = -1;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = detail::tokenize(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (!have_header) {
            if (toks.size() != 2 || toks[0] != "dipaths-instance" || toks[1] != "1")
                detail::fail(line_no, "expected header 'dipaths-instance 1'");
            have_header = true;
            continue;
        }
        const std::string& key = toks[0];
        if (key == "vertices") {
            if (have_vertices) detail::fail(line_no, "duplicate 'vertices'");
            if (toks.size() != 2) detail::fail(line_no, "'vertices' takes one count");
            inst.n = detail::parse_int(toks[1], line_no);
            have_vertices = true;
        } else if (key == "arc") {
            if (toks.size() != 3) detail::fail(line_no, "'arc' takes tail and head");
            inst.arcs.push_back({detail::parse_int(toks[1], line_no),
                                 detail::parse_int(toks[2], line_no)});
        } else if (key == "path") {
            std::vector<int> vs;
            for (std::size_t i = 1; i < toks.size(); ++i)
                vs.push_back(detail::parse_int(toks[i], line_no));
            if (vs.size() < 2) detail::fail(line_no, "a path needs at least one arc");
            raw_paths.push_back({line_no, std::move(vs)});
        } else if (key == "route") {
            if (toks.size() != 3) detail::fail(line_no, "'route' takes source and sink");
            raw_paths.push_back({line_no, {}});
            routes.push_back({static_cast<int>(raw_paths.size()) - 1,
                              {detail::parse_int(toks[1], line_no),
                               detail::parse_int(toks[2], line_no)}});
            raw_paths.back().first = line_no;
        } else if (key == "root") {
            if (have_root) detail::fail(line_no, "duplicate 'root'");
            if (toks.size() != 2) detail::fail(line_no, "'root' takes one vertex");
            inst.root = detail::parse_int(toks[1], line_no);
            have_root = true;
        } else if (key == "rank") {
            if (rank_line >= 0) detail::fail(line_no, "duplicate 'rank'");
            rank_line = line_no;
            for (std::size_t i = 1; i < toks.size(); ++i)
                inst.rank.push_back(detail::parse_int(toks[i], line_no));
        } else if (key == "arcorder") {
            if (toks.size() < 2) detail::fail(line_no, "'arcorder' needs an arc id");
            std::vector<int> ids;
            for (std::size_t i = 1; i < toks.size(); ++i)
                ids.push_back(detail::parse_int(toks[i], line_no));
            arc_orders.push_back({line_no, std::move(ids)});
        } else {
            detail::fail(line_no, "unknown record '" + key + "'");
        }
    }
    if (!have_header) throw Error(ErrorCode::ParseError, "empty input, expected instance header");
    if (!have_vertices) throw Error(ErrorCode::ParseError, "missing 'vertices' record");

    DirectedTree tree = DirectedTree::build(inst.n, inst.arcs);
    if (inst.root < 0 || inst.root >= inst.n)
        throw Error(ErrorCode::ParseError, "root vertex out of range");

    // Resolve route records and validate every path, with line diagnostics.
    std::size_t route_i = 0;
    for (std::size_t i = 0; i < raw_paths.size(); ++i) {
        auto& [ln, vs] = raw_paths[i];
        try {
            if (route_i < routes.size() && routes[route_i].first == static_cast<int>(i)) {
                auto [s, t] = routes[route_i].second;
                ++route_i;
                vs = resolve_dipath(tree, s, t).vertices;
            } else {
                make_dipath(tree, static_cast<int>(i), vs);
            }
        } catch (const Error& e) {
            detail::fail(ln, e.what());
        }
        inst.path_vertices.push_back(vs);
    }

    if (rank_line >= 0 && !arc_orders.empty())
        detail::fail(rank_line, "'rank' and 'arcorder' cannot be mixed");
    if (rank_line >= 0) {
        inst.pmode = Instance::PriorityMode::global;
        if (inst.rank.size() != inst.path_vertices.size())
            detail::fail(rank_line, "'rank' must list every path id exactly once");
    } else if (!arc_orders.empty()) {
        inst.pmode = Instance::PriorityMode::per_arc;
        inst.arc_orders.assign(inst.arcs.size(), {});
        std::vector<int> seen(inst.arcs.size(), 0);
        for (auto& [ln, ids] : arc_orders) {
            int a = ids[0];
            if (a < 0 || a >= static_cast<int>(inst.arcs.size()))
                detail::fail(ln, "arcorder references arc " + std::to_string(a) + " out of range");
            if (seen[a]) detail::fail(ln, "duplicate arcorder for arc " + std::to_string(a));
            seen[a] = 1;
            inst.arc_orders[a].assign(ids.begin() + 1, ids.end());
        }
    }
    return inst;
}

inline void emit_instance(const Instance& inst, std::ostream& out) {
    out << "dipaths-instance 1\n";
    out << "vertices " << inst.n << "\n";
    for (auto [t, h] : inst.arcs) out << "arc " << t << " " << h << "\n";
    out << "root " << inst.root << "\n";
    for (const auto& vs : inst.path_vertices) {
        out << "path";
        for (int v : vs) out << " " << v;
        out << "\n";
    }
    if (inst.pmode == Instance::PriorityMode::global) {
        out << "rank";
        for (int p : inst.rank) out << " " << p;
        out << "\n";
    } else if (inst.pmode == Instance::PriorityMode::per_arc) {
        for (std::size_t a = 0; a < inst.arc_orders.size(); ++a) {
            out << "arcorder " << a;
            for (int p : inst.arc_orders[a]) out << " " << p;
            out << "\n";
        }
    }
}

inline Solution parse_solution(std::istream& in) {
    Solution sol;
    bool have_header = false, have_kind = false;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = detail::tokenize(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (!have_header) {
            if (toks.size() != 2 || toks[0] != "dipaths-solution" || toks[1] != "1")
                detail::fail(line_no, "expected header 'dipaths-solution 1'");
            have_header = true;
            continue;
        }
        const std::string& key = toks[0];
        if (key == "kind") {
            if (toks.size() != 2) detail::fail(line_no, "'kind' takes one word");
            if (toks[1] == "color")
                sol.kind = SolutionKind::color;
            else if (toks[1] == "multicut")
                sol.kind = SolutionKind::multicut;
            else if (toks[1] == "kernel")
                sol.kind = SolutionKind::kernel;
            else
                detail::fail(line_no, "unknown kind '" + toks[1] + "'");
            have_kind = true;
        } else if (key == "color" && toks.size() == 3) {
            sol.colors.push_back({detail::parse_int(toks[1], line_no),
                                  detail::parse_int(toks[2], line_no)});
        } else if (key == "colors" && toks.size() == 2) {
            sol.declared_colors = detail::parse_int(toks[1], line_no);
        } else if (key == "omega" && toks.size() == 2) {
            sol.declared_omega = detail::parse_int(toks[1], line_no);
        } else if (key == "pick" && toks.size() == 2) {
            sol.picks.push_back(detail::parse_int(toks[1], line_no));
        } else if (key == "cut" && toks.size() == 2) {
            sol.cuts.push_back(detail::parse_int(toks[1], line_no));
        } else if (key == "keep" && toks.size() == 2) {
            sol.keeps.push_back(detail::parse_int(toks[1], line_no));
        } else if (key == "witness" && toks.size() == 4) {
            sol.witnesses.push_back({detail::parse_int(toks[1], line_no),
                                     detail::parse_int(toks[2], line_no),
                                     detail::parse_int(toks[3], line_no)});
        } else {
            detail::fail(line_no, "unknown or malformed record '" + key + "'");
        }
    }
    if (!have_header) throw Error(ErrorCode::ParseError, "empty input, expected solution header");
    if (!have_kind) throw Error(ErrorCode::ParseError, "missing 'kind' record");
    return sol;
}

inline void emit_solution(const Solution& sol, std::ostream& out) {
    out << "dipaths-solution 1\n";
    switch (sol.kind) {
        case SolutionKind::color:
            out << "kind color\n";
            if (sol.declared_omega >= 0) out << "omega " << sol.declared_omega << "\n";
            if (sol.declared_colors >= 0) out << "colors " << sol.declared_colors << "\n";
            for (auto [p, c] : sol.colors) out << "color " << p << " " << c << "\n";
            break;
        case SolutionKind::multicut:
            out << "kind multicut\n";
            for (int p : sol.picks) out << "pick " << p << "\n";
            for (int a : sol.cuts) out << "cut " << a << "\n";
            break;
        case SolutionKind::kernel:
            out << "kind kernel\n";
            for (int p : sol.keeps) out << "keep " << p << "\n";
            for (auto [q, a, k] : sol.witnesses)
                out << "witness " << q << " " << a << " " << k << "\n";
            break;
    }
}

}  // namespace dipaths

#endif
