#pragma once

#include <string>
#include <vector>

#include "rainbow/cnf.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

// ---------------------------------------------------------------------------
// 3-SAT -> extending a partial 2-coloring to a rainbow connected one.
//
// Vertices: clause vertices c_0..c_{m-1}, then variable vertices
// x_0..x_{n-1}, then the apex a. Clause vertices form a clique colored 0,
// variable vertices form a clique colored 0, c_i--x_j is present when x_j
// occurs in c_i (color 0 for a positive occurrence, 1 for a negative one),
// and the apex edges x_j--a are the only uncolored edges. The gadget can be
// completed iff the formula is satisfiable.

enum class VertexRoleKind { Clause, Variable, Apex };

struct VertexRole {
    VertexRoleKind kind;
    int index;  // clause or variable number; 0 for the apex
};

struct ExtendGadget {
    Graph graph;
    PartialEdgeColoring partial;
    std::vector<VertexRole> roles;  // per vertex
    Vertex apex = 0;

    std::vector<std::string> legend() const;
};

/// Requires phi.is_normalized(); throws CnfError otherwise.
ExtendGadget gadget_extend_rc2(const Cnf3& phi);

// ---------------------------------------------------------------------------
// 3-SAT -> s-t rainbow path.
//
// Layer 0 is {s}, layer m+1 is {t}, layer i holds one literal gadget per
// literal of clause i. The a-th positive occurrence of x_j (of k) is a path
// of l+1 vertices whose b-th edge has shared color alpha(j,a,b); the b-th
// negative occurrence (of l) is a path of k+1 vertices whose a-th edge has
// alpha(j,a,b). Exits of one layer are joined to all entries of the next.
//
// Numbering: s = 0, then gadget vertices clause by clause and literal by
// literal along each path, then t. Shared colors come first (variable, then
// a, then b); crossing edges get fresh colors after them, layer boundary by
// layer boundary, exits then entries in vertex order.

struct ColorRole {
    bool shared = false;
    int var = -1;  // for shared colors: variable, and 0-based occurrence ranks a, b
    int a = -1;
    int b = -1;
};

struct StGadget {
    Graph graph;
    EdgeColoring coloring;
    Vertex s = 0;
    Vertex t = 0;
    std::vector<ColorRole> color_legend;  // per color id

    std::vector<std::string> legend() const;
};

/// Requires every variable to occur in both polarities; throws CnfError otherwise.
StGadget gadget_st_rainbow(const Cnf3& phi);

// ---------------------------------------------------------------------------
// s-t rainbow path -> rainbow connectivity of a whole colored graph.
//
// Original vertices keep their ids; the sequence v_1 = s, v_2..v_{n-1} (the
// other vertices ascending), v_n = t fixes the superscripted copies. Added
// vertices: s' = n, t' = n+1, b = n+2, then v_1^1, v_2^1, v_2^2, ...,
// v_{n-1}^1, v_{n-1}^2, v_n^2. The copies v_1^2 and v_n^1 do not exist.
// Colors c1..c4 are chi.num_colors .. chi.num_colors + 3.

struct WrappedInstance {
    Graph graph;
    EdgeColoring coloring;
    Vertex s_prime = 0;
    Vertex t_prime = 0;
    Vertex hub = 0;  // the vertex b
    Color special[4] = {0, 0, 0, 0};

    std::vector<std::string> legend() const;
};

WrappedInstance gadget_verify_wrap(const Graph& g, const EdgeColoring& chi, Vertex s, Vertex t);

}  // namespace rainbow
