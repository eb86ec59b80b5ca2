#include "rainbow/reductions.hpp"

#include <map>

namespace rainbow {

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

// Builds the graph and transfers per-edge colors given in input order.
std::pair<Graph, std::vector<Color>> assemble(int n, const EdgeList& edges, const std::vector<Color>& colors) {
    Graph g(n, edges);
    std::vector<Color> by_index(static_cast<std::size_t>(g.num_edges()), kUnassigned);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        by_index[static_cast<std::size_t>(*g.edge_index(edges[i].first, edges[i].second))] = colors[i];
    }
    return {std::move(g), std::move(by_index)};
}

std::string vertex_text(Vertex v) { return std::to_string(v + 1); }

}  // namespace

// ---------------------------------------------------------------------------

ExtendGadget gadget_extend_rc2(const Cnf3& phi) {
    if (!phi.is_normalized()) {
        throw CnfError(
            "gadget_extend_rc2: formula must be normalized (every variable in both polarities, no clause with x "
            "and not-x)");
    }
    const int m = static_cast<int>(phi.clauses.size());
    const int n = phi.num_vars;
    auto clause_vertex = [](int i) { return i; };
    auto var_vertex = [m](int j) { return m + j; };
    const Vertex apex = m + n;

    EdgeList edges;
    std::vector<Color> colors;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            edges.emplace_back(clause_vertex(i), clause_vertex(j));
            colors.push_back(0);
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            edges.emplace_back(var_vertex(i), var_vertex(j));
            colors.push_back(0);
        }
    }
    for (int j = 0; j < n; ++j) {
        edges.emplace_back(var_vertex(j), apex);
        colors.push_back(kUnassigned);
    }
    for (int i = 0; i < m; ++i) {
        std::map<int, Color> membership;  // repeated literals give one edge
        for (const auto& lit : phi.clauses[static_cast<std::size_t>(i)]) {
            membership[lit.var] = lit.positive ? 0 : 1;
        }
        for (auto [var, color] : membership) {
            edges.emplace_back(clause_vertex(i), var_vertex(var));
            colors.push_back(color);
        }
    }

    auto [g, by_index] = assemble(m + n + 1, edges, colors);
    ExtendGadget gadget;
    gadget.graph = std::move(g);
    gadget.partial = PartialEdgeColoring(std::move(by_index));
    gadget.apex = apex;
    for (int i = 0; i < m; ++i) {
        gadget.roles.push_back({VertexRoleKind::Clause, i});
    }
    for (int j = 0; j < n; ++j) {
        gadget.roles.push_back({VertexRoleKind::Variable, j});
    }
    gadget.roles.push_back({VertexRoleKind::Apex, 0});
    return gadget;
}

std::vector<std::string> ExtendGadget::legend() const {
    std::vector<std::string> out;
    for (std::size_t v = 0; v < roles.size(); ++v) {
        const auto& r = roles[v];
        std::string vtx = vertex_text(static_cast<Vertex>(v));
        switch (r.kind) {
            case VertexRoleKind::Clause:
                out.push_back("role clause " + vtx + " " + std::to_string(r.index + 1));
                break;
            case VertexRoleKind::Variable:
                out.push_back("role var " + vtx + " " + std::to_string(r.index + 1));
                break;
            case VertexRoleKind::Apex:
                out.push_back("role apex " + vtx);
                break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

StGadget gadget_st_rainbow(const Cnf3& phi) {
    if (!phi.has_both_polarities()) {
        throw CnfError("gadget_st_rainbow: every variable must occur both positively and negatively");
    }
    const int m = static_cast<int>(phi.clauses.size());
    const int n = phi.num_vars;

    // occurrence ranks in clause order, then literal order
    std::vector<int> pos_count(static_cast<std::size_t>(n), 0);
    std::vector<int> neg_count(static_cast<std::size_t>(n), 0);
    std::vector<std::array<int, 3>> rank(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        for (int p = 0; p < 3; ++p) {
            const auto& lit = phi.clauses[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)];
            auto& counter = lit.positive ? pos_count : neg_count;
            rank[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)] = counter[static_cast<std::size_t>(lit.var)]++;
        }
    }

    StGadget gadget;
    std::vector<int> alpha_base(static_cast<std::size_t>(n), 0);
    Color next_color = 0;
    for (int j = 0; j < n; ++j) {
        alpha_base[static_cast<std::size_t>(j)] = next_color;
        for (int a = 0; a < pos_count[static_cast<std::size_t>(j)]; ++a) {
            for (int b = 0; b < neg_count[static_cast<std::size_t>(j)]; ++b) {
                gadget.color_legend.push_back({true, j, a, b});
                ++next_color;
            }
        }
    }
    auto alpha = [&](int j, int a, int b) {
        return alpha_base[static_cast<std::size_t>(j)] + a * neg_count[static_cast<std::size_t>(j)] + b;
    };

    EdgeList edges;
    std::vector<Color> colors;
    Vertex next_vertex = 0;
    gadget.s = next_vertex++;

    // entries and exits per layer
    std::vector<std::vector<Vertex>> entries(static_cast<std::size_t>(m + 2));
    std::vector<std::vector<Vertex>> exits(static_cast<std::size_t>(m + 2));
    entries[0] = exits[0] = {gadget.s};
    for (int i = 0; i < m; ++i) {
        for (int p = 0; p < 3; ++p) {
            const auto& lit = phi.clauses[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)];
            const int j = lit.var;
            const int r = rank[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)];
            const int length = lit.positive ? neg_count[static_cast<std::size_t>(j)] : pos_count[static_cast<std::size_t>(j)];
            Vertex first = next_vertex;
            next_vertex += length + 1;
            for (int step = 0; step < length; ++step) {
                edges.emplace_back(first + step, first + step + 1);
                colors.push_back(lit.positive ? alpha(j, r, step) : alpha(j, step, r));
            }
            entries[static_cast<std::size_t>(i + 1)].push_back(first);
            exits[static_cast<std::size_t>(i + 1)].push_back(first + length);
        }
    }
    gadget.t = next_vertex++;
    entries[static_cast<std::size_t>(m + 1)] = exits[static_cast<std::size_t>(m + 1)] = {gadget.t};

    for (int layer = 1; layer <= m + 1; ++layer) {
        for (Vertex from : exits[static_cast<std::size_t>(layer - 1)]) {
            for (Vertex to : entries[static_cast<std::size_t>(layer)]) {
                edges.emplace_back(from, to);
                colors.push_back(next_color++);
                gadget.color_legend.push_back({});
            }
        }
    }

    auto [g, by_index] = assemble(next_vertex, edges, colors);
    gadget.graph = std::move(g);
    gadget.coloring = EdgeColoring(std::move(by_index), next_color);
    return gadget;
}

std::vector<std::string> StGadget::legend() const {
    std::vector<std::string> out{"role s " + vertex_text(s), "role t " + vertex_text(t)};
    Color first_fresh = -1;
    for (std::size_t c = 0; c < color_legend.size(); ++c) {
        const auto& r = color_legend[c];
        if (r.shared) {
            out.push_back("role alpha " + std::to_string(c) + " x" + std::to_string(r.var + 1) + " " +
                          std::to_string(r.a + 1) + " " + std::to_string(r.b + 1));
        } else if (first_fresh < 0) {
            first_fresh = static_cast<Color>(c);
        }
    }
    if (first_fresh >= 0) {
        out.push_back("role fresh " + std::to_string(first_fresh) + ".." + std::to_string(color_legend.size() - 1));
    }
    return out;
}

// ---------------------------------------------------------------------------

WrappedInstance gadget_verify_wrap(const Graph& g, const EdgeColoring& chi, Vertex s, Vertex t) {
    check_coloring(g, chi);
    if (!g.contains(s) || !g.contains(t)) {
        throw GraphError("gadget_verify_wrap: s or t out of range");
    }
    if (s == t) {
        throw GraphError("gadget_verify_wrap: s and t must differ");
    }
    const int n = g.num_vertices();

    std::vector<Vertex> order{s};
    for (Vertex v = 0; v < n; ++v) {
        if (v != s && v != t) {
            order.push_back(v);
        }
    }
    order.push_back(t);

    WrappedInstance w;
    w.s_prime = n;
    w.t_prime = n + 1;
    w.hub = n + 2;
    for (int i = 0; i < 4; ++i) {
        w.special[i] = chi.num_colors + i;
    }
    const Color c1 = w.special[0];
    const Color c2 = w.special[1];
    const Color c3 = w.special[2];
    const Color c4 = w.special[3];

    // copy[i][j-1] = v_i^j, -1 where the copy does not exist
    std::vector<std::array<Vertex, 2>> copy(static_cast<std::size_t>(n), {-1, -1});
    Vertex next_vertex = n + 3;
    for (int i = 0; i < n; ++i) {
        if (i != n - 1) {
            copy[static_cast<std::size_t>(i)][0] = next_vertex++;
        }
        if (i != 0) {
            copy[static_cast<std::size_t>(i)][1] = next_vertex++;
        }
    }

    EdgeList edges;
    std::vector<Color> colors;
    auto add = [&](Vertex a, Vertex b, Color c) {
        edges.emplace_back(a, b);
        colors.push_back(c);
    };
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        add(g.edge(e).u, g.edge(e).v, chi[e]);
    }
    add(s, w.s_prime, c2);
    add(t, w.t_prime, c1);
    add(s, w.hub, c1);
    add(t, w.hub, c2);
    for (int i = 1; i + 1 < n; ++i) {
        add(order[static_cast<std::size_t>(i)], w.hub, c3);
    }
    std::vector<Vertex> copies;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < 2; ++j) {
            Vertex cv = copy[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (cv >= 0) {
                add(order[static_cast<std::size_t>(i)], cv, j == 0 ? c1 : c2);
                copies.push_back(cv);
            }
        }
    }
    for (std::size_t x = 0; x < copies.size(); ++x) {
        for (std::size_t y = x + 1; y < copies.size(); ++y) {
            add(copies[x], copies[y], c4);
        }
    }

    auto [wg, by_index] = assemble(next_vertex, edges, colors);
    w.graph = std::move(wg);
    w.coloring = EdgeColoring(std::move(by_index), chi.num_colors + 4);
    return w;
}

std::vector<std::string> WrappedInstance::legend() const {
    return {"role s' " + vertex_text(s_prime), "role t' " + vertex_text(t_prime), "role b " + vertex_text(hub),
            "role special " + std::to_string(special[0]) + " " + std::to_string(special[1]) + " " +
                std::to_string(special[2]) + " " + std::to_string(special[3])};
}

}  // namespace rainbow
