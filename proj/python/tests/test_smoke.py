import itertools

import pytest

import rainbowconn as rc


def brute_rainbow_connected(g, colors):
    index = {e: i for i, e in enumerate(g.edges)}
    adj = {v: [] for v in range(g.num_vertices)}
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)

    def reach(s, t):
        stack = [(s, {s}, frozenset())]
        while stack:
            x, seen, used = stack.pop()
            if x == t:
                return True
            for y in adj[x]:
                c = colors[index[(min(x, y), max(x, y))]]
                if y not in seen and c not in used:
                    stack.append((y, seen | {y}, used | {c}))
        return False

    return all(reach(s, t) for s, t in itertools.combinations(range(g.num_vertices), 2))


def test_graph_basics():
    g = rc.Graph(4, [(2, 1), (0, 1), (3, 2)])
    assert g.num_vertices == 4 and g.num_edges == 3
    assert g.edges == [(0, 1), (1, 2), (2, 3)]
    assert rc.diameter(g) == 3
    with pytest.raises(ValueError):
        rc.Graph(3, [(0, 0)])


def test_cycle_rc_and_witness():
    for k in range(4, 8):
        g = rc.cycle_graph(k)
        value, colors = rc.rc_exact(g)
        assert value == (k + 1) // 2
        assert rc.is_rainbow_connected(g, colors) is None
        assert brute_rainbow_connected(g, colors)


def test_monochrome_square_fails_on_first_pair():
    g = rc.cycle_graph(4)
    assert rc.is_rainbow_connected(g, [0, 0, 0, 0]) == (0, 2)
    assert rc.rainbow_path(g, [0, 1, 0, 1], 0, 2) is None
    assert rc.rainbow_path(g, [0, 0, 1, 1], 0, 2) == [0, 1, 2]


def test_graph_text_round_trip():
    g = rc.cycle_graph(5)
    text = rc.format_graph(g, [0, 1, 2, 0, 1])
    parsed, colors, _ = rc.parse_graph(text)
    assert parsed.edges == g.edges and colors == [0, 1, 2, 0, 1]


def test_reductions_track_satisfiability():
    sat = "p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n"
    assert rc.sat_brute(sat) is not None
    g, partial, _ = rc.gadget_extend_rc2(sat)
    assert rc.extend_rc2(g, partial) is not None
    g, colors, s, t = rc.gadget_st_rainbow(sat)
    assert rc.rainbow_path(g, colors, s, t) is not None


def test_probability_closed_form():
    num, den = rc.rainbow_probability([-1, -1], 3)
    assert num * 3 == den * 2
    num, den = rc.rainbow_probability([-1, -1, -1], 8, 0, 4)
    assert num * 512 == den * 24


def test_derand_on_dense_graph():
    g = rc.gnp_graph(40, 0.7, 3)
    trace = []
    r = rc.derand_rc3(g, trace=lambda e, c, t: trace.append(t))
    assert len(trace) == g.num_edges
    assert r["monotone"]
    if r["initial_estimator"] < 1:
        assert r["verified"]
    if r["verified"]:
        assert rc.is_rainbow_connected(g, r["coloring"]) is None


def test_diameter_violation_is_raised():
    with pytest.raises(rc.DiameterViolation):
        rc.derand_rc3(rc.path_graph(5))


def test_pipeline_on_two_cliques():
    edges = [(u, v) for u in range(5) for v in range(u + 1, 5)]
    edges += [(u + 5, v + 5) for u, v in edges] + [(4, 5)]
    g = rc.Graph(10, edges)
    r = rc.partition_coloring_pipeline(g, [list(range(5)), list(range(5, 10))])
    assert r["coloring"] is not None
    assert brute_rainbow_connected(g, r["coloring"])
    assert len(set(r["coloring"])) <= len(r["tree"]) + 8
