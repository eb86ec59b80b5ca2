#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rainbow/prob_coloring.hpp"
#include "rainbow/verify.hpp"

using namespace rainbow;

namespace {

// Evidence paths of a non-adjacent pair as edge lists, rebuilt from the evidence record.
std::vector<std::vector<EdgeId>> evidence_paths(const Graph& g, const CaseEvidence& ev) {
    auto e = [&](Vertex a, Vertex b) { return *g.edge_index(a, b); };
    std::vector<std::vector<EdgeId>> out;
    Vertex u = ev.pair.u;
    Vertex v = ev.pair.v;
    for (Vertex w : ev.common) {
        out.push_back({e(u, w), e(w, v)});
    }
    for (std::size_t i = 0; i < ev.a_set.size(); ++i) {
        out.push_back({e(u, ev.a_set[i]), e(ev.a_set[i], ev.b_of[i]), e(ev.b_of[i], v)});
    }
    return out;
}

bool some_path_rainbow(const std::vector<std::vector<EdgeId>>& paths, const std::vector<Color>& c) {
    for (const auto& p : paths) {
        bool ok = true;
        for (std::size_t i = 0; i < p.size() && ok; ++i) {
            for (std::size_t j = 0; j < i && ok; ++j) {
                ok = c[p[i]] != c[p[j]];
            }
        }
        if (ok) {
            return true;
        }
    }
    return false;
}

}  // namespace

TEST_SUITE("dense-coloring") {
TEST_CASE("random colorings are seeded and in range") {
    Graph g = clique_graph(10);
    auto a = random_k_coloring(g, 3, 5);
    CHECK(a == random_k_coloring(g, 3, 5));
    CHECK_FALSE(a == random_k_coloring(g, 3, 6));
    CHECK(a.num_colors == 3);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        auto wide = static_cast<unsigned __int128>(counter_hash(5, static_cast<std::uint64_t>(e))) * 3u;
        CHECK(a[e] == static_cast<Color>(wide >> 64));
    }
    CHECK_THROWS_AS(random_k_coloring(g, 0, 1), GraphError);
}

TEST_CASE("Las Vegas coloring") {
    auto k5 = las_vegas_rc3(clique_graph(5), 1, 10);
    REQUIRE(k5.coloring.has_value());
    CHECK(k5.iterations == 1);
    auto star = las_vegas_rc3(star_graph(9), 1, 200);
    CHECK_FALSE(star.coloring.has_value());
    CHECK(star.iterations == 200);

    Graph g = gnp_graph(40, 0.8, 3);
    auto r = las_vegas_rc3(g, 9, 50);
    REQUIRE(r.coloring.has_value());
    CHECK(is_rainbow_connected(g, *r.coloring).connected);
    CHECK(r.coloring->num_colors == 3);
}

TEST_CASE("common-neighbor threshold") {
    CHECK(default_common_threshold(128) == 14);
    CHECK(default_common_threshold(2) == 2);
    CHECK(default_common_threshold(100) == 14);
    CHECK(default_common_threshold(1) == 0);
}

TEST_CASE("pair evidence") {
    Graph c5 = cycle_graph(5);
    CHECK(pair_evidence(c5, 0, 1, 14).kind == EvidenceCase::Adjacent);

    CaseEvidence ev = pair_evidence(c5, 0, 2, 14);
    CHECK(ev.kind == EvidenceCase::ViaB);
    CHECK(ev.common == std::vector<Vertex>{1});
    CHECK(ev.a_set == std::vector<Vertex>{4});
    CHECK(ev.b_set == std::vector<Vertex>{3});
    CHECK(ev.b_of == std::vector<Vertex>{3});

    CaseEvidence cn = pair_evidence(cycle_graph(4), 0, 2, 1);
    CHECK(cn.kind == EvidenceCase::CommonNeighbors);
    CHECK(cn.common == std::vector<Vertex>{1, 3});

    CHECK_THROWS_AS(pair_evidence(path_graph(4), 0, 3, 2), DiameterViolation);
    CHECK_THROWS_AS(pair_evidence(c5, 0, 0, 2), GraphError);
}

TEST_CASE("evidence paths are edge-disjoint apart from shared last edges") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = gnp_graph(20, 0.5, 100 + trial);
        if (diameter(g) != 2) {
            continue;
        }
        for (Vertex u = 0; u < 20; ++u) {
            for (Vertex v = u + 1; v < 20; ++v) {
                if (g.adjacent(u, v)) {
                    continue;
                }
                CaseEvidence ev = pair_evidence(g, u, v, 1 + trial % 6);
                std::vector<int> uses(static_cast<std::size_t>(g.num_edges()), 0);
                for (const auto& p : evidence_paths(g, ev)) {
                    for (std::size_t i = 0; i < p.size(); ++i) {
                        bool last_shared = ev.kind == EvidenceCase::ViaB && i == 2;
                        if (!last_shared) {
                            ++uses[p[i]];
                        }
                    }
                }
                for (int x : uses) {
                    CHECK(x <= 1);
                }
            }
        }
    }
}

TEST_CASE("derandomized 3-coloring basics") {
    auto k6 = derand_rc3(clique_graph(6));
    CHECK(k6.initial_estimator == 0.0);
    CHECK(k6.verified);

    auto c5 = derand_rc3(cycle_graph(5));
    CHECK(c5.monotone);
    CHECK(c5.verified == is_rainbow_connected(cycle_graph(5), c5.coloring).connected);

    CHECK_THROWS_AS(derand_rc3(cycle_graph(6)), DiameterViolation);
}

TEST_CASE("dense random graph gets a verified 3-coloring") {
    Graph g = gnp_graph(128, 0.7, 1);
    REQUIRE(diameter(g) == 2);
    auto r = derand_rc3(g);
    CHECK(r.initial_estimator < 1.0);
    CHECK(r.verified);
    CHECK(r.monotone);
    CHECK(r.coloring.num_colors == 3);
}

TEST_CASE("estimator equals the exact failure expectation") {
    // enumerate all 3^m colorings of small diameter-2 graphs
    std::mt19937_64 rng(62);
    int tested = 0;
    for (int trial = 0; trial < 400 && tested < 25; ++trial) {
        Graph g = oracle::random_connected_graph(rng, 5 + trial % 3, 0.5);
        if (g.num_edges() > 9 || diameter(g) != 2) {
            continue;
        }
        ++tested;
        int threshold = 1 + trial % 3;
        std::vector<std::vector<std::vector<EdgeId>>> families;
        for (Vertex u = 0; u < g.num_vertices(); ++u) {
            for (Vertex v = u + 1; v < g.num_vertices(); ++v) {
                if (!g.adjacent(u, v)) {
                    families.push_back(evidence_paths(g, pair_evidence(g, u, v, threshold)));
                }
            }
        }
        double failures = 0;
        double total = 0;
        oracle::any_coloring(g.num_edges(), 3, [&](const std::vector<Color>& c) {
            for (const auto& f : families) {
                failures += some_path_rainbow(f, c) ? 0 : 1;
            }
            total += 1;
            return false;
        });
        auto r = derand_rc3(g, threshold);
        CHECK(r.initial_estimator == doctest::Approx(failures / total).epsilon(1e-12));
        double final_failures = 0;
        for (const auto& f : families) {
            final_failures += some_path_rainbow(f, r.coloring.colors) ? 0 : 1;
        }
        CHECK(r.final_estimator == doctest::Approx(final_failures).epsilon(1e-12));
        CHECK(r.monotone);
    }
    CHECK(tested >= 10);
}

TEST_CASE("trace reports every edge and never rises") {
    Graph g = gnp_graph(30, 0.6, 4);
    REQUIRE(diameter(g) <= 2);
    std::vector<double> totals;
    std::vector<EdgeId> edges;
    auto r = derand_rc3(g, 3, [&](EdgeId e, Color c, double total) {
        edges.push_back(e);
        CHECK(c >= 0);
        CHECK(c < 3);
        totals.push_back(total);
    });
    REQUIRE(static_cast<int>(totals.size()) == g.num_edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        CHECK(edges[static_cast<std::size_t>(e)] == e);
    }
    double prev = r.initial_estimator;
    for (double t : totals) {
        CHECK(t <= prev + 1e-12 * std::max(1.0, prev));
        prev = t;
    }
    CHECK(totals.back() == doctest::Approx(r.final_estimator));
}

TEST_CASE("small initial estimate always verifies") {
    int small = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = gnp_graph(24 + static_cast<int>(seed % 3) * 8, 0.75, seed);
        if (diameter(g) != 2) {
            continue;
        }
        auto r = derand_rc3(g);
        CHECK(r.monotone);
        if (r.initial_estimator < 1.0) {
            ++small;
            CHECK(r.verified);
        }
    }
    CHECK(small > 0);
}
}
