#include <doctest.h>

#include <algorithm>

#include "zdg/error.hpp"
#include "zdg/zdgraph.hpp"

using namespace zdg;

namespace {

// Explicit class graph: every support appears twice so that same-support
// pairs are represented. Distances by Floyd-Warshall, independent of the
// library's BFS kernels.
struct Brute {
    std::vector<PeriodicSet> support;  // per vertex
    std::vector<std::vector<int>> adj, dist;
    std::size_t n = 0;

    explicit Brute(const ZdGraph& g) {
        auto pts = g.locality().elements();
        std::size_t k = pts.size();
        for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << k); ++mask) {
            std::vector<Point> s;
            for (std::size_t i = 0; i < k; ++i)
                if (mask >> i & 1) s.push_back(pts[i]);
            auto set = PeriodicSet::points(s);
            if (!g.admissible(set)) continue;
            support.push_back(set);
            support.push_back(set);
        }
        n = support.size();
        const int inf = 1 << 20;
        adj.assign(n, std::vector<int>(n, 0));
        dist.assign(n, std::vector<int>(n, inf));
        for (std::size_t i = 0; i < n; ++i) {
            dist[i][i] = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && support[i].disjoint_from(support[j])) adj[i][j] = 1, dist[i][j] = 1;
        }
        for (std::size_t m = 0; m < n; ++m)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) dist[i][j] = std::min(dist[i][j], dist[i][m] + dist[m][j]);
    }

    int ecc(std::size_t i) const { return *std::max_element(dist[i].begin(), dist[i].end()); }

    bool common(std::size_t i, std::size_t j) const {
        for (std::size_t m = 0; m < n; ++m)
            if (adj[i][m] && adj[j][m]) return true;
        return false;
    }

    // Shortest cycle through vertex i: closing a path that leaves by one
    // neighbor and returns by another, found by BFS avoiding i.
    int girth() const {
        int best = 0;
        for (std::size_t s = 0; s < n; ++s) {
            std::vector<int> d(n, -1), parent(n, -1);
            std::vector<std::size_t> q{s};
            d[s] = 0;
            for (std::size_t h = 0; h < q.size(); ++h) {
                std::size_t x = q[h];
                for (std::size_t y = 0; y < n; ++y) {
                    if (!adj[x][y]) continue;
                    if (d[y] < 0) {
                        d[y] = d[x] + 1;
                        parent[y] = static_cast<int>(x);
                        q.push_back(y);
                    } else if (parent[x] != static_cast<int>(y)) {
                        int len = d[x] + d[y] + 1;
                        if (best == 0 || len < best) best = len;
                    }
                }
            }
        }
        return best;
    }
};

ZdGraph model(const char* ground, const char* ideal, GraphFlavor f = GraphFlavor::CP) {
    return ZdGraph(parse_model(ground, ideal), f);
}

}  // namespace

TEST_CASE("vertex verdicts") {
    auto g = model("finite:4", "powerset:{0,1,2}");
    CHECK(g.is_vertex(PeriodicSet::points({0, 1})).is_vertex);
    CHECK_FALSE(g.is_vertex(PeriodicSet::empty()).is_vertex);
    CHECK_FALSE(g.is_vertex(PeriodicSet::points({0, 3})).is_vertex);
    CHECK_FALSE(g.is_vertex(PeriodicSet::points({0, 1, 2})).is_vertex);
    CHECK_FALSE(g.is_vertex(PeriodicSet::points({9})).is_vertex);
    CHECK_THROWS_AS(g.vertex(PeriodicSet::points({0, 1, 2})), PreconditionError);

    auto fin = model("countable", "finite");
    CHECK(fin.is_vertex(PeriodicSet::range(0, 50)).is_vertex);
    CHECK_FALSE(fin.is_vertex(PeriodicSet::evens()).is_vertex);
    CHECK_FALSE(fin.full_regime());

    auto inf = model("countable", "finite", GraphFlavor::CPInfinity);
    CHECK(inf.is_vertex(PeriodicSet::evens()).is_vertex);
    CHECK_FALSE(inf.is_vertex(PeriodicSet::naturals()).is_vertex);
    CHECK(inf.full_regime());

    CHECK(parse_flavor("cpinf") == GraphFlavor::CPInfinity);
    CHECK_THROWS_AS(parse_flavor("cx"), InvalidInput);
}

TEST_CASE("classes from different graphs are rejected") {
    auto g = model("finite:3", "all");
    auto h = model("finite:4", "all");
    auto u = g.vertex(PeriodicSet::singleton(0));
    auto v = h.vertex(PeriodicSet::singleton(1));
    CHECK_THROWS_AS(g.adjacent(u, v), PreconditionError);
    CHECK_THROWS_AS(g.distance(u, g.vertex(PeriodicSet::singleton(1)), true), PreconditionError);
}

TEST_CASE("eccentricity example and witness") {
    auto g = model("finite:4", "powerset:{0,1,2}");
    auto e = g.eccentricity(g.vertex(PeriodicSet::points({0, 1})));
    CHECK(e.value == 3);
    REQUIRE(e.witness);
    CHECK(e.witness->support() == PeriodicSet::points({1, 2}));
    CHECK(g.distance(g.vertex(PeriodicSet::points({0, 1})), *e.witness) == 3);
    CHECK(g.eccentricity(g.vertex(PeriodicSet::singleton(2))).value == 2);

    // infinite supports pick their least point
    auto all = model("countable", "all");
    auto w = all.eccentricity(all.vertex(PeriodicSet::evens()));
    CHECK(w.value == 3);
    CHECK(w.witness->support() == parse_set("odds add {0}"));
    auto cof = all.eccentricity(all.vertex(PeriodicSet::cofinite(std::vector<Point>{0})));
    CHECK(cof.value == 3);
    CHECK(cof.witness->support() == PeriodicSet::points({0, 1}));

    // finite supports never reach distance 3 under the finite ideal
    auto fin = model("countable", "finite");
    CHECK(fin.eccentricity(fin.vertex(PeriodicSet::range(0, 10))).value == 2);
}

TEST_CASE("reports on the reference models") {
    struct Row {
        const char* ground;
        const char* ideal;
        GraphFlavor flavor;
        int diameter, girth;
        bool tri, hyper, comp;
        Cardinal clique;
    };
    const Cardinal inf = Cardinal::countably_infinite();
    std::vector<Row> rows{
        {"finite:3", "powerset:{0,1}", GraphFlavor::CP, 2, 4, false, false, true, Cardinal::finite(2)},
        {"finite:4", "powerset:{0,1,2}", GraphFlavor::CP, 3, 3, false, false, true, Cardinal::finite(3)},
        {"finite:3", "all", GraphFlavor::CP, 3, 3, false, false, true, Cardinal::finite(3)},
        {"countable", "finite", GraphFlavor::CP, 2, 3, true, true, false, inf},
        {"countable", "finite", GraphFlavor::CPInfinity, 3, 3, false, false, true, inf},
        {"countable", "all", GraphFlavor::CP, 3, 3, false, false, true, inf},
        {"countable", "powerset:{0..4}", GraphFlavor::CP, 3, 3, false, false, true, Cardinal::finite(5)},
    };
    for (const auto& r : rows) {
        CAPTURE(r.ground);
        CAPTURE(r.ideal);
        auto rep = ZdGraph(parse_model(r.ground, r.ideal), r.flavor).report();
        CHECK(rep.diameter == r.diameter);
        CHECK(rep.radius == 2);
        CHECK(rep.girth == r.girth);
        CHECK(rep.triangulated == r.tri);
        CHECK(rep.hypertriangulated == r.hyper);
        CHECK(rep.complemented == r.comp);
        CHECK(rep.uniquely_complemented == r.comp);
        CHECK(rep.clique == r.clique);
        CHECK(rep.chromatic == r.clique);
        CHECK(rep.dominating_upper_bound == r.clique);
    }
}

TEST_CASE("empty graphs refuse global queries") {
    for (const char* ideal : {"powerset:{2}", "powerset:{}"}) {
        auto g = model("finite:3", ideal);
        CHECK_THROWS_AS(g.report(), EmptyGraph);
        CHECK_THROWS_AS(g.girth(), EmptyGraph);
        CHECK_THROWS_AS(g.chromatic_number(), EmptyGraph);
    }
    CHECK_THROWS_AS(model("finite:1", "all").diameter_and_radius(), EmptyGraph);
}

TEST_CASE("regime B: finite supports on N") {
    auto g = model("countable", "finite");
    auto a = g.vertex(PeriodicSet::points({0, 1}));
    auto b = g.vertex(PeriodicSet::points({1, 2}));
    CHECK(g.distance(a, b) == 2);
    CHECK(g.smallest_cycle_through(a, b) == 4);
    CHECK(g.common_neighbor(a, b)->support() == PeriodicSet::singleton(3));
    CHECK_FALSE(g.complement_class(a));
    CHECK(g.on_triangle(a));
    CHECK(g.color_of(b) == 1);
    CHECK(g.dominating_neighbor(a).support() == PeriodicSet::singleton(2));
    CHECK(g.dominating_set().canonical_set_description == "{1_x : x in nat}");
}

TEST_CASE("complements in the full regime") {
    auto g = model("countable", "all");
    auto e = g.vertex(PeriodicSet::evens());
    auto c = g.complement_class(e);
    REQUIRE(c);
    CHECK(c->support() == PeriodicSet::odds());
    CHECK(g.orthogonal(e, *c));
    CHECK(g.smallest_cycle_through(e, *c) == 4);
    auto tri = g.is_hypertriangulated();
    REQUIRE(tri.counterexample);
    CHECK(tri.counterexample->first.support() == PeriodicSet::evens());
}

TEST_CASE("property: closed forms match the explicit class graph") {
    std::vector<std::pair<const char*, const char*>> models{
        {"finite:2", "all"},
        {"finite:3", "all"},
        {"finite:4", "all"},
        {"finite:5", "all"},
        {"finite:5", "powerset:{1,3}"},
        {"finite:5", "powerset:{0,2,4}"},
        {"finite:6", "powerset:{0,1,3,5}"},
        {"countable", "powerset:{0,3,4,7,9}"},
    };
    for (auto [ground, ideal] : models) {
        for (GraphFlavor f : {GraphFlavor::CP, GraphFlavor::CPInfinity}) {
            CAPTURE(ground);
            CAPTURE(ideal);
            ZdGraph g(parse_model(ground, ideal), f);
            Brute b(g);
            auto cls = [&](std::size_t i) { return g.vertex(b.support[i]); };

            int diam = 0, rad = 1 << 20;
            bool triangulated = true, hyper = true, complemented = true, unique = true;
            for (std::size_t i = 0; i < b.n; ++i) {
                auto u = cls(i);
                CHECK(g.eccentricity(u).value == b.ecc(i));
                diam = std::max(diam, b.ecc(i));
                rad = std::min(rad, b.ecc(i));
                bool on_tri = false;
                std::vector<std::size_t> orth;
                for (std::size_t j = 0; j < b.n; ++j) {
                    if (i == j) continue;
                    bool same = b.support[i] == b.support[j];
                    auto v = cls(j);
                    REQUIRE(g.distance(u, v, same) == b.dist[i][j]);
                    if (!b.adj[i][j]) continue;
                    bool c = b.common(i, j);
                    on_tri = on_tri || c;
                    hyper = hyper && c;
                    CHECK(g.orthogonal(u, v) == !c);
                    if (!c) orth.push_back(j);
                }
                CHECK(g.on_triangle(u) == on_tri);
                triangulated = triangulated && on_tri;
                complemented = complemented && !orth.empty();
                for (std::size_t a = 1; a < orth.size(); ++a) unique = unique && b.adj[orth[0]] == b.adj[orth[a]];
            }
            auto rep = g.report();
            CHECK(rep.diameter == diam);
            CHECK(rep.radius == rad);
            CHECK(rep.girth == b.girth());
            CHECK(rep.triangulated == triangulated);
            CHECK(rep.hypertriangulated == hyper);
            CHECK(rep.complemented == complemented);
            CHECK(rep.uniquely_complemented == (complemented && unique));
        }
    }
}

TEST_CASE("report json") {
    auto g = model("countable", "finite");
    auto j = report_to_json(g.report(), g);
    CHECK(j.find("\"clique\": \"countably_infinite\"") != std::string::npos);
    CHECK(j.find("\"diameter\": 2") != std::string::npos);
    CHECK(j.find("\"flavor\": \"cp\"") != std::string::npos);
}
