#include "zdg/oracle.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <deque>
#include <json.hpp>

namespace zdg {

namespace detail {

int bfs_distance(const Graph& g, std::size_t s, std::size_t t, const VertexSet& blocked, bool skip_direct_edge) {
    if (s == t) return 0;
    VertexSet visited = blocked;
    visited.set(s);
    VertexSet frontier(g.size());
    frontier.set(s);
    for (int d = 1; frontier.any(); ++d) {
        VertexSet next(g.size());
        frontier.for_each([&](std::size_t x) {
            if (x == s && skip_direct_edge) {
                VertexSet row = g.neighbors(s);
                row.reset(t);
                next |= row;
            } else {
                next |= g.neighbors(x);
            }
        });
        next.subtract(visited);
        if (next.test(t)) return d;
        visited |= next;
        frontier = std::move(next);
    }
    return kUnreachable;
}

std::vector<int> bfs_row(const Graph& g, std::size_t s) {
    std::vector<int> row(g.size(), kUnreachable);
    row[s] = 0;
    VertexSet visited(g.size());
    visited.set(s);
    VertexSet frontier = visited;
    for (int d = 1; frontier.any(); ++d) {
        VertexSet next(g.size());
        frontier.for_each([&](std::size_t x) { next |= g.neighbors(x); });
        next.subtract(visited);
        next.for_each([&](std::size_t x) { row[x] = d; });
        visited |= next;
        frontier = std::move(next);
    }
    return row;
}

namespace {

// Paths u = p0, ..., pa = v with interior avoiding u and v; for each, the
// shortest return path avoiding the interior closes a cycle.
void arc_search(const Graph& g, std::size_t u, std::size_t v, int a, int depth, std::size_t last,
                VertexSet& interior, int& best) {
    if (depth == a - 1) {
        if (!g.adjacent(last, v)) return;
        int b = bfs_distance(g, u, v, interior, false);
        if (b != kUnreachable) best = std::min(best, a + b);
        return;
    }
    VertexSet cand = g.neighbors(last);
    cand.subtract(interior);
    cand.reset(u);
    cand.reset(v);
    for (std::size_t w = cand.first(); w < g.size(); w = cand.next(w + 1)) {
        interior.set(w);
        arc_search(g, u, v, a, depth + 1, w, interior, best);
        interior.reset(w);
        if (2 * a >= best) return;
    }
}

}  // namespace

int cycle_through_flow(const Graph& g, std::size_t u, std::size_t v) {
    if (u == v || g.degree(u) < 2 || g.degree(v) < 2) return 0;
    // in(x) = 2x, out(x) = 2x + 1; inner vertices have an in->out arc of
    // capacity 1, which keeps the two paths internally disjoint.
    struct Arc {
        std::size_t to;
        int cap;
        int cost;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<std::size_t>> out(2 * g.size());
    auto add = [&](std::size_t a, std::size_t b, int cost) {
        out[a].push_back(arcs.size());
        arcs.push_back({b, 1, cost});
        out[b].push_back(arcs.size());
        arcs.push_back({a, 0, -cost});
    };
    for (std::size_t x = 0; x < g.size(); ++x) {
        if (x != u && x != v) add(2 * x, 2 * x + 1, 0);
        g.neighbors(x).for_each([&](std::size_t y) { add(2 * x + 1, 2 * y, 1); });
    }
    const std::size_t s = 2 * u + 1, t = 2 * v;
    int total = 0;
    for (int unit = 0; unit < 2; ++unit) {
        std::vector<int> dist(out.size(), INT_MAX);
        std::vector<std::size_t> via(out.size(), SIZE_MAX);
        std::vector<bool> queued(out.size(), false);
        std::deque<std::size_t> q{s};
        dist[s] = 0;
        while (!q.empty()) {
            std::size_t x = q.front();
            q.pop_front();
            queued[x] = false;
            for (std::size_t a : out[x]) {
                if (arcs[a].cap == 0 || dist[x] + arcs[a].cost >= dist[arcs[a].to]) continue;
                dist[arcs[a].to] = dist[x] + arcs[a].cost;
                via[arcs[a].to] = a;
                if (!queued[arcs[a].to]) {
                    queued[arcs[a].to] = true;
                    q.push_back(arcs[a].to);
                }
            }
        }
        if (dist[t] == INT_MAX) return 0;
        total += dist[t];
        for (std::size_t x = t; x != s;) {
            std::size_t a = via[x];
            arcs[a].cap -= 1;
            arcs[a ^ 1].cap += 1;
            x = arcs[a ^ 1].to;
        }
    }
    return total;
}

int cycle_through_search(const Graph& g, std::size_t u, std::size_t v) {
    if (u == v) return 0;
    // Without a cycle through both the arc enumeration below never stops
    // early, so existence is settled first.
    if (cycle_through_flow(g, u, v) == 0) return 0;
    int best = INT_MAX;
    VertexSet none(g.size());
    if (g.adjacent(u, v)) {
        int b = bfs_distance(g, u, v, none, true);
        if (b != kUnreachable) best = 1 + b;
    }
    // A cycle whose shorter arc has length a is at least 2a long.
    for (int a = 2; 2 * a < best && a < static_cast<int>(g.size()); ++a) {
        VertexSet interior(g.size());
        arc_search(g, u, v, a, 0, u, interior, best);
    }
    return best == INT_MAX ? 0 : best;
}

void chordless_from(const Graph& g, std::size_t s, std::vector<bool>& seen_lengths) {
    // Induced paths s = v0, v1, ..., vk with every vi > s. `far` is the union
    // of N(v1..v(k-1)); a new vertex must avoid it to keep the path induced.
    struct Frame {
        std::size_t last;
        std::size_t k;
        VertexSet far;
        VertexSet on_path;
    };
    const std::size_t n = g.size();
    std::vector<Frame> stack;
    VertexSet start(n);
    start.set(s);
    stack.push_back({s, 0, VertexSet(n), start});
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        VertexSet cand = g.neighbors(f.last);
        cand.subtract(f.far);
        cand.subtract(f.on_path);
        for (std::size_t w = cand.next(s + 1); w < n; w = cand.next(w + 1)) {
            if (f.k >= 1 && g.adjacent(w, s)) {
                seen_lengths[f.k + 2] = true;
                continue;
            }
            Frame next{w, f.k + 1, f.far, f.on_path};
            if (f.k >= 1) next.far |= g.neighbors(f.last);
            next.on_path.set(w);
            stack.push_back(std::move(next));
        }
    }
}

bool on_far_five_cycle(const Graph& g, std::size_t v) {
    VertexSet far(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) far.set(i);
    far.subtract(g.neighbors(v));
    far.reset(v);
    const VertexSet& nv = g.neighbors(v);
    for (std::size_t b = far.first(); b < g.size(); b = far.next(b + 1)) {
        VertexSet a_side = nv & g.neighbors(b);
        if (a_side.none()) continue;
        VertexSet cs = g.neighbors(b) & far;
        for (std::size_t c = cs.first(); c < g.size(); c = cs.next(c + 1)) {
            VertexSet d_side = nv & g.neighbors(c);
            if (d_side.none()) continue;
            // a and d must differ
            if ((a_side | d_side).count() >= 2) return true;
        }
    }
    return false;
}

}  // namespace detail

DistanceMatrix all_pairs_distances(const Graph& g) {
    const std::size_t n = g.size();
    DistanceMatrix d(n);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t s = 0; s < n; ++s) {
        auto row = detail::bfs_row(g, s);
        for (std::size_t t = 0; t < n; ++t) d.at(s, t) = row[t];
    }
    return d;
}

std::vector<int> eccentricities(const DistanceMatrix& d) {
    std::vector<int> e(d.size(), 0);
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = 0; j < d.size(); ++j) {
            if (d.at(i, j) == kUnreachable) {
                e[i] = kUnreachable;
                break;
            }
            e[i] = std::max(e[i], d.at(i, j));
        }
    }
    return e;
}

std::optional<int> girth(const Graph& g) {
    const std::size_t n = g.size();
    int best = INT_MAX;
    std::vector<int> dist(n);
    std::vector<std::size_t> parent(n);
    for (std::size_t r = 0; r < n; ++r) {
        std::fill(dist.begin(), dist.end(), kUnreachable);
        dist[r] = 0;
        parent[r] = r;
        std::deque<std::size_t> q{r};
        while (!q.empty()) {
            std::size_t x = q.front();
            q.pop_front();
            if (2 * dist[x] + 1 >= best) break;
            g.neighbors(x).for_each([&](std::size_t y) {
                if (dist[y] == kUnreachable) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    q.push_back(y);
                } else if (parent[x] != y) {
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            });
        }
    }
    if (best == INT_MAX) return std::nullopt;
    return best;
}

std::optional<int> shortest_cycle_through(const Graph& g, std::size_t u, std::size_t v) {
    int c = detail::cycle_through_flow(g, u, v);
    if (c == 0) return std::nullopt;
    return c;
}

CycleTable all_pairs_cycle_through(const Graph& g) {
    const std::size_t n = g.size();
    CycleTable t(n);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t u = 0; u < n; ++u) {
        t.at(u, u) = 0;
        for (std::size_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    const long long m = static_cast<long long>(pairs.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (long long k = 0; k < m; ++k) {
        auto [u, v] = pairs[static_cast<std::size_t>(k)];
        int c = detail::cycle_through_flow(g, u, v);
        t.at(u, v) = c;
        t.at(v, u) = c;
    }
    return t;
}

bool on_triangle(const Graph& g, std::size_t v) {
    const VertexSet& nv = g.neighbors(v);
    for (std::size_t u = nv.first(); u < g.size(); u = nv.next(u + 1))
        if (nv.intersects(g.neighbors(u))) return true;
    return false;
}

bool edge_on_triangle(const Graph& g, std::size_t u, std::size_t v) {
    return g.adjacent(u, v) && g.neighbors(u).intersects(g.neighbors(v));
}

bool orthogonal(const Graph& g, std::size_t u, std::size_t v) {
    return g.adjacent(u, v) && !g.neighbors(u).intersects(g.neighbors(v));
}

std::vector<int> chordless_cycle_lengths(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<bool> seen(n + 3, false);
#pragma omp parallel
    {
        std::vector<bool> local(n + 3, false);
#pragma omp for schedule(dynamic)
        for (std::size_t s = 0; s < n; ++s) detail::chordless_from(g, s, local);
#pragma omp critical
        for (std::size_t i = 0; i < local.size(); ++i)
            if (local[i]) seen[i] = true;
    }
    std::vector<int> out;
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (seen[i]) out.push_back(static_cast<int>(i));
    return out;
}

VertexSet far_five_cycle_vertices(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<char> hit(n, 0);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t v = 0; v < n; ++v) hit[v] = detail::on_far_five_cycle(g, v) ? 1 : 0;
    VertexSet out(n);
    for (std::size_t v = 0; v < n; ++v)
        if (hit[v]) out.set(v);
    return out;
}

std::vector<std::vector<std::size_t>> twin_classes(const Graph& g) {
    std::vector<std::vector<std::size_t>> classes;
    std::vector<bool> placed(g.size(), false);
    for (std::size_t u = 0; u < g.size(); ++u) {
        if (placed[u]) continue;
        classes.push_back({u});
        for (std::size_t v = u + 1; v < g.size(); ++v) {
            if (!placed[v] && g.neighbors(v) == g.neighbors(u)) {
                placed[v] = true;
                classes.back().push_back(v);
            }
        }
    }
    return classes;
}

namespace {

Graph twin_quotient(const Graph& g) {
    auto classes = twin_classes(g);
    Graph q(classes.size());
    for (std::size_t a = 0; a < classes.size(); ++a)
        for (std::size_t b = a + 1; b < classes.size(); ++b)
            if (g.adjacent(classes[a][0], classes[b][0])) q.add_edge(a, b);
    return q;
}

struct CliqueSearch {
    const Graph& g;
    std::size_t budget;
    std::size_t nodes = 0;
    std::size_t best = 0;
    bool aborted = false;

    void expand(std::size_t r, VertexSet p) {
        if (++nodes > budget) {
            aborted = true;
            return;
        }
        if (p.none()) {
            best = std::max(best, r);
            return;
        }
        for (std::size_t v = p.first(); v < g.size(); v = p.next(v + 1)) {
            if (r + p.count() <= best || aborted) return;
            expand(r + 1, p & g.neighbors(v));
            p.reset(v);
        }
    }
};

struct ColoringSearch {
    const Graph& g;
    std::size_t budget;
    std::size_t lower;
    std::vector<int> color;
    std::size_t nodes = 0;
    std::size_t best;
    bool aborted = false;

    ColoringSearch(const Graph& graph, std::size_t node_budget, std::size_t lb)
        : g(graph), budget(node_budget), lower(lb), color(graph.size(), -1), best(graph.size()) {}

    // Uncolored vertex with the most distinct neighbor colors, ties by degree.
    std::size_t pick(std::size_t k, std::vector<char>& used) const {
        std::size_t arg = g.size();
        std::size_t best_sat = 0, best_deg = 0;
        for (std::size_t v = 0; v < g.size(); ++v) {
            if (color[v] >= 0) continue;
            std::fill(used.begin(), used.begin() + static_cast<long>(k), 0);
            std::size_t sat = 0;
            g.neighbors(v).for_each([&](std::size_t u) {
                if (color[u] >= 0 && !used[static_cast<std::size_t>(color[u])]) {
                    used[static_cast<std::size_t>(color[u])] = 1;
                    ++sat;
                }
            });
            std::size_t deg = g.degree(v);
            if (arg == g.size() || sat > best_sat || (sat == best_sat && deg > best_deg)) {
                arg = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return arg;
    }

    std::size_t greedy() {
        std::vector<char> used(g.size() + 1);
        std::size_t k = 0;
        for (std::size_t step = 0; step < g.size(); ++step) {
            std::size_t v = pick(k, used);
            std::fill(used.begin(), used.end(), 0);
            g.neighbors(v).for_each([&](std::size_t u) {
                if (color[u] >= 0) used[static_cast<std::size_t>(color[u])] = 1;
            });
            std::size_t c = 0;
            while (used[c]) ++c;
            color[v] = static_cast<int>(c);
            k = std::max(k, c + 1);
        }
        std::fill(color.begin(), color.end(), -1);
        return k;
    }

    void search(std::size_t colored, std::size_t k) {
        if (aborted || best == lower) return;
        if (++nodes > budget) {
            aborted = true;
            return;
        }
        if (colored == g.size()) {
            best = std::min(best, k);
            return;
        }
        std::vector<char> used(g.size() + 1, 0);
        std::size_t v = pick(k, used);
        std::fill(used.begin(), used.end(), 0);
        g.neighbors(v).for_each([&](std::size_t u) {
            if (color[u] >= 0) used[static_cast<std::size_t>(color[u])] = 1;
        });
        for (std::size_t c = 0; c < k; ++c) {
            if (used[c]) continue;
            color[v] = static_cast<int>(c);
            search(colored + 1, k);
            color[v] = -1;
            if (aborted || best == lower) return;
        }
        if (k + 1 < best) {
            color[v] = static_cast<int>(k);
            search(colored + 1, k + 1);
            color[v] = -1;
        }
    }
};

struct DominationSearch {
    const Graph& g;
    std::size_t budget;
    std::vector<VertexSet> closed;
    VertexSet all;
    std::size_t nodes = 0;
    std::size_t best;
    bool aborted = false;

    DominationSearch(const Graph& graph, std::size_t node_budget)
        : g(graph), budget(node_budget), all(graph.size()), best(graph.size()) {
        for (std::size_t v = 0; v < g.size(); ++v) {
            closed.push_back(g.neighbors(v));
            closed.back().set(v);
            all.set(v);
        }
    }

    std::size_t greedy() const {
        VertexSet dom(g.size());
        std::size_t k = 0;
        while (dom != all) {
            std::size_t arg = 0, gain = 0;
            for (std::size_t w = 0; w < g.size(); ++w) {
                VertexSet c = closed[w];
                c.subtract(dom);
                if (c.count() > gain) {
                    gain = c.count();
                    arg = w;
                }
            }
            dom |= closed[arg];
            ++k;
        }
        return k;
    }

    void search(const VertexSet& dom, std::size_t k) {
        if (aborted) return;
        if (++nodes > budget) {
            aborted = true;
            return;
        }
        if (dom == all) {
            best = std::min(best, k);
            return;
        }
        if (k + 1 >= best) return;
        VertexSet open = all;
        open.subtract(dom);
        std::size_t undominated = open.count();
        std::size_t max_gain = 1;
        for (std::size_t w = 0; w < g.size(); ++w) max_gain = std::max(max_gain, (closed[w] & open).count());
        if (k + (undominated + max_gain - 1) / max_gain >= best) return;
        // Branch on the undominated vertex with the fewest dominators.
        std::size_t u = open.first();
        for (std::size_t x = open.first(); x < g.size(); x = open.next(x + 1))
            if (closed[x].count() < closed[u].count()) u = x;
        std::vector<std::pair<std::size_t, std::size_t>> options;
        closed[u].for_each([&](std::size_t w) { options.emplace_back((closed[w] & open).count(), w); });
        std::sort(options.begin(), options.end(), [](auto a, auto b) {
            return a.first != b.first ? a.first > b.first : a.second < b.second;
        });
        for (auto [gain, w] : options) {
            search(dom | closed[w], k + 1);
            if (aborted) return;
        }
    }
};

}  // namespace

ExactValue clique_number(const Graph& g, std::size_t node_budget) {
    Graph q = twin_quotient(g);
    CliqueSearch s{q, node_budget};
    VertexSet p(q.size());
    for (std::size_t v = 0; v < q.size(); ++v) p.set(v);
    s.expand(0, p);
    return {s.best, !s.aborted};
}

ExactValue chromatic_number(const Graph& g, std::size_t node_budget) {
    Graph q = twin_quotient(g);
    if (q.size() == 0) return {0, true};
    ExactValue lb = clique_number(q, node_budget);
    ColoringSearch s(q, node_budget, lb.value);
    s.best = s.greedy();
    s.search(0, 0);
    return {s.best, !s.aborted && lb.exact};
}

ExactValue domination_number(const Graph& g, std::size_t node_budget) {
    if (g.size() == 0) return {0, true};
    DominationSearch s(g, node_budget);
    s.best = s.greedy();
    s.search(VertexSet(g.size()), 0);
    return {s.best, !s.aborted};
}

OracleMetrics oracle_metrics(const Graph& g, const OracleOptions& opt) {
    OracleMetrics m;
    m.vertex_count = g.size();
    m.edge_count = g.edge_count();
    m.distances = opt.parallel ? all_pairs_distances(g) : serial::all_pairs_distances(g);
    m.eccentricities = eccentricities(m.distances);
    bool connected = g.size() > 0 && std::none_of(m.eccentricities.begin(), m.eccentricities.end(),
                                                  [](int e) { return e == kUnreachable; });
    if (connected) {
        m.diameter = *std::max_element(m.eccentricities.begin(), m.eccentricities.end());
        m.radius = *std::min_element(m.eccentricities.begin(), m.eccentricities.end());
    }
    m.girth = girth(g);
    m.clique = clique_number(g, opt.node_budget);
    m.chromatic = chromatic_number(g, opt.node_budget);
    m.domination = domination_number(g, opt.node_budget);
    m.chordless_cycle_lengths = opt.parallel ? chordless_cycle_lengths(g) : serial::chordless_cycle_lengths(g);
    if (opt.cycles_through_pairs)
        m.cycle_through = opt.parallel ? all_pairs_cycle_through(g) : serial::all_pairs_cycle_through(g);
    m.complete = m.clique.exact && m.chromatic.exact && m.domination.exact;
    return m;
}

std::string metrics_to_json(const OracleMetrics& m) {
    using nlohmann::ordered_json;
    auto exact = [](const ExactValue& v) {
        ordered_json j;
        j["value"] = v.value;
        j["exact"] = v.exact;
        return j;
    };
    auto matrix = [](const DistanceMatrix& d) {
        ordered_json rows = ordered_json::array();
        for (std::size_t i = 0; i < d.size(); ++i) {
            ordered_json row = ordered_json::array();
            for (std::size_t k = 0; k < d.size(); ++k) row.push_back(d.at(i, k));
            rows.push_back(std::move(row));
        }
        return rows;
    };
    ordered_json j;
    j["vertex_count"] = m.vertex_count;
    j["edge_count"] = m.edge_count;
    j["diameter"] = m.diameter;
    j["radius"] = m.radius;
    j["girth"] = m.girth ? ordered_json(*m.girth) : ordered_json(nullptr);
    j["clique"] = exact(m.clique);
    j["chromatic"] = exact(m.chromatic);
    j["domination"] = exact(m.domination);
    j["chordless_cycle_lengths"] = m.chordless_cycle_lengths;
    j["eccentricities"] = m.eccentricities;
    j["complete"] = m.complete;
    j["distances"] = matrix(m.distances);
    if (m.cycle_through.size() > 0) j["cycle_through"] = matrix(m.cycle_through);
    return j.dump(2);
}

}  // namespace zdg
