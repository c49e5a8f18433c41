#pragma once

// Hand-rolled random generators shared by the property tests.

#include <random>
#include <vector>

#include "zdg/graph.hpp"
#include "zdg/ring.hpp"

namespace gen {

using Rng = std::mt19937;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

// A set description with small period and exceptions below `span`.
inline zdg::SetDescription set_description(Rng& rng, zdg::Point span = 40) {
    zdg::SetDescription d;
    d.modulus = static_cast<std::uint64_t>(uniform(rng, 1, 6));
    if (coin(rng, 0.7))
        for (std::uint64_t r = 0; r < d.modulus; ++r)
            if (coin(rng, 0.4)) d.residues.push_back(r);
    int k = uniform(rng, 0, 2);
    for (int i = 0; i < k; ++i) {
        auto lo = static_cast<zdg::Point>(uniform(rng, 0, static_cast<int>(span)));
        d.intervals.emplace_back(lo, lo + static_cast<zdg::Point>(uniform(rng, 0, 6)));
    }
    for (int i = uniform(rng, 0, 5); i > 0; --i) d.add.push_back(static_cast<zdg::Point>(uniform(rng, 0, int(span))));
    for (int i = uniform(rng, 0, 5); i > 0; --i)
        d.remove.push_back(static_cast<zdg::Point>(uniform(rng, 0, int(span))));
    return d;
}

// Direct evaluation of a description, independent of PeriodicSet.
inline bool described(const zdg::SetDescription& d, zdg::Point n) {
    for (auto x : d.remove)
        if (x == n) return false;
    for (auto x : d.add)
        if (x == n) return true;
    for (auto [lo, hi] : d.intervals)
        if (lo <= n && n <= hi) return true;
    for (auto r : d.residues)
        if (n % d.modulus == r) return true;
    return false;
}

inline std::vector<zdg::Point> subset(Rng& rng, const std::vector<zdg::Point>& pts, double p = 0.5) {
    std::vector<zdg::Point> out;
    for (auto x : pts)
        if (coin(rng, p)) out.push_back(x);
    return out;
}

inline zdg::Rational small_rational(Rng& rng) {
    int num = uniform(rng, -6, 6);
    if (num == 0) num = 1;
    zdg::Rational q(num, uniform(rng, 1, 4));
    q.canonicalize();
    return q;
}

inline zdg::FinSuppFn function_on(Rng& rng, const std::vector<zdg::Point>& pts, double p = 0.5) {
    std::map<zdg::Point, zdg::Rational> v;
    for (auto x : pts)
        if (coin(rng, p)) v.emplace(x, small_rational(rng));
    return zdg::FinSuppFn(std::move(v));
}

inline zdg::Graph random_graph(Rng& rng, std::size_t n, double p) {
    zdg::Graph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (coin(rng, p)) g.add_edge(u, v);
    return g;
}

inline zdg::Graph cycle(std::size_t n) {
    zdg::Graph g(n);
    for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline zdg::Graph complete(std::size_t n) {
    zdg::Graph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline zdg::Graph petersen() {
    zdg::Graph g(10);
    for (std::size_t i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    return g;
}

}  // namespace gen
