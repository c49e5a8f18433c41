#pragma once

// Brute-force graph invariants on explicit finite graphs. These are the
// independent oracles the closed forms are checked against, so nothing in
// here knows about supports or rings.
//
// The kernels in namespace zdg are OpenMP-parallel over sources, pairs or
// start vertices. zdg::serial holds straightforward single-threaded
// versions of the same kernels; tests require both to agree exactly.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "zdg/graph.hpp"

namespace zdg {

inline constexpr int kUnreachable = -1;

class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, kUnreachable) {}
    std::size_t size() const { return n_; }
    int at(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
    int& at(std::size_t i, std::size_t j) { return d_[i * n_ + j]; }
    bool operator==(const DistanceMatrix&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<int> d_;
};

// Length of the shortest cycle through each pair (0 on the diagonal, 0 when
// no cycle passes through both).
using CycleTable = DistanceMatrix;

// Row i: BFS distances from i.
DistanceMatrix all_pairs_distances(const Graph& g);
// Per-vertex eccentricity; kUnreachable when some vertex cannot be reached.
std::vector<int> eccentricities(const DistanceMatrix& d);

std::optional<int> girth(const Graph& g);

std::optional<int> shortest_cycle_through(const Graph& g, std::size_t u, std::size_t v);
CycleTable all_pairs_cycle_through(const Graph& g);

bool on_triangle(const Graph& g, std::size_t v);
bool edge_on_triangle(const Graph& g, std::size_t u, std::size_t v);

// Adjacent with no common neighbor.
bool orthogonal(const Graph& g, std::size_t u, std::size_t v);

// Sorted distinct lengths of chordless (induced) cycles.
std::vector<int> chordless_cycle_lengths(const Graph& g);

// Vertices v on a 5-cycle v-a-b-c-d-v whose far edge b-c avoids the closed
// neighborhood of v. Singleton-support vertices never lie on one.
VertexSet far_five_cycle_vertices(const Graph& g);

// Vertices sharing one open neighborhood, grouped; groups ordered by their
// smallest member.
std::vector<std::vector<std::size_t>> twin_classes(const Graph& g);

struct ExactValue {
    std::size_t value = 0;
    bool exact = true;  // false when the node budget ran out
    bool operator==(const ExactValue&) const = default;
};

inline constexpr std::size_t kDefaultNodeBudget = 20'000'000;

// Clique and chromatic number are computed on the twin quotient (twins are
// never adjacent, so they share colors and never share a clique).
ExactValue clique_number(const Graph& g, std::size_t node_budget = kDefaultNodeBudget);
ExactValue chromatic_number(const Graph& g, std::size_t node_budget = kDefaultNodeBudget);
ExactValue domination_number(const Graph& g, std::size_t node_budget = kDefaultNodeBudget);

struct OracleOptions {
    bool parallel = true;
    std::size_t node_budget = kDefaultNodeBudget;
    bool cycles_through_pairs = true;  // the most expensive kernel
};

struct OracleMetrics {
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    DistanceMatrix distances;
    std::vector<int> eccentricities;
    int diameter = kUnreachable;  // kUnreachable when disconnected
    int radius = kUnreachable;
    std::optional<int> girth;
    ExactValue clique;
    ExactValue chromatic;
    ExactValue domination;
    std::vector<int> chordless_cycle_lengths;
    CycleTable cycle_through;  // empty unless requested
    bool complete = true;
};

OracleMetrics oracle_metrics(const Graph& g, const OracleOptions& opt = {});

// Deterministic JSON rendering (the distance matrix is included row by row).
std::string metrics_to_json(const OracleMetrics& m);

namespace serial {

DistanceMatrix all_pairs_distances(const Graph& g);
CycleTable all_pairs_cycle_through(const Graph& g);
std::vector<int> chordless_cycle_lengths(const Graph& g);
VertexSet far_five_cycle_vertices(const Graph& g);

}  // namespace serial

namespace detail {

// BFS distance from s to t avoiding `blocked`, optionally ignoring the edge
// s-t itself. kUnreachable when there is no such path.
int bfs_distance(const Graph& g, std::size_t s, std::size_t t, const VertexSet& blocked, bool skip_direct_edge);
std::vector<int> bfs_row(const Graph& g, std::size_t s);
// Shortest cycle through u and v, 0 when none. The flow version sends two
// units of min-cost flow through vertex-split copies of g (two internally
// disjoint u-v paths of least total length); the search version enumerates
// the shorter arc and closes it by BFS.
int cycle_through_flow(const Graph& g, std::size_t u, std::size_t v);
int cycle_through_search(const Graph& g, std::size_t u, std::size_t v);
void chordless_from(const Graph& g, std::size_t s, std::vector<bool>& seen_lengths);
bool on_far_five_cycle(const Graph& g, std::size_t v);

}  // namespace detail

}  // namespace zdg
