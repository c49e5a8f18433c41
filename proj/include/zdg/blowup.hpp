#pragma once

// Explicit finite pieces of the zero-divisor graph: every function whose
// support lies in a finite window and whose values come from a finite
// alphabet, with edges decided by the ring product. The graph is handed to
// the oracle and the closed forms of zdgraph are checked against it.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zdg/graph.hpp"
#include "zdg/oracle.hpp"
#include "zdg/ring.hpp"
#include "zdg/zdgraph.hpp"

namespace zdg {

// Fault injection for harness sanity runs.
enum class Mutation {
    None,
    IntraClassEdges,  // join the first two members of every class
    DropFirstEdge,
};

std::vector<Rational> default_alphabet();  // {1, 2}
// "1,2,-1/2" with optional braces.
std::vector<Rational> parse_alphabet(std::string_view text);
std::string format_alphabet(const std::vector<Rational>& alphabet);

struct BlowupSpec {
    SpaceModel model;
    GraphFlavor flavor = GraphFlavor::CP;
    PeriodicSet window;  // finite, inside X_P
    std::vector<Rational> alphabet = default_alphabet();
    std::size_t cap = 200;
    Mutation mutation = Mutation::None;
};

// (|A|+1)^|W| - 1 - |A|^|W| [W = X_P], saturating at UINT64_MAX.
std::uint64_t expected_vertex_count(const BlowupSpec& spec);

struct ExplicitGraph {
    std::optional<SpaceModel> model;
    GraphFlavor flavor = GraphFlavor::CP;
    Graph graph;
    std::vector<FinSuppFn> vertices;
    std::vector<std::size_t> class_of;  // vertex -> class id
    std::vector<PeriodicSet> classes;   // class id -> support

    std::size_t size() const { return vertices.size(); }
    std::optional<std::size_t> find(const FinSuppFn& f) const;
    std::vector<std::size_t> members(std::size_t class_id) const;
};

// Vertices are listed in mixed-radix order over the window (its smallest
// point is the fastest digit); class ids follow the window bitmask of the
// support. Throws CapExceeded, or InvalidInput for a bad window/alphabet.
ExplicitGraph generate(const BlowupSpec& spec);

std::string to_dot(const ExplicitGraph& g);
std::string to_json(const ExplicitGraph& g);
ExplicitGraph graph_from_json(std::string_view text);

struct Discrepancy {
    std::string tag;
    std::string model;
    std::string witness;
    std::string expected;
    std::string observed;
};

struct CrossCheckOptions {
    std::optional<std::string> only;  // run a single tag
    bool parallel = true;
    std::size_t examples_per_tag = 20;
};

struct CrossCheckReport {
    std::string model;
    std::vector<Discrepancy> discrepancies;       // at most examples_per_tag per tag
    std::map<std::string, std::size_t> checks;    // checks run per tag
    std::map<std::string, std::size_t> failures;  // failures per tag
    bool passed() const { return failures.empty(); }
};

// Tags accepted by CrossCheckOptions::only, in execution order.
const std::vector<std::string>& cross_check_tags();

// Window-faithful comparison of the closed forms against the oracle. When
// the window is all of X_P every prediction is checked; otherwise a pair
// (S, T) is only checked when the window still has a point outside S u T,
// and whole-graph quantities (eccentricity, diameter, exact domination) are
// skipped. Cycle-length checks need at least two alphabet values.
CrossCheckReport cross_check(const BlowupSpec& spec, const CrossCheckOptions& opt = {});

}  // namespace zdg
