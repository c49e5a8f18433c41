#pragma once

// Class-level semantics of the zero-divisor graphs of C_P(X) and C^P_inf(X)
// over discrete models.
//
// Two functions with the same support are indistinguishable in the graph
// except that they are never adjacent to each other (f * 2f != 0). Every
// graph question is therefore answered on support classes: a VertexClass is
// a support set S, and the blow-up of S is the set of functions with
// cozero set exactly S.
//
// Admissible supports:
//   CP          S in the ideal P.
//   CPInfinity  S contained in X_P. For FiniteSets on N a function decaying
//               to zero along S (e.g. 1/(n+1)) has every level set finite;
//               for AllClosed every subset is admissible anyway; for
//               PowerSetOf(M) the level sets must lie inside M, so the rule
//               again reads S subset of M = X_P.
//
// Consequently there are only two regimes. Either X_P itself is admissible
// (every subset of X_P is a support, "full" regime), or the model is
// (N, FiniteSets) in the CP flavor, where supports are the finite sets.

#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "zdg/topology.hpp"

namespace zdg {

enum class GraphFlavor { CP, CPInfinity };

std::string to_string(GraphFlavor f);
GraphFlavor parse_flavor(std::string_view text);  // "cp" | "cpinf"

class VertexClass {
public:
    const PeriodicSet& support() const { return support_; }
    GraphFlavor flavor() const { return flavor_; }
    const SpaceModel& model() const { return *model_; }

    bool operator==(const VertexClass& o) const {
        return flavor_ == o.flavor_ && support_ == o.support_ && *model_ == *o.model_;
    }

private:
    friend class ZdGraph;
    VertexClass(PeriodicSet support, GraphFlavor flavor, std::shared_ptr<const SpaceModel> model)
        : support_(std::move(support)), flavor_(flavor), model_(std::move(model)) {}

    PeriodicSet support_;
    GraphFlavor flavor_;
    std::shared_ptr<const SpaceModel> model_;
};

struct VertexVerdict {
    bool is_vertex;
    std::string reason;
};

struct Eccentricity {
    int value;                          // 2 or 3
    std::optional<VertexClass> witness;  // a class at distance 3 when value == 3
};

struct DiameterRadius {
    int diameter;
    int radius;
    std::string center_description;
    std::optional<std::pair<VertexClass, VertexClass>> diameter_witness;
};

struct Triangulation {
    bool holds;
    std::optional<VertexClass> counterexample;  // a vertex on no triangle
};

struct Hypertriangulation {
    bool holds;
    std::optional<std::pair<VertexClass, VertexClass>> counterexample;  // an edge on no triangle
};

struct DominatingSet {
    std::string canonical_set_description;
    Cardinal upper_bound;
};

struct GraphReport {
    int diameter;
    int radius;
    int girth;
    bool triangulated;
    bool hypertriangulated;
    bool complemented;
    bool uniquely_complemented;
    Cardinal clique;
    Cardinal chromatic;
    Cardinal dominating_upper_bound;
};

class ZdGraph {
public:
    ZdGraph(SpaceModel model, GraphFlavor flavor);

    const SpaceModel& model() const { return *model_; }
    GraphFlavor flavor() const { return flavor_; }
    const PeriodicSet& locality() const { return locality_; }
    // X_P is an admissible support: every subset of X_P is one.
    bool full_regime() const { return full_regime_; }

    bool admissible(const PeriodicSet& s) const;
    VertexVerdict is_vertex(const PeriodicSet& s) const;
    // Throws PreconditionError when s is not a vertex support.
    VertexClass vertex(const PeriodicSet& s) const;

    bool adjacent(const VertexClass& u, const VertexClass& v) const;
    std::optional<VertexClass> common_neighbor(const VertexClass& u, const VertexClass& v) const;
    // same_class marks two distinct functions sharing one support.
    int distance(const VertexClass& u, const VertexClass& v, bool same_class = false) const;
    Eccentricity eccentricity(const VertexClass& u) const;
    DiameterRadius diameter_and_radius() const;
    int girth() const;
    int smallest_cycle_through(const VertexClass& u, const VertexClass& v, bool same_class = false) const;

    bool on_triangle(const VertexClass& u) const;
    Triangulation is_triangulated() const;
    Hypertriangulation is_hypertriangulated() const;

    bool orthogonal(const VertexClass& u, const VertexClass& v) const;
    std::optional<VertexClass> complement_class(const VertexClass& u) const;
    bool is_complemented() const;
    bool is_uniquely_complemented() const;

    Cardinal clique_number() const;
    Cardinal chromatic_number() const;
    Point color_of(const VertexClass& u) const;
    DominatingSet dominating_set() const;
    // A CP singleton class adjacent to u; CP vertices dominate both graphs.
    VertexClass dominating_neighbor(const VertexClass& u) const;

    GraphReport report() const;

private:
    void require_nonempty() const;
    void require_own(const VertexClass& u) const;
    // X_P minus (S union T)
    PeriodicSet uncovered(const VertexClass& u, const VertexClass& v) const;

    std::shared_ptr<const SpaceModel> model_;
    GraphFlavor flavor_;
    PeriodicSet locality_;
    bool full_regime_;
};

// Flat JSON document; Cardinals are numbers or "countably_infinite".
std::string report_to_json(const GraphReport& r, const ZdGraph& g);

}  // namespace zdg
