#include "zdg/zdgraph.hpp"

#include <json.hpp>

#include "zdg/error.hpp"

namespace zdg {

std::string to_string(GraphFlavor f) { return f == GraphFlavor::CP ? "cp" : "cpinf"; }

GraphFlavor parse_flavor(std::string_view text) {
    if (text == "cp") return GraphFlavor::CP;
    if (text == "cpinf") return GraphFlavor::CPInfinity;
    throw InvalidInput("flavor must be cp or cpinf, got '" + std::string(text) + "'");
}

ZdGraph::ZdGraph(SpaceModel model, GraphFlavor flavor)
    : model_(std::make_shared<const SpaceModel>(std::move(model))),
      flavor_(flavor),
      locality_(locality_region(*model_)),
      full_regime_(admissible(locality_)) {}

bool ZdGraph::admissible(const PeriodicSet& s) const {
    if (flavor_ == GraphFlavor::CP) return s.subset_of(locality_) && ideal_member(*model_, s);
    return s.subset_of(locality_);
}

VertexVerdict ZdGraph::is_vertex(const PeriodicSet& s) const {
    if (!s.subset_of(model_->ground_points())) return {false, "support leaves the ground set"};
    if (s.is_empty()) return {false, "zero function"};
    if (!s.subset_of(locality_)) return {false, "support leaves X_P"};
    if (!admissible(s))
        return {false, flavor_ == GraphFlavor::CP ? "support not in the ideal" : "support not admissible"};
    if ((locality_ - s).is_empty()) return {false, "support covers X_P, so f is not a zero divisor"};
    return {true, "nonempty admissible support with a zero in X_P"};
}

VertexClass ZdGraph::vertex(const PeriodicSet& s) const {
    auto verdict = is_vertex(s);
    if (!verdict.is_vertex) throw PreconditionError(s.to_string() + " is not a vertex support: " + verdict.reason);
    return VertexClass(s, flavor_, model_);
}

void ZdGraph::require_nonempty() const {
    if (!validate_model(*model_).vertex_set_nonempty)
        throw EmptyGraph("|X_P| < 2, the graph has no vertices (Th 2.12)");
}

void ZdGraph::require_own(const VertexClass& u) const {
    if (u.flavor() != flavor_) throw PreconditionError("vertex class of a different graph flavor");
    if (u.model() != *model_) throw PreconditionError("vertex class of a different model");
}

PeriodicSet ZdGraph::uncovered(const VertexClass& u, const VertexClass& v) const {
    return locality_ - (u.support() | v.support());
}

bool ZdGraph::adjacent(const VertexClass& u, const VertexClass& v) const {
    require_own(u);
    require_own(v);
    return u.support().disjoint_from(v.support());
}

std::optional<VertexClass> ZdGraph::common_neighbor(const VertexClass& u, const VertexClass& v) const {
    require_own(u);
    require_own(v);
    auto free = uncovered(u, v);
    if (free.is_empty()) return std::nullopt;
    return vertex(PeriodicSet::singleton(*free.min()));
}

int ZdGraph::distance(const VertexClass& u, const VertexClass& v, bool same_class) const {
    require_own(u);
    require_own(v);
    if (same_class) {
        if (u.support() != v.support()) throw PreconditionError("same_class pair with different supports");
        return 2;
    }
    if (u.support().disjoint_from(v.support())) return 1;
    return uncovered(u, v).is_empty() ? 3 : 2;
}

Eccentricity ZdGraph::eccentricity(const VertexClass& u) const {
    require_own(u);
    // e(u) = 3 iff some vertex T meets S and S u T covers X_P. Admissible
    // families are downward closed, so the smallest candidate
    // (X_P \ S) + {s} decides it; it is a vertex as soon as |S| >= 2.
    const PeriodicSet& s = u.support();
    if (s.cardinality() < Cardinal::finite(2)) return {2, std::nullopt};
    Point pick = s.is_finite() ? *s.max() : *s.min();
    PeriodicSet t = (locality_ - s) | PeriodicSet::singleton(pick);
    if (!admissible(t)) return {2, std::nullopt};
    return {3, vertex(t)};
}

DiameterRadius ZdGraph::diameter_and_radius() const {
    require_nonempty();
    DiameterRadius out{2, 2, "all vertex classes (self-centric)", std::nullopt};
    // Singleton classes always have eccentricity 2, so the radius is 2.
    if (full_regime_ && locality_.cardinality() >= Cardinal::finite(3)) {
        auto pts = locality_.sample(2);
        auto u = vertex(PeriodicSet::points({pts[0], pts[1]}));
        auto e = eccentricity(u);
        out.diameter = 3;
        out.center_description = "singleton-support classes r*1_x";
        out.diameter_witness = std::make_pair(u, *e.witness);
    }
    return out;
}

int ZdGraph::girth() const {
    require_nonempty();
    return locality_.cardinality() >= Cardinal::finite(3) ? 3 : 4;
}

int ZdGraph::smallest_cycle_through(const VertexClass& u, const VertexClass& v, bool same_class) const {
    require_own(u);
    require_own(v);
    if (same_class && u.support() != v.support())
        throw PreconditionError("same_class pair with different supports");
    bool disjoint = u.support().disjoint_from(v.support());
    bool common = !uncovered(u, v).is_empty();
    if (disjoint) return common ? 3 : 4;
    return common ? 4 : 6;
}

bool ZdGraph::on_triangle(const VertexClass& u) const {
    require_own(u);
    return (locality_ - u.support()).cardinality() >= Cardinal::finite(2);
}

Triangulation ZdGraph::is_triangulated() const {
    require_nonempty();
    if (!full_regime_) return {true, std::nullopt};
    // X_P minus one point is a vertex with a single zero in X_P.
    return {false, vertex(locality_ - PeriodicSet::singleton(*locality_.min()))};
}

Hypertriangulation ZdGraph::is_hypertriangulated() const {
    require_nonempty();
    if (!full_regime_) return {true, std::nullopt};
    PeriodicSet a, b;
    if (locality_.is_finite()) {
        a = PeriodicSet::singleton(*locality_.min());
        b = locality_ - a;
    } else {
        a = locality_ & PeriodicSet::evens();
        b = locality_ & PeriodicSet::odds();
    }
    return {false, std::make_pair(vertex(a), vertex(b))};
}

bool ZdGraph::orthogonal(const VertexClass& u, const VertexClass& v) const {
    return adjacent(u, v) && uncovered(u, v).is_empty();
}

std::optional<VertexClass> ZdGraph::complement_class(const VertexClass& u) const {
    require_own(u);
    PeriodicSet rest = locality_ - u.support();
    if (!admissible(rest)) return std::nullopt;
    return vertex(rest);
}

bool ZdGraph::is_complemented() const {
    require_nonempty();
    return full_regime_;
}

bool ZdGraph::is_uniquely_complemented() const { return is_complemented(); }

Cardinal ZdGraph::clique_number() const {
    require_nonempty();
    return locality_.cardinality();
}

Cardinal ZdGraph::chromatic_number() const {
    require_nonempty();
    return locality_.cardinality();
}

Point ZdGraph::color_of(const VertexClass& u) const {
    require_own(u);
    return *u.support().min();
}

DominatingSet ZdGraph::dominating_set() const {
    require_nonempty();
    return {"{1_x : x in " + locality_.to_string() + "}", locality_.cardinality()};
}

VertexClass ZdGraph::dominating_neighbor(const VertexClass& u) const {
    require_own(u);
    Point x = *(locality_ - u.support()).min();
    return VertexClass(PeriodicSet::singleton(x), GraphFlavor::CP, model_);
}

GraphReport ZdGraph::report() const {
    auto dr = diameter_and_radius();
    return GraphReport{dr.diameter,
                       dr.radius,
                       girth(),
                       is_triangulated().holds,
                       is_hypertriangulated().holds,
                       is_complemented(),
                       is_uniquely_complemented(),
                       clique_number(),
                       chromatic_number(),
                       dominating_set().upper_bound};
}

namespace {

nlohmann::ordered_json cardinal_json(const Cardinal& c) {
    if (c.is_finite()) return c.value();
    return c.to_string();
}

}  // namespace

std::string report_to_json(const GraphReport& r, const ZdGraph& g) {
    nlohmann::ordered_json j;
    j["model"] = g.model().to_string();
    j["flavor"] = to_string(g.flavor());
    j["diameter"] = r.diameter;
    j["radius"] = r.radius;
    j["girth"] = r.girth;
    j["triangulated"] = r.triangulated;
    j["hypertriangulated"] = r.hypertriangulated;
    j["complemented"] = r.complemented;
    j["uniquely_complemented"] = r.uniquely_complemented;
    j["clique"] = cardinal_json(r.clique);
    j["chromatic"] = cardinal_json(r.chromatic);
    j["dominating_upper_bound"] = cardinal_json(r.dominating_upper_bound);
    return j.dump(2);
}

}  // namespace zdg
