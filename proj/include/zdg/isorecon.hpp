#pragma once

// Recovering a ring isomorphism from a bare graph isomorphism between two
// blow-ups of finite-sets-ideal models.
//
// Atoms are the vertices r*1_x. In the finite regime they are exactly the
// vertices of eccentricity 2. In the infinite regime (a finite window of an
// infinite K) they are the non-isolated vertices lying on no 5-cycle
// v-a-b-c-d-v with b, c both outside the closed neighborhood of v; every
// other non-isolated vertex g sits on g - 1_y - 1_y1 - 1_y2 - 2*1_y - g.
// Atoms with equal neighborhoods form one class per point.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zdg/blowup.hpp"

namespace zdg {

enum class Regime { Finite, Infinite };

std::string to_string(Regime r);
Regime parse_regime(std::string_view text);  // "finite" | "infinite"

enum class ReconFailure {
    EmptyGraph,
    ChromaticMismatch,
    NotIsomorphism,
    AtomCountMismatch,
    AtomToNonAtom,
    RegimeMismatch,
    LabelMismatch,
};

class ReconstructionError : public std::runtime_error {
public:
    ReconstructionError(ReconFailure kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ReconFailure kind() const { return kind_; }

private:
    ReconFailure kind_;
};

// Abstract graphs carry no annotations; ids are 0..n-1.
using AbstractGraph = Graph;

// psi[i] is the image of vertex i.
using VertexMap = std::vector<std::size_t>;

// Parses [[i, j], ...]; every vertex 0..n-1 must occur exactly once on each
// side. Throws InvalidInput.
VertexMap parse_psi(std::string_view json, std::size_t n);
std::string psi_to_json(const VertexMap& psi);

// Throws ReconstructionError (RegimeMismatch, EmptyGraph).
std::vector<std::vector<std::size_t>> detect_atom_classes(const AbstractGraph& g, Regime regime);

using PointBijection = std::map<Point, Point>;

struct RingIsoDescription {
    PointBijection phi;

    // sum over x of f(x) 1_phi(x); PreconditionError if supp f leaves the domain.
    FinSuppFn apply(const FinSuppFn& f) const;
    std::vector<Point> domain() const;
    std::vector<Point> codomain() const;
};

// Vertex -> support, used only to name the points of atom classes.
struct LabeledGraph {
    AbstractGraph graph;
    std::vector<PeriodicSet> support_of;
};

LabeledGraph labeled(const ExplicitGraph& g);

// Throws ReconstructionError; the chromatic comparison runs first.
RingIsoDescription reconstruct(const LabeledGraph& gx, const LabeledGraph& gy, const VertexMap& psi, Regime regime);

struct IsoVerification {
    bool passed = true;
    std::string failed_law;  // additive | injective | multiplicative | surjective | total
    std::optional<std::pair<FinSuppFn, FinSuppFn>> counterexample;
    std::size_t pairs_checked = 0;
};

IsoVerification verify_ring_iso(const RingIsoDescription& desc, std::size_t sample_budget, std::uint64_t seed = 1);

// {phi: [[x,y],...], verified: bool, counterexample?: {law, f, g}}
std::string iso_result_to_json(const RingIsoDescription& desc, const IsoVerification& v);

// psi taking each vertex f of gx to the vertex t(f) of gy. Throws
// InvalidInput when some t(f) is not a vertex of gy.
VertexMap psi_from_transform(const ExplicitGraph& gx, const ExplicitGraph& gy,
                             const std::function<FinSuppFn(const FinSuppFn&)>& t);

}  // namespace zdg
