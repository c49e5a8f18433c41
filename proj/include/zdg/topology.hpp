#pragma once

// Discrete space models (X, P): a ground set together with an ideal of closed
// sets. Every subset of a discrete space is clopen, so closure and interior
// act as the identity and the locality region X_P is {x : {x} in P}.

#include <string>
#include <string_view>
#include <variant>

#include "zdg/setalg.hpp"

namespace zdg {

struct AllClosed {
    bool operator==(const AllClosed&) const = default;
};
struct FiniteSets {
    bool operator==(const FiniteSets&) const = default;
};
struct PowerSetOf {
    PeriodicSet generator;  // finite
    bool operator==(const PowerSetOf&) const = default;
};

using ClosedSetIdeal = std::variant<AllClosed, FiniteSets, PowerSetOf>;

std::string to_string(const ClosedSetIdeal& ideal);

class SpaceModel {
public:
    // Throws InvalidInput when a PowerSetOf generator is infinite or leaves
    // the ground set.
    SpaceModel(GroundSet ground, ClosedSetIdeal ideal);

    const GroundSet& ground() const { return ground_; }
    const ClosedSetIdeal& ideal() const { return ideal_; }
    const PeriodicSet& ground_points() const { return ground_points_; }

    bool operator==(const SpaceModel&) const = default;

    // "ground=finite:3 ideal=powerset:{0,1}"
    std::string to_string() const;

private:
    GroundSet ground_;
    ClosedSetIdeal ideal_;
    PeriodicSet ground_points_;
};

// `ground`: "finite:N" | "countable"; `ideal`: "all" | "finite" | "powerset:<set>".
SpaceModel parse_model(std::string_view ground, std::string_view ideal);

// Throws PreconditionError when s is not contained in the ground set.
bool ideal_member(const SpaceModel& model, const PeriodicSet& s);

PeriodicSet locality_region(const SpaceModel& model);

// cl(X_P) in P; closure is the identity on discrete spaces.
bool closure_of_locality_in_ideal(const SpaceModel& model);

struct ModelValidation {
    bool vertex_set_nonempty;
    Cardinal locality_size;
};

ModelValidation validate_model(const SpaceModel& model);

// Support of a function f in C_P(X) with x in coz(f) and supp f inside the
// open set g. The discrete witness is always {x}.
PeriodicSet witness_support(const SpaceModel& model, Point x, const PeriodicSet& g);

}  // namespace zdg
