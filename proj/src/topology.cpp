#include "zdg/topology.hpp"

#include <charconv>

#include "zdg/error.hpp"

namespace zdg {

std::string to_string(const ClosedSetIdeal& ideal) {
    struct Visitor {
        std::string operator()(const AllClosed&) const { return "all"; }
        std::string operator()(const FiniteSets&) const { return "finite"; }
        std::string operator()(const PowerSetOf& p) const { return "powerset:" + p.generator.to_string(); }
    };
    return std::visit(Visitor{}, ideal);
}

SpaceModel::SpaceModel(GroundSet ground, ClosedSetIdeal ideal)
    : ground_(ground), ideal_(std::move(ideal)), ground_points_(PeriodicSet::of(ground_)) {
    if (const auto* p = std::get_if<PowerSetOf>(&ideal_)) {
        if (!p->generator.is_finite()) throw InvalidInput("powerset ideal needs a finite generator");
        if (!p->generator.subset_of(ground_points_))
            throw InvalidInput("powerset generator " + p->generator.to_string() + " leaves the ground set");
    }
}

std::string SpaceModel::to_string() const {
    return "ground=" + ground_.to_string() + " ideal=" + zdg::to_string(ideal_);
}

SpaceModel parse_model(std::string_view ground, std::string_view ideal) {
    GroundSet g = GroundSet::countable();
    if (ground.starts_with("finite:")) {
        auto digits = ground.substr(7);
        std::uint64_t n = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
        if (ec != std::errc() || ptr != digits.data() + digits.size())
            throw InvalidInput("bad ground size in '" + std::string(ground) + "'");
        g = GroundSet::finite(n);
    } else if (ground != "countable") {
        throw InvalidInput("ground must be finite:N or countable, got '" + std::string(ground) + "'");
    }

    ClosedSetIdeal id;
    if (ideal == "all")
        id = AllClosed{};
    else if (ideal == "finite")
        id = FiniteSets{};
    else if (ideal.starts_with("powerset:"))
        id = PowerSetOf{parse_set(ideal.substr(9))};
    else
        throw InvalidInput("ideal must be all, finite or powerset:<set>, got '" + std::string(ideal) + "'");
    return SpaceModel(g, std::move(id));
}

bool ideal_member(const SpaceModel& model, const PeriodicSet& s) {
    if (!s.subset_of(model.ground_points()))
        throw PreconditionError("set " + s.to_string() + " is not contained in the ground set");
    struct Visitor {
        const PeriodicSet& s;
        bool operator()(const AllClosed&) const { return true; }
        bool operator()(const FiniteSets&) const { return s.is_finite(); }
        bool operator()(const PowerSetOf& p) const { return s.subset_of(p.generator); }
    };
    return std::visit(Visitor{s}, model.ideal());
}

PeriodicSet locality_region(const SpaceModel& model) {
    if (const auto* p = std::get_if<PowerSetOf>(&model.ideal())) return p->generator;
    return model.ground_points();
}

bool closure_of_locality_in_ideal(const SpaceModel& model) {
    return ideal_member(model, locality_region(model));
}

ModelValidation validate_model(const SpaceModel& model) {
    Cardinal size = locality_region(model).cardinality();
    return {size >= Cardinal::finite(2), size};
}

PeriodicSet witness_support(const SpaceModel& model, Point x, const PeriodicSet& g) {
    if (!locality_region(model).contains(x))
        throw PreconditionError("point " + std::to_string(x) + " is outside the locality region");
    if (!g.contains(x)) throw PreconditionError("point " + std::to_string(x) + " is not in the neighbourhood");
    return PeriodicSet::singleton(x);
}

}  // namespace zdg
