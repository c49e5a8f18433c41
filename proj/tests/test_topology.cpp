#include <doctest.h>

#include "zdg/error.hpp"
#include "zdg/topology.hpp"

using namespace zdg;

TEST_CASE("model parsing and printing") {
    auto m = parse_model("finite:3", "powerset:{0,1}");
    CHECK(m.ground() == GroundSet::finite(3));
    CHECK(std::get<PowerSetOf>(m.ideal()).generator == PeriodicSet::points({0, 1}));
    CHECK(m.to_string() == "ground=finite:3 ideal=powerset:{0,1}");
    CHECK(parse_model("countable", "finite").to_string() == "ground=countable ideal=finite");
    CHECK(parse_model("countable", "all") == SpaceModel(GroundSet::countable(), AllClosed{}));

    CHECK_THROWS_AS(parse_model("finite:x", "all"), InvalidInput);
    CHECK_THROWS_AS(parse_model("finite:", "all"), InvalidInput);
    CHECK_THROWS_AS(parse_model("finite:0", "all"), InvalidInput);
    CHECK_THROWS_AS(parse_model("reals", "all"), InvalidInput);
    CHECK_THROWS_AS(parse_model("finite:3", "compact"), InvalidInput);
    CHECK_THROWS_AS(parse_model("finite:3", "powerset:{0,5}"), InvalidInput);
    CHECK_THROWS_AS(parse_model("countable", "powerset:evens"), InvalidInput);
}

TEST_CASE("ideal membership") {
    auto fin = parse_model("countable", "finite");
    CHECK(ideal_member(fin, PeriodicSet::points({1, 2, 3})));
    CHECK_FALSE(ideal_member(fin, PeriodicSet::evens()));
    CHECK(ideal_member(fin, PeriodicSet::empty()));

    auto all = parse_model("countable", "all");
    CHECK(ideal_member(all, PeriodicSet::odds()));

    auto pow = parse_model("finite:5", "powerset:{1,3}");
    CHECK(ideal_member(pow, PeriodicSet::singleton(3)));
    CHECK_FALSE(ideal_member(pow, PeriodicSet::points({1, 2})));
    CHECK_THROWS_AS(ideal_member(pow, PeriodicSet::singleton(7)), PreconditionError);
}

TEST_CASE("locality region") {
    CHECK(locality_region(parse_model("finite:4", "all")) == PeriodicSet::range(0, 4));
    CHECK(locality_region(parse_model("countable", "finite")) == PeriodicSet::naturals());
    CHECK(locality_region(parse_model("countable", "powerset:{2,9}")) == PeriodicSet::points({2, 9}));

    CHECK(closure_of_locality_in_ideal(parse_model("finite:4", "all")));
    CHECK(closure_of_locality_in_ideal(parse_model("countable", "powerset:{2,9}")));
    CHECK_FALSE(closure_of_locality_in_ideal(parse_model("countable", "finite")));
}

TEST_CASE("validation counts the locality region") {
    auto v = validate_model(parse_model("finite:4", "powerset:{1}"));
    CHECK_FALSE(v.vertex_set_nonempty);
    CHECK(v.locality_size == Cardinal::finite(1));
    CHECK_FALSE(validate_model(parse_model("finite:4", "powerset:{}")).vertex_set_nonempty);
    CHECK(validate_model(parse_model("finite:2", "all")).vertex_set_nonempty);
    auto c = validate_model(parse_model("countable", "finite"));
    CHECK(c.vertex_set_nonempty);
    CHECK(c.locality_size == Cardinal::countably_infinite());
}

TEST_CASE("witness support is the singleton") {
    auto m = parse_model("finite:5", "powerset:{0,2,4}");
    CHECK(witness_support(m, 2, PeriodicSet::points({1, 2})) == PeriodicSet::singleton(2));
    CHECK_THROWS_AS(witness_support(m, 1, PeriodicSet::points({1, 2})), PreconditionError);
    CHECK_THROWS_AS(witness_support(m, 4, PeriodicSet::points({1, 2})), PreconditionError);
}
