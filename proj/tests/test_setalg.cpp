#include <doctest.h>

#include "gen.hpp"
#include "zdg/error.hpp"
#include "zdg/setalg.hpp"

using namespace zdg;

namespace {

constexpr Point kPrefix = 400;

std::vector<bool> prefix(const PeriodicSet& s) {
    std::vector<bool> out(kPrefix);
    for (Point n = 0; n < kPrefix; ++n) out[n] = s.contains(n);
    return out;
}

std::vector<bool> prefix(const SetDescription& d) {
    std::vector<bool> out(kPrefix);
    for (Point n = 0; n < kPrefix; ++n) out[n] = gen::described(d, n);
    return out;
}

}  // namespace

TEST_CASE("basic constructors") {
    CHECK(PeriodicSet::empty().is_empty());
    CHECK(PeriodicSet::naturals().cardinality() == Cardinal::countably_infinite());
    CHECK(PeriodicSet::evens().contains(4));
    CHECK_FALSE(PeriodicSet::evens().contains(5));
    CHECK(PeriodicSet::odds().min() == 1);
    CHECK(PeriodicSet::range(2, 5) == PeriodicSet::points({2, 3, 4}));
    CHECK(PeriodicSet::range(3, 3).is_empty());
    CHECK(PeriodicSet::singleton(7).elements() == std::vector<Point>{7});
    CHECK(PeriodicSet::of(GroundSet::finite(3)) == PeriodicSet::points({0, 1, 2}));
    CHECK(PeriodicSet::of(GroundSet::countable()) == PeriodicSet::naturals());
}

TEST_CASE("canonical form makes equal sets compare equal") {
    SetDescription d;
    d.modulus = 4;
    d.residues = {0, 2};
    CHECK(PeriodicSet::make(d) == PeriodicSet::evens());
    CHECK(PeriodicSet::make(d).modulus() == 2);

    SetDescription e;
    e.modulus = 3;
    e.residues = {0, 1, 2};
    e.remove = {5};
    CHECK(PeriodicSet::make(e) == PeriodicSet::cofinite(std::vector<Point>{5}));
    CHECK(PeriodicSet::make(e).modulus() == 1);

    // finite sets carry no periodic part
    SetDescription f;
    f.intervals = {{3, 6}};
    f.remove = {4};
    auto s = PeriodicSet::make(f);
    CHECK(s.is_finite());
    CHECK(s.residues().empty());
    CHECK(s == PeriodicSet::points({3, 5, 6}));
}

TEST_CASE("cardinality min max sample") {
    auto s = PeriodicSet::points({9, 2, 5});
    CHECK(s.cardinality() == Cardinal::finite(3));
    CHECK(s.min() == 2);
    CHECK(s.max() == 9);
    CHECK(s.sample(2) == std::vector<Point>{2, 5});
    CHECK_THROWS_AS(s.sample(4), PreconditionError);

    auto t = parse_set("mod 5 res {1,3} del {1}");
    CHECK(t.min() == 3);
    CHECK_FALSE(t.max().has_value());
    CHECK(t.sample(4) == std::vector<Point>{3, 6, 8, 11});
    CHECK_THROWS_AS(t.elements(), PreconditionError);
    CHECK_FALSE(PeriodicSet::empty().min().has_value());
}

TEST_CASE("set algebra examples") {
    auto e = PeriodicSet::evens(), o = PeriodicSet::odds();
    CHECK((e | o) == PeriodicSet::naturals());
    CHECK((e & o).is_empty());
    CHECK((PeriodicSet::naturals() - e) == o);
    CHECK(combine(e, PeriodicSet::points({0, 1}), SetOp::SymmetricDifference) == parse_set("evens add {1} del {0}"));
    auto m3 = parse_set("mod 3 res {0}");
    auto m6 = e & m3;
    CHECK(m6 == parse_set("mod 6 res {0}"));
    CHECK(m6.subset_of(e));
    CHECK(m6.subset_of(m3));
    CHECK_FALSE(e.subset_of(m3));
    CHECK(PeriodicSet::points({1, 3}).disjoint_from(e));
}

TEST_CASE("complement inside a ground set") {
    CHECK(complement(PeriodicSet::points({0, 2}), GroundSet::finite(4)) == PeriodicSet::points({1, 3}));
    CHECK(complement(PeriodicSet::evens(), GroundSet::countable()) == PeriodicSet::odds());
    CHECK_THROWS_AS(complement(PeriodicSet::points({5}), GroundSet::finite(3)), PreconditionError);
    CHECK_THROWS_AS(GroundSet::finite(0), InvalidInput);
    CHECK_THROWS(GroundSet::countable().size());
}

TEST_CASE("classify") {
    auto c = classify(PeriodicSet::points({1, 2}));
    CHECK_FALSE(c.is_empty);
    CHECK(c.is_finite);
    CHECK(c.cardinality == Cardinal::finite(2));
    auto d = classify(PeriodicSet::naturals());
    CHECK_FALSE(d.is_finite);
    CHECK(Cardinal::finite(5) < Cardinal::countably_infinite());
    CHECK(Cardinal::countably_infinite().to_string() == "countably_infinite");
}

TEST_CASE("text syntax") {
    CHECK(parse_set("{0,1,5..9}") == PeriodicSet::points({0, 1, 5, 6, 7, 8, 9}));
    CHECK(parse_set("{}").is_empty());
    CHECK(parse_set("empty").is_empty());
    CHECK(parse_set("nat") == PeriodicSet::naturals());
    CHECK(parse_set("cofinite del {0,1}") == PeriodicSet::cofinite(std::vector<Point>{0, 1}));
    CHECK(parse_set(" evens  add {3} ") == (PeriodicSet::evens() | PeriodicSet::singleton(3)));
    CHECK(parse_point_list("{4,2,2,0..1}") == std::vector<Point>{0, 1, 2, 4});
    CHECK(format_point_list(std::vector<Point>{0, 1, 2, 5, 7, 8}) == "{0..2,5,7,8}");

    CHECK_THROWS_AS(parse_set("{1,"), InvalidInput);
    CHECK_THROWS_AS(parse_set("{3..1}"), InvalidInput);
    CHECK_THROWS_AS(parse_set("primes"), InvalidInput);
    CHECK_THROWS_AS(parse_set("mod 0 res {0}"), InvalidInput);
    CHECK_THROWS_AS(parse_set("mod 4 res {5}"), InvalidInput);
    CHECK_THROWS_AS(parse_set("evens add"), InvalidInput);
    CHECK_THROWS_AS(parse_set("{-1}"), InvalidInput);
}

TEST_CASE("printing") {
    CHECK(PeriodicSet::points({0, 1, 2, 4}).to_string() == "{0..2,4}");
    CHECK(PeriodicSet::evens().to_string() == "evens");
    CHECK(PeriodicSet::odds().to_string() == "odds");
    CHECK(PeriodicSet::naturals().to_string() == "nat");
    CHECK(PeriodicSet::empty().to_string() == "{}");
    CHECK(parse_set("mod 3 res {1} add {0}").to_string() == "mod 3 res {1} add {0}");
}

TEST_CASE("modulus limit") {
    SetDescription a, b;
    a.modulus = PeriodicSet::kMaxModulus;
    a.residues = {0};
    b.modulus = PeriodicSet::kMaxModulus - 1;
    b.residues = {0};
    CHECK_THROWS_AS(PeriodicSet::make(a) | PeriodicSet::make(b), InvalidInput);
}

TEST_CASE("property: make agrees with direct evaluation") {
    gen::Rng rng(11);
    for (int i = 0; i < 500; ++i) {
        auto d = gen::set_description(rng);
        auto s = PeriodicSet::make(d);
        REQUIRE(prefix(s) == prefix(d));
        bool infinite = !d.residues.empty();
        CHECK(s.is_finite() == !infinite);
        if (!infinite) {
            std::size_t count = 0;
            for (Point n = 0; n < kPrefix; ++n) count += gen::described(d, n) ? 1 : 0;
            CHECK(s.cardinality() == Cardinal::finite(count));
        }
    }
}

TEST_CASE("property: operations agree pointwise") {
    gen::Rng rng(12);
    for (int i = 0; i < 400; ++i) {
        auto da = gen::set_description(rng), db = gen::set_description(rng);
        auto a = PeriodicSet::make(da), b = PeriodicSet::make(db);
        for (SetOp op : {SetOp::Union, SetOp::Intersection, SetOp::Difference, SetOp::SymmetricDifference}) {
            auto c = combine(a, b, op);
            for (Point n = 0; n < kPrefix; ++n) {
                bool x = gen::described(da, n), y = gen::described(db, n);
                bool want = op == SetOp::Union          ? (x || y)
                            : op == SetOp::Intersection ? (x && y)
                            : op == SetOp::Difference   ? (x && !y)
                                                        : (x != y);
                REQUIRE(c.contains(n) == want);
            }
        }
        CHECK(a.subset_of(b) == (a - b).is_empty());
        CHECK(a.disjoint_from(b) == (a & b).is_empty());
    }
}

TEST_CASE("property: structural equality is set equality") {
    gen::Rng rng(13);
    for (int i = 0; i < 600; ++i) {
        auto a = PeriodicSet::make(gen::set_description(rng, 8));
        auto b = PeriodicSet::make(gen::set_description(rng, 8));
        CHECK((a == b) == (prefix(a) == prefix(b)));
    }
}

TEST_CASE("property: boolean algebra laws") {
    gen::Rng rng(14);
    auto nat = PeriodicSet::naturals();
    for (int i = 0; i < 200; ++i) {
        auto a = PeriodicSet::make(gen::set_description(rng));
        auto b = PeriodicSet::make(gen::set_description(rng));
        auto c = PeriodicSet::make(gen::set_description(rng));
        CHECK((nat - (a | b)) == ((nat - a) & (nat - b)));
        CHECK((nat - (a & b)) == ((nat - a) | (nat - b)));
        CHECK((a & (b | c)) == ((a & b) | (a & c)));
        CHECK((a | (b & c)) == ((a | b) & (a | c)));
        CHECK(((a | b) | c) == (a | (b | c)));
        CHECK((a - a).is_empty());
        CHECK((a | a) == a);
    }
}

TEST_CASE("property: printing round-trips through the parser") {
    gen::Rng rng(15);
    for (int i = 0; i < 500; ++i) {
        auto a = PeriodicSet::make(gen::set_description(rng));
        CHECK(parse_set(a.to_string()) == a);
    }
}

TEST_CASE("property: sample lists the smallest members") {
    gen::Rng rng(16);
    for (int i = 0; i < 200; ++i) {
        auto d = gen::set_description(rng);
        auto a = PeriodicSet::make(d);
        std::vector<Point> want;
        for (Point n = 0; n < kPrefix && want.size() < 5; ++n)
            if (gen::described(d, n)) want.push_back(n);
        if (a.is_finite() && a.elements().size() < 5) continue;
        CHECK(a.sample(5) == want);
        CHECK(a.min() == want.front());
    }
}
