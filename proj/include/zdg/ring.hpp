#pragma once

// Exact arithmetic in C_P(X) restricted to finitely supported functions with
// rational values, plus the annihilator / hull / minimal-prime machinery on
// models whose minimal primes can be enumerated.
//
// Every prime of these rings is P_x = {f : f(x) = 0} for some x in X_P
// (the orthogonal idempotents 1_x force it), so a minimal prime is stored
// as its index point and f in P_x is decided by evaluating f(x).

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "zdg/topology.hpp"

namespace zdg {

using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& q);

class FinSuppFn {
public:
    FinSuppFn() = default;
    explicit FinSuppFn(std::map<Point, Rational> values);

    static FinSuppFn unit(Point x);  // 1_x
    static FinSuppFn indicator(const PeriodicSet& finite_set);

    Rational operator()(Point x) const;
    const std::map<Point, Rational>& values() const { return values_; }
    bool is_zero() const { return values_.empty(); }
    PeriodicSet support() const;

    FinSuppFn& operator+=(const FinSuppFn& o);
    FinSuppFn& operator-=(const FinSuppFn& o);
    FinSuppFn& operator*=(const FinSuppFn& o);
    FinSuppFn scaled(const Rational& r) const;

    friend FinSuppFn operator+(FinSuppFn a, const FinSuppFn& b) { return a += b; }
    friend FinSuppFn operator-(FinSuppFn a, const FinSuppFn& b) { return a -= b; }
    friend FinSuppFn operator*(FinSuppFn a, const FinSuppFn& b) { return a *= b; }
    friend FinSuppFn operator-(const FinSuppFn& a) { return a.scaled(-1); }
    friend FinSuppFn operator*(const Rational& r, const FinSuppFn& f) { return f.scaled(r); }

    bool operator==(const FinSuppFn& o) const { return values_ == o.values_; }
    bool operator<(const FinSuppFn& o) const { return values_ < o.values_; }

    // "{0:5, 1:-2/3}"
    std::string to_string() const;

private:
    std::map<Point, Rational> values_;  // no zero values
};

FinSuppFn parse_function(std::string_view text);

// f lies in C_P(X): its support is a member of the ideal.
bool in_ring(const SpaceModel& model, const FinSuppFn& f);
void require_in_ring(const SpaceModel& model, const FinSuppFn& f);

enum class RingOp { Add, Mul, Negate, Scale };

// `b` is ignored for Negate and Scale; `r` is only used by Scale.
FinSuppFn ring_ops(const SpaceModel& model, const FinSuppFn& a, const FinSuppFn& b, RingOp op,
                   const Rational& r = 0);

// A(f) = {g in C_P(X) : supp g inside region}.
struct AnnihilatorClass {
    PeriodicSet region;
    SpaceModel model;
    bool of_zero = false;  // A(0) is the whole ring

    bool contains(const FinSuppFn& g) const;
};

AnnihilatorClass annihilator(const SpaceModel& model, const FinSuppFn& f);

// h(f) and h(A(f)) as sets of prime index points. Throws UnsupportedModel on
// (N, AllClosed).
PeriodicSet hull(const SpaceModel& model, const FinSuppFn& f);
PeriodicSet hull_of_annihilator(const SpaceModel& model, const FinSuppFn& f);

// Indicator of X_P \ supp f when it lies in the ring. On (N, AllClosed) the
// complement exists but is not finitely supported: UnsupportedModel.
std::optional<FinSuppFn> complement_element(const SpaceModel& model, const FinSuppFn& f);

struct MinimalPrimeSpace {
    PeriodicSet index_set;
    bool compact;
};

MinimalPrimeSpace minimal_prime_space(const SpaceModel& model);

// g = (g - g(x) 1_x) + (g(x)/f(x)) (1_x f), the first part in M_x and the
// second in the ideal generated by f.
struct MaximalIdealDecomposition {
    FinSuppFn in_maximal_ideal;
    FinSuppFn in_principal_ideal;
    Rational multiplier;
    bool verified;
};

MaximalIdealDecomposition maximal_ideal_witness(const SpaceModel& model, Point x, const FinSuppFn& f,
                                                const FinSuppFn& g);

// f^2 + g^2, whose annihilator is A(f) n A(g).
FinSuppFn ac_witness(const SpaceModel& model, const FinSuppFn& f, const FinSuppFn& g);

}  // namespace zdg
