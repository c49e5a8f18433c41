#include "zdg/ring.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "zdg/error.hpp"

namespace zdg {

Rational parse_rational(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    auto slash = s.find('/');
    auto valid_int = [](std::string_view t, bool allow_sign) {
        if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
        if (t.empty()) return false;
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view num = std::string_view(s).substr(0, slash);
    std::string_view den = slash == std::string::npos ? std::string_view("1") : std::string_view(s).substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false)) throw InvalidInput("bad rational literal '" + std::string(text) + "'");
    if (num[0] == '+') num.remove_prefix(1);
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& q) { return q.get_str(); }

FinSuppFn::FinSuppFn(std::map<Point, Rational> values) {
    for (auto& [x, v] : values)
        if (v != 0) values_.emplace(x, std::move(v));
}

FinSuppFn FinSuppFn::unit(Point x) { return FinSuppFn({{x, Rational(1)}}); }

FinSuppFn FinSuppFn::indicator(const PeriodicSet& finite_set) {
    std::map<Point, Rational> v;
    for (Point x : finite_set.elements()) v.emplace(x, 1);
    return FinSuppFn(std::move(v));
}

Rational FinSuppFn::operator()(Point x) const {
    auto it = values_.find(x);
    return it == values_.end() ? Rational(0) : it->second;
}

PeriodicSet FinSuppFn::support() const {
    std::vector<Point> pts;
    pts.reserve(values_.size());
    for (const auto& kv : values_) pts.push_back(kv.first);
    return PeriodicSet::points(pts);
}

FinSuppFn& FinSuppFn::operator+=(const FinSuppFn& o) {
    for (const auto& [x, v] : o.values_) {
        auto [it, inserted] = values_.try_emplace(x, v);
        if (!inserted) {
            it->second += v;
            if (it->second == 0) values_.erase(it);
        }
    }
    return *this;
}

FinSuppFn& FinSuppFn::operator-=(const FinSuppFn& o) { return *this += -o; }

FinSuppFn& FinSuppFn::operator*=(const FinSuppFn& o) {
    for (auto it = values_.begin(); it != values_.end();) {
        auto jt = o.values_.find(it->first);
        if (jt == o.values_.end()) {
            it = values_.erase(it);
        } else {
            it->second *= jt->second;
            ++it;
        }
    }
    return *this;
}

FinSuppFn FinSuppFn::scaled(const Rational& r) const {
    if (r == 0) return {};
    FinSuppFn out = *this;
    for (auto& kv : out.values_) kv.second *= r;
    return out;
}

std::string FinSuppFn::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [x, v] : values_) {
        if (!first) os << ", ";
        first = false;
        os << x << ':' << v.get_str();
    }
    os << '}';
    return os.str();
}

FinSuppFn parse_function(std::string_view text) {
    auto fail = [&](const std::string& why) -> InvalidInput {
        return InvalidInput("bad function literal '" + std::string(text) + "': " + why);
    };
    std::string_view t = text;
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
    if (t.size() < 2 || t.front() != '{' || t.back() != '}') throw fail("expected {point:value, ...}");
    t = t.substr(1, t.size() - 2);
    std::map<Point, Rational> values;
    while (!t.empty()) {
        auto comma = t.find(',');
        std::string_view item = t.substr(0, comma);
        t = comma == std::string_view::npos ? std::string_view() : t.substr(comma + 1);
        if (comma != std::string_view::npos && t.find_first_not_of(" \t\n") == std::string_view::npos)
            throw fail("trailing ','");
        auto colon = item.find(':');
        if (colon == std::string_view::npos) {
            bool blank = true;
            for (char c : item) blank = blank && std::isspace(static_cast<unsigned char>(c));
            if (blank && t.empty() && values.empty()) break;
            throw fail("missing ':'");
        }
        std::string_view key = item.substr(0, colon);
        while (!key.empty() && std::isspace(static_cast<unsigned char>(key.front()))) key.remove_prefix(1);
        while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.remove_suffix(1);
        Point x = 0;
        auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), x);
        if (ec != std::errc() || ptr != key.data() + key.size()) throw fail("bad point '" + std::string(key) + "'");
        if (values.count(x)) throw fail("point listed twice");
        values.emplace(x, parse_rational(item.substr(colon + 1)));
    }
    return FinSuppFn(std::move(values));
}

bool in_ring(const SpaceModel& model, const FinSuppFn& f) {
    PeriodicSet s = f.support();
    return s.subset_of(model.ground_points()) && ideal_member(model, s);
}

void require_in_ring(const SpaceModel& model, const FinSuppFn& f) {
    if (!in_ring(model, f)) throw PreconditionError(f.to_string() + " is not a member of C_P(X) for " + model.to_string());
}

FinSuppFn ring_ops(const SpaceModel& model, const FinSuppFn& a, const FinSuppFn& b, RingOp op, const Rational& r) {
    require_in_ring(model, a);
    switch (op) {
        case RingOp::Add: require_in_ring(model, b); return a + b;
        case RingOp::Mul: require_in_ring(model, b); return a * b;
        case RingOp::Negate: return -a;
        case RingOp::Scale: return a.scaled(r);
    }
    return {};
}

bool AnnihilatorClass::contains(const FinSuppFn& g) const {
    return in_ring(model, g) && g.support().subset_of(region);
}

AnnihilatorClass annihilator(const SpaceModel& model, const FinSuppFn& f) {
    require_in_ring(model, f);
    PeriodicSet xp = locality_region(model);
    if (f.is_zero()) return {xp, model, true};
    return {xp - f.support(), model, false};
}

namespace {

void require_enumerable(const SpaceModel& model) {
    if (std::holds_alternative<AllClosed>(model.ideal()) && !model.ground().is_finite())
        throw UnsupportedModel("minimal primes of C(N) are not point-indexed; hulls are not enumerable on this model");
}

}  // namespace

PeriodicSet hull(const SpaceModel& model, const FinSuppFn& f) {
    require_enumerable(model);
    require_in_ring(model, f);
    return locality_region(model) - f.support();
}

PeriodicSet hull_of_annihilator(const SpaceModel& model, const FinSuppFn& f) {
    require_enumerable(model);
    require_in_ring(model, f);
    // A(f) holds 1_y for every y in X_P outside supp f, so P_x contains A(f)
    // exactly when x lies in supp f.
    return f.support() & locality_region(model);
}

std::optional<FinSuppFn> complement_element(const SpaceModel& model, const FinSuppFn& f) {
    require_in_ring(model, f);
    if (f.is_zero()) throw PreconditionError("the zero function has no complement");
    PeriodicSet rest = locality_region(model) - f.support();
    if (!ideal_member(model, rest)) return std::nullopt;
    if (!rest.is_finite())
        throw UnsupportedModel("complement of " + f.to_string() + " has infinite support " + rest.to_string());
    return FinSuppFn::indicator(rest);
}

MinimalPrimeSpace minimal_prime_space(const SpaceModel& model) {
    require_enumerable(model);
    PeriodicSet xp = locality_region(model);
    return {xp, xp.is_finite()};
}

MaximalIdealDecomposition maximal_ideal_witness(const SpaceModel& model, Point x, const FinSuppFn& f,
                                                const FinSuppFn& g) {
    require_in_ring(model, f);
    require_in_ring(model, g);
    if (!locality_region(model).contains(x))
        throw PreconditionError("point " + std::to_string(x) + " is outside X_P");
    if (f(x) == 0) throw PreconditionError("f vanishes at " + std::to_string(x));
    Rational c = g(x) / f(x);
    MaximalIdealDecomposition d{g - g(x) * FinSuppFn::unit(x), c * (FinSuppFn::unit(x) * f), c, false};
    d.verified = d.in_maximal_ideal(x) == 0 && d.in_maximal_ideal + d.in_principal_ideal == g &&
                 in_ring(model, d.in_maximal_ideal) && in_ring(model, d.in_principal_ideal);
    return d;
}

FinSuppFn ac_witness(const SpaceModel& model, const FinSuppFn& f, const FinSuppFn& g) {
    require_in_ring(model, f);
    require_in_ring(model, g);
    return f * f + g * g;
}

}  // namespace zdg
