#include "zdg/setalg.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

#include "zdg/error.hpp"

namespace zdg {

std::string Cardinal::to_string() const {
    return finite_ ? std::to_string(value_) : std::string("countably_infinite");
}

GroundSet GroundSet::finite(std::uint64_t n) {
    if (n == 0) throw InvalidInput("finite ground set must have at least one point");
    GroundSet g;
    g.size_ = n;
    return g;
}

std::uint64_t GroundSet::size() const {
    if (!size_) throw PreconditionError("countable ground set has no finite size");
    return *size_;
}

std::string GroundSet::to_string() const {
    return size_ ? "finite:" + std::to_string(*size_) : std::string("countable");
}

// Assembles a canonical PeriodicSet from a periodic mask and a finite set of
// points where membership differs from the mask.
class SetBuilder {
public:
    static PeriodicSet build(std::uint64_t modulus, std::vector<bool> mask, const std::set<Point>& flips) {
        PeriodicSet s;
        std::uint64_t count = std::count(mask.begin(), mask.end(), true);
        if (count == 0) {
            modulus = 1;
            mask.assign(1, false);
        } else {
            modulus = minimal_period(modulus, mask);
            mask.resize(modulus);
            count = std::count(mask.begin(), mask.end(), true);
        }
        s.modulus_ = modulus;
        s.mask_ = std::move(mask);
        s.residue_count_ = count;
        for (Point p : flips) {
            if (s.in_periodic_part(p))
                s.removed_.push_back(p);
            else
                s.added_.push_back(p);
        }
        return s;
    }

    // Points where membership deviates from the periodic part.
    static std::set<Point> flips(const PeriodicSet& s) {
        std::set<Point> out(s.added_.begin(), s.added_.end());
        out.insert(s.removed_.begin(), s.removed_.end());
        return out;
    }

    static const std::vector<bool>& mask(const PeriodicSet& s) { return s.mask_; }

private:
    static std::uint64_t minimal_period(std::uint64_t m, const std::vector<bool>& mask) {
        for (std::uint64_t d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            bool periodic = true;
            for (std::uint64_t r = 0; r + d < m && periodic; ++r) periodic = mask[r] == mask[r + d];
            if (periodic) return d;
        }
        return m;
    }
};

PeriodicSet::PeriodicSet() = default;

PeriodicSet PeriodicSet::make(const SetDescription& desc) {
    if (desc.modulus == 0) throw InvalidInput("modulus must be at least 1");
    if (desc.modulus > kMaxModulus) throw InvalidInput("modulus too large");
    std::vector<bool> mask(desc.modulus, false);
    for (auto r : desc.residues) {
        if (r >= desc.modulus)
            throw InvalidInput("residue " + std::to_string(r) + " out of range for modulus " +
                               std::to_string(desc.modulus));
        mask[r] = true;
    }
    PeriodicSet s = SetBuilder::build(desc.modulus, std::move(mask), {});
    for (auto [lo, hi] : desc.intervals) {
        if (lo > hi) throw InvalidInput("interval with lo > hi");
        s = s | range(lo, hi + 1);
    }
    if (!desc.add.empty()) s = s | points(desc.add);
    if (!desc.remove.empty()) s = s - points(desc.remove);
    return s;
}

PeriodicSet PeriodicSet::naturals() { return SetBuilder::build(1, {true}, {}); }

PeriodicSet PeriodicSet::evens() { return SetBuilder::build(2, {true, false}, {}); }

PeriodicSet PeriodicSet::odds() { return SetBuilder::build(2, {false, true}, {}); }

PeriodicSet PeriodicSet::points(std::span<const Point> pts) {
    return SetBuilder::build(1, {false}, std::set<Point>(pts.begin(), pts.end()));
}

PeriodicSet PeriodicSet::points(std::initializer_list<Point> pts) {
    return points(std::span<const Point>(pts.begin(), pts.size()));
}

PeriodicSet PeriodicSet::range(Point lo, Point hi) {
    std::set<Point> pts;
    for (Point p = lo; p < hi; ++p) pts.insert(p);
    return SetBuilder::build(1, {false}, pts);
}

PeriodicSet PeriodicSet::residue_class(std::uint64_t modulus, std::span<const std::uint64_t> residues) {
    SetDescription d;
    d.modulus = modulus;
    d.residues.assign(residues.begin(), residues.end());
    return make(d);
}

PeriodicSet PeriodicSet::cofinite(std::span<const Point> removed) {
    return SetBuilder::build(1, {true}, std::set<Point>(removed.begin(), removed.end()));
}

PeriodicSet PeriodicSet::of(const GroundSet& ground) {
    return ground.is_finite() ? range(0, ground.size()) : naturals();
}

bool PeriodicSet::contains(Point n) const {
    bool periodic = in_periodic_part(n);
    if (periodic) return !std::binary_search(removed_.begin(), removed_.end(), n);
    return std::binary_search(added_.begin(), added_.end(), n);
}

std::vector<std::uint64_t> PeriodicSet::residues() const {
    std::vector<std::uint64_t> out;
    if (!has_periodic_part()) return out;
    for (std::uint64_t r = 0; r < modulus_; ++r)
        if (mask_[r]) out.push_back(r);
    return out;
}

Cardinal PeriodicSet::cardinality() const {
    return is_finite() ? Cardinal::finite(added_.size()) : Cardinal::countably_infinite();
}

std::vector<Point> PeriodicSet::sample(std::size_t k) const {
    if (is_finite() && added_.size() < k)
        throw PreconditionError("set has " + std::to_string(added_.size()) + " members, " + std::to_string(k) +
                                " requested");
    std::vector<Point> out;
    out.reserve(k);
    if (is_finite()) {
        out.assign(added_.begin(), added_.begin() + static_cast<std::ptrdiff_t>(k));
        return out;
    }
    for (Point n = 0; out.size() < k; ++n)
        if (contains(n)) out.push_back(n);
    return out;
}

std::optional<Point> PeriodicSet::min() const {
    if (is_empty()) return std::nullopt;
    return sample(1).front();
}

std::optional<Point> PeriodicSet::max() const {
    if (!is_finite() || added_.empty()) return std::nullopt;
    return added_.back();
}

std::vector<Point> PeriodicSet::elements() const {
    if (!is_finite()) throw PreconditionError("cannot list the members of an infinite set");
    return added_;
}

bool PeriodicSet::subset_of(const PeriodicSet& other) const {
    return combine(*this, other, SetOp::Difference).is_empty();
}

bool PeriodicSet::disjoint_from(const PeriodicSet& other) const {
    return combine(*this, other, SetOp::Intersection).is_empty();
}

namespace {

bool apply(SetOp op, bool a, bool b) {
    switch (op) {
        case SetOp::Union: return a || b;
        case SetOp::Intersection: return a && b;
        case SetOp::Difference: return a && !b;
        case SetOp::SymmetricDifference: return a != b;
    }
    return false;
}

Point exception_bound(const PeriodicSet& s) {
    Point b = 0;
    if (!s.added().empty()) b = std::max(b, s.added().back() + 1);
    if (!s.removed().empty()) b = std::max(b, s.removed().back() + 1);
    return b;
}

}  // namespace

PeriodicSet combine(const PeriodicSet& a, const PeriodicSet& b, SetOp op) {
    const std::uint64_t m = std::lcm(a.modulus(), b.modulus());
    if (m > PeriodicSet::kMaxModulus) throw InvalidInput("combined modulus exceeds limit");
    const auto& ma = SetBuilder::mask(a);
    const auto& mb = SetBuilder::mask(b);
    std::vector<bool> mask(m);
    for (std::uint64_t r = 0; r < m; ++r) mask[r] = apply(op, ma[r % a.modulus()], mb[r % b.modulus()]);
    // Beyond every exception both operands agree with their periodic parts.
    const Point bound = std::max(exception_bound(a), exception_bound(b));
    std::set<Point> flips;
    for (Point n = 0; n < bound; ++n)
        if (apply(op, a.contains(n), b.contains(n)) != mask[n % m]) flips.insert(n);
    return SetBuilder::build(m, std::move(mask), flips);
}

PeriodicSet complement(const PeriodicSet& a, const GroundSet& ground) {
    PeriodicSet whole = PeriodicSet::of(ground);
    if (!a.subset_of(whole)) throw PreconditionError("set " + a.to_string() + " is not contained in ground " + ground.to_string());
    return whole - a;
}

SetClassification classify(const PeriodicSet& a) {
    return {a.is_empty(), a.is_finite(), a.cardinality()};
}

std::string format_point_list(std::span<const Point> pts) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < pts.size();) {
        std::size_t j = i;
        while (j + 1 < pts.size() && pts[j + 1] == pts[j] + 1) ++j;
        if (i) os << ',';
        if (j - i >= 2)
            os << pts[i] << ".." << pts[j];
        else if (j > i)
            os << pts[i] << ',' << pts[j];
        else
            os << pts[i];
        i = j + 1;
    }
    os << '}';
    return os.str();
}

std::string PeriodicSet::to_string() const {
    if (is_finite()) return format_point_list(added_);
    std::string out;
    if (modulus_ == 1)
        out = removed_.empty() ? "nat" : "cofinite";
    else if (modulus_ == 2)
        out = mask_[0] ? "evens" : "odds";
    else
        out = "mod " + std::to_string(modulus_) + " res " + format_point_list(residues());
    if (!added_.empty()) out += " add " + format_point_list(added_);
    if (!removed_.empty()) out += " del " + format_point_list(removed_);
    return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    bool accept(std::string_view tok) {
        skip_ws();
        if (text_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }
    std::string word() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }
    std::uint64_t number() {
        skip_ws();
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
        if (ec != std::errc()) fail("expected a natural number");
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        return v;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw InvalidInput("set syntax error at offset " + std::to_string(pos_) + " in \"" + std::string(text_) +
                           "\": " + what);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

std::vector<Point> read_point_list(Cursor& c) {
    std::set<Point> pts;
    c.expect('{');
    if (c.peek() == '}') {
        c.expect('}');
        return {};
    }
    for (;;) {
        Point lo = c.number();
        Point hi = lo;
        if (c.accept("..")) hi = c.number();
        if (hi < lo) c.fail("descending range");
        if (hi - lo > PeriodicSet::kMaxModulus) c.fail("range too long");
        for (Point p = lo; p <= hi; ++p) pts.insert(p);
        if (c.peek() == ',') {
            c.expect(',');
            continue;
        }
        c.expect('}');
        break;
    }
    return {pts.begin(), pts.end()};
}

}  // namespace

std::vector<Point> parse_point_list(std::string_view text) {
    Cursor c(text);
    auto pts = read_point_list(c);
    if (!c.done()) c.fail("trailing characters");
    return pts;
}

PeriodicSet parse_set(std::string_view text) {
    Cursor c(text);
    PeriodicSet s;
    if (c.peek() == '{') {
        s = PeriodicSet::points(read_point_list(c));
    } else {
        std::string w = c.word();
        if (w == "evens")
            s = PeriodicSet::evens();
        else if (w == "odds")
            s = PeriodicSet::odds();
        else if (w == "nat" || w == "cofinite")
            s = PeriodicSet::naturals();
        else if (w == "empty")
            s = PeriodicSet::empty();
        else if (w == "mod") {
            SetDescription d;
            d.modulus = c.number();
            if (c.word() != "res") c.fail("expected 'res'");
            d.residues = read_point_list(c);
            s = PeriodicSet::make(d);
        } else {
            c.fail("unknown set keyword '" + w + "'");
        }
    }
    while (!c.done()) {
        std::string w = c.word();
        if (w == "add")
            s = s | PeriodicSet::points(read_point_list(c));
        else if (w == "del")
            s = s - PeriodicSet::points(read_point_list(c));
        else
            c.fail("expected 'add' or 'del'");
    }
    return s;
}

}  // namespace zdg
