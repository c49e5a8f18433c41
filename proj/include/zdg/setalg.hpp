#pragma once

// Exact boolean algebra of eventually-periodic subsets of the naturals.
//
// A set is stored as a purely periodic part P = {n : n mod m in R} plus two
// finite exception lists: `added` (points outside P that belong to the set)
// and `removed` (points of P that do not). Every value is kept canonical:
// m is the minimal period of P and R is empty whenever the set is finite, so
// two PeriodicSets compare equal exactly when they describe the same set.
//
// Finite ground sets {0..n-1} are handled as ordinary finite PeriodicSets.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zdg {

using Point = std::uint64_t;

class Cardinal {
public:
    static constexpr Cardinal finite(std::uint64_t n) { return Cardinal(n); }
    static constexpr Cardinal countably_infinite() { return Cardinal(); }

    constexpr bool is_finite() const { return finite_; }
    // Only meaningful when is_finite().
    constexpr std::uint64_t value() const { return value_; }

    constexpr bool operator==(const Cardinal&) const = default;
    constexpr std::strong_ordering operator<=>(const Cardinal& o) const {
        if (finite_ != o.finite_) return finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
        return value_ <=> o.value_;
    }

    std::string to_string() const;

private:
    constexpr Cardinal() = default;
    constexpr explicit Cardinal(std::uint64_t n) : finite_(true), value_(n) {}

    bool finite_ = false;
    std::uint64_t value_ = 0;
};

// The carrier X of a discrete model: {0..n-1} or all of N.
class GroundSet {
public:
    static GroundSet finite(std::uint64_t n);
    static GroundSet countable() { return GroundSet(); }

    bool is_finite() const { return size_.has_value(); }
    std::uint64_t size() const;  // throws for countable grounds
    bool contains(Point x) const { return !size_ || x < *size_; }

    bool operator==(const GroundSet&) const = default;
    std::string to_string() const;

private:
    GroundSet() = default;
    std::optional<std::uint64_t> size_;
};

// Raw, possibly redundant description accepted by PeriodicSet::make.
// The described set is (union of intervals and the residue class) plus
// `add`, minus `remove`.
struct SetDescription {
    std::vector<std::pair<Point, Point>> intervals;  // inclusive [lo, hi]
    std::uint64_t modulus = 1;
    std::vector<std::uint64_t> residues;
    std::vector<Point> add;
    std::vector<Point> remove;
};

class PeriodicSet {
public:
    // Largest modulus any operation is allowed to produce.
    static constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 22;

    PeriodicSet();  // the empty set

    static PeriodicSet make(const SetDescription& desc);
    static PeriodicSet empty() { return {}; }
    static PeriodicSet naturals();
    static PeriodicSet evens();
    static PeriodicSet odds();
    static PeriodicSet points(std::span<const Point> pts);
    static PeriodicSet points(std::initializer_list<Point> pts);
    static PeriodicSet singleton(Point x) { return points({x}); }
    // [lo, hi)
    static PeriodicSet range(Point lo, Point hi);
    static PeriodicSet residue_class(std::uint64_t modulus, std::span<const std::uint64_t> residues);
    static PeriodicSet cofinite(std::span<const Point> removed);
    static PeriodicSet of(const GroundSet& ground);

    bool contains(Point n) const;

    std::uint64_t modulus() const { return modulus_; }
    std::vector<std::uint64_t> residues() const;
    const std::vector<Point>& added() const { return added_; }
    const std::vector<Point>& removed() const { return removed_; }

    bool is_empty() const { return added_.empty() && !has_periodic_part(); }
    bool is_finite() const { return !has_periodic_part(); }
    Cardinal cardinality() const;

    // The k smallest members, ascending.
    std::vector<Point> sample(std::size_t k) const;
    std::optional<Point> min() const;
    std::optional<Point> max() const;  // nullopt for empty or infinite sets
    // All members; throws for infinite sets.
    std::vector<Point> elements() const;

    bool subset_of(const PeriodicSet& other) const;
    bool disjoint_from(const PeriodicSet& other) const;

    // Parseable text form, see parse_set().
    std::string to_string() const;

    bool operator==(const PeriodicSet&) const = default;

private:
    friend class SetBuilder;

    bool has_periodic_part() const { return residue_count_ > 0; }
    bool in_periodic_part(Point n) const { return mask_[n % modulus_]; }

    std::uint64_t modulus_ = 1;
    std::vector<bool> mask_{false};
    std::uint64_t residue_count_ = 0;
    std::vector<Point> added_;
    std::vector<Point> removed_;
};

enum class SetOp { Union, Intersection, Difference, SymmetricDifference };

PeriodicSet combine(const PeriodicSet& a, const PeriodicSet& b, SetOp op);

inline PeriodicSet operator|(const PeriodicSet& a, const PeriodicSet& b) { return combine(a, b, SetOp::Union); }
inline PeriodicSet operator&(const PeriodicSet& a, const PeriodicSet& b) { return combine(a, b, SetOp::Intersection); }
inline PeriodicSet operator-(const PeriodicSet& a, const PeriodicSet& b) { return combine(a, b, SetOp::Difference); }

// Complement inside the ground set. Throws PreconditionError if a is not a
// subset of the ground.
PeriodicSet complement(const PeriodicSet& a, const GroundSet& ground);

struct SetClassification {
    bool is_empty;
    bool is_finite;
    Cardinal cardinality;
};

SetClassification classify(const PeriodicSet& a);

// Text syntax:
//   {0,1,5..9}                      finite set (ranges inclusive)
//   evens | odds | nat | empty      sugar
//   mod 6 res {1,5}                 residue class
//   cofinite                        all of N (combine with del)
// optionally followed by any number of `add {..}` / `del {..}` modifiers.
PeriodicSet parse_set(std::string_view text);

// Parses "{a,b,c..d}" into a sorted, deduplicated point list.
std::vector<Point> parse_point_list(std::string_view text);
std::string format_point_list(std::span<const Point> pts);

}  // namespace zdg
