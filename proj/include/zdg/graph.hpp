#pragma once

// Plain undirected, loop-free graphs on vertices 0..n-1 with bitset rows.
// This is the "abstract" graph: no semantic annotations.

#include <bit>
#include <cstdint>
#include <vector>

namespace zdg {

class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    std::size_t universe() const { return n_; }
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }
    bool intersects(const VertexSet& o) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    // this minus o
    VertexSet& subtract(const VertexSet& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

    // Smallest member >= from, or universe() when there is none.
    std::size_t next(std::size_t from) const {
        if (from >= n_) return n_;
        std::size_t k = from / 64;
        std::uint64_t w = words_[k] & (~std::uint64_t{0} << (from % 64));
        for (;;) {
            if (w) return k * 64 + static_cast<std::size_t>(std::countr_zero(w));
            if (++k == words_.size()) return n_;
            w = words_[k];
        }
    }
    std::size_t first() const { return next(0); }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = first(); i < n_; i = next(i + 1)) f(i);
    }

    bool operator==(const VertexSet&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : adj_(n, VertexSet(n)) {}

    std::size_t size() const { return adj_.size(); }
    void add_edge(std::size_t u, std::size_t v) {
        if (u == v) return;
        adj_[u].set(v);
        adj_[v].set(u);
    }
    void remove_edge(std::size_t u, std::size_t v) {
        adj_[u].reset(v);
        adj_[v].reset(u);
    }
    bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].test(v); }
    const VertexSet& neighbors(std::size_t u) const { return adj_[u]; }
    std::size_t degree(std::size_t u) const { return adj_[u].count(); }
    std::size_t edge_count() const {
        std::size_t e = 0;
        for (const auto& row : adj_) e += row.count();
        return e / 2;
    }
    // Edges (u, v) with u < v in lexicographic order.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t u = 0; u < size(); ++u) adj_[u].for_each([&](std::size_t v) {
                if (u < v) out.emplace_back(u, v);
            });
        return out;
    }

    bool operator==(const Graph&) const = default;

private:
    std::vector<VertexSet> adj_;
};

}  // namespace zdg
