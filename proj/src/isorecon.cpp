#include "zdg/isorecon.hpp"

#include <algorithm>
#include <random>
#include <set>

#include <json.hpp>

#include "zdg/error.hpp"

namespace zdg {

std::string to_string(Regime r) { return r == Regime::Finite ? "finite" : "infinite"; }

Regime parse_regime(std::string_view text) {
    if (text == "finite") return Regime::Finite;
    if (text == "infinite") return Regime::Infinite;
    throw InvalidInput("regime must be finite or infinite, got '" + std::string(text) + "'");
}

VertexMap parse_psi(std::string_view json, std::size_t n) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("psi: ") + e.what());
    }
    if (!j.is_array()) throw InvalidInput("psi: expected a list of [from, to] pairs");
    VertexMap psi(n, n);
    std::vector<bool> hit(n, false);
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() || !pair[1].is_number_unsigned())
            throw InvalidInput("psi: every entry must be a pair of vertex ids");
        auto a = pair[0].get<std::size_t>();
        auto b = pair[1].get<std::size_t>();
        if (a >= n || b >= n) throw InvalidInput("psi: vertex id out of range");
        if (psi[a] != n) throw InvalidInput("psi: vertex " + std::to_string(a) + " mapped twice");
        if (hit[b]) throw InvalidInput("psi: vertex " + std::to_string(b) + " hit twice");
        psi[a] = b;
        hit[b] = true;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (psi[i] == n) throw InvalidInput("psi: vertex " + std::to_string(i) + " is not mapped");
    return psi;
}

std::string psi_to_json(const VertexMap& psi) {
    nlohmann::json j = nlohmann::json::array();
    for (std::size_t i = 0; i < psi.size(); ++i) j.push_back({i, psi[i]});
    return j.dump();
}

std::vector<std::vector<std::size_t>> detect_atom_classes(const AbstractGraph& g, Regime regime) {
    const std::size_t n = g.size();
    auto mismatch = [&](const std::string& why) {
        return ReconstructionError(ReconFailure::RegimeMismatch, "regime mismatch (" + to_string(regime) + "): " + why);
    };
    if (n == 0) throw ReconstructionError(ReconFailure::EmptyGraph, "empty graph has no atoms");

    std::vector<std::size_t> atoms;
    if (regime == Regime::Finite) {
        auto ecc = eccentricities(all_pairs_distances(g));
        for (std::size_t v = 0; v < n; ++v) {
            if (ecc[v] == kUnreachable) throw mismatch("graph is disconnected");
            if (ecc[v] != 2 && ecc[v] != 3) throw mismatch("vertex " + std::to_string(v) + " has eccentricity " +
                                                           std::to_string(ecc[v]));
            if (ecc[v] == 2) atoms.push_back(v);
        }
    } else {
        VertexSet on_five = far_five_cycle_vertices(g);
        bool any_isolated = false;
        for (std::size_t v = 0; v < n; ++v) {
            if (g.degree(v) == 0) {
                any_isolated = true;
                continue;
            }
            if (!on_five.test(v)) atoms.push_back(v);
        }
        if (!any_isolated) throw mismatch("no isolated window-filling vertices");
    }

    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t v : atoms) {
        auto it = std::find_if(classes.begin(), classes.end(),
                               [&](const auto& c) { return g.neighbors(c[0]) == g.neighbors(v); });
        if (it == classes.end())
            classes.push_back({v});
        else
            it->push_back(v);
    }
    if (classes.empty()) throw mismatch("no atoms");
    for (std::size_t a = 0; a < classes.size(); ++a) {
        if (classes[a].size() != classes[0].size()) throw mismatch("atom classes of different sizes");
        for (std::size_t b = a + 1; b < classes.size(); ++b)
            for (std::size_t u : classes[a])
                for (std::size_t v : classes[b])
                    if (!g.adjacent(u, v)) throw mismatch("atom classes not fully adjacent");
    }
    auto chi = chromatic_number(g);
    if (chi.value != classes.size())
        throw mismatch(std::to_string(classes.size()) + " atom classes but chromatic number " +
                       std::to_string(chi.value));
    return classes;
}

FinSuppFn RingIsoDescription::apply(const FinSuppFn& f) const {
    FinSuppFn out;
    for (const auto& [x, v] : f.values()) {
        auto it = phi.find(x);
        if (it == phi.end()) throw PreconditionError("point " + std::to_string(x) + " is outside the domain of phi");
        out += v * FinSuppFn::unit(it->second);
    }
    return out;
}

std::vector<Point> RingIsoDescription::domain() const {
    std::vector<Point> out;
    for (const auto& kv : phi) out.push_back(kv.first);
    return out;
}

std::vector<Point> RingIsoDescription::codomain() const {
    std::set<Point> out;
    for (const auto& kv : phi) out.insert(kv.second);
    return {out.begin(), out.end()};
}

LabeledGraph labeled(const ExplicitGraph& g) {
    LabeledGraph out{g.graph, {}};
    for (std::size_t v = 0; v < g.size(); ++v) out.support_of.push_back(g.classes[g.class_of[v]]);
    return out;
}

RingIsoDescription reconstruct(const LabeledGraph& gx, const LabeledGraph& gy, const VertexMap& psi, Regime regime) {
    const std::size_t n = gx.graph.size();
    if (n == 0 || gy.graph.size() == 0)
        throw ReconstructionError(ReconFailure::EmptyGraph,
                                  "empty graph (|K| < 2): the graphs are trivially isomorphic but no ring isomorphism "
                                  "is reconstructed");
    auto cx = chromatic_number(gx.graph);
    auto cy = chromatic_number(gy.graph);
    if (cx.value != cy.value)
        throw ReconstructionError(ReconFailure::ChromaticMismatch, "chromatic mismatch: " + std::to_string(cx.value) +
                                                                       " != " + std::to_string(cy.value));
    if (gy.graph.size() != n || psi.size() != n)
        throw ReconstructionError(ReconFailure::NotIsomorphism, "psi: vertex counts differ");
    std::vector<bool> hit(n, false);
    for (std::size_t v = 0; v < n; ++v) {
        if (psi[v] >= n || hit[psi[v]]) throw ReconstructionError(ReconFailure::NotIsomorphism, "psi is not a bijection");
        hit[psi[v]] = true;
    }
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (gx.graph.adjacent(u, v) != gy.graph.adjacent(psi[u], psi[v]))
                throw ReconstructionError(ReconFailure::NotIsomorphism,
                                          "psi does not preserve adjacency of " + std::to_string(u) + "," +
                                              std::to_string(v));

    auto ax = detect_atom_classes(gx.graph, regime);
    auto ay = detect_atom_classes(gy.graph, regime);
    if (ax.size() != ay.size())
        throw ReconstructionError(ReconFailure::AtomCountMismatch, "atom class counts differ: " +
                                                                       std::to_string(ax.size()) + " != " +
                                                                       std::to_string(ay.size()));
    std::map<std::vector<std::size_t>, std::size_t> y_index;
    for (std::size_t c = 0; c < ay.size(); ++c) {
        auto sorted = ay[c];
        std::sort(sorted.begin(), sorted.end());
        y_index.emplace(sorted, c);
    }

    auto point_of = [](const LabeledGraph& g, const std::vector<std::size_t>& cls) {
        const PeriodicSet& s = g.support_of.at(cls[0]);
        for (std::size_t v : cls)
            if (g.support_of.at(v) != s || s.cardinality() != Cardinal::finite(1))
                throw ReconstructionError(ReconFailure::LabelMismatch,
                                          "atom class is not a single-point support class");
        return *s.min();
    };

    RingIsoDescription desc;
    for (const auto& cls : ax) {
        std::vector<std::size_t> image;
        for (std::size_t v : cls) image.push_back(psi[v]);
        std::sort(image.begin(), image.end());
        auto it = y_index.find(image);
        if (it == y_index.end())
            throw ReconstructionError(ReconFailure::AtomToNonAtom, "psi maps the atom class of vertex " +
                                                                       std::to_string(cls[0]) + " off the atoms");
        desc.phi.emplace(point_of(gx, cls), point_of(gy, ay[it->second]));
    }
    return desc;
}

namespace {

FinSuppFn random_function(std::mt19937_64& rng, const std::vector<Point>& pts) {
    std::uniform_int_distribution<int> coin(0, 1), num(-4, 4), den(1, 3);
    std::map<Point, Rational> values;
    for (Point x : pts) {
        if (!coin(rng)) continue;
        int p = num(rng);
        if (p == 0) p = 1;
        values.emplace(x, Rational(p, den(rng)));
    }
    for (auto& kv : values) kv.second.canonicalize();
    return FinSuppFn(std::move(values));
}

}  // namespace

IsoVerification verify_ring_iso(const RingIsoDescription& desc, std::size_t sample_budget, std::uint64_t seed) {
    IsoVerification out;
    auto fail = [&](const std::string& law, const FinSuppFn& f, const FinSuppFn& g) {
        out.passed = false;
        out.failed_law = law;
        out.counterexample = std::make_pair(f, g);
        return out;
    };
    const auto dom = desc.domain();
    const auto cod = desc.codomain();
    if (dom.empty()) {
        out.passed = false;
        out.failed_law = "total";
        return out;
    }

    std::mt19937_64 rng(seed);
    std::vector<std::pair<FinSuppFn, FinSuppFn>> pairs;
    for (std::size_t i = 0; i < sample_budget; ++i) {
        auto f = random_function(rng, dom);
        auto g = random_function(rng, dom);
        pairs.emplace_back(std::move(f), std::move(g));
    }
    out.pairs_checked = pairs.size();

    for (const auto& [f, g] : pairs)
        if (desc.apply(f + g) != desc.apply(f) + desc.apply(g)) return fail("additive", f, g);

    for (std::size_t i = 0; i < dom.size(); ++i)
        for (std::size_t j = i + 1; j < dom.size(); ++j) {
            auto a = FinSuppFn::unit(dom[i]);
            auto b = FinSuppFn::unit(dom[j]);
            if (desc.apply(a) == desc.apply(b)) return fail("injective", a, b);
        }
    for (const auto& [f, g] : pairs)
        if (f != g && desc.apply(f) == desc.apply(g)) return fail("injective", f, g);

    for (const auto& [f, g] : pairs)
        if (desc.apply(f * g) != desc.apply(f) * desc.apply(g)) return fail("multiplicative", f, g);

    std::map<Point, Point> inverse;
    for (const auto& [x, y] : desc.phi) inverse.emplace(y, x);
    for (std::size_t i = 0; i < sample_budget; ++i) {
        auto h = random_function(rng, cod);
        FinSuppFn pre;
        for (const auto& [y, v] : h.values()) pre += v * FinSuppFn::unit(inverse.at(y));
        if (desc.apply(pre) != h) return fail("surjective", pre, h);
    }
    return out;
}

std::string iso_result_to_json(const RingIsoDescription& desc, const IsoVerification& v) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json phi = nlohmann::ordered_json::array();
    for (const auto& [x, y] : desc.phi) phi.push_back({x, y});
    j["phi"] = std::move(phi);
    j["verified"] = v.passed;
    if (!v.passed) {
        nlohmann::ordered_json c;
        c["law"] = v.failed_law;
        if (v.counterexample) {
            c["f"] = v.counterexample->first.to_string();
            c["g"] = v.counterexample->second.to_string();
        }
        j["counterexample"] = std::move(c);
    }
    return j.dump(2);
}

VertexMap psi_from_transform(const ExplicitGraph& gx, const ExplicitGraph& gy,
                             const std::function<FinSuppFn(const FinSuppFn&)>& t) {
    std::map<FinSuppFn, std::size_t> index;
    for (std::size_t v = 0; v < gy.size(); ++v) index.emplace(gy.vertices[v], v);
    VertexMap psi;
    for (const auto& f : gx.vertices) {
        auto it = index.find(t(f));
        if (it == index.end()) throw InvalidInput("image of " + f.to_string() + " is not a vertex of the target");
        psi.push_back(it->second);
    }
    return psi;
}

}  // namespace zdg
