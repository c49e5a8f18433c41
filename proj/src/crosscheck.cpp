#include <algorithm>
#include <functional>

#include "zdg/blowup.hpp"

namespace zdg {

const std::vector<std::string>& cross_check_tags() {
    static const std::vector<std::string> tags = {
        "Th2.3",  "Th2.6",  "Th2.7",  "Th6.2",  "Th2.9", "Th3.2",  "Th3.4",  "Cor3.5", "Th2.13",
        "Th2.14", "Th2.19", "Def4.5", "Th4.9",  "Th4.20", "Th4.1", "Th6.3", "Th4.4", "Th5.11",
    };
    return tags;
}

namespace {

struct Recorder {
    const CrossCheckOptions& opt;
    CrossCheckReport& report;

    bool wants(const std::string& tag) const { return !opt.only || *opt.only == tag; }

    void check(const std::string& tag, bool ok, const std::function<std::string()>& witness,
               const std::string& expected, const std::string& observed) {
        ++report.checks[tag];
        if (ok) return;
        if (report.failures[tag]++ < opt.examples_per_tag)
            report.discrepancies.push_back({tag, report.model, witness(), expected, observed});
    }
    void check_eq(const std::string& tag, long long expected, long long observed,
                  const std::function<std::string()>& witness) {
        check(tag, expected == observed, witness, std::to_string(expected), std::to_string(observed));
    }
    void check_bool(const std::string& tag, bool expected, bool observed, const std::function<std::string()>& witness) {
        check(tag, expected == observed, witness, expected ? "true" : "false", observed ? "true" : "false");
    }
};

std::string pair_witness(const ExplicitGraph& g, std::size_t u, std::size_t v) {
    return "f=" + g.vertices[u].to_string() + " g=" + g.vertices[v].to_string();
}

}  // namespace

CrossCheckReport cross_check(const BlowupSpec& spec, const CrossCheckOptions& opt) {
    CrossCheckReport report;
    report.model = spec.model.to_string() + " flavor=" + to_string(spec.flavor) + " window=" +
                   spec.window.to_string() + " alphabet=" + format_alphabet(spec.alphabet);
    Recorder rec{opt, report};

    const ExplicitGraph eg = generate(spec);
    const Graph& g = eg.graph;
    const std::size_t n = eg.size();
    const ZdGraph z(spec.model, spec.flavor);
    const PeriodicSet& w = spec.window;
    const bool complete = w == z.locality();
    const bool cycles_ok = spec.alphabet.size() >= 2;

    if (rec.wants("Th2.3"))
        rec.check_eq("Th2.3", static_cast<long long>(expected_vertex_count(spec)), static_cast<long long>(n),
                     [] { return std::string("vertex count"); });
    if (n == 0) return report;

    std::vector<VertexClass> vc;
    for (const auto& s : eg.classes) vc.push_back(z.vertex(s));
    const std::size_t k = vc.size();

    // Class-level predictions, indexed a * k + b.
    std::vector<char> free_in_window(k * k), common(k * k), orth(k * k), adjacent(k * k);
    std::vector<int> dist(k * k), cyc(k * k);
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
            std::size_t i = a * k + b;
            free_in_window[i] = !(w - (eg.classes[a] | eg.classes[b])).is_empty();
            common[i] = z.common_neighbor(vc[a], vc[b]).has_value();
            orth[i] = z.orthogonal(vc[a], vc[b]);
            adjacent[i] = z.adjacent(vc[a], vc[b]);
            dist[i] = z.distance(vc[a], vc[b], a == b);
            cyc[i] = z.smallest_cycle_through(vc[a], vc[b], a == b);
        }
    }
    auto faithful = [&](std::size_t u, std::size_t v) {
        return complete || free_in_window[eg.class_of[u] * k + eg.class_of[v]];
    };
    // Functions whose support fills the window have no neighbor inside it.
    auto boundary = [&](std::size_t u) { return !complete && eg.classes[eg.class_of[u]] == w; };

    const DistanceMatrix d = opt.parallel ? all_pairs_distances(g) : serial::all_pairs_distances(g);

    if (rec.wants("Th2.3"))
        for (std::size_t u = 0; u < n; ++u)
            if (!boundary(u))
                rec.check("Th2.3", g.degree(u) > 0, [&] { return "f=" + eg.vertices[u].to_string(); }, "zero divisor",
                          "no neighbor");

    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (!faithful(u, v)) continue;
            std::size_t i = eg.class_of[u] * k + eg.class_of[v];
            auto wit = [&] { return pair_witness(eg, u, v); };
            if (rec.wants("Th2.7")) rec.check_eq("Th2.7", dist[i], d.at(u, v), wit);
            if (rec.wants("Th2.6"))
                rec.check_bool("Th2.6", common[i], g.neighbors(u).intersects(g.neighbors(v)), wit);
            if (rec.wants("Def4.5")) rec.check_bool("Def4.5", orth[i], orthogonal(g, u, v), wit);
        }
    }

    if (complete && rec.wants("Th6.2")) {
        auto ecc = eccentricities(d);
        for (std::size_t u = 0; u < n; ++u)
            rec.check_eq("Th6.2", z.eccentricity(vc[eg.class_of[u]]).value, ecc[u],
                         [&] { return "f=" + eg.vertices[u].to_string(); });
    }
    if (complete && rec.wants("Th2.9")) {
        auto ecc = eccentricities(d);
        auto dr = z.diameter_and_radius();
        auto wit = [] { return std::string("whole graph"); };
        rec.check_eq("Th2.9", dr.diameter, *std::max_element(ecc.begin(), ecc.end()), wit);
        rec.check_eq("Th2.9", dr.radius, *std::min_element(ecc.begin(), ecc.end()), wit);
        if (dr.diameter_witness) {
            // Representatives r*1 of the two witness classes are at distance 3.
            auto s = std::find(eg.classes.begin(), eg.classes.end(), dr.diameter_witness->first.support());
            auto t = std::find(eg.classes.begin(), eg.classes.end(), dr.diameter_witness->second.support());
            bool found = s != eg.classes.end() && t != eg.classes.end();
            rec.check("Th2.9", found, wit, "witness classes present", "missing");
            if (found) {
                std::size_t a = eg.members(static_cast<std::size_t>(s - eg.classes.begin()))[0];
                std::size_t b = eg.members(static_cast<std::size_t>(t - eg.classes.begin()))[0];
                rec.check_eq("Th2.9", dr.diameter, d.at(a, b), [&] { return pair_witness(eg, a, b); });
            }
        }
    }

    if (cycles_ok && rec.wants("Th3.2")) {
        // With at least three points in the window the truncation already
        // holds a triangle of singletons.
        bool faithful_girth = complete || w.elements().size() >= 3;
        if (faithful_girth) {
            auto gr = girth(g);
            rec.check_eq("Th3.2", z.girth(), gr ? *gr : 0, [] { return std::string("whole graph"); });
        }
    }

    if (cycles_ok && rec.wants("Th3.4")) {
        CycleTable ct = opt.parallel ? all_pairs_cycle_through(g) : serial::all_pairs_cycle_through(g);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (faithful(u, v))
                    rec.check_eq("Th3.4", cyc[eg.class_of[u] * k + eg.class_of[v]], ct.at(u, v),
                                 [&] { return pair_witness(eg, u, v); });
    }

    if (rec.wants("Cor3.5")) {
        // Induced subgraphs keep chordless cycles chordless, so this holds on
        // every truncation.
        auto lengths = opt.parallel ? chordless_cycle_lengths(g) : serial::chordless_cycle_lengths(g);
        bool ok = std::all_of(lengths.begin(), lengths.end(), [](int l) { return l == 3 || l == 4; });
        std::string seen;
        for (int l : lengths) seen += (seen.empty() ? "" : ",") + std::to_string(l);
        rec.check("Cor3.5", ok, [] { return std::string("chordless cycle scan"); }, "{3,4}", "{" + seen + "}");
    }

    if (rec.wants("Th2.13"))
        for (std::size_t u = 0; u < n; ++u) {
            const auto& s = eg.classes[eg.class_of[u]];
            if (!complete && (w - s).elements().size() < 2) continue;
            rec.check_bool("Th2.13", z.on_triangle(vc[eg.class_of[u]]), on_triangle(g, u),
                           [&] { return "f=" + eg.vertices[u].to_string(); });
        }

    auto first_member = [&](const PeriodicSet& s) -> std::optional<std::size_t> {
        auto it = std::find(eg.classes.begin(), eg.classes.end(), s);
        if (it == eg.classes.end()) return std::nullopt;
        return eg.members(static_cast<std::size_t>(it - eg.classes.begin()))[0];
    };

    if (complete && rec.wants("Th2.14")) {
        auto t = z.is_triangulated();
        bool all_on = true;
        for (std::size_t u = 0; u < n; ++u) all_on = all_on && on_triangle(g, u);
        auto wit = [] { return std::string("whole graph"); };
        rec.check_bool("Th2.14", t.holds, all_on, wit);
        if (t.counterexample) {
            auto u = first_member(t.counterexample->support());
            rec.check("Th2.14", u && !on_triangle(g, *u), wit, "witness on no triangle",
                      u ? "witness on a triangle" : "witness missing");
        }
    }

    if (complete && rec.wants("Th2.19")) {
        auto h = z.is_hypertriangulated();
        bool all_on = true;
        for (auto [u, v] : g.edges()) all_on = all_on && edge_on_triangle(g, u, v);
        auto wit = [] { return std::string("whole graph"); };
        rec.check_bool("Th2.19", h.holds, all_on, wit);
        if (h.counterexample) {
            auto u = first_member(h.counterexample->first.support());
            auto v = first_member(h.counterexample->second.support());
            bool ok = u && v && g.adjacent(*u, *v) && !edge_on_triangle(g, *u, *v);
            rec.check("Th2.19", ok, wit, "witness edge on no triangle", "witness rejected");
        }
    }

    if (complete && rec.wants("Th4.9")) {
        bool every = true;
        for (std::size_t u = 0; u < n; ++u) {
            bool has = false;
            for (std::size_t v = 0; v < n && !has; ++v) has = orthogonal(g, u, v);
            every = every && has;
            auto c = z.complement_class(vc[eg.class_of[u]]);
            if (c) {
                auto v = first_member(c->support());
                rec.check("Th4.9", v && orthogonal(g, u, *v), [&] { return "f=" + eg.vertices[u].to_string(); },
                          "complement class orthogonal", "not orthogonal");
            }
        }
        rec.check_bool("Th4.9", z.is_complemented(), every, [] { return std::string("whole graph"); });
    }

    if (complete && rec.wants("Th4.20")) {
        // u _|_ v and u _|_ w force N(v) = N(w).
        bool unique = true;
        for (std::size_t u = 0; u < n && unique; ++u) {
            std::vector<std::size_t> partners;
            for (std::size_t v = 0; v < n; ++v)
                if (orthogonal(g, u, v)) partners.push_back(v);
            for (std::size_t i = 1; i < partners.size(); ++i)
                if (g.neighbors(partners[i]) != g.neighbors(partners[0])) unique = false;
        }
        bool complemented = true;
        for (std::size_t u = 0; u < n && complemented; ++u) {
            bool has = false;
            for (std::size_t v = 0; v < n && !has; ++v) has = orthogonal(g, u, v);
            complemented = has;
        }
        rec.check_bool("Th4.20", z.is_uniquely_complemented(), complemented && unique,
                       [] { return std::string("whole graph"); });
    }

    const long long width = static_cast<long long>(w.elements().size());
    if (rec.wants("Th4.1")) {
        long long expected = complete ? static_cast<long long>(z.clique_number().value()) : width;
        rec.check_eq("Th4.1", expected, static_cast<long long>(clique_number(g).value),
                     [] { return std::string("whole graph"); });
    }
    if (rec.wants("Th6.3")) {
        long long expected = complete ? static_cast<long long>(z.chromatic_number().value()) : width;
        rec.check_eq("Th6.3", expected, static_cast<long long>(chromatic_number(g).value),
                     [] { return std::string("whole graph"); });
        for (auto [u, v] : g.edges())
            rec.check("Th6.3", z.color_of(vc[eg.class_of[u]]) != z.color_of(vc[eg.class_of[v]]),
                      [&] { return pair_witness(eg, u, v); }, "distinct colors", "same color");
    }

    // The canonical family: one function r*1_x per window point.
    VertexSet family(n);
    for (Point x : w.elements())
        if (auto u = first_member(PeriodicSet::singleton(x))) family.set(*u);
    auto check_family = [&](const std::string& tag) {
        for (std::size_t u = 0; u < n; ++u) {
            if (family.test(u) || boundary(u)) continue;
            rec.check(tag, g.neighbors(u).intersects(family), [&] { return "f=" + eg.vertices[u].to_string(); },
                      "dominated", "not dominated");
        }
    };
    if (rec.wants("Th4.4")) {
        check_family("Th4.4");
        if (complete) {
            auto dt = domination_number(g);
            auto bound = z.dominating_set().upper_bound.value();
            rec.check("Th4.4", dt.value <= bound, [] { return std::string("whole graph"); },
                      "dt <= " + std::to_string(bound), "dt = " + std::to_string(dt.value));
        }
    }
    if (spec.flavor == GraphFlavor::CPInfinity && rec.wants("Th5.11")) check_family("Th5.11");

    return report;
}

}  // namespace zdg
