#include "zdg/blowup.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "zdg/error.hpp"

namespace zdg {

std::vector<Rational> default_alphabet() { return {Rational(1), Rational(2)}; }

std::vector<Rational> parse_alphabet(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    if (s.size() >= 2 && s.front() == '{' && s.back() == '}') s = s.substr(1, s.size() - 2);
    if (s.empty()) throw InvalidInput("empty alphabet");
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (!s.empty() && s.back() == ',') throw InvalidInput("trailing comma in alphabet");
    return out;
}

std::string format_alphabet(const std::vector<Rational>& alphabet) {
    std::string out = "{";
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
        if (i) out += ",";
        out += format_rational(alphabet[i]);
    }
    return out + "}";
}

namespace {

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
            return std::numeric_limits<std::uint64_t>::max();
        r *= base;
    }
    return r;
}

void validate(const BlowupSpec& spec) {
    if (!spec.window.is_finite()) throw InvalidInput("window must be finite, got " + spec.window.to_string());
    if (!spec.window.subset_of(locality_region(spec.model)))
        throw InvalidInput("window " + spec.window.to_string() + " is not inside X_P");
    if (spec.alphabet.empty()) throw InvalidInput("alphabet is empty");
    for (std::size_t i = 0; i < spec.alphabet.size(); ++i) {
        if (spec.alphabet[i] == 0) throw InvalidInput("alphabet contains 0");
        for (std::size_t j = 0; j < i; ++j)
            if (spec.alphabet[i] == spec.alphabet[j]) throw InvalidInput("alphabet values must be distinct");
    }
}

}  // namespace

std::uint64_t expected_vertex_count(const BlowupSpec& spec) {
    const std::uint64_t w = spec.window.elements().size();
    const std::uint64_t a = spec.alphabet.size();
    std::uint64_t total = sat_pow(a + 1, w);
    if (total == std::numeric_limits<std::uint64_t>::max()) return total;
    total -= 1;
    if (spec.window == locality_region(spec.model)) total -= sat_pow(a, w);
    return total;
}

std::optional<std::size_t> ExplicitGraph::find(const FinSuppFn& f) const {
    auto it = std::find(vertices.begin(), vertices.end(), f);
    if (it == vertices.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vertices.begin());
}

std::vector<std::size_t> ExplicitGraph::members(std::size_t class_id) const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < class_of.size(); ++v)
        if (class_of[v] == class_id) out.push_back(v);
    return out;
}

ExplicitGraph generate(const BlowupSpec& spec) {
    validate(spec);
    const std::uint64_t expected = expected_vertex_count(spec);
    if (expected > spec.cap)
        throw CapExceeded("blow-up would have " +
                          (expected == std::numeric_limits<std::uint64_t>::max() ? std::string("too many")
                                                                                 : std::to_string(expected)) +
                          " vertices, cap is " + std::to_string(spec.cap));

    const auto& pts = spec.window.elements();
    const std::size_t w = pts.size();
    const std::size_t radix = spec.alphabet.size() + 1;
    ZdGraph z(spec.model, spec.flavor);

    // Vertex verdict per support bitmask over the window.
    std::vector<char> is_vertex(std::size_t{1} << w, 0);
    for (std::size_t mask = 1; mask < is_vertex.size(); ++mask) {
        std::vector<Point> s;
        for (std::size_t i = 0; i < w; ++i)
            if (mask >> i & 1U) s.push_back(pts[i]);
        is_vertex[mask] = z.is_vertex(PeriodicSet::points(s)).is_vertex ? 1 : 0;
    }

    ExplicitGraph g;
    g.model = spec.model;
    g.flavor = spec.flavor;
    std::vector<std::size_t> masks;
    std::vector<std::size_t> digits(w, 0);
    for (;;) {
        std::size_t i = 0;
        while (i < w && digits[i] + 1 == radix) digits[i++] = 0;
        if (i == w) break;
        ++digits[i];
        std::size_t mask = 0;
        std::map<Point, Rational> values;
        for (std::size_t k = 0; k < w; ++k) {
            if (!digits[k]) continue;
            mask |= std::size_t{1} << k;
            values.emplace(pts[k], spec.alphabet[digits[k] - 1]);
        }
        if (!is_vertex[mask]) continue;
        g.vertices.emplace_back(std::move(values));
        masks.push_back(mask);
    }

    std::vector<std::size_t> distinct = masks;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (std::size_t mask : distinct) {
        std::vector<Point> s;
        for (std::size_t k = 0; k < w; ++k)
            if (mask >> k & 1U) s.push_back(pts[k]);
        g.classes.push_back(PeriodicSet::points(s));
    }
    for (std::size_t mask : masks)
        g.class_of.push_back(static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), mask) -
                                                      distinct.begin()));

    const std::size_t n = g.vertices.size();
    std::vector<char> adj(n * n, 0);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) adj[u * n + v] = (g.vertices[u] * g.vertices[v]).is_zero() ? 1 : 0;
    g.graph = Graph(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (adj[u * n + v]) g.graph.add_edge(u, v);

    switch (spec.mutation) {
        case Mutation::None: break;
        case Mutation::IntraClassEdges:
            for (std::size_t c = 0; c < g.classes.size(); ++c) {
                auto m = g.members(c);
                if (m.size() >= 2) g.graph.add_edge(m[0], m[1]);
            }
            break;
        case Mutation::DropFirstEdge: {
            auto edges = g.graph.edges();
            if (!edges.empty()) g.graph.remove_edge(edges[0].first, edges[0].second);
            break;
        }
    }
    return g;
}

std::string to_dot(const ExplicitGraph& g) {
    std::ostringstream os;
    os << "graph blowup {\n";
    if (g.model) os << "  graph [model=\"" << g.model->to_string() << "\", flavor=\"" << to_string(g.flavor) << "\"];\n";
    for (std::size_t v = 0; v < g.size(); ++v)
        os << "  v" << v << " [label=\"" << g.vertices[v].to_string() << "\", class=" << g.class_of[v] << "];\n";
    for (auto [u, v] : g.graph.edges()) os << "  v" << u << " -- v" << v << ";\n";
    os << "}\n";
    return os.str();
}

std::string to_json(const ExplicitGraph& g) {
    using nlohmann::ordered_json;
    ordered_json j;
    if (g.model) {
        j["model"] = {{"ground", g.model->ground().to_string()}, {"ideal", to_string(g.model->ideal())}};
    } else {
        j["model"] = nullptr;
    }
    j["flavor"] = to_string(g.flavor);
    ordered_json classes = ordered_json::array();
    for (std::size_t c = 0; c < g.classes.size(); ++c)
        classes.push_back({{"id", c}, {"support", g.classes[c].to_string()}});
    j["classes"] = std::move(classes);
    ordered_json vertices = ordered_json::array();
    for (std::size_t v = 0; v < g.size(); ++v)
        vertices.push_back({{"id", v}, {"function", g.vertices[v].to_string()}, {"class", g.class_of[v]}});
    j["vertices"] = std::move(vertices);
    ordered_json edges = ordered_json::array();
    for (auto [u, v] : g.graph.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j.dump(2);
}

ExplicitGraph graph_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("graph JSON: ") + e.what());
    }
    ExplicitGraph g;
    try {
        if (!j.at("model").is_null())
            g.model = parse_model(j.at("model").at("ground").get<std::string>(),
                                  j.at("model").at("ideal").get<std::string>());
        g.flavor = parse_flavor(j.at("flavor").get<std::string>());
        const auto& classes = j.at("classes");
        for (std::size_t c = 0; c < classes.size(); ++c) {
            if (classes[c].at("id").get<std::size_t>() != c) throw InvalidInput("graph JSON: class ids must be 0..k-1");
            g.classes.push_back(parse_set(classes[c].at("support").get<std::string>()));
        }
        const auto& vertices = j.at("vertices");
        for (std::size_t v = 0; v < vertices.size(); ++v) {
            if (vertices[v].at("id").get<std::size_t>() != v)
                throw InvalidInput("graph JSON: vertex ids must be 0..n-1");
            g.vertices.push_back(parse_function(vertices[v].at("function").get<std::string>()));
            std::size_t c = vertices[v].at("class").get<std::size_t>();
            if (c >= g.classes.size()) throw InvalidInput("graph JSON: vertex " + std::to_string(v) + " has unknown class");
            g.class_of.push_back(c);
        }
        g.graph = Graph(g.vertices.size());
        for (const auto& e : j.at("edges")) {
            auto u = e.at(0).get<std::size_t>();
            auto v = e.at(1).get<std::size_t>();
            if (u >= g.size() || v >= g.size() || u == v) throw InvalidInput("graph JSON: bad edge");
            g.graph.add_edge(u, v);
        }
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("graph JSON: ") + e.what());
    }
    return g;
}

}  // namespace zdg
