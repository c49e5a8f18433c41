#include "zdg/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "zdg/error.hpp"
#include "zdg/isorecon.hpp"

namespace zdg {

const std::vector<CatalogueEntry>& verify_catalogue() {
    static const std::vector<CatalogueEntry> entries = {
        {"finite:3", "powerset:{0,1}", GraphFlavor::CP, ""},
        {"finite:4", "powerset:{0,1,2}", GraphFlavor::CP, ""},
        {"finite:5", "powerset:{0..3}", GraphFlavor::CP, ""},
        {"finite:2", "all", GraphFlavor::CP, ""},
        {"finite:3", "all", GraphFlavor::CP, ""},
        {"countable", "finite", GraphFlavor::CP, "{0..3}"},
        {"countable", "finite", GraphFlavor::CPInfinity, "{0..3}"},
        {"countable", "all", GraphFlavor::CP, "{0..3}"},
    };
    return entries;
}

std::vector<std::string> verify_tags() {
    auto tags = cross_check_tags();
    for (const char* t : {"Th4.7", "Th4.14", "Th4.16", "Th6.4"}) tags.emplace_back(t);
    return tags;
}

namespace {

PeriodicSet resolve_window(const SpaceModel& model, const std::string& text) {
    if (!text.empty()) return parse_set(text);
    PeriodicSet xp = locality_region(model);
    return xp.is_finite() ? xp : PeriodicSet::range(0, 4);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw InvalidInput("cannot write " + path);
    f << text;
    if (text.empty() || text.back() != '\n') f << '\n';
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InvalidInput("cannot read " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

// Random ring element supported on `pts`; every subset of X_P on these
// models is either in the ideal or finite and hence in FiniteSets.
FinSuppFn random_element(std::mt19937_64& rng, const std::vector<Point>& pts) {
    std::uniform_int_distribution<int> coin(0, 2), num(-5, 5);
    std::map<Point, Rational> v;
    for (Point x : pts) {
        if (coin(rng) == 0) continue;
        int p = num(rng);
        v.emplace(x, Rational(p == 0 ? 1 : p));
    }
    return FinSuppFn(std::move(v));
}

bool enumerable(const SpaceModel& m) {
    return !(std::holds_alternative<AllClosed>(m.ideal()) && !m.ground().is_finite());
}

void ring_checks(const SpaceModel& model, const RunConfig& cfg, CrossCheckReport& rep) {
    auto want = [&](const char* tag) { return cfg.only.empty() || cfg.only == tag; };
    auto record = [&](const std::string& tag, bool ok, const std::string& witness, const std::string& expected,
                      const std::string& observed) {
        ++rep.checks[tag];
        if (ok) return;
        if (rep.failures[tag]++ < 20) rep.discrepancies.push_back({tag, rep.model, witness, expected, observed});
    };
    PeriodicSet xp = locality_region(model);
    std::vector<Point> pts = xp.is_finite() ? xp.elements() : xp.sample(6);
    std::mt19937_64 rng(cfg.seed);
    const std::size_t n = 200;

    if (want("Th4.16")) {
        bool compact = minimal_prime_space(model).compact;
        bool complemented = ZdGraph(model, GraphFlavor::CP).is_complemented();
        record("Th4.16", compact == complemented, "model", "compact = " + yes_no(compact),
               "complemented = " + yes_no(complemented));
    }
    for (std::size_t i = 0; i < n; ++i) {
        FinSuppFn f = random_element(rng, pts);
        FinSuppFn g = random_element(rng, pts);
        std::string wit = "f=" + f.to_string() + " g=" + g.to_string();
        if (want("Th4.7")) {
            PeriodicSet hf = hull(model, f);
            PeriodicSet haf = hull_of_annihilator(model, f);
            record("Th4.7", haf == xp - hf && hf.disjoint_from(haf), wit, (xp - hf).to_string(), haf.to_string());
        }
        if (want("Th4.14")) {
            bool lhs1 = hull_of_annihilator(model, f).subset_of(hull(model, g));
            bool rhs1 = (f * g).is_zero();
            record("Th4.14", lhs1 == rhs1, wit, "(1) " + yes_no(rhs1), "(1) " + yes_no(lhs1));
            bool lhs2 = hull(model, g).subset_of(hull_of_annihilator(model, f));
            bool rhs2 = (xp - (f.support() | g.support())).is_empty();
            record("Th4.14", lhs2 == rhs2, wit, "(2) " + yes_no(rhs2), "(2) " + yes_no(lhs2));
        }
    }
}

// phi(window[i]) = window[i+1 mod w]; alphabet values reversed.
std::function<FinSuppFn(const FinSuppFn&)> rotation(const PeriodicSet& window, const std::vector<Rational>& alphabet) {
    std::vector<Point> pts = window.elements();
    return [pts, alphabet](const FinSuppFn& f) {
        std::map<Point, Rational> v;
        for (const auto& [x, r] : f.values()) {
            std::size_t i = static_cast<std::size_t>(std::find(pts.begin(), pts.end(), x) - pts.begin());
            std::size_t a = static_cast<std::size_t>(std::find(alphabet.begin(), alphabet.end(), r) - alphabet.begin());
            v.emplace(pts[(i + 1) % pts.size()], alphabet[alphabet.size() - 1 - a]);
        }
        return FinSuppFn(std::move(v));
    };
}

void iso_checks(const BlowupSpec& spec, const RunConfig& cfg, CrossCheckReport& rep) {
    if (!cfg.only.empty() && cfg.only != "Th6.4") return;
    auto record = [&](bool ok, const std::string& witness, const std::string& expected, const std::string& observed) {
        ++rep.checks["Th6.4"];
        if (ok) return;
        if (rep.failures["Th6.4"]++ < 20) rep.discrepancies.push_back({"Th6.4", rep.model, witness, expected, observed});
    };
    ExplicitGraph g = generate(spec);
    Regime regime = spec.window == locality_region(spec.model) ? Regime::Finite : Regime::Infinite;
    auto pts = spec.window.elements();
    auto t = rotation(spec.window, spec.alphabet);
    VertexMap identity(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) identity[v] = v;
    for (int round = 0; round < 2; ++round) {
        const VertexMap psi = round == 0 ? identity : psi_from_transform(g, g, t);
        std::string wit = round == 0 ? "identity psi" : "rotation psi";
        try {
            auto desc = reconstruct(labeled(g), labeled(g), psi, regime);
            PointBijection expected;
            for (std::size_t i = 0; i < pts.size(); ++i)
                expected.emplace(pts[i], round == 0 ? pts[i] : pts[(i + 1) % pts.size()]);
            record(desc.phi == expected, wit, "phi matches the generating permutation", "different phi");
            auto v = verify_ring_iso(desc, cfg.samples, cfg.seed);
            record(v.passed, wit, "ring isomorphism", "fails " + v.failed_law);
        } catch (const ReconstructionError& e) {
            record(false, wit, "reconstruction", e.what());
        }
    }
}

void print_report(std::ostream& out, const CrossCheckReport& r) {
    std::size_t checks = 0;
    for (const auto& kv : r.checks) checks += kv.second;
    out << (r.passed() ? "[PASS] " : "[FAIL] ") << r.model << "  (" << checks << " checks)\n";
    for (const auto& d : r.discrepancies)
        out << "    " << d.tag << "  " << d.witness << "  expected " << d.expected << "  observed " << d.observed
            << "\n";
}

nlohmann::ordered_json report_json(const CrossCheckReport& r) {
    nlohmann::ordered_json j;
    j["model"] = r.model;
    j["passed"] = r.passed();
    j["checks"] = r.checks;
    j["failures"] = r.failures;
    nlohmann::ordered_json ds = nlohmann::ordered_json::array();
    for (const auto& d : r.discrepancies)
        ds.push_back({{"tag", d.tag}, {"model", d.model}, {"witness", d.witness}, {"expected", d.expected},
                      {"observed", d.observed}});
    j["discrepancies"] = std::move(ds);
    return j;
}

std::string cardinal_text(const Cardinal& c) { return c.to_string(); }

}  // namespace

int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    ZdGraph z(parse_model(cfg.ground, cfg.ideal), parse_flavor(cfg.flavor));
    GraphReport r = z.report();
    auto dr = z.diameter_and_radius();
    auto tri = z.is_triangulated();
    auto hyp = z.is_hypertriangulated();
    struct Row {
        std::string name, value, tag;
    };
    std::vector<Row> rows = {
        {"diameter", std::to_string(r.diameter), "Th 2.9 / Th 2.10"},
        {"radius", std::to_string(r.radius), "Th 2.10"},
        {"girth", std::to_string(r.girth), "Th 3.2"},
        {"triangulated", yes_no(r.triangulated) + (tri.counterexample ? " (witness " + tri.counterexample->support().to_string() + ")" : ""),
         "Th 2.14"},
        {"hypertriangulated",
         yes_no(r.hypertriangulated) +
             (hyp.counterexample ? " (witness " + hyp.counterexample->first.support().to_string() + " -- " +
                                       hyp.counterexample->second.support().to_string() + ")"
                                 : ""),
         "Th 2.19"},
        {"complemented", yes_no(r.complemented), "Th 4.16"},
        {"uniquely complemented", yes_no(r.uniquely_complemented), "Th 4.20"},
        {"clique", cardinal_text(r.clique), "Th 4.1"},
        {"chromatic", cardinal_text(r.chromatic), "Th 6.3"},
        {"dominating bound", cardinal_text(r.dominating_upper_bound), "Th 4.4"},
        {"center", dr.center_description, "Th 2.10"},
    };
    out << z.model().to_string() << " flavor=" << to_string(z.flavor()) << "\n";
    for (const auto& row : rows)
        out << "  " << std::left << std::setw(22) << row.name << std::setw(40) << row.value << row.tag << "\n";
    std::string json = report_to_json(r, z);
    out << json << "\n";
    if (!cfg.out.empty()) write_file(cfg.out, json);
    return kExitPass;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    if (!cfg.only.empty()) {
        auto tags = verify_tags();
        if (std::find(tags.begin(), tags.end(), cfg.only) == tags.end())
            throw InvalidInput("unknown tag '" + cfg.only + "'");
    }
    auto alphabet = parse_alphabet(cfg.alphabet);
    nlohmann::ordered_json runs = nlohmann::ordered_json::array();
    std::size_t failures = 0;
    for (const auto& e : verify_catalogue()) {
        SpaceModel model = parse_model(e.ground, e.ideal);
        BlowupSpec spec{model, e.flavor, resolve_window(model, e.window), alphabet, cfg.cap,
                        cfg.mutate ? Mutation::IntraClassEdges : Mutation::None};
        CrossCheckOptions opt;
        if (!cfg.only.empty()) opt.only = cfg.only;
        CrossCheckReport r = cross_check(spec, opt);
        if (e.flavor == GraphFlavor::CP && enumerable(model)) ring_checks(model, cfg, r);
        bool finite_ideal_like = e.flavor == GraphFlavor::CP && !std::holds_alternative<AllClosed>(model.ideal());
        if (finite_ideal_like && !cfg.mutate) iso_checks(spec, cfg, r);
        print_report(out, r);
        for (const auto& kv : r.failures) failures += kv.second;
        runs.push_back(report_json(r));
    }
    out << "summary: " << verify_catalogue().size() << " models, " << failures << " discrepancies\n";
    if (!cfg.out.empty()) {
        nlohmann::ordered_json j;
        j["runs"] = std::move(runs);
        j["discrepancies"] = failures;
        write_file(cfg.out, j.dump(2));
    }
    return failures == 0 ? kExitPass : kExitDiscrepancy;
}

int cmd_export(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    SpaceModel model = parse_model(cfg.ground, cfg.ideal);
    BlowupSpec spec{model, parse_flavor(cfg.flavor), resolve_window(model, cfg.window), parse_alphabet(cfg.alphabet),
                    cfg.cap, cfg.mutate ? Mutation::IntraClassEdges : Mutation::None};
    ExplicitGraph g = generate(spec);
    if (cfg.out.empty()) {
        out << to_dot(g);
    } else {
        write_file(cfg.out + ".dot", to_dot(g));
        write_file(cfg.out + ".json", to_json(g));
        write_file(cfg.out + ".metrics.json", metrics_to_json(oracle_metrics(g.graph)));
    }
    out << g.size() << " vertices, " << g.graph.edge_count() << " edges\n";
    return kExitPass;
}

int cmd_iso(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    SpaceModel mx = parse_model(cfg.ground, cfg.ideal);
    SpaceModel my = parse_model(cfg.ground_y.empty() ? cfg.ground : cfg.ground_y,
                                cfg.ideal_y.empty() ? cfg.ideal : cfg.ideal_y);
    auto alphabet = parse_alphabet(cfg.alphabet);
    GraphFlavor flavor = parse_flavor(cfg.flavor);
    BlowupSpec sx{mx, flavor, resolve_window(mx, cfg.window), alphabet, cfg.cap};
    BlowupSpec sy{my, flavor, resolve_window(my, cfg.window_y.empty() ? cfg.window : cfg.window_y), alphabet, cfg.cap};
    ExplicitGraph gx = generate(sx);
    ExplicitGraph gy = generate(sy);
    Regime regime = sx.window == locality_region(mx) ? Regime::Finite : Regime::Infinite;
    VertexMap psi;
    if (cfg.psi.empty()) {
        for (std::size_t v = 0; v < gx.size(); ++v) psi.push_back(v);
    } else {
        psi = parse_psi(read_file(cfg.psi), gx.size());
    }
    try {
        auto desc = reconstruct(labeled(gx), labeled(gy), psi, regime);
        auto v = verify_ring_iso(desc, cfg.samples, cfg.seed);
        out << "phi:";
        for (const auto& [x, y] : desc.phi) out << " " << x << "->" << y;
        out << "\nverified: " << yes_no(v.passed) << "\n";
        std::string json = iso_result_to_json(desc, v);
        out << json << "\n";
        if (!cfg.out.empty()) write_file(cfg.out, json);
        return v.passed ? kExitPass : kExitDiscrepancy;
    } catch (const ReconstructionError& e) {
        err << "error: " << e.what() << "\n";
        return e.kind() == ReconFailure::EmptyGraph ? kExitEmptyGraph : kExitDiscrepancy;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Zero-divisor graphs of rings of functions on discrete models", "zdg"};
    app.set_config("--config", "", "key=value file; flags given on the command line win");
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("--ground", cfg.ground, "finite:N | countable");
    app.add_option("--ideal", cfg.ideal, "all | finite | powerset:<set>");
    app.add_option("--ground-y", cfg.ground_y, "iso target ground (default: --ground)");
    app.add_option("--ideal-y", cfg.ideal_y, "iso target ideal (default: --ideal)");
    app.add_option("--flavor", cfg.flavor, "cp | cpinf");
    app.add_option("--window", cfg.window, "finite window inside X_P");
    app.add_option("--window-y", cfg.window_y, "iso target window");
    app.add_option("--alphabet", cfg.alphabet, "nonzero rationals, e.g. 1,2");
    app.add_option("--out", cfg.out, "output path (export: file prefix)");
    app.add_option("--seed", cfg.seed, "sampling seed");
    app.add_option("--only", cfg.only, "verify: run a single tag, e.g. Th2.7");
    app.add_flag("--mutate", cfg.mutate, "fault injection: add intra-class edges");
    app.add_option("--psi", cfg.psi, "iso: JSON list of [from, to] vertex pairs");
    app.add_option("--samples", cfg.samples, "iso: sampled pairs for the ring checks");
    app.add_option("--cap", cfg.cap, "maximum blow-up size");
    for (const char* name : {"analyze", "verify", "export", "iso"}) app.add_subcommand(name)->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        if (cfg.command == "verify") return cmd_verify(cfg, out, err);
        if (cfg.ground.empty() || cfg.ideal.empty()) throw InvalidInput("--ground and --ideal are required");
        if (cfg.command == "analyze") return cmd_analyze(cfg, out, err);
        if (cfg.command == "export") return cmd_export(cfg, out, err);
        return cmd_iso(cfg, out, err);
    } catch (const EmptyGraph& e) {
        err << "error: " << e.what() << "\n";
        return kExitEmptyGraph;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const UnsupportedModel& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
}

}  // namespace zdg
