#pragma once

// Front end shared by tools/zdg.cpp and the CLI tests.
//
// Exit codes: 0 pass, 1 discrepancy or failed verification, 2 bad input,
// 3 empty graph.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "zdg/blowup.hpp"

namespace zdg {

inline constexpr int kExitPass = 0;
inline constexpr int kExitDiscrepancy = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitEmptyGraph = 3;

struct RunConfig {
    std::string command;
    std::string ground;
    std::string ideal;
    std::string ground_y;  // iso target; defaults to the source model
    std::string ideal_y;
    std::string flavor = "cp";
    std::string window;  // default: X_P when finite, else {0..3}
    std::string window_y;
    std::string alphabet = "1,2";
    std::string out;
    std::uint64_t seed = 1;
    std::string only;
    bool mutate = false;
    std::string psi;  // path to a psi JSON file
    std::size_t samples = 500;
    std::size_t cap = 200;
};

// One verify run per entry: cross_check on each blow-up, ring identities and
// reconstruction round trips on the enumerable models.
struct CatalogueEntry {
    std::string ground;
    std::string ideal;
    GraphFlavor flavor;
    std::string window;
};
const std::vector<CatalogueEntry>& verify_catalogue();

// Tags accepted by --only: the cross_check tags plus ring and isomorphism tags.
std::vector<std::string> verify_tags();

int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_export(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_iso(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Parses flags (and --config key=value files) then dispatches.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zdg
