#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "osc3d/oscillator.hpp"
#include "osc3d/output.hpp"
#include "osc3d/types.hpp"

namespace osc3d {

enum class Command { wigner, evolve, mandel, squeeze_map, borders, check };
enum class StateKind { fock, coherent, squeezed };
enum class OutFormat { csv, json };

// a swept output axis; for wigner the name is a phase-space coordinate,
// for the other commands it is the sweep variable of the emitted table
struct GridRange {
    std::string axis;
    double lo = 0.0;
    double hi = 0.0;
    int count = 2;
};

struct RunConfig {
    Command command = Command::check;
    StateKind state = StateKind::fock;
    TripleIndex fock_index;
    CVec3 alpha{cplx(0, 0), cplx(0, 0), cplx(0, 0)};
    CVec3 squeeze{cplx(0, 0), cplx(0, 0), cplx(0, 0)};
    std::vector<GridRange> grids;
    int cutoff = 40;
    int order = 60;
    OscillatorParams params = natural_units();
    std::string out_path;   // empty means stdout
    OutFormat format = OutFormat::csv;
};

// any malformed flag, config file, or constraint violation
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "re+imi" with an optional exponent in either part; bare "i" forms allowed
cplx parse_complex(const std::string& text);
// three components separated by ';'
CVec3 parse_complex_triple(const std::string& text);

// args exclude the program name; throws ConfigError
RunConfig parse_cli(const std::vector<std::string>& args);

// computes the table for every command except check
Table run(const RunConfig& cfg);

// meta block echoed into JSON output
nlohmann::json config_echo(const RunConfig& cfg);

// parse, compute, emit; returns the process exit code
// (0 success, 2 config error, 3 check failure)
int run_cli(const std::vector<std::string>& args);

}  // namespace osc3d
