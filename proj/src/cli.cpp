#include "osc3d/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "osc3d/checks.hpp"
#include "osc3d/coherent.hpp"
#include "osc3d/parallel.hpp"
#include "osc3d/phase_space.hpp"
#include "osc3d/photon_statistics.hpp"
#include "osc3d/special_functions.hpp"
#include "osc3d/squeezed.hpp"
#include "osc3d/version.hpp"

namespace osc3d {

namespace {

constexpr const char* kUsage =
    "usage: osc3d <command> [flags]\n"
    "\n"
    "commands:\n"
    "  wigner       Wigner function on a 2D phase-space slice\n"
    "  evolve       packet centroid, momentum and phase over a time grid\n"
    "  mandel       Mandel Q over a (delta, r) grid at fixed |alpha|\n"
    "  squeeze_map  quadrature variances and squeezed flag over a (phi, r) grid\n"
    "  borders      squeeze magnitudes where a variance crosses 1/4, per phi\n"
    "  check        run the numerical acceptance suite\n"
    "\n"
    "flags:\n"
    "  --config <path>        JSON config file; flags override its values\n"
    "  --out <path>           output file (default stdout)\n"
    "  --format csv|json      output format (default csv)\n"
    "  --state fock:m,n,l | coherent | squeezed\n"
    "  --alpha  <c;c;c>       per-axis displacement, each as re+imi\n"
    "  --squeeze <c;c;c>      per-axis squeeze parameter, same syntax\n"
    "  --grid axis:min:max:count   swept axis, repeatable, count >= 2\n"
    "  --cutoff <n>           number-basis cutoff per axis\n"
    "  --order <n>            quadrature order\n"
    "  --params M,omega,hbar  oscillator parameters (default 1,1,1)\n";

double to_double(const std::string& text) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw ConfigError("not a number: '" + text + "'");
    }
    if (pos != text.size()) throw ConfigError("not a number: '" + text + "'");
    return v;
}

int to_int(const std::string& text) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(text, &pos);
    } catch (const std::exception&) {
        throw ConfigError("not an integer: '" + text + "'");
    }
    if (pos != text.size()) throw ConfigError("not an integer: '" + text + "'");
    return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string piece;
    std::istringstream in(text);
    while (std::getline(in, piece, sep)) parts.push_back(piece);
    if (!text.empty() && text.back() == sep) parts.push_back("");
    return parts;
}

const std::map<std::string, Command>& command_names() {
    static const std::map<std::string, Command> names = {
        {"wigner", Command::wigner},   {"evolve", Command::evolve},
        {"mandel", Command::mandel},   {"squeeze_map", Command::squeeze_map},
        {"borders", Command::borders}, {"check", Command::check},
    };
    return names;
}

std::string command_name(Command c) {
    for (const auto& [name, value] : command_names()) {
        if (value == c) return name;
    }
    return "?";
}

Command parse_command(const std::string& name) {
    const auto& names = command_names();
    const auto it = names.find(name);
    if (it == names.end()) throw ConfigError("unknown command '" + name + "'");
    return it->second;
}

void parse_state_spec(const std::string& text, RunConfig& cfg) {
    if (text == "coherent") {
        cfg.state = StateKind::coherent;
        return;
    }
    if (text == "squeezed") {
        cfg.state = StateKind::squeezed;
        return;
    }
    if (text.rfind("fock:", 0) == 0) {
        const auto parts = split(text.substr(5), ',');
        if (parts.size() != 3) throw ConfigError("fock state needs three indices: '" + text + "'");
        TripleIndex idx{to_int(parts[0]), to_int(parts[1]), to_int(parts[2])};
        for (int a = 0; a < 3; ++a) {
            if (idx[a] < 0 || idx[a] > kMaxDegree) {
                throw ConfigError("fock index out of range: '" + text + "'");
            }
        }
        cfg.state = StateKind::fock;
        cfg.fock_index = idx;
        return;
    }
    throw ConfigError("unknown state '" + text + "'");
}

GridRange parse_grid(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.size() != 4 || parts[0].empty()) {
        throw ConfigError("grid must be axis:min:max:count, got '" + text + "'");
    }
    GridRange g;
    g.axis = parts[0];
    g.lo = to_double(parts[1]);
    g.hi = to_double(parts[2]);
    g.count = to_int(parts[3]);
    return g;
}

void parse_params_spec(const std::string& text, RunConfig& cfg) {
    const auto parts = split(text, ',');
    if (parts.size() != 3) throw ConfigError("params must be M,omega,hbar, got '" + text + "'");
    const double mass = to_double(parts[0]);
    const double omega = to_double(parts[1]);
    const double hbar = to_double(parts[2]);
    if (!(mass > 0.0) || !(omega > 0.0) || !(hbar > 0.0)) {
        throw ConfigError("params must be positive: '" + text + "'");
    }
    cfg.params = make_params(mass, omega, hbar);
}

OutFormat parse_format(const std::string& text) {
    if (text == "csv") return OutFormat::csv;
    if (text == "json") return OutFormat::json;
    throw ConfigError("format must be csv or json, got '" + text + "'");
}

void apply_config_file(const std::string& path, RunConfig& cfg,
                       std::optional<Command>& command) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config file '" + path + "': " + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config file must hold a JSON object");
    try {
        for (const auto& [key, value] : doc.items()) {
            if (key == "command") {
                command = parse_command(value.get<std::string>());
            } else if (key == "state") {
                parse_state_spec(value.get<std::string>(), cfg);
            } else if (key == "alpha") {
                cfg.alpha = parse_complex_triple(value.get<std::string>());
            } else if (key == "squeeze") {
                cfg.squeeze = parse_complex_triple(value.get<std::string>());
            } else if (key == "grid") {
                cfg.grids.clear();
                for (const auto& item : value) cfg.grids.push_back(parse_grid(item.get<std::string>()));
            } else if (key == "cutoff") {
                cfg.cutoff = value.get<int>();
            } else if (key == "order") {
                cfg.order = value.get<int>();
            } else if (key == "params") {
                parse_params_spec(value.get<std::string>(), cfg);
            } else if (key == "format") {
                cfg.format = parse_format(value.get<std::string>());
            } else if (key == "out") {
                cfg.out_path = value.get<std::string>();
            } else if (key == "version" || key == "columns") {
                // tolerated so an emitted meta block can be fed back in
            } else {
                throw ConfigError("unknown config key '" + key + "'");
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config file '" + path + "': " + e.what());
    }
}

const GridRange& grid_by_name(const RunConfig& cfg, const std::string& name) {
    for (const auto& g : cfg.grids) {
        if (g.axis == name) return g;
    }
    throw ConfigError(command_name(cfg.command) + " needs a grid named '" + name + "'");
}

void validate(RunConfig& cfg) {
    if (cfg.cutoff < 1 || cfg.cutoff > 128) {
        throw ConfigError("cutoff must be in [1, 128]");
    }
    if (cfg.order < 2 || cfg.order > kMaxDegree) {
        throw ConfigError("order must be in [2, " + std::to_string(kMaxDegree) + "]");
    }
    for (const auto& g : cfg.grids) {
        if (g.count < 2) {
            throw ConfigError("grid '" + g.axis + "' needs at least 2 points");
        }
        if (!(g.lo <= g.hi)) {
            throw ConfigError("grid '" + g.axis + "' has min > max");
        }
    }
    switch (cfg.command) {
        case Command::wigner: {
            if (cfg.grids.size() != 2) {
                throw ConfigError("wigner needs exactly two --grid axes");
            }
            const auto c0 = parse_coord(cfg.grids[0].axis);
            const auto c1 = parse_coord(cfg.grids[1].axis);
            if (!c0 || !c1) {
                throw ConfigError("wigner grid axes must be x, y, z, px, py or pz");
            }
            if (*c0 == *c1) throw ConfigError("wigner grid axes must differ");
            break;
        }
        case Command::evolve:
            if (cfg.grids.size() != 1 || cfg.grids[0].axis != "t") {
                throw ConfigError("evolve needs exactly one --grid over t");
            }
            if (cfg.state != StateKind::coherent) {
                throw ConfigError("evolve needs --state coherent");
            }
            break;
        case Command::mandel:
            if (cfg.grids.size() != 2) {
                throw ConfigError("mandel needs --grid delta and --grid r");
            }
            grid_by_name(cfg, "delta");
            grid_by_name(cfg, "r");
            break;
        case Command::squeeze_map:
            if (cfg.grids.size() != 2) {
                throw ConfigError("squeeze_map needs --grid phi and --grid r");
            }
            grid_by_name(cfg, "phi");
            grid_by_name(cfg, "r");
            break;
        case Command::borders:
            if (cfg.grids.size() != 1 || cfg.grids[0].axis != "phi") {
                throw ConfigError("borders needs exactly one --grid over phi");
            }
            break;
        case Command::check:
            break;
    }
}

std::string format_complex(cplx v) {
    std::string out = format_double(std::real(v));
    if (!(std::imag(v) < 0.0)) out += "+";
    out += format_double(std::imag(v));
    out += "i";
    return out;
}

std::string format_triple(const CVec3& v) {
    return format_complex(v[0]) + ";" + format_complex(v[1]) + ";" + format_complex(v[2]);
}

Table run_wigner(const RunConfig& cfg) {
    const GridRange& g0 = cfg.grids[0];
    const GridRange& g1 = cfg.grids[1];
    const PhaseCoord c0 = *parse_coord(g0.axis);
    const PhaseCoord c1 = *parse_coord(g1.axis);
    const auto v0 = linspace(g0.lo, g0.hi, g0.count);
    const auto v1 = linspace(g1.lo, g1.hi, g1.count);
    const std::ptrdiff_t inner = std::ptrdiff_t(v1.size());
    const std::ptrdiff_t total = std::ptrdiff_t(v0.size()) * inner;
    std::vector<double> values(static_cast<std::size_t>(total));

    const auto point_at = [&](std::ptrdiff_t k) {
        PhasePoint pt;
        set_coord(pt, c0, v0[std::size_t(k / inner)]);
        set_coord(pt, c1, v1[std::size_t(k % inner)]);
        return pt;
    };
    if (cfg.state == StateKind::fock) {
        parallel_for(total, [&](std::ptrdiff_t k) {
            values[std::size_t(k)] = wigner_fock(cfg.fock_index, point_at(k), cfg.params);
        });
    } else {
        const SeparableAmplitude psi =
            cfg.state == StateKind::coherent
                ? separable_coherent(CoherentLabel{cfg.alpha}, 0.0, cfg.params)
                : separable_squeezed(SqueezeLabel{cfg.squeeze, cfg.alpha}, cfg.params);
        parallel_for(total, [&](std::ptrdiff_t k) {
            values[std::size_t(k)] = wigner_numeric(psi, point_at(k), cfg.params, cfg.order);
        });
    }

    Table table;
    table.columns = {g0.axis, g1.axis, "W"};
    table.rows.reserve(std::size_t(total));
    for (std::size_t i = 0; i < v0.size(); ++i) {
        for (std::size_t j = 0; j < v1.size(); ++j) {
            table.rows.push_back({v0[i], v1[j], values[i * v1.size() + j]});
        }
    }
    return table;
}

Table run_evolve(const RunConfig& cfg) {
    const auto times = linspace(cfg.grids[0].lo, cfg.grids[0].hi, cfg.grids[0].count);
    const CoherentLabel label{cfg.alpha};
    Table table;
    table.columns = {"t", "rx", "ry", "rz", "px", "py", "pz", "phase"};
    table.rows.reserve(times.size());
    for (const double t : times) {
        const auto terms = coherent_eval_terms(label, t, cfg.params);
        const auto ev = evolve_coherent(label, t, cfg.params);
        table.rows.push_back({t, terms.r_bar[0], terms.r_bar[1], terms.r_bar[2],
                              terms.p_bar[0], terms.p_bar[1], terms.p_bar[2],
                              ev.global_phase});
    }
    return table;
}

Table run_mandel(const RunConfig& cfg) {
    const GridRange& gd = grid_by_name(cfg, "delta");
    const GridRange& gr = grid_by_name(cfg, "r");
    const auto deltas = linspace(gd.lo, gd.hi, gd.count);
    const auto rs = linspace(gr.lo, gr.hi, gr.count);
    const double alpha_sq = std::norm(cfg.alpha[0]);
    const std::ptrdiff_t inner = std::ptrdiff_t(rs.size());
    const std::ptrdiff_t total = std::ptrdiff_t(deltas.size()) * inner;
    std::vector<double> values(static_cast<std::size_t>(total));
    parallel_for(total, [&](std::ptrdiff_t k) {
        values[std::size_t(k)] = mandel_q_formula(alpha_sq, rs[std::size_t(k % inner)],
                                                  deltas[std::size_t(k / inner)]);
    });
    Table table;
    table.columns = {"delta", "r", "Q"};
    table.rows.reserve(std::size_t(total));
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        for (std::size_t j = 0; j < rs.size(); ++j) {
            table.rows.push_back({deltas[i], rs[j], values[i * rs.size() + j]});
        }
    }
    return table;
}

Table run_squeeze_map(const RunConfig& cfg) {
    const GridRange& gp = grid_by_name(cfg, "phi");
    const GridRange& gr = grid_by_name(cfg, "r");
    const auto phis = linspace(gp.lo, gp.hi, gp.count);
    const auto rs = linspace(gr.lo, gr.hi, gr.count);
    const std::ptrdiff_t inner = std::ptrdiff_t(rs.size());
    const std::ptrdiff_t total = std::ptrdiff_t(phis.size()) * inner;
    std::vector<AxisVariances> values(static_cast<std::size_t>(total));
    parallel_for(total, [&](std::ptrdiff_t k) {
        values[std::size_t(k)] =
            quadrature_variances(rs[std::size_t(k % inner)], phis[std::size_t(k / inner)]);
    });
    Table table;
    table.columns = {"phi", "r", "var1", "var2", "squeezed"};
    table.rows.reserve(std::size_t(total));
    for (std::size_t i = 0; i < phis.size(); ++i) {
        for (std::size_t j = 0; j < rs.size(); ++j) {
            const auto& v = values[i * rs.size() + j];
            table.rows.push_back({phis[i], rs[j], v.var1, v.var2, classify_squeezing(v)});
        }
    }
    return table;
}

Table run_borders(const RunConfig& cfg) {
    const auto phis = linspace(cfg.grids[0].lo, cfg.grids[0].hi, cfg.grids[0].count);
    Table table;
    table.columns = {"phi", "r_plus", "r_minus"};
    table.rows.reserve(phis.size());
    for (const double phi : phis) {
        const auto b = squeeze_border(phi);
        table.rows.push_back({phi, b.r_plus, b.r_minus});
    }
    return table;
}

}  // namespace

cplx parse_complex(const std::string& text) {
    if (text.empty()) throw ConfigError("empty complex number");
    if (text.back() != 'i') return cplx(to_double(text), 0.0);
    const std::string body = text.substr(0, text.size() - 1);
    // split point: last sign that does not follow an exponent marker and is
    // not the leading sign
    std::size_t cut = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        const char c = body[k];
        if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            cut = k;
            break;
        }
    }
    std::string re_part, im_part;
    if (cut == std::string::npos) {
        im_part = body;
    } else {
        re_part = body.substr(0, cut);
        im_part = body.substr(cut);
    }
    double im = 1.0;
    if (im_part.empty() || im_part == "+") {
        im = 1.0;
    } else if (im_part == "-") {
        im = -1.0;
    } else {
        im = to_double(im_part);
    }
    const double re = re_part.empty() ? 0.0 : to_double(re_part);
    return cplx(re, im);
}

CVec3 parse_complex_triple(const std::string& text) {
    const auto parts = split(text, ';');
    if (parts.size() != 3) {
        throw ConfigError("expected three ';'-separated components, got '" + text + "'");
    }
    return {parse_complex(parts[0]), parse_complex(parts[1]), parse_complex(parts[2])};
}

RunConfig parse_cli(const std::vector<std::string>& args) {
    RunConfig cfg;
    std::optional<Command> command;

    std::string config_path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) throw ConfigError("--config needs a path");
            config_path = args[i + 1];
        } else if (args[i].rfind("--config=", 0) == 0) {
            config_path = args[i].substr(9);
        }
    }
    if (!config_path.empty()) apply_config_file(config_path, cfg, command);

    CLI::App app{"3D oscillator state toolkit"};
    app.name("osc3d");
    std::string config_opt, out_opt, format_opt, state_opt, alpha_opt, squeeze_opt, params_opt;
    std::vector<std::string> grid_opts;
    app.add_option("--config", config_opt, "JSON config file; flags override it");
    app.add_option("--out", out_opt, "output path, default stdout");
    app.add_option("--format", format_opt, "csv or json");
    app.add_option("--state", state_opt, "fock:m,n,l | coherent | squeezed");
    app.add_option("--alpha", alpha_opt, "per-axis displacement 're+imi;...'");
    app.add_option("--squeeze", squeeze_opt, "per-axis squeeze parameter");
    app.add_option("--grid", grid_opts, "axis:min:max:count, repeatable");
    app.add_option("--cutoff", cfg.cutoff, "number-basis cutoff per axis");
    app.add_option("--order", cfg.order, "quadrature order");
    app.add_option("--params", params_opt, "M,omega,hbar");
    for (const auto& [name, value] : command_names()) {
        (void)value;
        app.add_subcommand(name)->fallthrough();
    }
    app.require_subcommand(0, 1);

    std::vector<const char*> argv;
    argv.push_back("osc3d");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        throw ConfigError(e.what());
    }

    const auto subs = app.get_subcommands();
    if (subs.size() == 1) {
        command = parse_command(subs[0]->get_name());
    }
    if (!command) throw ConfigError("exactly one command is required");
    cfg.command = *command;

    if (app.count("--state") > 0) parse_state_spec(state_opt, cfg);
    if (app.count("--alpha") > 0) cfg.alpha = parse_complex_triple(alpha_opt);
    if (app.count("--squeeze") > 0) cfg.squeeze = parse_complex_triple(squeeze_opt);
    if (app.count("--grid") > 0) {
        cfg.grids.clear();
        for (const auto& g : grid_opts) cfg.grids.push_back(parse_grid(g));
    }
    if (app.count("--params") > 0) parse_params_spec(params_opt, cfg);
    if (app.count("--format") > 0) cfg.format = parse_format(format_opt);
    if (app.count("--out") > 0) cfg.out_path = out_opt;

    validate(cfg);
    return cfg;
}

Table run(const RunConfig& cfg) {
    switch (cfg.command) {
        case Command::wigner:
            return run_wigner(cfg);
        case Command::evolve:
            return run_evolve(cfg);
        case Command::mandel:
            return run_mandel(cfg);
        case Command::squeeze_map:
            return run_squeeze_map(cfg);
        case Command::borders:
            return run_borders(cfg);
        case Command::check:
            break;
    }
    throw std::logic_error("check produces no table");
}

nlohmann::json config_echo(const RunConfig& cfg) {
    nlohmann::json meta;
    meta["command"] = command_name(cfg.command);
    switch (cfg.state) {
        case StateKind::fock:
            meta["state"] = "fock:" + std::to_string(cfg.fock_index.m) + "," +
                            std::to_string(cfg.fock_index.n) + "," +
                            std::to_string(cfg.fock_index.l);
            break;
        case StateKind::coherent:
            meta["state"] = "coherent";
            break;
        case StateKind::squeezed:
            meta["state"] = "squeezed";
            break;
    }
    meta["alpha"] = format_triple(cfg.alpha);
    meta["squeeze"] = format_triple(cfg.squeeze);
    auto grids = nlohmann::json::array();
    for (const auto& g : cfg.grids) {
        grids.push_back(g.axis + ":" + format_double(g.lo) + ":" + format_double(g.hi) + ":" +
                        std::to_string(g.count));
    }
    meta["grid"] = grids;
    meta["cutoff"] = cfg.cutoff;
    meta["order"] = cfg.order;
    meta["params"] = format_double(cfg.params.mass) + "," + format_double(cfg.params.omega) +
                     "," + format_double(cfg.params.hbar);
    meta["format"] = cfg.format == OutFormat::csv ? "csv" : "json";
    return meta;
}

int run_cli(const std::vector<std::string>& args) {
    for (const auto& a : args) {
        if (a == "--help" || a == "-h") {
            std::cout << kUsage;
            return 0;
        }
    }
    RunConfig cfg;
    try {
        cfg = parse_cli(args);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }

    if (cfg.command == Command::check) {
        const auto results = run_acceptance_checks();
        bool all_passed = true;
        for (std::size_t k = 0; k < results.size(); ++k) {
            const auto& res = results[k];
            std::printf("[%2zu/%zu] %s %s (%s)\n", k + 1, results.size(),
                        res.passed ? "PASS" : "FAIL", res.name.c_str(), res.detail.c_str());
            all_passed = all_passed && res.passed;
        }
        return all_passed ? 0 : 3;
    }

    try {
        const Table table = run(cfg);
        std::string text;
        if (cfg.format == OutFormat::csv) {
            text = to_csv(table);
        } else {
            nlohmann::json meta = config_echo(cfg);
            meta["version"] = kVersion;
            text = to_json(table, std::move(meta));
        }
        if (cfg.out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(cfg.out_path, std::ios::binary);
            if (!out) {
                std::cerr << "config error: cannot open output path '" << cfg.out_path << "'\n";
                return 2;
            }
            out << text;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace osc3d
