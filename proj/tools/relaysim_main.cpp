#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "relaysim/analytic.hpp"
#include "relaysim/config_file.hpp"
#include "relaysim/csv.hpp"
#include "relaysim/experiments.hpp"
#include "relaysim/trace.hpp"
#include "relaysim/world.hpp"

namespace {

using namespace relaysim;

std::ostream& pick_output(const std::string& out_path, std::ofstream& file) {
    if (out_path.empty()) return std::cout;
    file.open(out_path);
    if (!file) throw ConfigError("out", "cannot open '" + out_path + "'");
    return file;
}

void apply_seed_override(ScenarioConfig& cfg, const CLI::Option* opt, std::uint64_t seed) {
    if (opt->count() > 0) {
        cfg.seed = seed;
        cfg.seed_set = true;
    }
    if (!cfg.seed_set)
        throw ConfigError("seed", "no seed in the config file and no --seed given");
}

std::vector<double> log_grid(double lo, double hi, std::uint32_t points) {
    if (points < 1) throw ConfigError("points", "must be positive");
    if (!(lo > 0.0)) throw ConfigError("ber-min", "must be positive (log-spaced grid)");
    if (!(hi >= lo)) throw ConfigError("ber-max", "must be >= ber-min");
    if (!(hi < 1.0)) throw ConfigError("ber-max", "must be below 1");
    std::vector<double> grid;
    grid.reserve(points);
    if (points == 1) {
        grid.push_back(lo);
        return grid;
    }
    const double llo = std::log(lo);
    const double lhi = std::log(hi);
    for (std::uint32_t i = 0; i < points; ++i)
        grid.push_back(std::exp(llo + (lhi - llo) * i / (points - 1)));
    grid.front() = lo;  // exact endpoints, immune to rounding
    grid.back() = hi;
    return grid;
}

std::vector<experiments::ValidationPoint> load_grid_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("grid", "cannot open '" + path + "'");
    std::vector<experiments::ValidationPoint> points;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string stripped;
        for (char c : line)
            if (c != ' ' && c != '\t' && c != '\r') stripped += c;
        if (stripped.empty()) continue;
        std::istringstream fields(stripped);
        std::string f[4];
        for (int i = 0; i < 4; ++i)
            if (!std::getline(fields, f[i], ','))
                throw ConfigError("grid", "line " + std::to_string(lineno) +
                                              ": expected ber,packet_len,relays,"
                                              "max_transmissions");
        std::string extra;
        if (std::getline(fields, extra, ','))
            throw ConfigError("grid", "line " + std::to_string(lineno) + ": too many fields");
        try {
            experiments::ValidationPoint p;
            p.ber = std::stod(f[0]);
            p.packet_len = static_cast<std::uint32_t>(std::stoul(f[1]));
            p.relays = static_cast<std::uint32_t>(std::stoul(f[2]));
            p.max_transmissions = static_cast<std::uint32_t>(std::stoul(f[3]));
            points.push_back(p);
        } catch (const std::exception&) {
            throw ConfigError("grid", "line " + std::to_string(lineno) + ": bad number");
        }
    }
    if (points.empty()) throw ConfigError("grid", "no points in '" + path + "'");
    return points;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hop-by-hop ARQ relay-chain simulator and analysis tool"};
    app.require_subcommand(1);

    // analytic
    auto* cmd_analytic =
        app.add_subcommand("analytic", "closed-form end-to-end loss curves");
    double ber_min = 1e-8, ber_max = 1e-4;
    std::uint32_t points = 50, packet_len = 1000;
    std::vector<std::uint32_t> relay_counts{1, 10, 100};
    std::string analytic_out;
    cmd_analytic->add_option("--ber-min", ber_min, "lowest bit error ratio");
    cmd_analytic->add_option("--ber-max", ber_max, "highest bit error ratio");
    cmd_analytic->add_option("--points", points, "grid points, log-spaced");
    cmd_analytic->add_option("--packet-len", packet_len, "packet length in bytes");
    cmd_analytic->add_option("--relays", relay_counts, "relay counts, comma separated")
        ->delimiter(',');
    cmd_analytic->add_option("--out", analytic_out, "write CSV here instead of stdout");

    // run
    auto* cmd_run = app.add_subcommand("run", "one simulation, metrics as CSV");
    std::string run_config, run_trace, run_out;
    std::uint64_t run_seed = 0;
    cmd_run->add_option("--config", run_config, "key = value config file")->required();
    auto* run_seed_opt =
        cmd_run->add_option("--seed", run_seed, "overrides the config-file seed");
    cmd_run->add_option("--trace", run_trace, "write an event trace to this file");
    cmd_run->add_option("--out", run_out, "write CSV here instead of stdout");

    // sweep-retx
    auto* cmd_sweep_n =
        app.add_subcommand("sweep-retx", "sweep the per-hop attempt budget");
    std::string sweep_n_config, sweep_n_out;
    std::uint64_t sweep_n_seed = 0;
    std::vector<std::uint32_t> n_values;
    cmd_sweep_n->add_option("--config", sweep_n_config)->required();
    cmd_sweep_n->add_option("--n-values", n_values, "attempt budgets, comma separated")
        ->required()
        ->delimiter(',');
    auto* sweep_n_seed_opt = cmd_sweep_n->add_option("--seed", sweep_n_seed);
    cmd_sweep_n->add_option("--out", sweep_n_out);

    // sweep-buffer
    auto* cmd_sweep_b =
        app.add_subcommand("sweep-buffer", "sweep the per-relay buffer size");
    std::string sweep_b_config, sweep_b_out;
    std::uint64_t sweep_b_seed = 0;
    std::vector<std::uint32_t> b_values;
    cmd_sweep_b->add_option("--config", sweep_b_config)->required();
    cmd_sweep_b->add_option("--b-values", b_values, "buffer sizes, comma separated")
        ->required()
        ->delimiter(',');
    auto* sweep_b_seed_opt = cmd_sweep_b->add_option("--seed", sweep_b_seed);
    cmd_sweep_b->add_option("--out", sweep_b_out);

    // validate
    auto* cmd_validate = app.add_subcommand(
        "validate", "Monte-Carlo delivery vs the closed-form models");
    std::string grid_path, validate_out;
    std::uint64_t validate_seed = 0, validate_packets = 50000;
    cmd_validate->add_option("--grid", grid_path,
                             "file of ber,packet_len,relays,max_transmissions lines")
        ->required();
    cmd_validate->add_option("--seed", validate_seed)->required();
    cmd_validate->add_option("--packets", validate_packets, "packets per grid point");
    cmd_validate->add_option("--out", validate_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // usage problems are config errors
    }

    try {
        if (*cmd_analytic) {
            if (packet_len < 1) throw ConfigError("packet-len", "must be at least 1");
            if (relay_counts.empty()) throw ConfigError("relays", "needs at least one count");
            const auto rows =
                analytic::loss_curve(log_grid(ber_min, ber_max, points), packet_len,
                                     relay_counts);
            std::ofstream file;
            csv::write_analytic_table(pick_output(analytic_out, file), rows, packet_len,
                                      ber_min, ber_max, points);
        } else if (*cmd_run) {
            ScenarioConfig cfg = load_config_file(run_config);
            apply_seed_override(cfg, run_seed_opt, run_seed);
            World world(cfg);
            std::ofstream trace_file;
            std::optional<TraceWriter> tracer;
            if (!run_trace.empty()) {
                trace_file.open(run_trace);
                if (!trace_file)
                    throw ConfigError("trace", "cannot open '" + run_trace + "'");
                tracer.emplace(trace_file, world);
            }
            world.run(tracer ? &*tracer : nullptr);
            std::ofstream file;
            csv::write_run(pick_output(run_out, file), world.config(), world.metrics());
        } else if (*cmd_sweep_n) {
            ScenarioConfig cfg = load_config_file(sweep_n_config);
            apply_seed_override(cfg, sweep_n_seed_opt, sweep_n_seed);
            const auto rows = experiments::sweep_retransmissions(cfg, n_values);
            std::ofstream file;
            csv::write_sweep(pick_output(sweep_n_out, file), cfg, "max_transmissions",
                             rows);
        } else if (*cmd_sweep_b) {
            ScenarioConfig cfg = load_config_file(sweep_b_config);
            apply_seed_override(cfg, sweep_b_seed_opt, sweep_b_seed);
            const auto rows = experiments::sweep_buffer(cfg, b_values);
            std::ofstream file;
            csv::write_sweep(pick_output(sweep_b_out, file), cfg, "buffer_slots", rows);
        } else if (*cmd_validate) {
            if (validate_packets == 0) throw ConfigError("packets", "must be positive");
            const auto grid = load_grid_file(grid_path);
            const auto rows = experiments::validate_against_analytic(grid, validate_seed,
                                                                     validate_packets);
            std::ofstream file;
            csv::write_validation(pick_output(validate_out, file), rows, validate_seed,
                                  validate_packets);
        }
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
