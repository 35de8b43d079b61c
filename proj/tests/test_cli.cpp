// End-to-end checks of the installed binary: spawn it like a user would and
// look only at exit codes and the bytes it writes.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#ifndef RELAYSIM_CLI_PATH
#error "RELAYSIM_CLI_PATH must point at the built binary"
#endif

namespace {

namespace fs = std::filesystem;

fs::path scratch_dir() {
    static fs::path dir = [] {
        std::random_device rd;
        fs::path p = fs::temp_directory_path() /
                     ("relaysim-cli-" + std::to_string(rd()));
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const fs::path& p, const std::string& body) {
    std::ofstream out(p, std::ios::binary);
    out << body;
    REQUIRE(out.good());
}

CliResult run_cli(const std::string& args) {
    const fs::path out_path = scratch_dir() / "stdout.txt";
    const fs::path err_path = scratch_dir() / "stderr.txt";
    const std::string cmd = std::string(RELAYSIM_CLI_PATH) + " " + args + " >" +
                            out_path.string() + " 2>" + err_path.string();
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    CliResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    return r;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

// metadata lines start with '#'; the header is the first non-comment line
std::vector<std::string> data_rows(const std::string& text, std::string* header) {
    std::vector<std::string> rows;
    bool seen_header = false;
    for (const auto& line : lines_of(text)) {
        if (line.empty()) continue;
        if (line[0] == '#') continue;
        if (!seen_header) {
            if (header) *header = line;
            seen_header = true;
            continue;
        }
        rows.push_back(line);
    }
    return rows;
}

const char* kRunConfig =
    "ber = 1e-5\n"
    "packet_len = 1000\n"
    "relays = 2\n"
    "max_transmissions = 5\n"
    "buffer_slots = 2\n"
    "stop_packets = 500\n"
    "seed = 9\n";

} // namespace

TEST_CASE("help exits cleanly and names the subcommands") {
    const CliResult r = run_cli("--help");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("analytic") != std::string::npos);
    CHECK(r.out.find("run") != std::string::npos);
    CHECK(r.out.find("sweep-retx") != std::string::npos);
    CHECK(r.out.find("sweep-buffer") != std::string::npos);
    CHECK(r.out.find("validate") != std::string::npos);
}

TEST_CASE("no subcommand is a usage error") {
    const CliResult r = run_cli("");
    CHECK(r.exit_code == 2);
    CHECK(r.out.empty());
}

TEST_CASE("analytic emits the full grid") {
    const CliResult r = run_cli(
        "analytic --ber-min 1e-8 --ber-max 1e-4 --points 50 --packet-len 1000 "
        "--relays 1,10,100");
    REQUIRE(r.exit_code == 0);
    CHECK(r.err.empty());
    std::string header;
    const auto rows = data_rows(r.out, &header);
    CHECK(header == "ber,relays,end_to_end_loss");
    CHECK(rows.size() == 150);
    // relay-major, ber ascending inside each block, exact grid endpoints
    CHECK(rows.front().rfind("1e-08,1,", 0) == 0);
    CHECK(rows[49].rfind("1e-04,1,", 0) == 0);
    CHECK(rows[50].rfind("1e-08,10,", 0) == 0);
    CHECK(rows.back().rfind("1e-04,100,", 0) == 0);
}

TEST_CASE("analytic rejects a bad grid") {
    const CliResult r = run_cli("analytic --ber-min 0 --ber-max 1e-4");
    CHECK(r.exit_code == 2);
    CHECK(r.out.empty());  // errors stay out of the CSV stream
    CHECK(r.err.find("ber-min") != std::string::npos);
}

TEST_CASE("run produces the metrics table and is repeatable byte for byte") {
    const fs::path cfg = scratch_dir() / "run.cfg";
    spit(cfg, kRunConfig);
    const fs::path out1 = scratch_dir() / "run1.csv";
    const fs::path out2 = scratch_dir() / "run2.csv";
    const fs::path tr1 = scratch_dir() / "run1.trace";
    const fs::path tr2 = scratch_dir() / "run2.trace";

    const CliResult r1 = run_cli("run --config " + cfg.string() + " --trace " +
                                 tr1.string() + " --out " + out1.string());
    REQUIRE(r1.exit_code == 0);
    CHECK(r1.out.empty());
    CHECK(r1.err.empty());

    const CliResult r2 = run_cli("run --config " + cfg.string() + " --trace " +
                                 tr2.string() + " --out " + out2.string());
    REQUIRE(r2.exit_code == 0);

    const std::string csv1 = slurp(out1);
    CHECK(csv1 == slurp(out2));
    const std::string trace1 = slurp(tr1);
    CHECK(trace1 == slurp(tr2));
    CHECK(!trace1.empty());

    std::string header;
    const auto rows = data_rows(csv1, &header);
    CHECK(header ==
          "utilization,end_to_end_loss,generated,delivered_unique,"
          "duplicates_suppressed,dropped_retx_limit,dropped_buffer_overflow,"
          "total_transmissions,stale_acks,in_flight_at_end,mean_latency_s,"
          "max_latency_s,starved");
    REQUIRE(rows.size() == 1);
    // third field is the generated count, pinned by stop_packets
    std::istringstream fields(rows[0]);
    std::string f;
    std::getline(fields, f, ',');
    std::getline(fields, f, ',');
    std::getline(fields, f, ',');
    CHECK(f == "500");
    // config echoed back as comments so a result file is self-describing
    CHECK(csv1.find("# seed = 9\n") != std::string::npos);
    CHECK(csv1.find("# relays = 2\n") != std::string::npos);
}

TEST_CASE("trace lines are tab separated and start at time zero") {
    const fs::path cfg = scratch_dir() / "trace.cfg";
    spit(cfg, kRunConfig);
    const fs::path tr = scratch_dir() / "fmt.trace";
    const CliResult r =
        run_cli("run --config " + cfg.string() + " --trace " + tr.string() +
                " --out " + (scratch_dir() / "fmt.csv").string());
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(slurp(tr));
    REQUIRE(lines.size() > 100);
    CHECK(lines[0] == "0.000000000000\tSRC\tGEN\t0\t0\torigin=0");
    for (std::size_t i = 0; i < 100; ++i) {
        std::size_t tabs = 0;
        for (char c : lines[i])
            if (c == '\t') ++tabs;
        CHECK(tabs == 5);
    }
}

TEST_CASE("run rejects an invalid ber with a named key") {
    const fs::path cfg = scratch_dir() / "bad.cfg";
    spit(cfg, "ber = 1.5\nseed = 1\n");
    const CliResult r = run_cli("run --config " + cfg.string());
    CHECK(r.exit_code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("ber") != std::string::npos);
}

TEST_CASE("run without any seed is refused") {
    const fs::path cfg = scratch_dir() / "seedless.cfg";
    spit(cfg, "ber = 1e-5\nstop_packets = 10\n");
    const CliResult r = run_cli("run --config " + cfg.string());
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("seed") != std::string::npos);

    // a --seed flag fills the gap
    const CliResult ok = run_cli("run --config " + cfg.string() + " --seed 3");
    CHECK(ok.exit_code == 0);
}

TEST_CASE("missing config file is a config error, not a crash") {
    const CliResult r =
        run_cli("run --config " + (scratch_dir() / "nope.cfg").string());
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("cannot open") != std::string::npos);
}

TEST_CASE("unknown flag is a usage error") {
    const CliResult r = run_cli("run --frobnicate 3");
    CHECK(r.exit_code == 2);
}

TEST_CASE("sweep-buffer puts the swept key first and sorts by buffer size") {
    const fs::path cfg = scratch_dir() / "sweep.cfg";
    spit(cfg, kRunConfig);
    const CliResult r = run_cli("sweep-buffer --config " + cfg.string() +
                                " --b-values 4,1");
    REQUIRE(r.exit_code == 0);
    std::string header;
    const auto rows = data_rows(r.out, &header);
    CHECK(header ==
          "buffer_slots,utilization,end_to_end_loss,delivered_unique,"
          "dropped_retx_limit,dropped_buffer_overflow,total_transmissions");
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].rfind("1,", 0) == 0);
    CHECK(rows[1].rfind("4,", 0) == 0);
}

TEST_CASE("sweep-retx sweeps the attempt budget") {
    const fs::path cfg = scratch_dir() / "sweepn.cfg";
    spit(cfg, kRunConfig);
    const CliResult r =
        run_cli("sweep-retx --config " + cfg.string() + " --n-values 1,5");
    REQUIRE(r.exit_code == 0);
    std::string header;
    const auto rows = data_rows(r.out, &header);
    CHECK(header.rfind("max_transmissions,", 0) == 0);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].rfind("1,", 0) == 0);
    CHECK(rows[1].rfind("5,", 0) == 0);
}

TEST_CASE("validate reads a grid file and reports one row per point") {
    const fs::path grid = scratch_dir() / "grid.csv";
    spit(grid,
         "# ber, packet_len, relays, max_transmissions\n"
         "1e-5, 1000, 2, 1\n"
         "1e-5, 1000, 2, 3\n");
    const CliResult r = run_cli("validate --grid " + grid.string() +
                                " --seed 77 --packets 2000");
    REQUIRE(r.exit_code == 0);
    std::string header;
    const auto rows = data_rows(r.out, &header);
    CHECK(header ==
          "ber,packet_len,relays,max_transmissions,sim_delivery,exact_delivery,"
          "exact_z,approx_delivery,approx_z,approx_flagged");
    CHECK(rows.size() == 2);
    CHECK(r.out.find("# packets_per_point = 2000\n") != std::string::npos);
}

TEST_CASE("validate refuses a malformed grid line") {
    const fs::path grid = scratch_dir() / "bad_grid.csv";
    spit(grid, "1e-5, 1000, 2\n");
    const CliResult r = run_cli("validate --grid " + grid.string() + " --seed 1");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("grid") != std::string::npos);
}

TEST_CASE("validate requires a seed flag") {
    const fs::path grid = scratch_dir() / "grid2.csv";
    spit(grid, "1e-5, 1000, 2, 1\n");
    const CliResult r = run_cli("validate --grid " + grid.string());
    CHECK(r.exit_code == 2);
}
