#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mobifem/units.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <unistd.h>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct CliFixture {
    fs::path bin;
    fs::path source_dir;
    fs::path work;

    CliFixture() {
        const char* bin_env = std::getenv("MOBIFEM_BIN");
        const char* src_env = std::getenv("MOBIFEM_SOURCE_DIR");
        REQUIRE_MESSAGE(bin_env != nullptr, "MOBIFEM_BIN must point at the CLI binary");
        REQUIRE_MESSAGE(src_env != nullptr, "MOBIFEM_SOURCE_DIR must point at the repo");
        bin = bin_env;
        source_dir = src_env;
        work = fs::temp_directory_path() /
               ("mobifem_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(work);
    }
    ~CliFixture() {
        std::error_code ec;
        fs::remove_all(work, ec);
    }

    RunResult run(const std::string& args) const {
        const fs::path out_file = work / "stdout.txt";
        const fs::path err_file = work / "stderr.txt";
        const std::string cmd = bin.string() + " " + args + " >" + out_file.string() +
                                " 2>" + err_file.string();
        const int status = std::system(cmd.c_str());
        RunResult r;
        r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        r.out = read_file(out_file);
        r.err = read_file(err_file);
        return r;
    }

    fs::path write(const std::string& name, const std::string& text) const {
        const fs::path p = work / name;
        std::ofstream f(p);
        f << text;
        return p;
    }
};

int count_lines(const std::string& s) {
    return static_cast<int>(std::count(s.begin(), s.end(), '\n'));
}

const std::string kTraceHeader =
    "time_s,distance_m,speed_kmh,macro_available,satellite_available,at_port\n";

} // namespace

TEST_CASE("sweep writes the default 30-row grid") {
    CliFixture cli;
    const auto out = cli.work / "sweep.csv";
    const auto r = cli.run("sweep --out " + out.string());
    CHECK(r.exit_code == 0);
    const auto csv = read_file(out);
    CHECK(count_lines(csv) == 31); // header + 100..3000 step 100
    CHECK(csv.rfind("distance_m,", 0) == 0);
    CHECK(r.out.find("wrote") != std::string::npos);
}

TEST_CASE("deterministic sweep matches the closed-form chain") {
    CliFixture cli;
    const auto out = cli.work / "sweep.csv";
    const auto r = cli.run("sweep --set trials=1 --set shadowing_sigma_db=0 --out " +
                           out.string());
    REQUIRE(r.exit_code == 0);

    std::ifstream in(out);
    std::string line;
    std::getline(in, line); // header
    REQUIRE(std::getline(in, line)); // d = 100 m

    std::vector<double> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) {
        fields.push_back(std::stod(field));
    }
    REQUIRE(fields.size() == 8);

    // hand-evaluated chain at d = 100 m (6 significant digits in the CSV)
    const double lf = std::log10(1800.0);
    const double corr15 = (1.1 * lf - 0.7) * 1.5 - (1.56 * lf - 0.8);
    const double loss_direct =
        36.55 + 26.16 * lf - 3.82 * 2.0 - corr15 + 31.8 * std::log10(0.1) + 20.0;
    const double snir_direct_db = 10.0 * std::log10(1.5e6) - loss_direct + 95.0;
    CHECK(fields[0] == 100.0);
    CHECK(fields[1] == doctest::Approx(snir_direct_db).epsilon(1e-5));

    const double loss_access = 20.0 * lf + 30.0 * std::log10(5.0) - 28.0;
    const double snir_access_db = 10.0 * std::log10(15.0) - loss_access + 95.0;
    CHECK(fields[2] == doctest::Approx(snir_access_db).epsilon(1e-5));

    const double snir_direct = std::pow(10.0, snir_direct_db / 10.0);
    CHECK(fields[6] == doctest::Approx(1.0 - std::exp(-10.0 / snir_direct)).epsilon(1e-4));
}

TEST_CASE("seed flag changes the output, repeat runs do not") {
    CliFixture cli;
    const auto out_a = cli.work / "a.csv";
    const auto out_b = cli.work / "b.csv";
    const auto out_c = cli.work / "c.csv";
    CHECK(cli.run("sweep --seed 7 --out " + out_a.string()).exit_code == 0);
    CHECK(cli.run("sweep --seed 7 --out " + out_b.string()).exit_code == 0);
    CHECK(cli.run("sweep --seed 8 --out " + out_c.string()).exit_code == 0);
    CHECK(read_file(out_a) == read_file(out_b));
    CHECK(read_file(out_a) != read_file(out_c));
}

TEST_CASE("missing config exits nonzero without creating output") {
    CliFixture cli;
    const auto out = cli.work / "never.csv";
    const auto r = cli.run("sweep --config " + (cli.work / "ghost.json").string() +
                           " --out " + out.string());
    CHECK(r.exit_code == 2);
    CHECK(!fs::exists(out));
    CHECK(!r.err.empty());
}

TEST_CASE("bad overrides and bad values exit with validation failures") {
    CliFixture cli;
    const auto out = cli.work / "never.csv";

    auto r = cli.run("sweep --set no_such_key=5 --out " + out.string());
    CHECK(r.exit_code == 1);
    CHECK(!fs::exists(out));
    CHECK(r.err.find("no_such_key") != std::string::npos);

    r = cli.run("sweep --set gamma_ms=0 --out " + out.string());
    CHECK(r.exit_code == 1);
    CHECK(!fs::exists(out));
    CHECK(r.err.find("gamma_ms") != std::string::npos);
}

TEST_CASE("validate accepts the shipped config and rejects broken ones") {
    CliFixture cli;
    const auto shipped = cli.source_dir / "configs" / "default.json";
    auto r = cli.run("validate --config " + shipped.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out == "ok\n");

    const auto broken = cli.write("broken.json",
                                  R"({"penetration_loss_db": -3, "gamma_ms": 0})");
    r = cli.run("validate --config " + broken.string());
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("penetration_loss_db") != std::string::npos);
    CHECK(r.out.find("gamma_ms") != std::string::npos);

    r = cli.run("validate --config " + (cli.work / "ghost.json").string());
    CHECK(r.exit_code == 2);
}

TEST_CASE("trace replay emits decisions and the switch count") {
    CliFixture cli;
    std::string body = kTraceHeader;
    for (int i = 0; i < 10; ++i) {
        body += std::to_string(i) + ",1000,250,1,1,0\n";
    }
    const auto trace = cli.write("fast.csv", body);
    const auto out = cli.work / "trace_out.csv";
    const auto r = cli.run("trace --set vehicle_class=high_speed --trace " +
                           trace.string() + " --out " + out.string());
    REQUIRE(r.exit_code == 0);
    const auto csv = read_file(out);
    CHECK(count_lines(csv) == 12); // header + 10 samples + summary line
    CHECK(csv.find(",satellite,") != std::string::npos);
    CHECK(csv.find(",macro,") == std::string::npos);
    CHECK(csv.find("# backhaul_switches=0\n") != std::string::npos);
}

TEST_CASE("trace errors carry the offending line") {
    CliFixture cli;
    const auto out = cli.work / "trace_out.csv";

    const auto empty = cli.write("empty.csv", "");
    auto r = cli.run("trace --trace " + empty.string() + " --out " + out.string());
    CHECK(r.exit_code == 1);
    CHECK(!fs::exists(out));

    const auto non_monotone =
        cli.write("nm.csv", kTraceHeader + "0,500,60,1,1,0\n0,600,60,1,1,0\n");
    r = cli.run("trace --trace " + non_monotone.string() + " --out " + out.string());
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("line 3") != std::string::npos);
    CHECK(!fs::exists(out));
}

TEST_CASE("plot flag produces the three charts") {
    CliFixture cli;
    const auto out = cli.work / "figs.csv";
    const auto r = cli.run("sweep --plot --set trials=10 --out " + out.string());
    REQUIRE(r.exit_code == 0);
    for (const char* name : {"figs_snir.svg", "figs_efficiency.svg", "figs_outage.svg"}) {
        const auto p = cli.work / name;
        CHECK_MESSAGE(fs::exists(p), name);
        const auto svg = read_file(p);
        CHECK(svg.find("<svg") != std::string::npos);
        CHECK(svg.find("polyline") != std::string::npos);
    }
}

TEST_CASE("usage errors exit nonzero") {
    CliFixture cli;
    CHECK(cli.run("sweep").exit_code == 1);            // --out is required
    CHECK(cli.run("fly --out x.csv").exit_code == 1);  // unknown subcommand
    CHECK(cli.run("--help").exit_code == 0);
}
