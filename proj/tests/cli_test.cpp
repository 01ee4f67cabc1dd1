#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <random>
#include <sys/wait.h>
#include <unistd.h>

#include "sr3/io.hpp"
#include "test_util.hpp"

using namespace sr3;
using namespace sr3::test;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

class CliFixture {
public:
    CliFixture() {
        dir_ = fs::temp_directory_path() / ("sr3_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(dir_);
    }
    ~CliFixture() { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    void put(const std::string& name, const std::string& content) const {
        write_file(path(name), content);
    }

    CliResult run(const std::string& args) const {
        const std::string out_file = path("stdout.txt");
        const std::string cmd =
            std::string(SR3_CLI_PATH) + " " + args + " > " + out_file + " 2> " + path("stderr.txt");
        int status = std::system(cmd.c_str());
        CliResult result;
        result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        result.out = read_file(out_file);
        return result;
    }

private:
    fs::path dir_;
};

} // namespace

TEST_CASE("solve, verify, and oracle flows agree on the nine-agent fixture") {
    CliFixture cli;
    cli.put("fig9.inst", serialize_instance(fig9()));

    CHECK(cli.run("solve " + cli.path("fig9.inst") + " --out " + cli.path("a.match")).exit_code ==
          0);
    CHECK(read_file(cli.path("a.match")) == "3dsras-matching v1\nt 2 4 5\n");

    CliResult verify = cli.run("verify " + cli.path("fig9.inst") + " " + cli.path("a.match"));
    CHECK(verify.exit_code == 0);
    CHECK(verify.out.find("stable") == 0);
    CHECK(verify.out.find("welfare 6") != std::string::npos);

    // an unstable matching exits with 1 and names a blocker
    cli.put("bad.match", "3dsras-matching v1\nt 0 1 3\n");
    CliResult bad = cli.run("verify " + cli.path("fig9.inst") + " " + cli.path("bad.match"));
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("unstable") != std::string::npos);
    CHECK(bad.out.find("blocking triple") != std::string::npos);

    CliResult exact = cli.run("exact " + cli.path("fig9.inst") + " --max-uw");
    CHECK(exact.exit_code == 0);
    CHECK(exact.out == "max stable welfare 12\n");

    CliResult approx = cli.run("approx " + cli.path("fig9.inst") + " --oracle --json");
    CHECK(approx.exit_code == 0);
    CHECK(approx.out.find("\"welfare\": 6") != std::string::npos);
    CHECK(approx.out.find("\"welfare_opt\": 12") != std::string::npos);
    CHECK(approx.out.find("\"ratio_bound_satisfied\": true") != std::string::npos);
}

TEST_CASE("generation is reproducible through the CLI") {
    CliFixture cli;
    const std::string flags = "gen --n 15 --p 0.4 --seed 99 --out ";
    CHECK(cli.run(flags + cli.path("one.inst")).exit_code == 0);
    CHECK(cli.run(flags + cli.path("two.inst")).exit_code == 0);
    CHECK(read_file(cli.path("one.inst")) == read_file(cli.path("two.inst")));

    CliResult fixture = cli.run("gen --family repair-case --case 3 --out " + cli.path("r.inst") +
                                " --match-out " + cli.path("r.match") + " --json");
    CHECK(fixture.exit_code == 0);
    CHECK(fixture.out.find("\"expected_case\": 3") != std::string::npos);
    CHECK(read_file(cli.path("r.match")) == "3dsras-matching v1\nt 1 3 4\nt 5 6 7\n");
}

TEST_CASE("planted-pit generation feeds the reduction end to end") {
    CliFixture cli;
    CHECK(cli.run("gen --family planted-pit --q 2 --p 0.3 --seed 11 --out " + cli.path("g.inst") +
                  " --pit-out " + cli.path("g.pit") + " --solution-out " + cli.path("g.sol"))
              .exit_code == 0);
    CHECK(cli.run("reduce-pit " + cli.path("g.pit") + " --out " + cli.path("g78.inst") +
                  " --encode " + cli.path("g.sol") + " --match-out " + cli.path("g78.match"))
              .exit_code == 0);
    CHECK(cli.run("verify " + cli.path("g78.inst") + " " + cli.path("g78.match")).exit_code == 0);
    CliResult decoded =
        cli.run("reduce-pit " + cli.path("g.pit") + " --decode " + cli.path("g78.match"));
    CHECK(decoded.exit_code == 0);
    CHECK(decoded.out == read_file(cli.path("g.sol")));
}

TEST_CASE("reduce-pit encodes and decodes through files") {
    CliFixture cli;
    cli.put("k3.pit", "pit v1\nn 3\ne 0 1\ne 0 2\ne 1 2\n");
    cli.put("part.txt", "3dsras-matching v1\nt 0 1 2\n");

    CHECK(cli.run("reduce-pit " + cli.path("k3.pit") + " --out " + cli.path("red.inst"))
              .exit_code == 0);
    CHECK(cli.run("reduce-pit " + cli.path("k3.pit") + " --encode " + cli.path("part.txt") +
                  " --match-out " + cli.path("enc.match"))
              .exit_code == 0);
    // the encoded matching is stable on the reduced instance
    CHECK(cli.run("verify " + cli.path("red.inst") + " " + cli.path("enc.match")).exit_code == 0);
    CliResult decoded =
        cli.run("reduce-pit " + cli.path("k3.pit") + " --decode " + cli.path("enc.match"));
    CHECK(decoded.exit_code == 0);
    CHECK(decoded.out == "3dsras-matching v1\nt 0 1 2\n");
}

TEST_CASE("verify agrees with the library on a randomized corpus") {
    CliFixture cli;
    std::mt19937_64 rng(97);
    for (int round = 0; round < 25; ++round) {
        const int n = 6 + static_cast<int>(rng() % 5);
        Instance inst = random_symmetric(n, 0.3 + 0.4 * uniform01(rng()), rng());
        Matching m = random_matching(n, rng);
        cli.put("c.inst", serialize_instance(inst));
        cli.put("c.match", serialize_matching(m));
        const int code = cli.run("verify " + cli.path("c.inst") + " " + cli.path("c.match")).exit_code;
        CHECK(code == (is_stable(inst, m) ? 0 : 1));
    }
}

TEST_CASE("exit codes distinguish parse, budget, and usage failures") {
    CliFixture cli;
    cli.put("broken.inst", "3dsras v1\nn 3\nmode binary-symmetric\ne 0 9\n");
    CHECK(cli.run("solve " + cli.path("broken.inst")).exit_code == 4);

    cli.put("big.inst", serialize_instance(edgeless(16)));
    CHECK(cli.run("exact " + cli.path("big.inst")).exit_code == 3);

    CHECK(cli.run("frobnicate").exit_code == 2);
    CHECK(cli.run("solve").exit_code == 2);
    // asymmetric instances are outside the solver's contract
    cli.put("asym.inst", serialize_instance(directed_cycle3()));
    CHECK(cli.run("solve " + cli.path("asym.inst")).exit_code == 2);
}

TEST_CASE("bench reproduces welfare columns across runs") {
    CliFixture cli;
    CliResult first = cli.run("bench solve --seed 4 --sizes 12,18 --p 0.3,0.6 --reps 2 --json");
    CliResult second =
        cli.run("bench solve --seed 4 --sizes 12,18 --p 0.3,0.6 --reps 2 --threads 2 --json");
    CHECK(first.exit_code == 0);
    CHECK(second.exit_code == 0);
    auto scrub = [](std::string text) {
        // timings differ run to run; welfare and layout must not
        std::string out;
        std::istringstream stream(text);
        std::string line;
        while (std::getline(stream, line))
            if (line.find("_ms") == std::string::npos) out += line + "\n";
        return out;
    };
    CHECK(scrub(first.out) == scrub(second.out));
    CHECK(cli.run("bench repair --sizes 41 --reps 1").exit_code == 0);
}
