// End-to-end checks of the command-line tool: exit codes, output formats,
// byte-identical reruns.  The binary path comes from CMake.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#ifndef ZETALAB_CLI_PATH
#define ZETALAB_CLI_PATH "./zetalab"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(ZETALAB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("gram subcommand reports the first Gram point") {
    const auto res = run("gram --nu 1 --format csv");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("23.17028") != std::string::npos);
    CHECK(res.out.find("label,nu,t,theta_residual") != std::string::npos);
}

TEST_CASE("unknown flag exits 1 and writes nothing") {
    const std::string marker = "/tmp/zetalab_cli_should_not_exist.json";
    std::remove(marker.c_str());
    const auto res = run("gram --nu 1 --definitely-not-a-flag --out " + marker);
    CHECK(res.exit_code == 1);
    FILE* f = std::fopen(marker.c_str(), "r");
    CHECK(f == nullptr);
    if (f) std::fclose(f);
}

TEST_CASE("missing subcommand exits 1") {
    CHECK(run("").exit_code == 1);
}

TEST_CASE("argument errors exit 1") {
    CHECK(run("gram --nu 0").exit_code == 1);
    CHECK(run("n0 --T 3").exit_code == 1);
    CHECK(run("sum --T 1e6 --window h2 --psi 20").exit_code == 1);
}

TEST_CASE("numerical failure exits 2") {
    // an integral tolerance below machine attainability must signal, not lie
    const auto res = run("product-integral --T 1e3 --l 0.01 --k 1 --tol 1e-30");
    CHECK(res.exit_code == 2);
}

TEST_CASE("ladder report rows are strictly increasing heights") {
    const auto res = run("ladder --T 1e3 --k 3 --format csv");
    CHECK(res.exit_code == 0);
    // parse the height column
    std::vector<double> heights;
    std::size_t pos = res.out.find('\n');
    while (pos != std::string::npos && pos + 1 < res.out.size()) {
        const std::size_t next = res.out.find('\n', pos + 1);
        if (next == std::string::npos) break;
        const std::string line = res.out.substr(pos + 1, next - pos - 1);
        const std::size_t c1 = line.find(',');
        const std::size_t c2 = line.find(',', c1 + 1);
        const std::size_t c3 = line.find(',', c2 + 1);
        if (c1 != std::string::npos && c3 != std::string::npos)
            heights.push_back(std::stod(line.substr(c2 + 1, c3 - c2 - 1)));
        pos = next;
    }
    REQUIRE(heights.size() == 4);
    for (std::size_t i = 1; i < heights.size(); ++i) CHECK(heights[i] > heights[i - 1]);
}

TEST_CASE("reports are byte-identical across reruns") {
    const auto a = run("zeros --range 14 26 --threads 2");
    const auto b = run("zeros --range 14 26 --threads 2");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    const auto c = run("theorem2-scan --alpha 1.4142135623730951 --bound 3 --nmax 3 "
                       "--tau 2 --backend main --format csv");
    const auto d = run("theorem2-scan --alpha 1.4142135623730951 --bound 3 --nmax 3 "
                       "--tau 2 --backend main --format csv");
    CHECK(c.exit_code == 0);
    CHECK(c.out == d.out);
    CHECK(c.out.find("exact_target_gap") != std::string::npos);
}

TEST_CASE("json format parses and carries metadata") {
    const auto res = run("n0 --T 100");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("\"command\": \"n0\"") != std::string::npos);
    CHECK(res.out.find("\"partition_count\"") != std::string::npos);
    CHECK(res.out.find("29") != std::string::npos);
}

TEST_CASE("svg side output") {
    const std::string path = "/tmp/zetalab_cli_chart.svg";
    std::remove(path.c_str());
    const auto res = run("spectral --x 5000 --defect-samples 32 --svg " + path);
    CHECK(res.exit_code == 0);
    FILE* f = std::fopen(path.c_str(), "r");
    REQUIRE(f != nullptr);
    std::fclose(f);
    std::remove(path.c_str());
}
