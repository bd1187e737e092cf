// Exercises the installed CLI binary end to end: exit codes, JSON records,
// verify output. Path to the binary arrives as argv[1].
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

namespace {

std::string g_cli;

struct run_result {
    int exit_code;
    std::string out;
};

run_result run(const std::string& args) {
    const std::string cmd = g_cli + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
    const int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

nlohmann::json last_json_line(const std::string& out) {
    std::size_t end = out.find_last_not_of('\n');
    REQUIRE(end != std::string::npos);
    std::size_t start = out.rfind('\n', end);
    start = (start == std::string::npos) ? 0 : start + 1;
    return nlohmann::json::parse(out.substr(start, end - start + 1));
}

}  // namespace

TEST_CASE("polylog eval emits value and json record") {
    const auto r = run("polylog -k 2 -m -1");
    CHECK(r.exit_code == 0);
    const auto j = last_json_line(r.out);
    CHECK(j["command"] == "polylog");
    CHECK(j["value"]["re"].get<double>() == doctest::Approx(0.40875428734889626903));
    CHECK(j["value"]["im"].get<double>() == doctest::Approx(0.0));
    CHECK(j.contains("error_estimate"));
    CHECK(j["is_continuation"] == false);
}

TEST_CASE("hurwitz-neg eval") {
    const auto r = run("hurwitz-neg -k 0 -b 0.25");
    CHECK(r.exit_code == 0);
    CHECK(last_json_line(r.out)["value"]["re"].get<double>() == doctest::Approx(0.25));
}

TEST_CASE("hp-const eval") {
    const auto r = run("hp-const -b 0.5");
    CHECK(r.exit_code == 0);
    const auto j = last_json_line(r.out);
    CHECK(j["value"]["re"].get<double>() == doctest::Approx(-0.6137056388801094));
    CHECK(j["regime"] == "half-integer");
}

TEST_CASE("complex argument parsing") {
    const auto r = run("partial --kind lerch -b 0.5 -m -1+2I -k 2 -n 10");
    CHECK(r.exit_code == 0);
    const auto j = last_json_line(r.out);
    CHECK(j["params"]["m"]["re"].get<double>() == doctest::Approx(-1.0));
    CHECK(j["params"]["m"]["im"].get<double>() == doctest::Approx(2.0));
}

TEST_CASE("series eval") {
    const auto r = run("series --trig sin --order 1 -m 4 -b 0");
    CHECK(r.exit_code == 0);
    CHECK(last_json_line(r.out)["value"]["re"].get<double>() ==
          doctest::Approx(0.78539816339744831));
}

TEST_CASE("exit code 2 on domain errors") {
    CHECK(run("polylog -k 2 -m 1+7I").exit_code == 2);          // excluded region
    CHECK(run("series --trig cos --order 1 -m 1 -b 0").exit_code == 2);  // divergent
    CHECK(run("lerch -m -1 -k 2 -b 0").exit_code == 2);         // ZeroB
}

TEST_CASE("exit code 3 on convergence failure") {
    const auto r = run("--max-evals 60 --rel-tol 1e-14 partial --kind cos-even -b 0.3 "
                       "-m 1.5 -k 1 -n 200");
    CHECK(r.exit_code == 3);
}

TEST_CASE("exit code 64 on usage errors") {
    CHECK(run("nonsense-subcommand").exit_code == 64);
    CHECK(run("partial --kind cos-even -b 0.3 -m 2 -k 1").exit_code == 64);  // missing -n
    CHECK(run("polylog -k 2 -m not-a-number").exit_code == 64);
}

TEST_CASE("verify subcommand emits reports and a summary") {
    const auto r = run("verify hurwitz --seed 7");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("passed/total: ") != std::string::npos);
    // every line before the summary is one JSON report
    std::size_t first_nl = r.out.find('\n');
    const auto j = nlohmann::json::parse(r.out.substr(0, first_nl));
    CHECK(j.contains("identity_id"));
    CHECK(j.contains("pass"));
}

TEST_CASE("verify csv format") {
    const auto r = run("verify oracle --seed 7 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("identity_id,params,formula_re", 0) == 0);
}

TEST_CASE("verify determinism across runs") {
    const auto a = run("verify oracle --seed 7");
    const auto b = run("verify oracle --seed 7");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <path-to-lerchphi-binary>\n");
        return 2;
    }
    g_cli = argv[1];
    doctest::Context ctx;
    ctx.applyCommandLine(1, argv);
    return ctx.run();
}
