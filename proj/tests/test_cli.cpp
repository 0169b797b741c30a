#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

// Runs the installed binary with the given arguments, capturing stdout.
// stderr is dropped; tests that care about diagnostics merge it with 2>&1
// inside `args`.
RunResult run_cli(const std::string& args, const std::string& prefix = "") {
    std::string cmd = prefix;
    if (!cmd.empty()) cmd += " ";
    cmd += "\"" COVERCOUNT_BIN "\" " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, got);
    const int wait_status = pclose(pipe);
    r.status = WIFEXITED(wait_status) ? WEXITSTATUS(wait_status) : -1;
    return r;
}

json parse_envelope(const std::string& text) {
    return json::parse(text);
}

} // namespace

TEST_CASE("plain text values") {
    auto r = run_cli("hurwitz --degree 2 --profile 2 --profile 2 "
                     "--profile 2 --profile 2 --connected");
    CHECK(r.status == 0);
    CHECK(r.out == "1/2\n");

    r = run_cli("n-twos --k 3 --mu 4,2");
    CHECK(r.status == 0);
    CHECK(r.out == "6\n");

    r = run_cli("s --a 4,2,2 --mu 4");
    CHECK(r.status == 0);
    CHECK(r.out == "15\n");

    r = run_cli("closed-form --family twos-complete --k 4");
    CHECK(r.status == 0);
    CHECK(r.out == "2\n");

    r = run_cli("closed-form --family near-cycle-pair --degree 6 --n 2 "
                "--a 4");
    CHECK(r.status == 0);
    CHECK(r.out == "2\n");
}

TEST_CASE("json envelopes") {
    auto r = run_cli("hurwitz --degree 2 --profile 2 --profile 2 "
                     "--profile 2 --profile 2 --connected --json");
    CHECK(r.status == 0);
    json env = parse_envelope(r.out);
    CHECK(env["invariant"] == "hurwitz");
    CHECK(env["key"]["degree"] == 2);
    CHECK(env["key"]["connected"] == true);
    CHECK(env["value"]["num"] == "1");
    CHECK(env["value"]["den"] == "2");
    CHECK(env.contains("timing_ms"));

    r = run_cli("n-twos --k 3 --mu 4,2 --json");
    CHECK(r.status == 0);
    env = parse_envelope(r.out);
    CHECK(env["invariant"] == "n-twos");
    CHECK(env["value"]["num"] == "6");
    CHECK(env["value"]["den"] == "1");
    CHECK(env["agreement"] == true);
    CHECK(env["closed"] == "6");
    CHECK(env["recursive"] == "6");

    r = run_cli("hurwitz --degree 4 --profile 2,2 --profile 2,2 "
                "--profile 2,2 --marked --json");
    CHECK(r.status == 0);
    env = parse_envelope(r.out);
    CHECK(env["invariant"] == "marked-hurwitz");
    CHECK(env["value"]["num"] == "2");
    CHECK(env["value"]["den"] == "1");
}

TEST_CASE("trace output") {
    auto r = run_cli("s --a 3,2,2,2 --mu 2,1 --trace");
    CHECK(r.status == 0);
    CHECK(r.out.find("9\n") == 0);
    CHECK(r.out.find("reduce-a-merge") != std::string::npos);
    CHECK(r.out.find("S|a=3,2,2|b=|mu=3") != std::string::npos);
    CHECK(r.out.find("S|a=2,2,2|b=|mu=2") != std::string::npos);

    r = run_cli("s --a 3,2,2,2 --mu 2,1 --trace --json");
    CHECK(r.status == 0);
    json env = parse_envelope(r.out);
    CHECK(env["value"]["num"] == "9");
    REQUIRE(env.contains("trace"));
    REQUIRE(env["trace"].size() == 2);
    CHECK(env["trace"][0]["rule"] == "reduce-a-merge");
    CHECK(env["trace"][0]["coefficient"]["num"] == "1");
}

TEST_CASE("table command") {
    auto r = run_cli("u-table --max-degree 4");
    CHECK(r.status == 0);
    CHECK(r.out.find("38") != std::string::npos);
    CHECK(r.out.find("37") != std::string::npos);
    CHECK(r.out.find("28") != std::string::npos);
    CHECK(r.out.find("20") != std::string::npos);
    CHECK(r.out.find("ok") != std::string::npos);
    CHECK(r.out.find("MISMATCH") == std::string::npos);

    r = run_cli("u-table --max-degree 4 --json");
    CHECK(r.status == 0);
    json env = parse_envelope(r.out);
    CHECK(env["quartic_match"] == true);
    bool saw_38 = false;
    for (const auto& cell : env["cells"])
        if (cell["d"] == 4 && cell["a"] == 1)
            saw_38 = (cell["value"]["num"] == "38");
    CHECK(saw_38);
}

TEST_CASE("invalid inputs exit with one") {
    CHECK(run_cli("hurwitz --degree 0").status == 1);
    CHECK(run_cli("hurwitz --degree 3 --profile 4").status == 1);
    CHECK(run_cli("hurwitz --degree 2 --profile 2 --connected "
                  "--disconnected").status == 1);
    CHECK(run_cli("closed-form --family bogus").status == 1);
    CHECK(run_cli("closed-form --family twos-cycles --k 2").status == 1);
    CHECK(run_cli("n-twos --k 2 --mu 3,2").status == 1);
    CHECK(run_cli("s --a 2,2 --mu 2").status == 1);
    CHECK(run_cli("u-table --max-degree 1").status == 1);
    CHECK(run_cli("no-such-command").status == 1);
    CHECK(run_cli("").status == 1);
    // Errors still arrive as JSON on stdout when --json is set.
    auto r = run_cli("s --a 2,2 --mu 2 --json");
    CHECK(r.status == 1);
    json env = parse_envelope(r.out);
    CHECK(env["error"]["code"] == "invalid-key");
}

TEST_CASE("work budget exit code") {
    auto r = run_cli("hurwitz --degree 6 --profile 2,2,1,1 "
                     "--profile 2,2,1,1 --profile 2,2,1,1 "
                     "--profile 2,2,1,1 --max-work 10");
    CHECK(r.status == 3);
    r = run_cli("hurwitz --degree 6 --profile 2,2,1,1 --profile 2,2,1,1 "
                "--profile 2,2,1,1 --profile 2,2,1,1 --max-work 10 --json");
    CHECK(r.status == 3);
    json env = parse_envelope(r.out);
    CHECK(env["error"]["code"] == "budget-exceeded");
}

TEST_CASE("verify subcommand") {
    auto r = run_cli("verify --suite twos");
    CHECK(r.status == 0);
    CHECK(r.out.find("0 failures") != std::string::npos);
    CHECK(r.out.find("all checks passed") != std::string::npos);

    r = run_cli("verify --suite s --json");
    CHECK(r.status == 0);
    json env = parse_envelope(r.out);
    CHECK(env["failures"] == 0);
    CHECK(env["suites"].size() == 1);
    CHECK(env["suites"][0]["suite"] == "s-vectors");
}

TEST_CASE("cache file round trip") {
    const std::string path = "cli_cache_test.tmp";
    std::remove(path.c_str());

    auto first = run_cli("s --a 3,2,2,2 --b 2 --mu 2,2 --cache " + path +
                         " --json");
    CHECK(first.status == 0);
    json env1 = parse_envelope(first.out);
    CHECK(env1["value"]["num"] == "10");
    CHECK(env1["cache"]["hits"] == 0);
    CHECK(env1["cache"]["misses"].get<long long>() > 0);

    {
        std::ifstream in(path);
        REQUIRE(in.good());
        std::string header;
        std::getline(in, header);
        CHECK(header == "covercount-cache v1");
    }

    auto second = run_cli("s --a 3,2,2,2 --b 2 --mu 2,2 --cache " + path +
                          " --json");
    CHECK(second.status == 0);
    json env2 = parse_envelope(second.out);
    CHECK(env2["value"]["num"] == "10");
    CHECK(env2["cache"]["hits"].get<long long>() > 0);
    CHECK(env2["cache"]["misses"] == 0);

    // The same path through the environment variable.
    auto third = run_cli("s --a 3,2,2,2 --b 2 --mu 2,2 --json",
                         "COVERCOUNT_CACHE=" + path);
    CHECK(third.status == 0);
    json env3 = parse_envelope(third.out);
    CHECK(env3["cache"]["path"] == path);
    CHECK(env3["cache"]["hits"].get<long long>() > 0);

    std::remove(path.c_str());
}

TEST_CASE("envelopes are deterministic") {
    const std::string cmd = "s --a 3,2,2,2 --b 2 --mu 2,2 --trace --json";
    json a = parse_envelope(run_cli(cmd).out);
    json b = parse_envelope(run_cli(cmd).out);
    a.erase("timing_ms");
    b.erase("timing_ms");
    CHECK(a.dump() == b.dump());

    // Thread count must not leak into the payload either.
    json c = parse_envelope(
        run_cli("hurwitz --degree 4 --profile 2,2 --profile 2,2 "
                "--profile 2,2 --connected --json --threads 1").out);
    json d = parse_envelope(
        run_cli("hurwitz --degree 4 --profile 2,2 --profile 2,2 "
                "--profile 2,2 --connected --json --threads 4").out);
    c.erase("timing_ms");
    d.erase("timing_ms");
    CHECK(c.dump() == d.dump());
}
