#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>

#include <sys/wait.h>

// QCPOLY_CLI_PATH is injected by the build as the absolute path of the cli binary.

namespace {

struct RunResult {
    int code = -1;
    std::string out; // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(QCPOLY_CLI_PATH) + " " + args + " 2>&1";
    RunResult r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

int count_of(const std::string& hay, const std::string& needle) {
    int k = 0;
    for (std::size_t pos = hay.find(needle); pos != std::string::npos;
         pos = hay.find(needle, pos + needle.size()))
        ++k;
    return k;
}

std::string without_elapsed(const std::string& text) {
    std::string out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string::npos) end = text.size();
        std::string line = text.substr(pos, end - pos);
        if (line.rfind("elapsed_ms:", 0) != 0) {
            out += line;
            out += '\n';
        }
        pos = end + 1;
    }
    return out;
}

} // namespace

TEST_CASE("find-c: text and structured output") {
    RunResult r = run_cli("find-c --q 5 --order 6");
    CHECK(r.code == 0);
    CHECK(r.out == "c = 3\n");

    RunResult s = run_cli("find-c --q 5 --order 6 --format structured");
    CHECK(s.code == 0);
    CHECK(contains(s.out, "command: find-c"));
    CHECK(contains(s.out, "c: 3"));
    CHECK(contains(s.out, "elapsed_ms: "));
}

TEST_CASE("qc: prints the transform data") {
    RunResult r = run_cli("qc --q 2 --c 1");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "D = 3\n"));
    CHECK(contains(r.out, "g_c = x^3 + x + 1\n"));
    CHECK(contains(r.out, "h_c = x^2 + x\n"));

    RunResult s = run_cli("qc --q 5 --order 6");
    CHECK(s.code == 0);
    CHECK(contains(s.out, "g_c = x^6 + x + 2\n"));
    CHECK(contains(s.out, "h_c = x^5 + 4x\n"));
}

TEST_CASE("transform: irreducible and split cases") {
    RunResult r = run_cli("transform --q 2 --c 1 --poly 'x^4 + x^3 + 1'");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "transform = x^12 + x^11 + x^10 + x^9 + x^8 + x^6 + x^4 + x + 1\n"));
    CHECK(contains(r.out, "irreducible = true\n"));

    RunResult s = run_cli("transform --q 2 --c 1 --poly 'x^4 + x + 1'");
    CHECK(s.code == 0);
    CHECK(contains(s.out, "irreducible = false\n"));
}

TEST_CASE("construct: recursive success, random determinism, exhaustion") {
    RunResult r = run_cli("construct --q 2 --c 1 --seed-poly 'x^4 + x^3 + 1'");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "success = true\n"));
    CHECK(contains(r.out, "iterations_used = 0\n"));
    CHECK(contains(r.out, "degree = 12\n"));

    std::string random_args =
        "construct --q 2 --c 1 --method random --degree 4 --rng-seed 7 --format structured";
    RunResult a = run_cli(random_args);
    RunResult b = run_cli(random_args);
    CHECK(a.code == 0);
    CHECK(contains(a.out, "success: true"));
    CHECK(contains(a.out, "rng_seed: 7"));
    CHECK(without_elapsed(a.out) == without_elapsed(b.out));

    RunResult x = run_cli("construct --q 2 --c 1 --method random --degree 2 --max-trials 3");
    CHECK(x.code == 1);
    CHECK(contains(x.out, "error: exhausted: no irreducible transform within 3 trials"));
    CHECK(contains(x.out, "success = false\n"));
}

TEST_CASE("tower: frozen two-step run") {
    RunResult r = run_cli("tower --q 2 --c 1 --seed-poly 'x^4 + x^3 + 1' --depth 2");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "f_1 = x^12 + x^11 + x^10 + x^9 + x^8 + x^6 + x^4 + x + 1\n"));
    CHECK(contains(r.out, "f_2 = x^36 +"));
    CHECK(contains(r.out, "success = true\n"));
}

TEST_CASE("count: formula, brute cross-check") {
    RunResult r = run_cli("count --q 2 --c 1 --m 2 --brute");
    CHECK(r.code == 0);
    CHECK(r.out == "formula 0, brute 0, match=true\n");

    RunResult s = run_cli("count --q 5 --c 3 --m 1 --brute");
    CHECK(s.code == 0);
    CHECK(s.out == "formula 2, brute 2, match=true\n");

    RunResult f = run_cli("count --q 2 --c 1 --m 4");
    CHECK(f.code == 0);
    CHECK(f.out == "formula 2\n");
}

TEST_CASE("prob: filtered text keys") {
    RunResult r = run_cli("prob --q 2 --c 1 --degree 4");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "p = 2/3\n"));
    CHECK(contains(r.out, "tau = 1/4\n"));
    CHECK(contains(r.out, "lower_bound = 1/6\n"));
    CHECK(contains(r.out, "expected_trials = 3/2\n"));
    CHECK_FALSE(contains(r.out, "q = "));
}

TEST_CASE("graph: dot output with a doubly outlined periodic node") {
    RunResult r = run_cli("graph --q 2 --c 1 --degree 4");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "digraph transform_graph {"));
    CHECK(contains(r.out, "\"x^4 + x + 1\" [peripheries=2];"));
    CHECK(count_of(r.out, "peripheries=2") == 1);
    CHECK(contains(r.out, "\"x^4 + x + 1\" -> \"x^4 + x + 1\";"));
    CHECK(count_of(r.out, " -> ") == 3);

    RunResult s = run_cli("graph --q 2 --c 1 --degree 4 --format structured");
    CHECK(s.code == 0);
    CHECK(contains(s.out, "nodes: 3"));
    CHECK(contains(s.out, "edges: 3"));
    CHECK(contains(s.out, "periodic_count: 1"));
    CHECK(contains(s.out, "periodic_0: x^4 + x + 1"));
}

TEST_CASE("scan-conjecture: small budget yields a partial report") {
    RunResult r = run_cli("scan-conjecture --q 5 --c 3 --degree 3 --budget 60");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "partial = true"));
    CHECK(contains(r.out, "eligible = "));
    CHECK(contains(r.out, "stayed_irreducible = ")); // tally reported, not asserted
}

TEST_CASE("exit codes: usage, domain, budget") {
    CHECK(run_cli("qc --q 2").code == 2);            // neither --c nor --order
    CHECK(run_cli("qc --q 2 --c 1 --order 3").code == 2); // both
    CHECK(run_cli("qc --c 1").code == 2);            // --q missing
    CHECK(run_cli("nonsense --q 2").code == 2);
    CHECK(run_cli("construct --q 2 --c 1 --method sideways --degree 4").code == 2);

    RunResult d = run_cli("transform --q 2 --c 1 --poly 'y + 1'");
    CHECK(d.code == 3);
    CHECK(contains(d.out, "error: domain: "));
    CHECK(run_cli("qc --q 5 --c 1").code == 3); // x^2 - x - 1 splits over F_5
    CHECK(run_cli("qc --q 4 --c 1").code == 3); // 4 is not prime

    RunResult b = run_cli("count --q 2 --c 1 --m 40 --brute --budget 100");
    CHECK(b.code == 4);
    CHECK(contains(b.out, "error: budget: "));
}

TEST_CASE("help exits zero") {
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("tower --help").code == 0);
}
