// Exercises the installed CLI binary end to end through a shell. The binary
// path comes in via the NECKLACE_CLI compile definition.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#ifndef NECKLACE_CLI
#error "NECKLACE_CLI must point at the CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(NECKLACE_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

RunResult run_shell(const std::string& cmd) {
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string strip(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
    return s;
}

}  // namespace

TEST_CASE("generate") {
    auto r = run("generate -s 2 -n 2 -k 2");
    CHECK(r.exit_code == 0);
    CHECK(strip(r.out) == "11100100");

    auto blocks = run("generate -s 2 -n 2 -k 2 -f blocks");
    CHECK(blocks.exit_code == 0);
    CHECK(strip(blocks.out) == "11|10|01|00");

    auto bad = run("generate -s 2 -n 3 -k 2");
    CHECK(bad.exit_code == 2);

    auto guarded = run("generate -s 2 -n 6 -k 2 --guard 10");
    CHECK(guarded.exit_code == 3);
}

TEST_CASE("guard environment variable with flag precedence") {
    auto env = run_shell("NECKLACE_EMISSION_GUARD=10 " + std::string(NECKLACE_CLI) +
                         " generate -s 2 -n 6 -k 2");
    CHECK(env.exit_code == 3);
    auto flag = run_shell("NECKLACE_EMISSION_GUARD=10 " + std::string(NECKLACE_CLI) +
                          " generate -s 2 -n 6 -k 2 --guard 128");
    CHECK(flag.exit_code == 0);
}

TEST_CASE("listings") {
    auto maxi = run("maximal -s 2 -n 6 -k 2");
    CHECK(maxi.exit_code == 0);
    CHECK(maxi.out.rfind("111111 0\n", 0) == 0);
    CHECK(maxi.out.find("000000 0\n") != std::string::npos);
    int lines = 0;
    for (char c : maxi.out)
        if (c == '\n') ++lines;
    CHECK(lines == 24);

    auto lyn = run("lyndon -s 2 -n 4 -k 1");
    CHECK(lyn.exit_code == 0);
    CHECK(lyn.out == "1\n1110\n1100\n10\n1000\n0\n");

    auto lyn8 = run("lyndon -s 3 -n 2 -k 8");
    CHECK(lyn8.exit_code == 0);
    int count = 0;
    std::size_t pos = 0, prev = 0;
    while ((pos = lyn8.out.find('\n', prev)) != std::string::npos) {
        CHECK(pos - prev == 8);
        prev = pos + 1;
        ++count;
    }
    CHECK(count == 9);
}

TEST_CASE("generate piped into verify") {
    for (const std::string params : {"-s 2 -n 2 -k 2", "-s 2 -n 4 -k 2",
                                     "-s 3 -n 2 -k 2", "-s 2 -n 2 -k 4",
                                     "-s 12 -n 1 -k 1", "-s 12 -n 2 -k 2"}) {
        auto r = run_shell(std::string(NECKLACE_CLI) + " generate " + params +
                           " | " + NECKLACE_CLI + " verify " + params);
        CHECK(r.exit_code == 0);
    }
}

TEST_CASE("verify") {
    auto ok = run_shell("echo 11100100 | " + std::string(NECKLACE_CLI) +
                        " verify -s 2 -n 2 -k 2");
    CHECK(ok.exit_code == 0);

    // rotation of the perfect necklace
    auto rot = run_shell("echo 10011100 | " + std::string(NECKLACE_CLI) +
                         " verify -s 2 -n 2 -k 2");
    CHECK(rot.exit_code == 0);

    // wrong params: length 8 != 2^2*1
    auto wrong = run_shell("echo 11100100 | " + std::string(NECKLACE_CLI) +
                           " verify -s 2 -n 2 -k 1");
    CHECK(wrong.exit_code == 1);

    auto malformed = run_shell("echo abc | " + std::string(NECKLACE_CLI) +
                               " verify -s 2 -n 2 -k 2");
    CHECK(malformed.exit_code == 2);

    auto bad_json = run_shell("echo '{\"nope\":1}' | " + std::string(NECKLACE_CLI) +
                              " verify -s 2 -n 2 -k 2 -f json");
    CHECK(bad_json.exit_code == 2);
}

TEST_CASE("theta") {
    auto fwd = run("theta -s 2 -n 6 -k 2 011000");
    CHECK(fwd.exit_code == 0);
    CHECK(strip(fwd.out) == "010101");

    auto inv = run("theta -s 2 -n 6 -k 2 --inverse 111110");
    CHECK(inv.exit_code == 0);
    CHECK(strip(inv.out) == "111111");

    CHECK(run("theta -s 2 -n 6 -k 2 000000").exit_code == 2);
    CHECK(run("theta -s 2 -n 6 -k 2 --inverse 111111").exit_code == 2);
    // off-chain word with no predecessor
    CHECK(run("theta -s 2 -n 4 -k 2 --inverse 1011").exit_code == 4);
}

TEST_CASE("oracle") {
    auto r = run("oracle -s 2 -n 2 -k 2");
    CHECK(r.exit_code == 0);
    CHECK(strip(r.out) == "11100100 MATCH");

    auto r1 = run("oracle -s 2 -n 1 -k 2");
    CHECK(r1.exit_code == 0);
    CHECK(strip(r1.out) == "1100 MATCH");

    CHECK(run("oracle -s 2 -n 5 -k 5").exit_code == 3);

    auto fault = run("oracle -s 2 -n 2 -k 2 --inject-fault");
    CHECK(fault.exit_code == 5);
    CHECK(fault.out.find("MISMATCH") != std::string::npos);
}
