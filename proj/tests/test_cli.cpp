#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

std::string bin() {
    const char* p = std::getenv("FEWFORM_BIN");
    REQUIRE(p != nullptr);
    return p;
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = bin() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("disc example") {
    auto r = run(R"(disc --form '{"degree":2,"coeffs":["1","3","2"]}')");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1\n");
}

TEST_CASE("eval and lambda") {
    auto r = run(R"(eval --form '{"degree":3,"coeffs":["1","0","0","1"]}' --x 2 --y 1)");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "9\n");
    auto l = run(R"(lambda --json --form '{"degree":11,"coeffs":["2","0","0","0","0","0","1","0","0","0","0","1"]}')");
    CHECK(l.exit_code == 0);
    CHECK(l.out == R"({"lambda_minus":5,"lambda_plus":6})" "\n");
}

TEST_CASE("aut lists the printed cubic generator") {
    auto r = run(R"(aut --form '{"degree":3,"coeffs":["32","0","-30","11"]}')");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("(5, -3; 8, -5)") != std::string::npos);
}

TEST_CASE("apply-homography matches the d=3 remark") {
    auto r = run(R"(apply-homography --json --form '{"degree":3,"coeffs":["1","0","0","1"]}' --q 1 --r 2 --s 1)");
    CHECK(r.exit_code == 0);
    CHECK(r.out == R"({"degree":3,"monic_coeffs":["1","0","3","0"]})" "\n");
}

TEST_CASE("byte-deterministic output") {
    std::string cmd = R"(area --form '{"degree":4,"coeffs":["1","0","0","0","1"]}' --tol 1e-8)";
    auto a = run(cmd), b = run(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("3.70814") == 0);
}

TEST_CASE("count csv schema") {
    auto r = run(R"(count --family '{"r":1,"blocks":{"4":[[1,1]]}}' --d 4 --N 100)");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("N,count,predicted,ratio,error_exponent\n") == 0);
    CHECK(r.out.find("100,6,") != std::string::npos);
}

TEST_CASE("gset json listing") {
    auto r = run(R"(gset --json --family '{"r":1,"blocks":{"4":[[1,1]]}}' --d 4 --m 17)");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"solutions\"") != std::string::npos);
    CHECK(r.out.find(R"({"form_index":0,"x":-2,"y":-1})") != std::string::npos);
}

TEST_CASE("certify exit codes") {
    // single member, strong gap: certified via theorem 486
    auto ok = run(R"(certify --theorem 486 --form '{"degree":7,"coeffs":["1","0","0","0","0","2","1","1"]}')");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("certified") == 0);
    // hypothesis fails: inconclusive, exit 2
    auto inc = run(R"(certify --theorem 486 --form '{"degree":7,"coeffs":["1","1","0","0","0","0","0","1"]}')");
    CHECK(inc.exit_code == 2);
    CHECK(inc.out.find("inconclusive") == 0);
}

TEST_CASE("domain errors exit 1 with a machine code in json mode") {
    auto r = run("disc --form no_such_file.json");
    CHECK(r.exit_code == 1);
    auto j = run("disc --json --form no_such_file.json");
    CHECK(j.exit_code == 1);
    CHECK(j.out.find(R"("code":"domain-error")") != std::string::npos);
    auto t = run("thresholds --eps 1 --r 1 --lambda 2 --m 10");
    CHECK(t.exit_code == 1);
}

TEST_CASE("thresholds fixture") {
    auto r = run("thresholds --json --eps 1 --r 1 --lambda 3 --m 1024 --theta 1.5");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"m0\":15") != std::string::npos);
    CHECK(r.out.find("\"eta\":\"1/") != std::string::npos);
}

TEST_CASE("env thread budget is accepted") {
    auto r = run(R"(theta --d 21)");
    CHECK(r.out == "0.05\n");
    std::string cmd = "FEWFORM_THREADS=4 " + bin() + R"( theta --d 21)";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 256> buf;
    while (size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    pclose(pipe);
    CHECK(out == "0.05\n");
}

TEST_CASE("verify-paper succeeds") {
    auto r = run("verify-paper");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
}
