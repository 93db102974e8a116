// End-to-end checks of the command-line tool: output content, exit codes,
// golden files, and report determinism.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(MOOREDIAG_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), out};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("cli_test_") + name;
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("group normalize") {
    RunResult r = run_cli("group normalize Z/4+Z/2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "Z/2+Z/4\n");
    CHECK(run_cli("group normalize Z/2+Z/3").out == "Z/6\n");
}

TEST_CASE("hom and ext") {
    CHECK(run_cli("ext Z/2 Z/2").out == "Z/2\n");
    CHECK(run_cli("ext Z Z/8").out == "0\n");
    CHECK(run_cli("hom Z/4 Z/6").out == "Z/2\n");
}

TEST_CASE("parse errors exit 1, domain errors exit 2") {
    CHECK(run_cli("group normalize Q").exit_code == 1);
    CHECK(run_cli("group normalize Z/1").exit_code == 1);
    // F_c contains Z, so its character dual is rejected as a domain error
    std::string fc = write_temp("fc.json",
                                R"({"kind":"eed","A":"0","B":"Z/2","C":"Z",)"
                                R"("eta":[[]],"chi":[[1]],"psi":[]})");
    RunResult r = run_cli("dual j " + fc);
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("infinite group") != std::string::npos);
}

TEST_CASE("phi of the nonsplit extension") {
    std::string e1 = write_temp("e1.json",
                                R"({"V":"Z/2","M":"Z/4","U":"Z/2","i":[[2]],"p":[[1]]})");
    RunResult r = run_cli("phi " + e1);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("Phi = [[1]]") != std::string::npos);
    CHECK(r.out.find("nonsplit") != std::string::npos);
}

TEST_CASE("diagram validate names the failing relation and replays payloads") {
    // the F_b shape with chi zeroed out violates chi*eta*psi = 2*id_B
    std::string bad = write_temp("bad.json",
                                 R"({"kind":"eed","A":"Z/2","B":"Z/4","C":"Z/2",)"
                                 R"("eta":[[1]],"chi":[[0]],"psi":[[1]]})");
    RunResult r = run_cli("diagram validate " + bad);
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("FAIL chi*eta*psi") != std::string::npos);
    // ill-defined matrices are domain errors naming the entry
    std::string ill = write_temp("ill.json",
                                 R"({"kind":"eta","A":"Z/2","C":"Z/4","eta":[[1]]})");
    RunResult r2 = run_cli("diagram validate " + ill);
    CHECK(r2.exit_code == 2);
    CHECK(r2.out.find("ill-defined") != std::string::npos);
}

TEST_CASE("diagram homset") {
    std::string fb = write_temp("fb.json",
                                R"({"kind":"eed","A":"Z/2","B":"Z/4","C":"Z/2",)"
                                R"("eta":[[1]],"chi":[[2]],"psi":[[1]]})");
    RunResult r = run_cli("diagram homset " + fb + " " + fb);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("count: 4") != std::string::npos);
    // infinite hom sets report the group-level description and exit 2
    std::string fa = write_temp("fa.json",
                                R"({"kind":"eed","A":"Z","B":"Z/2","C":"Z/2",)"
                                R"("eta":[[1]],"chi":[[1]],"psi":[[0]]})");
    RunResult r2 = run_cli("diagram homset " + fa + " " + fa);
    CHECK(r2.exit_code == 2);
    CHECK(r2.out.find("morphism group: ") != std::string::npos);
    CHECK(r2.out.find("infinite hom set") != std::string::npos);
}

TEST_CASE("cj outputs match the golden files byte for byte") {
    std::string dir = MOOREDIAG_GOLDEN_DIR;
    CHECK(run_cli("cj table").out == read_file(dir + "/cj_table.txt"));
    CHECK(run_cli("cj representable a").out == read_file(dir + "/cj_representable_a.txt"));
    CHECK(run_cli("cj representable b").out == read_file(dir + "/cj_representable_b.txt"));
    CHECK(run_cli("cj representable c").out == read_file(dir + "/cj_representable_c.txt"));
}

TEST_CASE("verify reports are byte-identical for the same arguments") {
    std::string a = run_cli("verify six-term --max-order 4 --format json").out;
    std::string b = run_cli("verify six-term --max-order 4 --format json").out;
    CHECK(a == b);
    CHECK(a.find("\"schema\": 1") != std::string::npos);
    RunResult t = run_cli("verify cj-tables --format text");
    CHECK(t.exit_code == 0);
    CHECK(t.out.find("result: PASS") != std::string::npos);
    CHECK(run_cli("verify no-such-suite").exit_code != 0);
}

TEST_CASE("dual delta of F_b returns F_b") {
    std::string fb = write_temp("fb2.json",
                                R"({"kind":"eed","A":"Z/2","B":"Z/4","C":"Z/2",)"
                                R"("eta":[[1]],"chi":[[2]],"psi":[[1]]})");
    RunResult r = run_cli("dual delta " + fb);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"B\": \"Z/4\"") != std::string::npos);
}
