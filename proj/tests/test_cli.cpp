// End-to-end tests of the ahm6 command line tool: spawns the real binary
// and checks output bytes and exit codes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <sys/wait.h>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + std::string(AHM6_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("classify command") {
    RunResult r = run("--json classify --form 'e123 - e356'");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["class"] == json::array({"W3"}));
    CHECK(j["Tc"] == "-2*e123 + 2*e356");

    RunResult nk = run("--json classify --form='-e246 + e136 + e145 + e235'");
    json jn = json::parse(nk.out);
    CHECK(jn["class"] == json::array({"W1"}));

    RunResult w4 = run("--json classify --form 'e125 - e345' --torsion-w4 'e1'");
    CHECK(w4.exit_code == 0);
    json jw = json::parse(w4.out);
    CHECK(jw["class"] == json::array({"W3", "W4"}));

    RunResult text = run("classify --form 'e123 - e356'");
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("class:      {W3}") != std::string::npos);

    RunResult zero = run("--json classify --form 0");
    CHECK(zero.exit_code == 0);
    json jz = json::parse(zero.out);
    CHECK(jz["class"] == json::array()); // Kaehler
    CHECK(jz["Tc"] == "0");

    RunResult dim4 = run("--json classify --form e123 --dim 4");
    CHECK(dim4.exit_code == 0);
    json j4 = json::parse(dim4.out);
    CHECK(j4["class"] == json::array({"W4"}));
}

TEST_CASE("classify rejects bad input with exit 2") {
    CHECK(run("classify --form 'e12 + e1'").exit_code == 2);
    CHECK(run("classify --form 'e12 ++ e34'").exit_code == 2);
    CHECK(run("classify --form 'e12'").exit_code == 2); // not a 3-form
    CHECK(run("nonsense-subcommand").exit_code == 2);
}

TEST_CASE("classify the Heisenberg differential") {
    RunResult r = run("--json classify --form 'e136 - e145 - e235 - e246'");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["class"] == json::array({"W3"}));
}

TEST_CASE("verify json output") {
    RunResult r = run("--json verify --suite algebra");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["suite"] == "algebra");
    CHECK(j["checks"].size() >= 8);
}

TEST_CASE("isotropy command") {
    RunResult r = run("--json isotropy --form 'e125 - e345' --ambient u3");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["dim"] == 2);
    CHECK(j["orbit_tag"] == "two_dim");

    RunResult so3 = run("--json isotropy --form '2*e123 - 2*e356 - e246 - e136 + e145 - e235'");
    json js = json::parse(so3.out);
    CHECK(js["dim"] == 3);
    CHECK(js["orbit_tag"] == "so3");
}

TEST_CASE("verify command") {
    RunResult r = run("verify --suite decomposition");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("[PASS] Phi.Theta = 3 Id on Lambda^3_2 and Id elsewhere") != std::string::npos);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
    CHECK(r.out.find(" ms)") != std::string::npos); // runtime budget printed

    RunResult models = run("verify --suite models");
    CHECK(models.exit_code == 0);
    CHECK(models.out.find("[PASS] Heisenberg golden identities") != std::string::npos);
}

TEST_CASE("verify fails with a corrupted gamma fixture") {
    RunResult r = run("verify --suite clifford", "AHM6_GAMMA_FIXTURE=/nonexistent/gamma.txt");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("[FAIL] gamma fixture anticommutation relations") != std::string::npos);

    // an explicitly valid fixture path works
    RunResult ok = run("verify --suite clifford", "AHM6_GAMMA_FIXTURE=" + std::string(AHM6_FIXTURE_PATH));
    CHECK(ok.exit_code == 0);
}

TEST_CASE("example reports and golden bytes") {
    RunResult h = run("example heisenberg");
    CHECK(h.exit_code == 0);
    CHECK(h.out == slurp(std::string(AHM6_GOLDEN_DIR) + "/heisenberg.json"));

    RunResult s = run("example sl2c");
    CHECK(s.exit_code == 0);
    json js = json::parse(s.out);
    CHECK(js["jacobi"] == true);
    CHECK(js["ric"] == "-4");
    CHECK(js["spinor_kernel"] == 2);

    RunResult w = run("example w3-family --r1 2 --r2 1/2");
    CHECK(w.exit_code == 0);
    json jw = json::parse(w.out);
    CHECK(jw["holonomy_dim"] == 1);

    CHECK(run("example w3-family --r1 bogus").exit_code == 2);
}

TEST_CASE("byte-identical reruns") {
    std::string args = "--json classify --form '2*e123 - e356 + 1/2*e145'";
    RunResult a = run(args), b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    RunResult c = run("example w3-family --r1 0 --r2 0");
    RunResult dd = run("example w3-family --r1 0 --r2 0");
    CHECK(c.out == dd.out);
}
