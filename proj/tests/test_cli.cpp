#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + std::string(NILFOCUS_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("classify emits the full JSON report and exits 0") {
    RunResult r = run_cli("classify --l 2 --k 1 --s 2 --m 3/5");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("first_index") == 10);
    CHECK(j.at("stability") == "repeller");
    CHECK(j.at("m_exact") == true);
    CHECK(j.at("value_num") == "32");
    CHECK(j.at("value_den") == "1625");
    CHECK(j.contains("certificate"));
    CHECK(j.at("certificate").at("verdict") == true);
}

TEST_CASE("classify output is byte-identical across runs") {
    RunResult a = run_cli("classify --l 3 --k 2 --s 6 --m 1/7");
    RunResult b = run_cli("classify --l 3 --k 2 --s 6 --m 1/7");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("invalid parameters exit with code 2") {
    CHECK(run_cli("classify --l 1 --k 1 --s 1 --m 0").exit_code == 2);
    CHECK(run_cli("classify --l 4 --k 1 --s 1 --m 0").exit_code == 2);  // l > 2s
    CHECK(run_cli("classify --l 2 --k 1 --s 2 --m nonsense").exit_code == 2);
    CHECK(run_cli("nosuchcommand").exit_code == 2);
}

TEST_CASE("mstar prints the exact rational") {
    RunResult r = run_cli("mstar --l 2 --k 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1/3\n");
}

TEST_CASE("certify --all includes the grouped combination value") {
    RunResult r = run_cli("certify --l 2 --k 1 --all");
    REQUIRE(r.exit_code == 0);
    json arr = json::parse(r.out);
    REQUIRE(arr.is_array());
    CHECK(arr.size() == 5);
    bool found = false;
    for (const auto& cert : arr) {
        CHECK(cert.at("verdict") == true);
        for (const auto& w : cert.at("witness"))
            if (w.at("name") == "combination" && w.at("num") == "1531" && w.at("den") == "23205")
                found = true;
    }
    CHECK(found);
}

TEST_CASE("an inconclusive tail cut exits with code 3") {
    CHECK(run_cli("certify --lemma approx2 --N 3 --M 8").exit_code == 3);
    CHECK(run_cli("certify --lemma approx2 --N 5 --M 8").exit_code == 0);
}

TEST_CASE("probe on a drowned-out signal exits with code 3") {
    RunResult r = run_cli("simulate --l 2 --k 1 --s 2 --m 0.6 --probe 0.05 --ode-tol 1e-10");
    CHECK(r.exit_code == 3);
    json j = json::parse(r.out);
    CHECK(j.at("result") == "inconclusive");
}

TEST_CASE("sweep CSV has the fixed header and is thread-count independent") {
    std::string cfg_path = "/tmp/nilfocus_test_sweep.json";
    {
        std::ofstream cfg(cfg_path);
        cfg << R"({"l":[2,3],"k":[1],"s":[2,3],"m":["0","1/2","3/5"],"ode_tol":1e-9})";
    }
    RunResult one = run_cli("sweep --config " + cfg_path, "NILFOCUS_THREADS=1");
    RunResult four = run_cli("sweep --config " + cfg_path, "NILFOCUS_THREADS=4");
    REQUIRE(one.exit_code == 0);
    CHECK(one.out.rfind("l,k,s,m,regime,stability,first_index,cert_ok,sim_delta\n", 0) == 0);
    CHECK(one.out == four.out);
    // 2*1*2*3 grid points + header
    CHECK(std::count(one.out.begin(), one.out.end(), '\n') == 13);
    // the critical repeller row must carry a verified certificate flag
    CHECK(one.out.find("2,1,2,3/5,s=kl m=m*,repeller,10,1,") != std::string::npos);
    std::remove(cfg_path.c_str());
}
