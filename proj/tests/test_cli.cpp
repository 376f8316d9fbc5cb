// Drives the installed CLI binary end to end: exit codes, JSON output,
// determinism across runs.

#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#ifndef QCONTRACT_CLI_PATH
#error "QCONTRACT_CLI_PATH must be defined"
#endif

namespace {

using nlohmann::json;

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(QCONTRACT_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer{};
    size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) result.stdout_text.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string fixture_dir() {
    static std::string dir = [] {
        std::string d = "cli_fixtures";
        REQUIRE(std::system(("mkdir -p " + d).c_str()) == 0);
        return d;
    }();
    return dir;
}

std::string write_fixture(const std::string& name, const std::string& text) {
    const std::string path = fixture_dir() + "/" + name;
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << text;
    return path;
}

std::string depolarizing_json(double lambda) {
    json re = json::array();
    for (int r = 0; r < 4; ++r) re.push_back(json::array({0.0, 0.0, 0.0, 0.0}));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) re[i * 2 + i][j * 2 + j] = re[i * 2 + i][j * 2 + j].get<double>() + lambda;
    for (int k = 0; k < 4; ++k) re[k][k] = re[k][k].get<double>() + (1.0 - lambda) / 2.0;
    json im = json::array();
    for (int r = 0; r < 4; ++r) im.push_back(json::array({0.0, 0.0, 0.0, 0.0}));
    return json{{"dim_in", 2},
                {"dim_out", 2},
                {"choi", json{{"rows", 4}, {"cols", 4}, {"re", re}, {"im", im}}}}
        .dump();
}

const char* kMaximallyMixed2 = R"({"rows":2,"cols":2,"re":[[0.5,0],[0,0.5]],"im":[[0,0],[0,0]]})";

} // namespace

TEST_CASE("contraction command") {
    const std::string channel = write_fixture("depol07.json", depolarizing_json(0.7));
    const std::string state = write_fixture("mm2.json", kMaximallyMixed2);

    SUBCASE("single f gives one report and eta 0.49") {
        const RunResult r = run_cli("contraction " + channel + " " + state + " --f gm");
        REQUIRE(r.exit_code == 0);
        const json report = json::parse(r.stdout_text);
        CHECK(report["f"] == "gm");
        CHECK(report["eta"].get<double>() == doctest::Approx(0.49).epsilon(1e-9));
    }
    SUBCASE("default f set covers the catalog") {
        const RunResult r = run_cli("contraction " + channel + " " + state);
        REQUIRE(r.exit_code == 0);
        const json reports = json::parse(r.stdout_text);
        REQUIRE(reports.is_array());
        CHECK(reports.size() == 4);
        for (const json& rep : reports) CHECK(rep["eta"].get<double>() == doctest::Approx(0.49).epsilon(1e-7));
    }
    SUBCASE("byte-identical output across runs") {
        const std::string args = "contraction " + channel + " " + state + " --f gm --f hm";
        CHECK(run_cli(args).stdout_text == run_cli(args).stdout_text);
    }
    SUBCASE("output file") {
        const std::string out_path = fixture_dir() + "/report.json";
        const RunResult r = run_cli("contraction " + channel + " " + state + " --f gm -o " + out_path);
        REQUIRE(r.exit_code == 0);
        std::ifstream in(out_path);
        REQUIRE(in.good());
        json report;
        in >> report;
        CHECK(report["eta"].get<double>() == doctest::Approx(0.49).epsilon(1e-9));
    }
    SUBCASE("malformed json exits 1 with location info") {
        const std::string bad = write_fixture("bad.json", "{\"rows\": 2,\n  broken");
        const RunResult r = run_cli("contraction " + bad + " " + state + " --f gm");
        CHECK(r.exit_code == 1);
    }
    SUBCASE("precondition failures exit 2") {
        const std::string pure = write_fixture("pure.json", R"({"rows":2,"cols":2,"re":[[1,0],[0,0]]})");
        const RunResult r = run_cli("contraction " + channel + " " + pure + " --f gm");
        CHECK(r.exit_code == 2);
    }
    SUBCASE("tolerance overrides parse") {
        const RunResult r =
            run_cli("contraction " + channel + " " + state + " --f gm --tol-override gs_tol=1e-9");
        CHECK(r.exit_code == 0);
        const RunResult bad = run_cli("contraction " + channel + " " + state + " --f gm --tol-override chaos=1");
        CHECK(bad.exit_code == 1);
    }
    SUBCASE("numeric failure exits 3") {
        // power:0.3 is not symmetry-inducing; at a skewed state the standard
        // matrix residual trips
        const std::string skewed = write_fixture("skewed.json", R"({"rows":2,"cols":2,"re":[[0.75,0],[0,0.25]]})");
        const RunResult r = run_cli("contraction " + channel + " " + skewed + " --f power:0.3");
        CHECK(r.exit_code == 3);
    }
    SUBCASE("thread cap does not change output") {
        const std::string args = "contraction " + channel + " " + state + " --f gm";
        const std::string capped = "QCONTRACT_THREADS=1 " + std::string(QCONTRACT_CLI_PATH) + " " + args;
        RunResult capped_result;
        FILE* pipe = popen((capped + " 2>/dev/null").c_str(), "r");
        REQUIRE(pipe != nullptr);
        std::array<char, 4096> buffer{};
        size_t got = 0;
        while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
            capped_result.stdout_text.append(buffer.data(), got);
        pclose(pipe);
        CHECK(capped_result.stdout_text == run_cli(args).stdout_text);
    }
}

TEST_CASE("mixing command") {
    const std::string channel = write_fixture("depol09.json", depolarizing_json(0.9));
    const RunResult r = run_cli("mixing " + channel + " --delta 0.01 --metric trace_distance");
    REQUIRE(r.exit_code == 0);
    const json report = json::parse(r.stdout_text);
    CHECK(report["min_n"].get<long long>() == 51);
    for (const json& b : report["bounds"]) {
        CHECK(b["eta"].get<double>() == doctest::Approx(0.81).epsilon(1e-8));
        CHECK(b["n"].get<long long>() == 51);
    }
    CHECK(report["fixed_point"]["re"][0][0].get<double>() == doctest::Approx(0.5).epsilon(1e-9));

    SUBCASE("unitary channels have no unique fixed point") {
        const std::string id = write_fixture(
            "identity.json", R"({"kraus":[{"rows":2,"cols":2,"re":[[1,0],[0,1]],"im":[[0,0],[0,0]]}]})");
        const RunResult bad = run_cli("mixing " + id + " --delta 0.01");
        CHECK(bad.exit_code == 2);
    }
}

TEST_CASE("correlation command") {
    json re = json::array();
    for (int r = 0; r < 4; ++r) re.push_back(json::array({0.0, 0.0, 0.0, 0.0}));
    const double lam = 0.5;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) re[i * 2 + i][j * 2 + j] = re[i * 2 + i][j * 2 + j].get<double>() + lam / 2.0;
    for (int k = 0; k < 4; ++k) re[k][k] = re[k][k].get<double>() + (1.0 - lam) / 4.0;
    const std::string iso =
        write_fixture("iso05.json", json{{"rows", 4}, {"cols", 4}, {"re", re}}.dump());

    SUBCASE("isotropic state at k = 1/2") {
        const RunResult r = run_cli("correlation " + iso + " --k 0.5 --dims 2,2");
        REQUIRE(r.exit_code == 0);
        CHECK(json::parse(r.stdout_text)["mu"].get<double>() == doctest::Approx(0.5).epsilon(1e-8));
    }
    SUBCASE("spectrum flag includes the gm spectrum") {
        const RunResult r = run_cli("correlation " + iso + " --f gm --dims 2,2 --spectrum");
        REQUIRE(r.exit_code == 0);
        const json report = json::parse(r.stdout_text);
        CHECK(report["gm_spectrum"].size() == 4);
        CHECK(report["gm_spectrum"][1].get<double>() == doctest::Approx(0.5).epsilon(1e-8));
    }
    SUBCASE("classical table files route to the classical coefficient") {
        const std::string table = write_fixture("table.json", R"({"p":[[0.45,0.05],[0.05,0.45]]})");
        const RunResult r = run_cli("correlation " + table);
        REQUIRE(r.exit_code == 0);
        const json report = json::parse(r.stdout_text);
        CHECK(report["f"] == "classical");
        CHECK(report["mu"].get<double>() == doctest::Approx(0.8).epsilon(1e-9));
    }
    SUBCASE("dims must factor the state") {
        const RunResult r = run_cli("correlation " + iso + " --k 0.5 --dims 3,2");
        CHECK(r.exit_code == 2);
    }
}

TEST_CASE("verify command") {
    SUBCASE("known suites pass and are deterministic") {
        const RunResult r = run_cli("verify dpi --seed 7 --trials 5");
        REQUIRE(r.exit_code == 0);
        const json summary = json::parse(r.stdout_text);
        CHECK(summary["passed"].get<bool>());
        CHECK(run_cli("verify dpi --seed 7 --trials 5").stdout_text == r.stdout_text);
    }
    SUBCASE("unknown suites exit 1") {
        CHECK(run_cli("verify nonsense").exit_code == 1);
    }
}
