#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + std::string(VIRANSATZ_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult result;
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof(buf), pipe)) result.output.append(buf, n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("energy json carries the benchmark values") {
    const auto r = run_cli("energy --omega 1 --lambda 1 --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(std::abs(j["E_fisher"].get<double>() - 0.70188134) <= 1e-7);
    CHECK(std::abs(j["E_num"].get<double>() - 0.69617582) <= 1e-6);
    CHECK(std::abs(j["cr_product"].get<double>() - 1.046344179) <= 5e-7);
    CHECK(j["lambda"] == 1.0);
}

TEST_CASE("coefficient-style potential and --no-reference") {
    const auto r = run_cli("energy --coeff 2=0.5 --no-reference --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(std::abs(j["E_fisher"].get<double>() - 0.5) <= 1e-9);
    CHECK(j["E_num"].is_null());
}

TEST_CASE("help is available and exits cleanly") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("energy --help").exit_code == 0);
    CHECK(run_cli("").exit_code == 2);  // a subcommand is required
}

TEST_CASE("validation failures exit with code 2 and a named error") {
    const auto r = run_cli("energy --coeff 3=1");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("OddDegree") != std::string::npos);

    const auto both = run_cli("energy --omega 1 --coeff 2=1");
    CHECK(both.exit_code == 2);

    const auto neither = run_cli("energy");
    CHECK(neither.exit_code == 2);
}

TEST_CASE("json output is byte-identical across runs") {
    const auto a = run_cli("table --lambdas 1 --format json");
    const auto b = run_cli("table --lambdas 1 --format json");
    REQUIRE(a.exit_code == 0);
    CHECK(a.output == b.output);

    const auto c = run_cli("fisher --omega 1 --lambda 10 --format json");
    const auto d = run_cli("fisher --omega 1 --lambda 10 --format json");
    REQUIRE(c.exit_code == 0);
    CHECK(c.output == d.output);
}

TEST_CASE("single-row tables") {
    const auto ho = run_cli("table --lambdas 0 --format json");
    REQUIRE(ho.exit_code == 0);
    const auto j = nlohmann::json::parse(ho.output);
    REQUIRE(j.size() == 1);
    CHECK(std::abs(j[0]["E_fisher"].get<double>() - 0.5) <= 1e-8);
    CHECK(std::abs(j[0]["E_num"].get<double>() - 0.5) <= 1e-7);
    CHECK(std::abs(j[0]["cr_product"].get<double>() - 1.0) <= 1e-9);

    const auto row = run_cli("table --lambdas 0.001 --format json");
    REQUIRE(row.exit_code == 0);
    const auto jr = nlohmann::json::parse(row.output);
    CHECK(std::abs(jr[0]["E_num"].get<double>() - 0.50037435) <= 1e-6);
    CHECK(std::abs(jr[0]["E_fisher"].get<double>() - 0.50037444) <= 5e-7);
    CHECK(std::abs(jr[0]["cr_product"].get<double>() - 1.000001477) <= 5e-7);
}

TEST_CASE("failed rows do not abort the sweep") {
    const auto r = run_cli("table --lambdas -1,0.001 --no-reference --format csv");
    CHECK(r.exit_code == 3);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 3);
    CHECK(lines[1].find("error") != std::string::npos);
    CHECK(lines[2].find("0.500374438") != std::string::npos);
}

TEST_CASE("fisher subcommand reports the oscillator analytics") {
    const auto r = run_cli("fisher --omega 1 --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(std::abs(j["I_gradient"].get<double>() - 2.0) <= 1e-9);
    CHECK(std::abs(j["I_virial"].get<double>() - 2.0) <= 1e-9);
    CHECK(std::abs(j["moments"]["2"].get<double>() - 0.5) <= 1e-9);
    CHECK(std::abs(j["cr_product"].get<double>() - 1.0) <= 1e-9);
}

TEST_CASE("wavefunction sampling") {
    const auto r = run_cli("wavefunction --omega 1 --lambda 1 --samples 101");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 102);
    CHECK(lines[0] == "x,psi,pdf");

    double max_psi = 0.0;
    size_t argmax = 0;
    for (size_t i = 1; i < lines.size(); ++i) {
        std::istringstream row(lines[i]);
        std::string x_str, psi_str;
        std::getline(row, x_str, ',');
        std::getline(row, psi_str, ',');
        const double psi = std::stod(psi_str);
        if (psi > max_psi) {
            max_psi = psi;
            argmax = i;
        }
    }
    CHECK(argmax == 51);  // x = 0 is the middle sample
    CHECK(max_psi > 0.7);
}

TEST_CASE("exact wavefunction sampling") {
    const auto r = run_cli(
        "wavefunction --omega 1 --samples 51 --exact --grid-points 4097 --half-width 12");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 52);
    std::istringstream mid(lines[26]);
    std::string x_str, psi_str;
    std::getline(mid, x_str, ',');
    std::getline(mid, psi_str, ',');
    CHECK(std::abs(std::stod(x_str)) <= 1e-12);
    CHECK(std::stod(psi_str) == doctest::Approx(0.7511255444649425).epsilon(1e-4));
}

TEST_CASE("verify passes on a benchmark potential") {
    const auto r = run_cli("verify --omega 1 --lambda 10");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("FAIL") == std::string::npos);
    CHECK(r.output.find("procedure_identity") != std::string::npos);
    CHECK(r.output.find("pde_residual") != std::string::npos);
}

TEST_CASE("output file receives the exact bytes") {
    const std::string path = "/tmp/viransatz_cli_out.json";
    std::remove(path.c_str());
    const auto direct = run_cli("fisher --omega 1 --format json");
    const auto filed = run_cli("fisher --omega 1 --format json --output " + path);
    REQUIRE(filed.exit_code == 0);
    CHECK(filed.output.empty());
    std::string content;
    {
        FILE* f = fopen(path.c_str(), "rb");
        REQUIRE(f != nullptr);
        char buf[4096];
        while (size_t n = fread(buf, 1, sizeof(buf), f)) content.append(buf, n);
        fclose(f);
    }
    CHECK(content == direct.output);
    std::remove(path.c_str());
}

TEST_CASE("bad numeric controls exit with code 2") {
    CHECK(run_cli("energy --omega 1 --abs-tol 0 --no-reference").exit_code == 2);
    CHECK(run_cli("energy --omega 1 --grid-points 100").exit_code == 2);
}

TEST_CASE("verify accepts coefficient-style potentials") {
    const auto r = run_cli("verify --coeff 2=0.5 --coeff 6=0.1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("FAIL") == std::string::npos);
}

TEST_CASE("environment tolerance override is accepted") {
    const auto r = run_cli("energy --omega 1 --no-reference --format json",
                           "VIRANSATZ_TOL=1e-10 ");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(std::abs(j["E_fisher"].get<double>() - 0.5) <= 1e-8);
}
