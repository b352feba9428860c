// End-to-end tests driving the command-line binary.  The binary path comes
// from the GPCE_CLI environment variable (set by CTest).
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout only
};

std::string cli_path() {
    const char* env = std::getenv("GPCE_CLI");
    REQUIRE_MESSAGE(env != nullptr, "GPCE_CLI must point at the binary");
    return env;
}

RunResult run(const std::string& args) {
    const std::string command = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer;
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        std::string templ = (fs::temp_directory_path() / "gpce_cli_XXXXXX").string();
        REQUIRE(mkdtemp(templ.data()) != nullptr);
        path = templ;
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

} // namespace

TEST_CASE("build writes a model and prints the moments") {
    TempDir dir;
    const fs::path model = dir.path / "case2.json";
    const RunResult r = run("build --function example1_case2 --order 2 --method exact --out " +
                            model.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("mean 12.6\n") != std::string::npos);
    CHECK(r.output.find("variance 71.76\n") != std::string::npos);

    const nlohmann::json doc = nlohmann::json::parse(slurp(model));
    CHECK(doc["N"] == 3);
    CHECK(doc["m"] == 2);
    CHECK(doc["coefficients"].size() == 10);
    CHECK(doc["build"]["method"] == "exact");
    CHECK(doc["coefficients"][0]["index"] == "0,0,0");

    // the saved coefficients reproduce the tabulated radicals
    const double expected[10] = {63.0 / 5.0,
                                 2.0 * std::sqrt(42.0 / 5.0),
                                 2.0 * std::sqrt(42.0 / 5.0),
                                 2.0 * std::sqrt(42.0 / 5.0),
                                 33.0 / (35.0 * std::sqrt(2.0)),
                                 19.0 * std::sqrt(37.0) / 70.0,
                                 19.0 * std::sqrt(37.0) / 70.0,
                                 33.0 / (35.0 * std::sqrt(2.0)),
                                 19.0 * std::sqrt(37.0) / 70.0,
                                 33.0 / (35.0 * std::sqrt(2.0))};
    for (int p = 0; p < 10; ++p) {
        CHECK(doc["coefficients"][p]["value"].get<double>() ==
              doctest::Approx(expected[p]).epsilon(1e-10));
    }
}

TEST_CASE("repeated runs are byte-identical") {
    TempDir dir;
    const fs::path m1 = dir.path / "a.json";
    const fs::path m2 = dir.path / "b.json";
    const RunResult r1 = run("build --function example1_case3 --order 2 --out " + m1.string());
    const RunResult r2 = run("build --function example1_case3 --order 2 --out " + m2.string());
    CHECK(r1.exit_code == 0);
    CHECK(r2.exit_code == 0);
    CHECK(r1.output.substr(0, r1.output.find("model ")) ==
          r2.output.substr(0, r2.output.find("model ")));
    CHECK(slurp(m1) == slurp(m2));

    const RunResult v1 = run("validate example1");
    const RunResult v2 = run("validate example1");
    CHECK(v1.exit_code == 0);
    CHECK(v1.output == v2.output);

    const fs::path s1 = dir.path / "s1.csv";
    const fs::path s2 = dir.path / "s2.csv";
    run("sample " + m1.string() + " --n 500 --seed 11 --out " + s1.string());
    run("sample " + m1.string() + " --n 500 --seed 11 --out " + s2.string());
    CHECK(slurp(s1) == slurp(s2));
    CHECK(slurp(dir.path / "s1.hist.csv") == slurp(dir.path / "s2.hist.csv"));
}

TEST_CASE("stats reports tabulated moments") {
    TempDir dir;
    const fs::path base = dir.path / "case1.json";
    REQUIRE(run("build --function example1_case1 --order 2 --out " + base.string()).exit_code == 0);
    const RunResult r1 = run("stats " + base.string() + " --format csv");
    CHECK(r1.output.find("mean,12\n") != std::string::npos);
    CHECK(r1.output.find("variance,51") != std::string::npos);

    const fs::path model = dir.path / "case4.json";
    REQUIRE(run("build --function example1_case4 --order 2 --out " + model.string()).exit_code == 0);
    const RunResult r = run("stats " + model.string() + " --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("mean,11.4") != std::string::npos);
    CHECK(r.output.find("variance,30.96") != std::string::npos);

    const fs::path flat = dir.path / "flat.json";
    REQUIRE(run("build --function example1_case1 --order 0 --out " + flat.string()).exit_code == 0);
    const RunResult rz = run("stats " + flat.string() + " --format csv");
    CHECK(rz.output.find("variance,0\n") != std::string::npos);
}

TEST_CASE("sampling statistics and row counts") {
    TempDir dir;
    const fs::path model = dir.path / "case1.json";
    REQUIRE(run("build --function example1_case1 --order 2 --out " + model.string()).exit_code == 0);

    const fs::path one = dir.path / "one.csv";
    REQUIRE(run("sample " + model.string() + " --n 1 --seed 42 --out " + one.string()).exit_code ==
            0);
    std::istringstream rows(slurp(one));
    std::string line;
    int count = 0;
    while (std::getline(rows, line)) {
        ++count;
    }
    CHECK(count == 1);

    const fs::path big = dir.path / "big.csv";
    REQUIRE(
        run("sample " + model.string() + " --n 100000 --seed 42 --out " + big.string()).exit_code ==
        0);
    std::istringstream all(slurp(big));
    double mean = 0.0, sq = 0.0;
    int n = 0;
    while (std::getline(all, line)) {
        const double v = std::stod(line);
        mean += v;
        sq += v * v;
        ++n;
    }
    mean /= n;
    const double var = sq / n - mean * mean;
    CHECK(n == 100000);
    CHECK(std::abs(var - 51.0) / 51.0 < 0.02);

    // the histogram header and mass
    const std::string hist = slurp(dir.path / "big.hist.csv");
    CHECK(hist.rfind("bin_left,bin_right,count,density\n", 0) == 0);
}

TEST_CASE("validate suites succeed and fail loudly") {
    CHECK(run("validate example1").exit_code == 0);
    CHECK(run("validate example2").exit_code == 0);
    CHECK(run("validate properties").exit_code == 0);
    CHECK(run("validate nonsense").exit_code == 2);

    const nlohmann::json doc = nlohmann::json::parse(run("validate example1").output);
    CHECK(doc["failed"] == 0);
    CHECK(doc["checks"].size() > 40);
}

TEST_CASE("gram subcommand") {
    TempDir dir;
    const fs::path identity = dir.path / "id.csv";
    std::ofstream(identity) << "1,0,0\n0,1,0\n0,0,1\n";
    const RunResult r = run("gram --sigma " + identity.string() + " --order 2");
    CHECK(r.exit_code == 0);
    std::istringstream rows(r.output);
    std::string header;
    std::getline(rows, header);
    CHECK(header == "\"2,0,0\",\"1,1,0\",\"1,0,1\",\"0,2,0\",\"0,1,1\",\"0,0,2\"");
    std::string first;
    std::getline(rows, first);
    CHECK(first == "1,0,0,0,0,0");

    const RunResult rz = run("gram --sigma " + identity.string() + " --order 0");
    CHECK(rz.output.find("\n1\n") != std::string::npos);

    const fs::path equi = dir.path / "equi.csv";
    std::ofstream(equi) << "1,0.2,0.2\n0.2,1,0.2\n0.2,0.2,1\n";
    const RunResult re = run("gram --sigma " + equi.string() + " --order 1");
    std::istringstream erows(re.output);
    std::string eline;
    std::getline(erows, eline); // header
    std::getline(erows, eline);
    CHECK(eline.rfind("1,-0.16666666666", 0) == 0);

    const fs::path bad = dir.path / "bad.csv";
    std::ofstream(bad) << "1,1\n1,1\n";
    CHECK(run("gram --sigma " + bad.string() + " --order 1").exit_code == 2);
}

TEST_CASE("hermite subcommand prints the standardized polynomial") {
    TempDir dir;
    const fs::path sigma = dir.path / "case2.csv";
    std::ofstream(sigma) << "1,0.2,0.2\n0.2,1,0.2\n0.2,0.2,1\n";
    const RunResult r = run("hermite --sigma " + sigma.string() + " --index 1,0,0");
    CHECK(r.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(r.output);
    CHECK(doc["norm_sq"].get<double>() == doctest::Approx(15.0 / 14.0));
    CHECK(doc["psi"]["1,0,0"].get<double>() ==
          doctest::Approx(3.0 * std::sqrt(5.0 / 42.0)).epsilon(1e-12));
}

TEST_CASE("error handling and exit codes") {
    TempDir dir;
    SUBCASE("malformed covariance names the cell") {
        const fs::path bad = dir.path / "bad.csv";
        std::ofstream(bad) << "1,0.2\n0.2,zzz\n";
        const std::string command = cli_path() + " build --function x1 --sigma " + bad.string() +
                                    " --order 1 2>" + (dir.path / "err.txt").string();
        const int status = std::system(command.c_str());
        CHECK(WEXITSTATUS(status) == 2);
        const std::string err = slurp(dir.path / "err.txt");
        CHECK(err.find("row 2") != std::string::npos);
        CHECK(err.find("column 2") != std::string::npos);
    }
    SUBCASE("exact path refuses an evaluation-only output") {
        CHECK(run("build --function example3_synthetic --order 1 --method exact").exit_code == 2);
    }
    SUBCASE("unwritable output path") {
        TempDir d2;
        const fs::path model = d2.path / "m.json";
        REQUIRE(run("build --function example1_case1 --order 1 --out " + model.string())
                    .exit_code == 0);
        CHECK(run("sample " + model.string() + " --n 10 --seed 1 --out /nonexistent/dir/s.csv")
                  .exit_code == 3);
        CHECK(run("build --function example1_case1 --order 1 --out /nonexistent/dir/m.json")
                  .exit_code == 3);
    }
    SUBCASE("missing model file") {
        CHECK(run("stats /nonexistent/model.json").exit_code == 3);
    }
}

TEST_CASE("QMC builds of the ODE benchmark converge to the analytic variance") {
    TempDir dir;
    const double mean_exact = 1.0 + (0.5 / 16.0 - 1.0) * std::exp(1.0 / 32.0 - 1.0);
    const double second = (136.0 - std::exp(-1.0 + 1.0 / 32.0) * (272.0 + 0.5 * (0.5 - 32.0)) +
                           2.0 * std::exp(-2.0 + 1.0 / 8.0) * (68.0 + 0.5 * (0.5 - 16.0))) /
                          128.0;
    const double exact_var = second - mean_exact * mean_exact;

    auto variance_of = [&](int qmc) {
        const fs::path model = dir.path / ("ode" + std::to_string(qmc) + ".json");
        const RunResult r = run("build --function \"example2(1,0.5)\" --order 3 --method qmc "
                                "--qmc " + std::to_string(qmc) + " --out " + model.string());
        REQUIRE(r.exit_code == 0);
        const std::string key = "variance ";
        const auto pos = r.output.find(key);
        REQUIRE(pos != std::string::npos);
        return std::stod(r.output.substr(pos + key.size()));
    };
    // coefficient-estimation noise dominates the (tiny) truncation error and
    // decays at roughly the QMC rate: ~1e-2 at 4096, under 1e-3 by 65536
    CHECK(std::abs(variance_of(4096) - exact_var) / exact_var < 1.5e-2);
    CHECK(std::abs(variance_of(65536) - exact_var) / exact_var < 1e-3);
}
