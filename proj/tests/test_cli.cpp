#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <json.hpp>

using nlohmann::json;

namespace {

const std::string cli = HSH_CLI_PATH;

int run(const std::string& args) {
    const std::string cmd = cli + " " + args;
    const int status = std::system(cmd.c_str());
    if (status == -1 || !WIFEXITED(status)) {
        return -1;
    }
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing file: " << path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::size_t count_lines(const std::string& text) {
    std::size_t lines = 0;
    for (char c : text) {
        lines += (c == '\n');
    }
    return lines;
}

struct ScopedEnv {
    ScopedEnv(const char* name, const char* value) : name_(name) {
        ::setenv(name, value, 1);
    }
    ~ScopedEnv() { ::unsetenv(name_); }
    const char* name_;
};

const std::string quiet = " 2>/dev/null";

} // namespace

TEST_CASE("help and version exit cleanly") {
    CHECK(run("--help > /dev/null") == 0);
    CHECK(run("--version > /dev/null") == 0);
    CHECK(run("verify --help > /dev/null") == 0);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("> /dev/null" + quiet) == 2);          // missing subcommand
    CHECK(run("--bogus" + quiet) == 2);
    CHECK(run("verify --trials 0 --out cli_zero.csv" + quiet) == 2);
    CHECK(run("verify --mode nonsense" + quiet) == 2);
    CHECK(run("verify --tol 0 --trials 5 --out cli_tol.csv" + quiet) == 2);
    CHECK(run("verify --dim-p 5..2 --trials 5 --out cli_range.csv" + quiet) ==
          2);
    CHECK(run("verify --dim-p 9 --dim-q 8 --trials 5 --out cli_cap.csv" +
              quiet) == 2);
    CHECK(run("example --points 1" + quiet) == 2);
    CHECK(run("verify --trials 5 --out /nonexistent-dir/x.csv" + quiet) == 2);
}

TEST_CASE("verify runs clean on a small config") {
    CHECK(run("verify --seed 11 --trials 30 --dim-p 2..3 --dim-q 2..4 "
              "--out cli_small.csv") == 0);
    const auto text = slurp("cli_small.csv");
    CHECK(text.rfind("check,trial,n,q,blocks,mode,quantity,class,lhs,rhs,"
                     "margin,satisfied\n",
                     0) == 0);
    CHECK(count_lines(text) > 30);
}

TEST_CASE("verify json output parses and echoes the config") {
    CHECK(run("verify --seed 11 --trials 20 --dim-p 2 --dim-q 2 3 "
              "--mode pure --format json --out cli_small.json") == 0);
    const auto parsed = json::parse(slurp("cli_small.json"));
    CHECK(parsed["schema"] == "hs-holevo-report/1");
    CHECK(parsed["config"]["seed"] == 11);
    CHECK(parsed["config"]["trials"] == 20);
    CHECK(parsed["config"]["dims_p"] == json::array({2}));
    CHECK(parsed["config"]["dims_q"] == json::array({2, 3}));
    CHECK(parsed["config"]["mode"] == "pure");
    CHECK(parsed["summary"]["exit_code"] == 0);
    CHECK(parsed["version"].is_string());
    CHECK_FALSE(parsed["version"].get<std::string>().empty());
}

TEST_CASE("injected violation flips the exit code and ships payloads") {
    CHECK(run("verify --seed 3 --trials 12 --inject-violation --format json "
              "--out cli_inject.json") == 1);
    const auto parsed = json::parse(slurp("cli_inject.json"));
    CHECK(parsed["summary"]["proven_violations"].get<int>() > 0);
    CHECK(parsed["summary"]["exit_code"] == 1);

    bool found_payload = false;
    for (const auto& check : parsed["checks"]) {
        if (check["name"] != "injected-negated-contractivity") {
            continue;
        }
        REQUIRE_FALSE(check["counterexamples"].empty());
        const auto& ce = check["counterexamples"][0];
        const auto& rho = ce["payload"]["rho"];
        REQUIRE(rho.is_array());
        const auto q = ce["q"].get<std::size_t>();
        REQUIRE(rho.size() == q);
        REQUIRE(rho[0].size() == q);
        CHECK(rho[0][0].size() == 2);
        found_payload = true;
    }
    CHECK(found_payload);
}

TEST_CASE("identical configs produce identical bytes") {
    CHECK(run("verify --seed 9 --trials 25 --out cli_det_a.csv") == 0);
    CHECK(run("verify --seed 9 --trials 25 --out cli_det_b.csv") == 0);
    CHECK(slurp("cli_det_a.csv") == slurp("cli_det_b.csv"));

    CHECK(run("verify --seed 9 --trials 25 --threads 3 "
              "--out cli_det_c.csv") == 0);
    CHECK(slurp("cli_det_a.csv") == slurp("cli_det_c.csv"));

    CHECK(run("verify --seed 10 --trials 25 --out cli_det_d.csv") == 0);
    CHECK(slurp("cli_det_a.csv") != slurp("cli_det_d.csv"));
}

TEST_CASE("environment seed is the default and the flag wins") {
    CHECK(run("verify --seed 123 --trials 15 --out cli_env_ref.csv") == 0);
    {
        ScopedEnv env("HS_HOLEVO_SEED", "123");
        CHECK(run("verify --trials 15 --out cli_env_a.csv") == 0);
        CHECK(run("verify --seed 123 --trials 15 --out cli_env_b.csv") == 0);
    }
    CHECK(slurp("cli_env_a.csv") == slurp("cli_env_ref.csv"));
    CHECK(slurp("cli_env_b.csv") == slurp("cli_env_ref.csv"));

    {
        ScopedEnv env("HS_HOLEVO_SEED", "777");
        CHECK(run("verify --seed 123 --trials 15 --out cli_env_c.csv") == 0);
    }
    CHECK(slurp("cli_env_c.csv") == slurp("cli_env_ref.csv"));

    {
        ScopedEnv env("HS_HOLEVO_SEED", "not-a-number");
        CHECK(run("verify --trials 5 --out cli_env_bad.csv" + quiet) == 2);
    }
}

TEST_CASE("example sweep output") {
    CHECK(run("example --out cli_sweep.csv") == 0);
    const auto text = slurp("cli_sweep.csv");
    CHECK(count_lines(text) == 182);

    CHECK(run("example --points 2 --out cli_sweep2.csv") == 0);
    const auto two = slurp("cli_sweep2.csv");
    CHECK(count_lines(two) == 3);
    std::istringstream lines(two);
    std::string header;
    std::string row0;
    std::string row1;
    std::getline(lines, header);
    std::getline(lines, row0);
    std::getline(lines, row1);
    CHECK(row0.rfind("0,", 0) == 0);
    CHECK(row1.rfind("3.1415926535897931,", 0) == 0);

    CHECK(run("example --points 5 --format json --out cli_sweep.json") == 0);
    const auto parsed = json::parse(slurp("cli_sweep.json"));
    CHECK(parsed["analytics"]["analytic_ok"] == true);
    CHECK(parsed["rows"].size() == 5);
}

TEST_CASE("example csv round-trips through parsing") {
    CHECK(run("example --points 7 --out cli_round.csv") == 0);
    const auto text = slurp("cli_round.csv");
    std::istringstream lines(text);
    std::string line;
    std::getline(lines, line);  // header
    std::size_t rows = 0;
    while (std::getline(lines, line)) {
        std::istringstream fields(line);
        std::string field;
        std::size_t count = 0;
        while (std::getline(fields, field, ',')) {
            const char* begin = field.c_str();
            char* end = nullptr;
            std::strtod(begin, &end);
            CHECK(end == begin + field.size());
            ++count;
        }
        CHECK(count == 13);
        ++rows;
    }
    CHECK(rows == 7);

    // Serializing the same sweep twice is byte-stable.
    CHECK(run("example --points 7 --out cli_round_b.csv") == 0);
    CHECK(slurp("cli_round_b.csv") == text);
}

TEST_CASE("compare emits one row per trial and holds both bounds") {
    CHECK(run("compare --seed 5 --trials 40 --out cli_compare.csv") == 0);
    const auto text = slurp("cli_compare.csv");
    CHECK(count_lines(text) == 41);

    std::istringstream lines(text);
    std::string line;
    std::getline(lines, line);
    CHECK(line ==
          "trial,n,q,blocks,mode,hs_lhs,hs_rhs,hs_margin,hs_satisfied,"
          "shannon_lhs,shannon_rhs,shannon_margin,shannon_satisfied");
    while (std::getline(lines, line)) {
        std::istringstream fields(line);
        std::string field;
        std::vector<std::string> row;
        while (std::getline(fields, field, ',')) {
            row.push_back(field);
        }
        REQUIRE(row.size() == 13);
        CHECK(row[8] == "1");   // hs_satisfied
        CHECK(row[12] == "1");  // shannon_satisfied
    }

    CHECK(run("compare --seed 5 --trials 40 --format json "
              "--out cli_compare.json") == 0);
    const auto parsed = json::parse(slurp("cli_compare.json"));
    CHECK(parsed["summary"]["hs_violations"] == 0);
    CHECK(parsed["summary"]["shannon_violations"] == 0);
    CHECK(parsed["rows"].size() == 40);
}
