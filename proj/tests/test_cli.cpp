#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using nlohmann::json;
using sensorplace::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("pe subcommand") {
    const auto r = call({"pe", "--m", "2", "--n", "2", "--pd", "0.6", "--pf", "0.2", "--placement", "2"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["pe"].get<double>() == doctest::Approx(0.26).epsilon(1e-14));
    CHECK(j["placement"] == "2");
    CHECK(j["n"] == 2);
    CHECK(j["schema_version"] == "1");

    const auto padded = call({"pe", "--m", "4", "--n", "4", "--pd", "0.9", "--pf", "0.1", "--placement", "2-1-1-0"});
    CHECK(padded.code == 0);
    CHECK(json::parse(padded.out)["placement"] == "2-1-1");
}

TEST_CASE("usage errors exit with 2") {
    CHECK(call({"pe", "--m", "3", "--n", "2", "--pd", "0.6", "--pf", "0.2", "--placement", "3"}).code == 2);
    CHECK(call({"pe", "--m", "2", "--n", "2", "--pd", "1.6", "--pf", "0.2", "--placement", "2"}).code == 2);
    CHECK(call({"pe", "--m", "3", "--n", "3", "--pd", "0.6", "--pf", "0.2", "--placement", "2"}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"sweep", "--m", "4", "--n", "4", "--step", "0.03"}).code == 2);
    const auto budget = call({"sweep", "--m", "6", "--n", "6", "--step", "0.01", "--budget", "1000"});
    CHECK(budget.code == 2);
    CHECK(budget.err.find("refused") != std::string::npos);
}

TEST_CASE("optimal subcommand") {
    const auto r = call({"optimal", "--m", "7", "--n", "8", "--pd", "0.6", "--pf", "0.48"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["best"] == json::array({"2-2-2-1"}));
    CHECK(j["strict"] == true);
    CHECK(j["margin"].get<double>() > 0);

    const auto tie = json::parse(call({"optimal", "--m", "3", "--n", "3", "--pd", "0.4", "--pf", "0.4"}).out);
    CHECK(tie["best"].size() == 3);
    CHECK(tie["margin"].is_null());
}

TEST_CASE("partitions and majorize") {
    CHECK(call({"partitions", "--m", "4"}).out == "4\n3-1\n2-2\n2-1-1\n1-1-1-1\n");
    const auto csv = call({"majorize", "--m", "4"}).out;
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "placement,4,3-1,2-2,2-1-1,1-1-1-1");
    std::getline(in, line);
    CHECK(line == "4,E,A,A,A,A");
    const auto six = call({"majorize", "--m", "6"}).out;
    CHECK(six.find("4-1-1,B,B,B,E,I") != std::string::npos);
}

TEST_CASE("sweep writes files atomically and reproducibly") {
    const auto dir = std::filesystem::temp_directory_path() / "sensorplace_cli_test";
    std::filesystem::create_directories(dir);
    const auto a = (dir / "a.csv").string();
    const auto b = (dir / "b.csv").string();
    REQUIRE(call({"sweep", "--m", "3", "--n", "4", "--step", "0.05", "--out", a}).code == 0);
    REQUIRE(call({"sweep", "--m", "3", "--n", "4", "--step", "0.05", "--out", b, "--threads", "3"}).code == 0);
    auto slurp = [](const std::string& p) {
        std::ifstream f(p);
        return std::string(std::istreambuf_iterator<char>(f), {});
    };
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a).rfind("p_f,p_d,best,tie_count,pe_min,margin\n", 0) == 0);
    CHECK_FALSE(std::filesystem::exists(a + ".tmp"));
    std::filesystem::remove_all(dir);

    const auto j = json::parse(call({"sweep", "--m", "2", "--n", "2", "--step", "0.1", "--format", "json"}).out);
    CHECK(j["cells"].size() == 45);
}

TEST_CASE("simulate subcommand") {
    const auto r = call({"simulate", "--m", "2", "--n", "2", "--pd", "0.6", "--pf", "0.2", "--placement", "2",
                         "--trials", "200000", "--seed", "3"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["pe_exact"].get<double>() == doctest::Approx(0.26));
    CHECK(std::abs(j["z_score"].get<double>()) <= 4.0);
    CHECK(r.out == call({"simulate", "--m", "2", "--n", "2", "--pd", "0.6", "--pf", "0.2", "--placement", "2",
                         "--trials", "200000", "--seed", "3", "--threads", "2"}).out);
    CHECK(call({"simulate", "--m", "2", "--n", "2", "--pd", "0.6", "--pf", "0.2", "--placement", "2",
                "--ties", "coin"}).code == 2);
}

TEST_CASE("verify subcommands") {
    const auto thm41 = call({"verify", "thm41", "--max-m", "3", "--step", "0.05"});
    CHECK(thm41.code == 0);
    CHECK(json::parse(thm41.out)["pass"] == true);
    CHECK(call({"verify", "thm42", "--m", "2", "--n1", "3", "--n2", "5", "--step", "0.1"}).code == 0);
    CHECK(call({"verify", "thm42", "--m", "3", "--n1", "3", "--n2", "5"}).code == 2);
    CHECK(call({"verify", "cor41", "--m", "3", "--step", "0.05"}).code == 0);
    CHECK(call({"verify", "prop51", "--m", "3", "--n", "3", "--step", "0.05"}).code == 0);
    CHECK(call({"verify", "conjecture", "--m", "4", "--n", "4", "--step", "0.05"}).code == 0);
    const auto cex = call({"verify", "counterexample"});
    CHECK(cex.code == 0);
    CHECK(json::parse(cex.out)["claim"] == "counterexample");
}
