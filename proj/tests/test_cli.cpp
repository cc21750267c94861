#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pathalg/cli.hpp"

using json = nlohmann::json;
using namespace pathalg;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expect = cli::kPass)
{
    args.push_back("--format");
    args.push_back("json");
    Run r = run(args);
    CHECK(r.code == expect);
    return json::parse(r.out);
}

void check_schema(const json& doc)
{
    REQUIRE(doc.is_object());
    CHECK(doc["command"].is_string());
    CHECK(doc["summary"].is_object());
    REQUIRE(doc["tables"].is_array());
    for (const auto& t : doc["tables"]) {
        CHECK(t["title"].is_string());
        for (const auto& c : t["cells"]) {
            CHECK(c["degree"].is_number_integer());
            CHECK((c["level"].is_null() || c["level"].is_number_integer()));
            CHECK(c["names"].is_array());
            CHECK((c.contains("dim") || c.contains("group")));
            if (c.contains("group")) {
                CHECK(c["group"]["rank"].is_number_integer());
                CHECK(c["group"]["torsion"].is_array());
            }
        }
    }
    REQUIRE(doc["checks"].is_array());
    for (const auto& s : doc["checks"]) {
        CHECK(s["suite"].is_string());
        CHECK(s["passed"].is_boolean());
        for (const auto& i : s["items"]) {
            CHECK(i["label"].is_string());
            CHECK(i["passed"].is_boolean());
            CHECK(i["detail"].is_string());
        }
    }
    CHECK(doc["notes"].is_array());
}

const json* find_cell(const json& doc, int degree, std::optional<int> level)
{
    for (const auto& t : doc["tables"])
        for (const auto& c : t["cells"])
            if (c["degree"] == degree && (level ? c["level"] == *level : c["level"].is_null()))
                return &c;
    return nullptr;
}

}  // namespace

TEST_CASE("usage errors exit with 2")
{
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"frobnicate"}).code == cli::kUsage);
    CHECK(run({"homology"}).code == cli::kUsage);
    CHECK(run({"homology", "--n", "0"}).code == cli::kUsage);
    CHECK(run({"homology", "--n", "2", "--coeff", "Q"}).code == cli::kUsage);
    CHECK(run({"homology", "--n", "2", "--format", "xml"}).code == cli::kUsage);
    CHECK(run({"geom", "index", "--n", "1", "--k", "1", "--segments", "2"}).code == cli::kUsage);
    CHECK(run({"geom", "index", "--n", "4", "--k", "1"}).code == cli::kUsage);
    CHECK(run({"table", "--n", "3", "--levels", "0"}).code == cli::kUsage);
    CHECK(run({"--help"}).code == cli::kPass);
}

TEST_CASE("homology output")
{
    auto doc = run_json({"homology", "--n", "2", "--coeff", "Z", "--max-degree", "6"});
    check_schema(doc);
    const json* c = find_cell(doc, 2, 1);
    REQUIRE(c);
    CHECK((*c)["group"]["rank"] == 0);
    CHECK((*c)["group"]["torsion"] == json::array({4}));

    auto f2 = run_json({"homology", "--n", "3", "--coeff", "F2"});
    check_schema(f2);
    const json* sy = find_cell(f2, 7, 2);
    REQUIRE(sy);
    CHECK((*sy)["dim"] == 2);
    CHECK((*sy)["names"].size() == 2);

    Run md = run({"homology", "--n", "3"});
    CHECK(md.code == cli::kPass);
    CHECK(md.out.find('|') != std::string::npos);
    Run csv = run({"homology", "--n", "3", "--format", "csv"});
    CHECK(csv.code == cli::kPass);
    CHECK(csv.out.find("cell,") != std::string::npos);
}

TEST_CASE("verify exit codes")
{
    auto odd = run_json({"verify", "--n", "3", "--max-degree", "20"});
    check_schema(odd);
    for (const auto& s : odd["checks"])
        CHECK(s["passed"] == true);

    auto even = run_json({"verify", "--n", "2", "--max-degree", "20"}, cli::kDiscrepancy);
    check_schema(even);
    bool repairs = false;
    for (const auto& s : even["checks"])
        if (s["suite"].get<std::string>().find("repair") != std::string::npos)
            repairs = true;
    CHECK(repairs);
    CHECK(run({"verify", "--n", "4", "--max-degree", "12", "--no-repair"}).code == cli::kDiscrepancy);
}

TEST_CASE("geometry subcommands")
{
    auto idx = run_json({"geom", "index", "--n", "2", "--k", "2", "--segments", "12"});
    check_schema(idx);
    CHECK(idx["summary"]["index"] == 3);
    CHECK(idx["summary"]["nullity"] == 3);

    for (const char* sub : {"concat-check", "halfcircle-check", "yk-check", "hopf-check"}) {
        INFO(sub);
        auto doc = run_json({"geom", sub, "--trials", "40", "--seed", "5", "--jobs", "2"});
        check_schema(doc);
        // Same seed, different parallelism: identical report.
        auto again = run_json({"geom", sub, "--trials", "40", "--seed", "5", "--jobs", "1"});
        CHECK(doc["checks"] == again["checks"]);
    }
}

TEST_CASE("environment overrides for the index tolerances")
{
    // A zero tolerance far too large declares every eigenvalue null.
    setenv("PATHALG_ZERO_TOL", "10", 1);
    Run loose = run({"geom", "index", "--n", "1", "--k", "1", "--segments", "8"});
    unsetenv("PATHALG_ZERO_TOL");
    CHECK(loose.code == cli::kDiscrepancy);
    // The flag wins over the environment.
    setenv("PATHALG_ZERO_TOL", "10", 1);
    Run flagged = run({"geom", "index", "--n", "1", "--k", "1", "--segments", "8", "--zero-tol", "1e-3"});
    unsetenv("PATHALG_ZERO_TOL");
    CHECK(flagged.code == cli::kPass);
    setenv("PATHALG_FD_STEP", "abc", 1);
    CHECK(run({"geom", "index", "--n", "1", "--k", "1"}).code == cli::kUsage);
    unsetenv("PATHALG_FD_STEP");
}

TEST_CASE("golden tables")
{
    const std::string dir = PATHALG_TEST_GOLDEN_DIR;
    CHECK(run({"table", "--golden", "--golden-dir", dir}).code == cli::kPass);
    for (int n = 1; n <= 4; ++n) {
        INFO("n=" << n);
        auto golden = cli::read_golden(cli::golden_path(dir, n), n);
        CHECK(!golden.cells.empty());
        CHECK(cli::golden_mismatches(golden, cli::golden_window(n, golden.max_level() + 1)).empty());
    }

    // A tampered copy is caught.
    namespace fs = std::filesystem;
    fs::path tmp = fs::temp_directory_path() / "pathalg_golden_test";
    fs::create_directories(tmp);
    for (int n = 1; n <= 4; ++n)
        fs::copy_file(cli::golden_path(dir, n), tmp / ("table_n" + std::to_string(n) + ".txt"),
                      fs::copy_options::overwrite_existing);
    {
        std::ofstream f(tmp / "table_n3.txt", std::ios::app);
        f << "9 1 Bogus\n";
    }
    CHECK(run({"table", "--golden", "--golden-dir", tmp.string()}).code == cli::kDiscrepancy);
    CHECK(run({"table", "--golden", "--golden-dir", (tmp / "missing").string()}).code != cli::kPass);
    fs::remove_all(tmp);

    auto doc = run_json({"table", "--n", "4", "--levels", "2"});
    check_schema(doc);
    const json* t = find_cell(doc, 4, 1);
    REQUIRE(t);
    CHECK((*t)["names"] == json::array({"T"}));
}
