#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace bandprime;

namespace {

const char* kTrefoil = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)";
const char* kGranny = "X(2,5,3,6) X(6,3,7,4) X(4,7,5,8) X(8,11,9,12) X(12,9,1,10) X(10,1,11,2)";

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "bandprime");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    auto p = std::filesystem::temp_directory_path() / ("bandprime_test_" + name);
    std::filesystem::remove_all(p);
    return p;
}

IntMatrix matrix(const Json& j) {
    const auto rows = j.get<std::vector<std::vector<Int>>>();
    return IntMatrix::from_rows(rows, rows.empty() ? 0 : rows.front().size());
}

std::string data(const char* file) { return std::string(BANDPRIME_DATA_DIR) + "/" + file; }

}  // namespace

TEST_CASE("analyze") {
    const Run t = run({"analyze", "--pd", kTrefoil, "--json"});
    REQUIRE(t.code == 0);
    const Json j = Json::parse(t.out);
    CHECK(j["schema"] == "bandprime.report/1");
    CHECK(j["certificate"]["verdict"] == "band_prime_certified");
    CHECK(j["invariants"]["signature"] == -2);
    CHECK(j["minimality"]["verdict"] == "minimal_certified");
    CHECK(j["hfk"]["total_rank"] == 3);
    // Byte-identical output across runs.
    CHECK(run({"analyze", "--pd", kTrefoil, "--json"}).out == t.out);

    const Run u = run({"analyze", "--pd", "", "--json"});
    REQUIRE(u.code == 0);
    CHECK(Json::parse(u.out)["certificate"]["verdict"] == "band_prime_certified");

    CHECK(run({"analyze", "--pd", "X(1,2,3)"}).code == 2);
    CHECK(run({"analyze", "--pd", "X(1,4,2,3) X(3,6,4,5) X(5,2,6,1)"}).code == 2);
    CHECK(run({"analyze"}).code == 2);
    CHECK(run({"analyze", "--pd", kTrefoil, "--rank-cap", "1"}).code == 3);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("certificate witnesses re-verify from the JSON alone") {
    const Json j = Json::parse(run({"analyze", "--pd", kGranny, "--json"}).out);
    REQUIRE(j["certificate"]["factors"].size() == 2);
    for (const auto& f : j["certificate"]["factors"]) {
        const IntMatrix gram = matrix(f["flow_lattice"]["gram"]);
        const IntMatrix v = matrix(f["seifert_matrix"]);
        const IntMatrix sym = v + v.transpose();
        const IntMatrix signed_sym = f["isometry"]["sign"] == 1 ? sym : -sym;
        CHECK(signed_sym.congruent(matrix(f["isometry"]["witness"])) == gram);
        const IntMatrix w = matrix(f["indecomposability"]["witness"]);
        CHECK(gram.congruent(w) == matrix(f["indecomposability"]["summands"][0]));
        CHECK(f["tait_graph"]["edges"].size() == 3);
    }
}

TEST_CASE("analyze from file with report directory") {
    const auto dir = scratch("analyze");
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "k.pd") << kGranny << "\n";
    const Run r = run({"analyze", "--pd-file", (dir / "k.pd").string(), "--out", (dir / "out").string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("band_prime_certified (2 factor(s))") != std::string::npos);
    CHECK(std::distance(std::filesystem::directory_iterator(dir / "out"), {}) == 1);
    std::filesystem::remove_all(dir);
}

TEST_CASE("batch") {
    const auto dir = scratch("batch");
    const Run r = run({"batch", data("alternating_le9.csv"), "--json", "--out", dir.string()});
    CHECK(r.code == 0);
    const Json s = Json::parse(r.out);
    CHECK(s["counts"]["inconsistency"] == 0);
    CHECK(s["counts"]["expectation_mismatch"] == 0);
    CHECK(s["counts"]["input_error"] == 0);
    for (const auto& row : s["entries"])
        CHECK((row["verdict"] == "band_prime_certified" || row["verdict"] == "not_applicable"));
    CHECK(static_cast<std::size_t>(std::distance(std::filesystem::directory_iterator(dir), {})) ==
          s["entries"].size());
    std::filesystem::remove_all(dir);

    const Run n = run({"batch", data("nonalternating_le9.csv"), "--json"});
    CHECK(n.code == 0);
    CHECK(Json::parse(n.out)["counts"]["not_applicable"] == 11);

    const auto tmp = scratch("corpora");
    std::filesystem::create_directories(tmp);
    std::ofstream(tmp / "empty.csv") << "";
    const Run e = run({"batch", (tmp / "empty.csv").string(), "--json"});
    CHECK(e.code == 0);
    CHECK(Json::parse(e.out)["entries"].empty());

    std::ofstream(tmp / "bad.csv") << "name,pd\ntrefoil,\"" << kTrefoil << "\"\nbroken,\"X(1,2,3)\"\n";
    const Run b = run({"batch", (tmp / "bad.csv").string()});
    CHECK(b.code == 0);
    CHECK(b.out.find("input_error: 1") != std::string::npos);
    CHECK(b.err.find("warning") != std::string::npos);

    std::ofstream(tmp / "wrong.json") << R"([{"name": "t", "pd": ")" << kTrefoil << R"(", "sigma": 2}])";
    CHECK(run({"batch", (tmp / "wrong.json").string()}).code == 1);
    CHECK(run({"batch", (tmp / "missing.csv").string()}).code == 2);
    std::filesystem::remove_all(tmp);
}

TEST_CASE("pair") {
    CHECK(run({"pair", "--lower", "", "--upper", kTrefoil}).out.find("obstructed") != std::string::npos);
    CHECK(run({"pair", "--lower", kTrefoil, "--upper", kTrefoil}).out == "no obstruction found\n");
    const Run g = run({"pair", "--lower", kTrefoil, "--upper", kGranny, "--json"});
    CHECK(g.code == 0);
    const Json j = Json::parse(g.out);
    for (const auto& f : j["findings"]) CHECK(f["kind"] != "alexander");
    CHECK(run({"pair", "--lower", "X(1,2,3)", "--upper", kTrefoil}).code == 2);
}
