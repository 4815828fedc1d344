#include "polyrec/cli.hpp"
#include "polyrec/serialize.hpp"
#include "support/generators.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

using namespace polyrec;
using nlohmann::json;

namespace {

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "polyrec");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

const char* kChebyshev =
    R"({"vars":1,"coeffs":[{"vars":1,"terms":[["-1","1",[0]]]},{"vars":1,"terms":[["-1","1",[1]]]},)"
    R"({"vars":1,"terms":[["1","1",[0]]]}],"init":[{"vars":1,"terms":[["1","1",[0]]]},{"vars":1,"terms":[["1","1",[1]]]}]})";

std::filesystem::path temp_path(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("gen produces the Chebyshev-type terms") {
    const auto r = invoke({"gen", "-i", kChebyshev, "--n-max", "10"});
    REQUIRE(r.code == 0);
    const auto out = json::parse(r.out);
    REQUIRE(out["terms"].size() == 11);
    const auto last = io::poly_from_json(out["terms"][10]);
    CHECK(last == testing::poly(1, {{1, {0}}, {15, {2}}, {35, {4}}, {28, {6}}, {9, {8}}, {1, {10}}}));
    CHECK(out["non_unit_denominators"] == false);
}

TEST_CASE("count and newton on small inputs") {
    const auto seg = invoke({"count", "-i", R"({"dim":1,"vertices":[[2],[7]]})"});
    REQUIRE(seg.code == 0);
    CHECK(json::parse(seg.out) == json::parse(R"({"area":"0","count":6})"));

    const auto sq = invoke({"newton", "-i", R"({"vars":2,"terms":[["1","1",[0,0]],["1","1",[1,1]],["1","1",[1,0]],["2","1",[0,1]]]})"});
    REQUIRE(sq.code == 0);
    CHECK(json::parse(sq.out) == json::parse(R"({"dim":2,"vertices":[[0,0],[1,0],[1,1],[0,1]]})"));
}

TEST_CASE("fit on constant polygons has period 1") {
    json polys = json::array();
    for (int n = 0; n <= 24; ++n) polys.push_back(json::parse(R"({"dim":2,"vertices":[[0,0],[1,0],[0,1]]})"));
    const auto r = invoke({"fit", "-i", json{{"polytopes", polys}}.dump(), "--m-max", "3"});
    REQUIRE(r.code == 0);
    const auto out = json::parse(r.out);
    CHECK(out["period"] == 1);
    CHECK(out["prefix"] == 0);
}

TEST_CASE("guess recovers a recurrence from generated terms") {
    const auto gen = json::parse(invoke({"gen", "-i", kChebyshev, "--n-max", "9"}).out);
    const auto r = invoke({"guess", "-i", json{{"terms", gen["terms"]}}.dump(), "--deg-max", "2"});
    REQUIRE(r.code == 0);
    const auto rec = io::recurrence_from_json(json::parse(r.out));
    std::vector<LaurentPoly> terms;
    for (const auto& t : gen["terms"]) terms.push_back(io::poly_from_json(t));
    CHECK(rec.annihilates(std::span<const LaurentPoly>(terms)));
}

TEST_CASE("exit codes") {
    CHECK(invoke({"gen", "-i", "{not json"}).code == 2);
    CHECK(invoke({"gen", "-i", R"({"vars":1})"}).code == 2);
    CHECK(invoke({"bogus"}).code == 2);
    CHECK(invoke({"count", "-i", R"({"dim":3,"vertices":[[0,0,0]]})"}).code == 2);
    // too few terms for the requested order
    CHECK(invoke({"guess", "-i", R"({"terms":[{"vars":1,"terms":[["1","1",[0]]]}]})"}).code == 3);
    CHECK(invoke({"fit", "-i", R"({"sequence":["1","2","3"]})"}).code == 3);

    json squares = json::array();
    for (int n = 0; n <= 24; ++n) squares.push_back(std::to_string(n * n));
    const std::string in = json{{"sequence", squares}}.dump();
    const auto loose = invoke({"fit", "-i", in, "--m-max", "3"});
    CHECK(loose.code == 0);
    CHECK(json::parse(loose.out) == json::parse(R"({"found":false})"));
    CHECK(invoke({"fit", "-i", in, "--m-max", "3", "--strict"}).code == 4);
}

TEST_CASE("output is deterministic and round-trips through files") {
    const auto in_path = temp_path("polyrec_cli_in.json"), out_path = temp_path("polyrec_cli_out.json");
    std::ofstream(in_path) << kChebyshev;
    REQUIRE(invoke({"report", "-i", in_path.string(), "-o", out_path.string(), "--n-max", "24"}).code == 0);
    const std::string first = slurp(out_path);
    REQUIRE(invoke({"report", "-i", in_path.string(), "-o", out_path.string(), "--n-max", "24"}).code == 0);
    CHECK(slurp(out_path) == first);
    const auto report = json::parse(first);
    CHECK(report.contains("terms"));
    // re-reading emitted terms gives the same JSON
    for (const auto& t : report["terms"]) CHECK(io::to_json(io::poly_from_json(t)) == t);

    const auto fan1 = invoke({"fan", "-i", R"({"char_poly":{"vars":3,"terms":[["1","1",[2,0,0]],["-1","1",[1,1,0]],["-1","1",[0,0,1]]]}})", "--seed", "5"});
    const auto fan2 = invoke({"fan", "-i", R"({"char_poly":{"vars":3,"terms":[["1","1",[2,0,0]],["-1","1",[1,1,0]],["-1","1",[0,0,1]]]}})", "--seed", "5"});
    REQUIRE(fan1.code == 0);
    CHECK(fan1.out == fan2.out);
    CHECK(json::parse(fan1.out)["sampled_sound"] == true);
    std::filesystem::remove(in_path);
    std::filesystem::remove(out_path);
}

TEST_CASE("the installed binary behaves like the library entry point") {
    const auto out_path = temp_path("polyrec_cli_bin.json");
    const std::string cmd = std::string(POLYREC_CLI_PATH) + " count -i '{\"dim\":1,\"vertices\":[[2],[7]]}' -o " + out_path.string();
    REQUIRE(std::system(cmd.c_str()) == 0);
    CHECK(json::parse(slurp(out_path)) == json::parse(R"({"area":"0","count":6})"));
    const std::string bad = std::string(POLYREC_CLI_PATH) + " count -i '{' 2>/dev/null";
    const int status = std::system(bad.c_str());
    CHECK(WEXITSTATUS(status) == 2);
    std::filesystem::remove(out_path);
}
