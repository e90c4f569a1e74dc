#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "syzygy/driver.hpp"

using namespace syzygy::cli;
namespace fs = std::filesystem;

namespace {

RunResult call(const std::vector<std::string>& args, std::string* out_text = nullptr) {
    std::ostringstream out, err;
    auto r = run(args, out, err);
    if (out_text) *out_text = out.str();
    return r;
}

fs::path scratch(const std::string& name) {
    const auto d = fs::temp_directory_path() / ("syzygy_cli_test_" + name);
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

}  // namespace

TEST_CASE("documented invocations") {
    auto r = call({"--no-cache", "lattice-certify", "--lemma", "nikulin.H_nef", "--g", "11"});
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.bytes);
    CHECK(j["anchor"] == "lattice.certificate");
    CHECK(j["payload"]["certificates"].size() == 1);

    r = call({"--no-cache", "moduli", "--i-range", "1..60", "--check", "picid"});
    CHECK(r.exit_code == 0);

    std::string text;
    r = call({"--no-cache", "betti", "--model", "quartic seed=3", "--pmax", "2", "--qmax", "3"}, &text);
    CHECK(r.exit_code == 0);
    j = nlohmann::json::parse(text);
    CHECK(j["payload"]["table"]["entries"].is_array());
    CHECK(j["prime"] == 1009);
}

TEST_CASE("usage errors exit 2") {
    CHECK(call({}).exit_code == 2);
    CHECK(call({"frobnicate"}).exit_code == 2);
    CHECK(call({"--no-cache", "betti", "--model", "torus"}).exit_code == 2);
    CHECK(call({"--no-cache", "lattice-certify", "--lemma", "no.such"}).exit_code == 2);
    CHECK(call({"--no-cache", "moduli", "--i-range", "0..3"}).exit_code == 2);
    CHECK(call({"--no-cache", "moduli", "--check", "everything"}).exit_code == 2);
    CHECK(call({"--no-cache", "--prime", "1000", "betti", "--model", "rnc d=3"}).exit_code == 2);
    CHECK(call({"report", "/nonexistent/report.json"}).exit_code == 2);
}

TEST_CASE("check failures exit 1") {
    // the hyperelliptic Prym-canonical bundle has base points; the diagonal formula fails
    auto r = call({"--no-cache", "betti", "--model", "prym g=7 seed=1", "--pmax", "3", "--qmax", "2"});
    CHECK(r.exit_code == 1);
}

TEST_CASE("cache serves identical bytes and evicts corrupt entries") {
    const auto dir = scratch("cache");
    const std::vector<std::string> args = {"--cache-dir", dir.string(), "prym-green", "--g", "7..13"};
    const auto a = call(args);
    REQUIRE(a.exit_code == 0);
    CHECK_FALSE(a.from_cache);
    const auto b = call(args);
    CHECK(b.from_cache);
    CHECK(a.bytes == b.bytes);

    for (const auto& e : fs::directory_iterator(dir)) std::ofstream(e.path()) << "{ not json";
    const auto c = call(args);
    CHECK_FALSE(c.from_cache);
    CHECK(c.bytes == a.bytes);
    CHECK(call(args).from_cache);
    for (const auto& e : fs::directory_iterator(dir)) CHECK(e.path().extension() == ".json");
}

TEST_CASE("determinism without a cache") {
    const std::vector<std::string> args = {"--no-cache", "--seed", "4", "secant", "--samples", "4",
                                           "--hyperelliptic", "2"};
    const auto a = call(args), b = call(args);
    CHECK(a.exit_code == 0);
    CHECK(a.bytes == b.bytes);
}

TEST_CASE("output file and report summary") {
    const auto dir = scratch("out");
    const auto path = (dir / "b.json").string();
    std::string text;
    auto r = call({"--no-cache", "-o", path, "betti", "--model", "rnc d=4 seed=1", "--pmax", "3", "--oracle"}, &text);
    CHECK(r.exit_code == 0);
    CHECK(text.find("total:") != std::string::npos);
    r = call({"report", path}, &text);
    CHECK(r.exit_code == 0);
    CHECK(text.find("PASS oracle_agrees") != std::string::npos);

    auto j = nlohmann::json::parse(std::ifstream(path));
    j["anchor"] = "nowhere";
    std::ofstream(path) << j.dump();
    CHECK(call({"report", path}).exit_code == 2);
}

TEST_CASE("anchors") {
    for (const auto& [id, text] : anchor_table()) CHECK_FALSE(text.empty());
    Report rep;
    rep.anchor = "koszul.betti";
    rep.verdicts["x"] = false;
    CHECK_FALSE(rep.pass());
    CHECK(report_from_json(to_json(rep)).anchor == "koszul.betti");
    CHECK(parse_range("3..5") == std::pair<long, long>{3, 5});
    CHECK(parse_range("7") == std::pair<long, long>{7, 7});
    CHECK_THROWS(parse_range("5..3"));
}
