#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "knotconc/catalog.hpp"
#include "knotconc/cli.hpp"
#include "knotconc/dinv.hpp"
#include "knotconc/report.hpp"
#include "knotconc/seifert.hpp"

using namespace knotconc;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& content) : path("/tmp/knotconc_test_" + name) {
        std::ofstream f(path);
        f << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("twist-scan json rows and exit code") {
    RunResult r = run({"twist-scan", "--kmax", "3", "--json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "twist-scan");
    REQUIRE(j["rows"].size() == 3);
    CHECK(j["rows"][0]["k"] == 1);
    CHECK(j["rows"][0]["p"] == 5);
    CHECK(j["rows"][0]["dbar_obstruction"] == "0");
    CHECK(j["rows"][1]["k"] == 2);
    CHECK(j["rows"][1]["p"] == 3);
    CHECK(j["rows"][1]["dbar_obstruction"] == "0");
    CHECK(j["rows"][2]["k"] == 3);
    CHECK(j["rows"][2]["p"] == 13);
    CHECK(j["rows"][2]["dbar_obstruction"] == "4");
    CHECK(j["verdict"].is_null());
}

TEST_CASE("json output re-serializes byte-identically") {
    for (auto args : std::vector<std::vector<std::string>>{
             {"twist-scan", "--kmax", "5", "--json"},
             {"dinv", "--twist", "2", "--json"},
             {"obstruction", "--twist", "6", "--n", "2", "--json"},
             {"alexander", "--twist", "-3", "--json"},
             {"cover", "--twist", "5", "--n", "4", "--json"},
             {"verify-lemma3", "--max", "8", "--json"},
             {"dinv", "--lens", "7", "3", "--json"},
         }) {
        RunResult r = run(args);
        auto parsed = nlohmann::ordered_json::parse(r.out);
        CHECK(parsed.dump(2) + "\n" == r.out);
    }
}

TEST_CASE("obstruction exit codes follow the verdicts") {
    RunResult obstructed = run({"obstruction", "--twist", "6", "--n", "2", "--p", "5"});
    CHECK(obstructed.code == 1);
    CHECK(obstructed.out.find("obstructed:no-vanishing-subgroup") != std::string::npos);

    RunResult passes = run({"obstruction", "--twist", "2", "--n", "2"});
    CHECK(passes.code == 0);
    CHECK(passes.out.find("passes") != std::string::npos);

    RunResult nosquare = run({"obstruction", "--twist", "3", "--n", "2"});
    CHECK(nosquare.code == 1);
    CHECK(nosquare.out.find("no-square-order-subgroup") != std::string::npos);
}

TEST_CASE("obstruction with a user-supplied table") {
    TempFile table("t6.json", dbar_table(6).to_json());
    RunResult r = run({"obstruction", "--twist", "6", "--n", "2", "--table", table.path, "--json"});
    CHECK(r.code == 1);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "obstructed:no-vanishing-subgroup");
    // mismatched table is an input error
    TempFile wrong("t5.json", dbar_table(5).to_json());
    RunResult bad = run({"obstruction", "--twist", "6", "--n", "2", "--table", wrong.path});
    CHECK(bad.code == 2);
}

TEST_CASE("obstruction off the twist family needs a table") {
    TempFile knot("gen2.seifert", emit_seifert(block_sum({{twist_entry(2).matrix, 1}, {twist_entry(6).matrix, 1}})));
    RunResult r = run({"obstruction", knot.path, "--n", "2"});
    CHECK(r.code == 2);
    CHECK(r.err.find("no correction table") != std::string::npos);
}

TEST_CASE("dinv emits exact rationals, never floats") {
    RunResult r = run({"dinv", "--twist", "2", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("-8/9") != std::string::npos);
    CHECK(r.out.find("0.8") == std::string::npos);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["rows"].size() == 9);
    CHECK(j["rows"][4]["d"] == "-8/9");
    CHECK(j["rows"][4]["dbar"] == "-8/9");

    RunResult lens = run({"dinv", "--lens", "9", "2", "--json"});
    CHECK(lens.code == 0);
    auto jl = nlohmann::json::parse(lens.out);
    REQUIRE(jl["rows"].size() == 9);
    CHECK(jl["rows"][0]["d"] == "8/9");
}

TEST_CASE("dinv --table-out round trips through obstruction") {
    TempFile sink("table_out.json", "");
    RunResult w = run({"dinv", "--twist", "6", "--table-out", sink.path});
    CHECK(w.code == 0);
    CorrectionTable t = CorrectionTable::read_file(sink.path);
    CHECK(t.group.factors == std::vector<Int>{25});
    RunResult r = run({"obstruction", "--twist", "6", "--n", "2", "--table", sink.path});
    CHECK(r.code == 1);
}

TEST_CASE("alexander from file and from the catalog") {
    TempFile knot("trefoil.seifert", "# trefoil\n-1 1\n0 -1\n");
    RunResult r = run({"alexander", knot.path, "--json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["rows"][0]["alexander"] == "t^2 - t + 1");

    RunResult tw = run({"alexander", "--twist", "2"});
    CHECK(tw.code == 0);
    CHECK(tw.out.find("-2*t^2 + 5*t - 2") != std::string::npos);
}

TEST_CASE("cover reports agreeing orders") {
    RunResult r = run({"cover", "--twist", "2", "--n", "3", "--json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["rows"][0]["fox_order"] == "49");
    CHECK(j["rows"][0]["orders_agree"] == true);
    CHECK(j["verdict"] == "orders-agree");
    // composite n is a usage-level error (exit 2)
    RunResult bad = run({"cover", "--twist", "2", "--n", "6"});
    CHECK(bad.code == 2);
}

TEST_CASE("verify-lemma3 sweep") {
    RunResult r = run({"verify-lemma3", "--max", "12"});
    CHECK(r.code == 0);
    CHECK(r.out.find("all coprime pairs") != std::string::npos);
    RunResult j = run({"verify-lemma3", "--max", "12", "--json"});
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["rows"].back()["all_coprime_units"] == true);
}

TEST_CASE("spk command") {
    TempFile knot("t2.seifert", emit_seifert(twist_entry(2).matrix));
    RunResult r = run({"spk", knot.path, "--p", "3", "--qmax", "20", "--rmax", "2", "--json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["rows"][0]["members"] == nlohmann::json::array({"2"}));
    CHECK(j["rows"][0]["complete"] == false);
}

TEST_CASE("splitting-check splits every found metabolizer") {
    TempFile f1("split_t2.seifert", emit_seifert(twist_entry(2).matrix));
    TempFile f2("split_t6.seifert", emit_seifert(twist_entry(6).matrix));
    RunResult r = run({"splitting-check", f1.path, f2.path, "--bound", "3", "--json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "all-split");
    CHECK(j["rows"].size() == 4);
    // identical polynomials: hypothesis violation surfaces as an input error
    RunResult bad = run({"splitting-check", f1.path, f1.path, "--bound", "3"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("relatively prime") != std::string::npos);
}

TEST_CASE("usage and parse errors exit 2") {
    CHECK(run({"no-such-command"}).code == 2);
    CHECK(run({"twist-scan"}).code == 2);                  // missing --kmax
    CHECK(run({"twist-scan", "--kmax", "0"}).code == 2);   // below the range
    CHECK(run({"alexander"}).code == 2);                   // no input
    CHECK(run({}).code == 2);                              // no subcommand
    TempFile bad("bad.seifert", "1 2\n3 x\n");
    RunResult r = run({"alexander", bad.path});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("help exits 0") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"twist-scan", "--help"}).code == 0);
}

TEST_CASE("catalog entries round trip through the text format") {
    for (const auto& e : catalog_entries()) {
        CHECK(parse_seifert(emit_seifert(e.matrix, e.name)) == e.matrix);
    }
}

TEST_CASE("twist-scan text at kmax 2: header plus two data rows") {
    RunResult r = run({"twist-scan", "--kmax", "2"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::vector<std::string> nonempty;
    while (std::getline(lines, line))
        if (!line.empty() && line[0] != '#') nonempty.push_back(line);
    REQUIRE(nonempty.size() == 3); // header + two rows
    CHECK(nonempty[0].find("k") == 0);
    CHECK(nonempty[1].find("1") == 0);
    CHECK(nonempty[2].find("2") == 0);
}
