// End-to-end checks of the installed CLI: exit-code discipline and agreement
// between the text and JSON modes on verdict fields.
#include <sys/wait.h>

#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <json.hpp>
#include <string>

#include "rre/rational.hpp"

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(RRE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult res;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    int status = pclose(pipe);
    res.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return res;
}

}  // namespace

TEST_CASE("exit codes are a function of the verdict class") {
    REQUIRE(run_cli("analyze \"x^3 - 6x + 2\"").exit_code == 0);
    REQUIRE(run_cli("analyze \"x^2 + 1\"").exit_code == 0);   // no real roots is still a verdict
    REQUIRE(run_cli("cyclotomic 19 9 3").exit_code == 0);     // ConditionIFailed is a verdict
    REQUIRE(run_cli("analyze \"x^4 - 1\"").exit_code == 1);   // reducible
    REQUIRE(run_cli("analyze \"x^7 - 2\"").exit_code == 1);   // unsupported shape
    REQUIRE(run_cli("analyze \"x^2 +\"").exit_code == 2);     // parse error
    REQUIRE(run_cli("binomial 4 2").exit_code == 1);          // not an odd prime
    REQUIRE(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("text and JSON modes agree on verdict fields") {
    auto text = run_cli("analyze \"x^3 - 3x + 3\"");
    auto js = run_cli("analyze \"x^3 - 3x + 3\" --json");
    REQUIRE(text.exit_code == 0);
    REQUIRE(js.exit_code == 0);
    auto j = nlohmann::json::parse(js.out);
    REQUIRE(j["schema"] == 1);
    REQUIRE(j["polynomial"] == "x^3 - 3x + 3");
    REQUIRE(j["real_root_count"] == 1);
    REQUIRE(j["discriminant"] == "-135");
    REQUIRE(j["real_roots"][0]["status"] == "InRealRRE");
    REQUIRE(j["real_roots"][0]["theorem"] == "Theorem9.1");
    REQUIRE(j["real_roots"][0]["tower"]["verified"] == true);
    // every JSON fact appears in the text rendering
    REQUIRE(text.out.find("discriminant: -135") != std::string::npos);
    REQUIRE(text.out.find("real roots: 1") != std::string::npos);
    REQUIRE(text.out.find("InRealRRE") != std::string::npos);
    REQUIRE(text.out.find("Theorem9.1") != std::string::npos);
    REQUIRE(text.out.find("ObstructionPresent") != std::string::npos);
    REQUIRE(j["cubic_radical_obstruction"] == "ObstructionPresent");
}

TEST_CASE("JSON documents carry the schema version and parse back") {
    for (const char* args : {"analyze \"x^4 - x - 1\" --json", "roots \"x^3 - x\" --json",
                             "cyclotomic 19 9 3 --json", "binomial 3 2 --json", "witness 2 --json",
                             "case-study sextic --json", "galois \"x^4 + 1\" --json"}) {
        auto res = run_cli(args);
        INFO(args);
        REQUIRE(res.exit_code == 0);
        auto j = nlohmann::json::parse(res.out);
        REQUIRE(j.contains("schema"));
        REQUIRE(j["schema"] == 1);
    }
}

TEST_CASE("ground-field flag routes to the quadratic classifier") {
    auto res = run_cli("analyze \"x^3 - 3x + 3 - sqrt(3)\" --ground 3 --json");
    REQUIRE(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.out);
    REQUIRE(j["ground_field"] == "Q(sqrt(3))");
    REQUIRE(j["real_root_count"] == 3);
    for (const auto& r : j["real_roots"]) REQUIRE(r["status"] == "NotInRealRRE");
    // sqrt tokens must match the declared ground field
    REQUIRE(run_cli("analyze \"x^2 - sqrt(2)\" --ground 3").exit_code == 2);
}

TEST_CASE("roots subcommand honors the width flag") {
    auto res = run_cli("roots \"x^2 - 2\" --width 30 --json");
    REQUIRE(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.out);
    REQUIRE(j["real_root_count"] == 2);
    auto parse_rat = [](const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return rre::Rational(rre::Int(s));
        return rre::Rational(rre::Int(s.substr(0, slash)), rre::Int(s.substr(slash + 1)));
    };
    rre::Rational bound(rre::Int(1), rre::Int(1) << 30);
    for (const auto& iv : j["intervals"]) {
        rre::Rational width = parse_rat(iv["hi"]) - parse_rat(iv["lo"]);
        REQUIRE(width <= bound);
    }
    // multiplicity flag
    auto rep = run_cli("roots \"(x - 1)^2\" --json");
    auto j2 = nlohmann::json::parse(rep.out);
    REQUIRE(j2["squarefree_reduced"] == true);
    REQUIRE(j2["real_root_count"] == 1);
}
