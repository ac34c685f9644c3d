/**
 * @file acceptance_main.cpp
 * @brief End-to-end acceptance suite. Runs each criterion with its time
 *        budget, prints one [PASS]/[FAIL] line per criterion, and exits
 *        nonzero if any fails. Criteria that name CLI invocations run the
 *        actual binary (path injected as RRE_CLI_PATH) and parse its JSON.
 */
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "rre/classifier.hpp"
#include "rre/json_io.hpp"
#include "rre/lemma_sweeps.hpp"
#include "rre/rre_core.hpp"

using nlohmann::json;
using namespace rre;

namespace {

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<void(std::ostringstream&)> run;  // throws / writes to fail the criterion
};

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(RRE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw Failure("could not spawn the CLI");
    CliResult res;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    int status = pclose(pipe);
    res.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return res;
}

json cli_json(const std::string& args) {
    CliResult res = run_cli(args + " --json");
    expect(res.exit_code == 0, "CLI exited with code " + std::to_string(res.exit_code));
    return json::parse(res.out);
}

// ----- criteria ------------------------------------------------------------

void criterion_intro_cubic(std::ostringstream&) {
    json j = cli_json("analyze \"x^3 - 6x + 2\"");
    expect(j["certificates"]["irreducibility"]["method"] == "eisenstein", "not Eisenstein");
    expect(j["certificates"]["irreducibility"]["prime"] == 2, "Eisenstein prime != 2");
    expect(j["real_root_count"] == 3, "real root count != 3");
    expect(j["real_roots"].size() == 3, "per-root statuses != 3");
    for (const auto& r : j["real_roots"]) {
        expect(r["status"] == "NotInRealRRE", "root not NotInRealRRE");
        expect(r["theorem"] == "TheoremC", "theorem tag != TheoremC");
    }
}

void criterion_unique_root_cubic(std::ostringstream&) {
    json j = cli_json("analyze \"x^3 - 3x + 3\"");
    expect(j["real_root_count"] == 1, "real root count != 1");
    expect(j["discriminant"] == "-135", "discriminant != -135");
    expect(j["cubic_radical_obstruction"] == "ObstructionPresent", "obstruction not present");
    const auto& r = j["real_roots"][0];
    expect(r["status"] == "InRealRRE", "root not InRealRRE");
    expect(r["theorem"] == "Theorem9.1", "theorem tag != Theorem9.1");
    expect(r.contains("tower"), "no tower emitted");
    expect(r["tower"]["verified"] == true, "tower not verified");
}

void criterion_sextic(std::ostringstream&) {
    auto cs = analyze_sextic_case_study();
    expect(cs.certificate.method == CertMethod::eisenstein && cs.certificate.prime == 3,
           "sextic not Eisenstein at 3");
    expect(cs.real_root_count == 4, "sextic real root count != 4");
    expect(cs.factorization_exact, "factorization over Q(sqrt(3)) not exact");
    expect(cs.u_real_roots == 1, "u-branch real roots != 1");
    expect(cs.v_real_roots == 3, "v-branch real roots != 3");
    expect(cs.u_verdict.roots.size() == 1 &&
               cs.u_verdict.roots[0].status == RootStatus::in_real_rre &&
               cs.u_verdict.roots[0].tower_verified,
           "u-branch root not a verified InRealRRE");
    for (const auto& r : cs.v_verdict.roots)
        expect(r.status == RootStatus::not_in_real_rre, "v-branch root not NotInRealRRE");
    expect(cs.roots_in_rre == 1, "roots in real RRE != 1");
    // and the CLI agrees
    json j = cli_json("case-study sextic");
    expect(j["roots_in_rre"] == 1, "CLI case study disagrees");
    expect(j["factor_product_check"] == true, "CLI factor check disagrees");
}

void criterion_cyclotomic19(std::ostringstream&) {
    json j = cli_json("cyclotomic 19 9 3");
    expect(j["verdict"]["outcome"] == "ConditionIFailed", "outcome != ConditionIFailed");
    expect(j["verdict"]["condition_index"] == 3, "condition index != 3");
    expect(j["datum"]["quasireal_L"] == true, "K should be quasireal");
    // the full cyclotomic field over the same ground: radical by construction
    json j2 = cli_json("cyclotomic 19 9 1");
    expect(j2["datum"]["degree_L"] == 9, "degree != 9");
    expect(j2["datum"]["radical_by_construction_degree"] == 9, "not marked radical by construction");
    expect(j2["datum"]["quasireal_L"] == false, "full cyclotomic field is not quasireal");
}

void criterion_binomials(std::ostringstream&) {
    for (size_t p : {3, 5, 7, 11, 13}) {
        auto d = build_binomial(p, Rational(2));
        auto v = find_rre_chain(d);
        expect(v.found(), "no chain for p = " + std::to_string(p));
        expect(v.witness.steps.size() == 1, "chain not single-step for p = " + std::to_string(p));
        auto fa = factor_action(d.N, d.M, d.U.generators());
        for (const auto& [actor, e] : fa.exponents)
            expect(e == d.char_value(static_cast<long>(p), actor),
                   "factor action differs from the character at p = " + std::to_string(p));
    }
}

void criterion_witness(std::ostringstream&) {
    auto w = theorem_a_witness(4);
    expect(w.prime == 17, "least prime for n = 4 is 17");
    expect(w.subfield_real, "subfield not real");
    expect(w.galois_cyclic_two_group, "Galois group not a cyclic 2-group");
    auto [ok, idx] = check_condition_i(w.datum);
    expect(ok && idx == 4, "condition (i) index should be the 2-power 4");
    expect(find_rre_chain(w.datum).found(), "chain search failed");
}

void criterion_three_root_criterion(std::ostringstream& note) {
    size_t checked = 0;
    for (long den = 1; den <= 10; ++den) {
        for (long num = -4 * den; num <= 4 * den; ++num) {
            Rational a(num, den);
            Polynomial<Rational> f{std::vector<Rational>{a, Rational(-3), Rational(0), Rational(1)}};
            if (discriminant(f) == 0) continue;  // skip the double-root cases a = +-2
            bool crit = cubic_three_root_criterion(a);
            bool sturm = count_real_roots(f) == 3;
            expect(crit == sturm, "criterion mismatch at a = " + to_string(a));
            ++checked;
        }
    }
    note << "(" << checked << " rationals)";
}

void criterion_quartic_tower(std::ostringstream&) {
    Polynomial<Rational> f{std::vector<Rational>{-1, -1, 0, 0, 1}};
    auto qt = build_quartic_tower(to_quad_poly(f), 0);
    expect(to_rational_poly(qt.resolvent) ==
               Polynomial<Rational>{std::vector<Rational>{-1, 4, 0, 1}},
           "resolvent != x^3 + 4x - 1");
    expect(qt.resolvent_unique_real_root, "resolvent should have a unique real root");
    size_t quadratic_steps = 0;
    for (const auto& s : qt.tower.steps)
        if (s.index == 2) ++quadratic_steps;
    expect(quadratic_steps == 3 + 1, "expected the Cardano sqrt plus three quadratic steps");
    auto iso = isolate_real_roots(to_quad_poly(f));
    expect(verify_tower_root(qt.tower, qt.root_low, to_quad_poly(f),
                             RatInterval(iso.intervals[0].lo, iso.intervals[0].hi)),
           "low root failed the 2^-30 interval check");
    expect(verify_tower_root(qt.tower, qt.root_high, to_quad_poly(f),
                             RatInterval(iso.intervals[1].lo, iso.intervals[1].hi)),
           "high root failed the 2^-30 interval check");
}

void criterion_lemma_sweeps(std::ostringstream& note) {
    auto p = sweep_partition_lemma();
    auto f = sweep_fpf_oracles(24);
    auto m = sweep_lemma82(150);
    expect(p.failures == 0, "partition sweep failures");
    expect(p.instances >= 2, "partition sweep must cover both groups");
    expect(f.failures == 0, "fixed-point-free sweep failures");
    expect(m.failures == 0, "module sweep failures");
    note << "(" << p.instances + f.instances + m.instances << " oracle calls)";
}

void criterion_preservation(std::ostringstream& note) {
    size_t checked = 0;
    auto d7 = build_binomial(7, Rational(2));
    for (const Group& v : subgroups_between(d7.U, d7.G)) {
        expect(intermediate_preservation(d7, v, PreservationBranch::odd_degree).verdict.found(),
               "odd-degree preservation failed");
        ++checked;
    }
    auto d9 = build_binomial_nine();
    for (const Group& v : subgroups_between(d9.U, d9.G)) {
        expect(intermediate_preservation(d9, v, PreservationBranch::prime_power).verdict.found(),
               "prime-power preservation failed");
        ++checked;
    }
    expect(checked == 5, "expected 2 + 3 intermediate subgroups");
    note << "(" << checked << " intermediates)";
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {"1. introductory cubic x^3 - 6x + 2: Eisenstein(2), 3 real roots, none real-radical", 1.0,
         criterion_intro_cubic},
        {"2. cubic x^3 - 3x + 3: 1 real root, verified Cardano tower, disc -135, obstruction", 1.0,
         criterion_unique_root_cubic},
        {"3. sextic case study: Eisenstein(3), 4 real roots, exact split, exactly 1 real-radical", 5.0,
         criterion_sextic},
        {"4. cyclotomic 19 9 3: ConditionIFailed(3); degree-9 field radical by construction", 1.0,
         criterion_cyclotomic19},
        {"5. binomial family p in {3,5,7,11,13}, a = 2: single-step chains matching characters", 5.0,
         criterion_binomials},
        {"6. 2-power witness n = 4: p = 17, real cyclic 2-group subfield, condition (i) passes", 1.0,
         criterion_witness},
        {"7. -2 < a < 2 criterion == Sturm count 3, all denominators <= 10, |a| <= 4", 30.0,
         criterion_three_root_criterion},
        {"8. quartic tower for x^4 - x - 1: resolvent x^3 + 4x - 1, verified at 2^-30", 5.0,
         criterion_quartic_tower},
        {"9. group-lemma oracle sweeps: zero counterexamples", 120.0, criterion_lemma_sweeps},
        {"10. intermediate preservation over both binomial models: all ChainFound", 10.0,
         criterion_preservation},
    };

    size_t failed = 0;
    for (auto& c : criteria) {
        std::ostringstream note;
        auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            c.run(note);
        } catch (const std::exception& e) {
            error = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool ok = error.empty() && secs <= c.budget_seconds;
        if (!ok) ++failed;
        std::string note_part = note.str().empty() ? std::string() : note.str() + " ";
        std::string error_part = error.empty() ? std::string() : " -- " + error;
        std::printf("[%s] %s %s[%.2fs, budget %.0fs]%s\n", ok ? "PASS" : "FAIL", c.name.c_str(),
                    note_part.c_str(), secs, c.budget_seconds, error_part.c_str());
    }
    if (failed) {
        std::printf("%zu of %zu acceptance criteria FAILED\n", failed, criteria.size());
        return 1;
    }
    std::printf("all %zu acceptance criteria passed\n", criteria.size());
    return 0;
}
