/**
 * @file rre_cli.cpp
 * @brief Command-line front end.
 *
 * Subcommands:
 *   analyze <poly>          classify real roots (real repeated radicals)
 *   roots <poly>            exact real-root count and isolating intervals
 *   galois <poly>           Galois group label for degree 2..4 over Q
 *   tower <poly>            radical-tower construction and verification
 *   cyclotomic <n> <H> <H'> cyclotomic datum and chain verdict
 *   binomial <p> <a>        binomial datum and radical checks
 *   verify-lemmas           brute-force oracle sweeps
 *   case-study sextic       the worked sextic report
 *
 * Exit codes: 0 = verdict produced, 1 = mathematical rejection (reducible,
 * unsupported, cap exceeded), 2 = usage or parse error.
 */
#include <CLI11.hpp>
#include <iostream>

#include "rre/classifier.hpp"
#include "rre/json_io.hpp"
#include "rre/lemma_sweeps.hpp"
#include "rre/rre_core.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRejected = 1;
constexpr int kExitUsage = 2;

rre::Rational parse_rational_arg(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return rre::Rational(rre::Int(text));
        rre::Int num(text.substr(0, slash));
        rre::Int den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return rre::Rational(num, den);
    } catch (const std::exception&) {
        throw CLI::ValidationError("expected a rational like 2 or 27/64, got '" + text + "'");
    }
}

std::string interval_text(const rre::IsolatingInterval& iv) {
    std::string s = "(" + rre::to_string(iv.lo) + ", " + rre::to_string(iv.hi) + "]";
    if (iv.hi_is_root) s += " (right endpoint is the root)";
    return s;
}

void print_tower(const rre::RootVerdict& r) {
    if (!r.tower) return;
    std::cout << "    tower: " << r.tower->describe() << "\n";
    if (r.root_expr) std::cout << "    root expression: " << r.root_expr->str() << "\n";
    std::cout << "    numeric verification (width <= 2^-30, interval contains 0): "
              << (r.tower_verified ? "passed" : "FAILED") << "\n";
}

int print_verdict(const rre::Verdict& v, bool as_json) {
    if (as_json) {
        std::cout << rre::to_json(v).dump(2) << "\n";
    } else {
        std::cout << "polynomial: " << rre::poly_to_text(v.poly) << "  over " << v.ground_name() << "\n";
        std::cout << "irreducibility: " << v.certificate.describe() << "\n";
        if (v.disc) std::cout << "discriminant: " << v.disc->str() << "\n";
        if (v.galois) std::cout << "galois group: " << rre::label_name(v.galois->label) << "\n";
        if (v.obstruction) {
            std::cout << "cubic radical obstruction: "
                      << (*v.obstruction == rre::Obstruction::present ? "ObstructionPresent"
                                                                      : "ObstructionAbsent")
                      << " (discriminant / -3 = " << v.obstruction_ratio->str()
                      << (*v.obstruction == rre::Obstruction::present
                              ? ", not a square in the ground field: the cubic field itself is not a"
                                " repeated radical extension"
                              : ", a square in the ground field: necessity test passes, inconclusive")
                      << ")\n";
        }
        std::cout << "real roots: " << v.real_root_count << "\n";
        for (const auto& r : v.roots) {
            std::cout << "  root in " << interval_text(r.interval) << ": " << rre::status_name(r.status);
            if (r.tag != rre::TheoremTag::none) std::cout << " [" << rre::tag_name(r.tag) << "]";
            std::cout << "\n";
            print_tower(r);
        }
        if (v.casus_irreducibilis)
            std::cout << "note: casus irreducibilis (irreducible cubic with three real roots)\n";
        if (v.overall == rre::Verdict::Overall::no_real_roots) std::cout << "no real roots\n";
        if (v.overall == rre::Verdict::Overall::unsupported)
            std::cout << "unsupported: " << v.unsupported_reason << "\n";
    }
    return v.overall == rre::Verdict::Overall::unsupported ? kExitRejected : kExitOk;
}

rre::Group parse_units_subgroup(size_t n, const std::string& spec) {
    if (spec.rfind("g:", 0) == 0 || spec.rfind("gens:", 0) == 0) {
        std::vector<long> gens;
        std::string rest = spec.substr(spec.find(':') + 1);
        size_t pos = 0;
        while (pos < rest.size()) {
            size_t comma = rest.find(',', pos);
            if (comma == std::string::npos) comma = rest.size();
            gens.push_back(std::stol(rest.substr(pos, comma - pos)));
            pos = comma + 1;
        }
        return rre::units_subgroup_from_gens(n, gens);
    }
    return rre::units_subgroup_of_order(n, std::stoul(spec));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classifier for roots expressible by real radicals"};
    app.require_subcommand(1);

    std::string poly_text, ground_spec, field_spec, rational_text, study_name;
    unsigned ground_d = 0;
    unsigned width_exp = 20;
    size_t cyc_n = 0, binom_p = 0, witness_n = 0;
    size_t max_order = 24, random_insts = 150;
    bool as_json = false;

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", as_json, "emit JSON (schema 1)"); };

    auto* analyze = app.add_subcommand("analyze", "classify the real roots of a polynomial");
    analyze->add_option("polynomial", poly_text, "e.g. \"x^3 - 6x + 2\"")->required();
    analyze->add_option("--ground", ground_d, "ground field Q(sqrt(d)), squarefree d > 1");
    add_json(analyze);

    auto* roots = app.add_subcommand("roots", "count and isolate the real roots");
    roots->add_option("polynomial", poly_text)->required();
    roots->add_option("--ground", ground_d, "ground field Q(sqrt(d))");
    roots->add_option("--width", width_exp, "isolation width exponent k (width 2^-k), default 20");
    add_json(roots);

    auto* galois = app.add_subcommand("galois", "Galois group of an irreducible polynomial of degree 2..4");
    galois->add_option("polynomial", poly_text)->required();
    add_json(galois);

    auto* tower = app.add_subcommand("tower", "construct and verify a radical tower for the real roots");
    tower->add_option("polynomial", poly_text)->required();
    tower->add_option("--ground", ground_d, "ground field Q(sqrt(d))");
    add_json(tower);

    auto* cyc = app.add_subcommand("cyclotomic",
                                   "datum for subfields of Q(zeta_n) and the chain verdict");
    cyc->add_option("n", cyc_n, "root-of-unity order, 3 <= n <= 100")->required();
    cyc->add_option("H_ground", ground_spec, "subgroup of (Z/n)^x: order, or gens:a,b")->required();
    cyc->add_option("H_field", field_spec, "subgroup of H_ground: order, or gens:a,b")->required();
    add_json(cyc);

    auto* binom = app.add_subcommand("binomial", "datum for the splitting field of X^p - a");
    binom->add_option("p", binom_p, "odd prime <= 19")->required();
    binom->add_option("a", rational_text, "rational, not a p-th power")->required();
    add_json(binom);

    auto* witness = app.add_subcommand("witness", "2-power real cyclotomic subfield datum");
    witness->add_option("n", witness_n, "degree: 2, 4, 8 or 16")->required();
    add_json(witness);

    auto* verify = app.add_subcommand("verify-lemmas", "run the brute-force oracle sweeps");
    verify->add_option("--max-order", max_order, "cap on |N| in the fixed-point-free sweeps (default 24)");
    verify->add_option("--random", random_insts, "random module-lemma instances (default 150)");
    add_json(verify);

    auto* study = app.add_subcommand("case-study", "worked examples");
    study->add_option("name", study_name, "only: sextic")->required();
    add_json(study);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*analyze || *tower) {
            auto f = rre::parse_poly_quad(poly_text, ground_d ? std::optional<unsigned>(ground_d)
                                                              : std::nullopt);
            rre::Verdict v = rre::classify(f, ground_d);
            if (*tower && !as_json) {
                // roots of one polynomial share a tower; print the normalized form once
                for (const auto& r : v.roots)
                    if (r.tower && !r.tower->steps.empty()) {
                        auto normalized = rre::normalize_tower(*r.tower);
                        std::cout << "normalized (prime indices): " << normalized.describe() << "\n";
                        break;
                    }
            }
            return print_verdict(v, as_json);
        }
        if (*roots) {
            auto f = rre::parse_poly_quad(poly_text, ground_d ? std::optional<unsigned>(ground_d)
                                                              : std::nullopt);
            rre::Rational width(rre::Int(1), rre::Int(1) << width_exp);
            auto iso = rre::isolate_real_roots(f, width);
            auto chain = rre::sturm_chain(iso.squarefree);
            if (as_json) {
                rre::json j;
                j["schema"] = 1;
                j["polynomial"] = rre::poly_to_text(f);
                j["real_root_count"] = iso.intervals.size();
                j["squarefree_reduced"] = iso.reduced_multiplicity;
                j["sturm_chain_length"] = chain.size();
                rre::json ivs = rre::json::array();
                for (const auto& iv : iso.intervals) ivs.push_back(rre::to_json(iv));
                j["intervals"] = ivs;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "polynomial: " << rre::poly_to_text(f) << "\n";
                if (iso.reduced_multiplicity)
                    std::cout << "note: input had repeated roots; counts are for distinct roots\n";
                std::cout << "sturm chain length: " << chain.size() << "\n";
                std::cout << "real roots: " << iso.intervals.size() << "\n";
                for (const auto& iv : iso.intervals) std::cout << "  " << interval_text(iv) << "\n";
            }
            return kExitOk;
        }
        if (*galois) {
            auto f = rre::parse_poly_q(poly_text);
            auto cert = rre::irreducibility_certificate(f);
            if (cert.reducible()) {
                std::cerr << "rejected: reducible, factor " << rre::poly_to_text(cert.factor) << "\n";
                return kExitRejected;
            }
            if (!cert.irreducible()) {
                std::cerr << "rejected: " << cert.describe() << "\n";
                return kExitRejected;
            }
            auto res = rre::galois_group_small_degree(f, cert);
            if (as_json) {
                rre::json j;
                j["schema"] = 1;
                j["polynomial"] = rre::poly_to_text(f);
                j["label"] = rre::label_name(res.label);
                j["discriminant_square"] = res.discriminant_square;
                if (f.degree() == 4) {
                    j["resolvent_cubic"] = rre::poly_to_text(res.resolvent);
                    rre::json rr = rre::json::array();
                    for (const auto& r : res.resolvent_roots) rr.push_back(rre::to_string(r));
                    j["resolvent_rational_roots"] = rr;
                }
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "galois group: " << rre::label_name(res.label) << "\n";
                if (f.degree() == 4)
                    std::cout << "resolvent cubic: " << rre::poly_to_text(res.resolvent) << " ("
                              << res.resolvent_roots.size() << " rational roots)\n";
            }
            return kExitOk;
        }
        if (*cyc) {
            rre::Group hg = parse_units_subgroup(cyc_n, ground_spec);
            rre::Group hf = parse_units_subgroup(cyc_n, field_spec);
            auto datum = rre::build_cyclotomic(cyc_n, hg, hf);
            auto verdict = rre::find_rre_chain(datum);
            if (as_json) {
                rre::json j;
                j["schema"] = 1;
                j["datum"] = rre::to_json(datum);
                j["verdict"] = rre::to_json(verdict);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "L = " << datum.label_L << " over " << datum.label_ground << ", degree "
                          << datum.degree_L() << (datum.l_quasireal ? " (quasireal)" : " (not quasireal)")
                          << "\n";
                if (datum.radical_by_construction_degree)
                    std::cout << "L is a radical extension of the ground field by construction "
                              << "(adjoin zeta_" << cyc_n << ", degree "
                              << *datum.radical_by_construction_degree << ")\n";
                std::cout << "chain verdict: " << verdict.outcome_name();
                if (!verdict.reason.empty()) std::cout << " — " << verdict.reason;
                std::cout << "\n";
            }
            return kExitOk;
        }
        if (*binom) {
            rre::Rational a = parse_rational_arg(rational_text);
            auto datum = rre::build_binomial(binom_p, a);
            auto prime_check = rre::check_prime_degree_radical(datum);
            auto chain = rre::find_rre_chain(datum);
            if (as_json) {
                rre::json j;
                j["schema"] = 1;
                j["datum"] = rre::to_json(datum);
                j["prime_degree_check"] = rre::to_json(prime_check);
                j["chain_verdict"] = rre::to_json(chain);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "splitting field of x^" << binom_p << " - (" << rre::to_string(a)
                          << "): |G| = " << datum.G.order() << ", |U| = " << datum.U.order()
                          << ", |N| = " << datum.N.order() << ", |M| = " << datum.M.order() << "\n";
                std::cout << "prime-degree radical check: " << prime_check.outcome_name() << "\n";
                std::cout << "chain verdict: " << chain.outcome_name();
                if (chain.found()) std::cout << " (" << chain.witness.steps.size() << " steps)";
                std::cout << "\n";
            }
            return kExitOk;
        }
        if (*witness) {
            auto w = rre::theorem_a_witness(witness_n);
            auto verdict = rre::find_rre_chain(w.datum);
            if (as_json) {
                rre::json j = rre::to_json(w);
                j["chain_verdict"] = rre::to_json(verdict);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "least prime p = 1 mod " << 2 * witness_n << ": " << w.prime << "\n";
                std::cout << "degree-" << w.degree << " subfield of Q(zeta_" << w.prime
                          << "): real = " << (w.subfield_real ? "yes" : "no")
                          << ", Galois group cyclic 2-group = "
                          << (w.galois_cyclic_two_group ? "yes" : "no") << "\n";
                std::cout << "chain verdict: " << verdict.outcome_name() << "\n";
            }
            return kExitOk;
        }
        if (*verify) {
            std::vector<rre::SweepReport> reports;
            reports.push_back(rre::sweep_partition_lemma());
            reports.push_back(rre::sweep_normal_closure_minimality());
            reports.push_back(rre::sweep_fpf_oracles(max_order));
            reports.push_back(rre::sweep_lemma82(random_insts));
            size_t failures = 0;
            if (as_json) {
                rre::json j;
                j["schema"] = 1;
                rre::json arr = rre::json::array();
                for (const auto& r : reports) {
                    arr.push_back(rre::to_json(r));
                    failures += r.failures;
                }
                j["sweeps"] = arr;
                j["total_failures"] = failures;
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& r : reports) {
                    failures += r.failures;
                    std::cout << r.name << ": " << r.instances << " instances, "
                              << r.hypothesis_skipped << " filtered by hypotheses, " << r.failures
                              << " failures\n";
                    for (const auto& note : r.failure_notes) std::cout << "  ! " << note << "\n";
                }
                std::cout << (failures == 0 ? "all sweeps clean\n" : "SWEEPS FAILED\n");
            }
            return failures == 0 ? kExitOk : kExitRejected;
        }
        if (*study) {
            if (study_name != "sextic") {
                std::cerr << "unknown case study '" << study_name << "' (only: sextic)\n";
                return kExitUsage;
            }
            auto cs = rre::analyze_sextic_case_study();
            if (as_json) {
                std::cout << rre::to_json(cs).dump(2) << "\n";
            } else {
                std::cout << "sextic: " << rre::poly_to_text(cs.sextic) << "\n";
                std::cout << "irreducibility: " << cs.certificate.describe() << "\n";
                std::cout << "real roots over Q: " << cs.real_root_count << "\n";
                std::cout << "factorization over Q(sqrt(3)): (" << rre::poly_to_text(cs.factor_u)
                          << ") * (" << rre::poly_to_text(cs.factor_v) << ")  exact: "
                          << (cs.factorization_exact ? "yes" : "NO") << "\n";
                std::cout << "three-root criterion (-2 < a < 2): u-branch " << (cs.u_criterion ? "yes" : "no")
                          << ", v-branch " << (cs.v_criterion ? "yes" : "no") << "\n";
                std::cout << "u-branch real roots: " << cs.u_real_roots << ", v-branch real roots: "
                          << cs.v_real_roots << "\n";
                for (const auto& r : cs.u_verdict.roots)
                    std::cout << "  u-root in " << interval_text(r.interval) << ": "
                              << rre::status_name(r.status) << " [" << rre::tag_name(r.tag) << "]\n";
                for (const auto& r : cs.v_verdict.roots)
                    std::cout << "  v-root in " << interval_text(r.interval) << ": "
                              << rre::status_name(r.status) << " [" << rre::tag_name(r.tag) << "]\n";
                std::cout << "roots in a real repeated radical extension of Q: " << cs.roots_in_rre
                          << " of " << cs.real_root_count << "\n";
                std::cout << "(the u-root tower lives over Q(sqrt(3)); adjoining sqrt(3) is itself a real"
                             " radical step, so the root is real-radical over Q)\n";
            }
            return kExitOk;
        }
    } catch (const rre::ReducibleInputError& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return kExitRejected;
    } catch (const rre::PolyParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const rre::CapExceeded& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return kExitRejected;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return kExitRejected;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRejected;
    }
    return kExitUsage;
}
