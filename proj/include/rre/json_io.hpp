/**
 * @file json_io.hpp
 * @brief JSON shapes (schema 1) for data, verdicts and reports: permutations
 *        in cycle notation, characters as integer maps keyed by generator,
 *        chain witnesses with full subgroup element lists.
 */
#pragma once

#include <json.hpp>

#include "rre/classifier.hpp"
#include "rre/lemma_sweeps.hpp"
#include "rre/rre_core.hpp"

namespace rre {

using nlohmann::json;

inline constexpr int kJsonSchemaVersion = 1;

inline json to_json(const QuadFieldElem& v) {
    json j;
    j["value"] = v.str();
    j["a"] = to_string(v.rat_part());
    j["b"] = to_string(v.quad_part());
    j["d"] = v.field_tag();
    return j;
}

inline json to_json(const IsolatingInterval& iv) {
    return json{{"lo", to_string(iv.lo)}, {"hi", to_string(iv.hi)}, {"hi_is_root", iv.hi_is_root}};
}

inline json to_json(const IrreducibilityCertificate& c) {
    json j;
    j["status"] = c.irreducible() ? "irreducible" : (c.reducible() ? "reducible" : "unknown");
    j["description"] = c.describe();
    switch (c.method) {
        case CertMethod::eisenstein:
            j["method"] = "eisenstein";
            j["prime"] = c.prime;
            j["shift"] = c.shift;
            break;
        case CertMethod::mod_p_irreducible:
            j["method"] = "mod_p";
            j["prime"] = c.prime;
            break;
        case CertMethod::no_root_deg_le3: j["method"] = "no_root_deg_le3"; break;
        case CertMethod::quartic_exhaustive: j["method"] = "quartic_exhaustive"; break;
        case CertMethod::binomial_pth_power: j["method"] = "binomial_pth_power"; break;
        case CertMethod::none: break;
    }
    if (c.reducible()) {
        if (!c.factor_quad.is_zero())
            j["factor"] = poly_to_text(c.factor_quad);
        else
            j["factor"] = poly_to_text(c.factor);
    }
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

inline json group_to_json(const Group& g, bool with_elements = true) {
    json j;
    j["degree"] = g.degree();
    j["order"] = g.order();
    json gens = json::array();
    for (const Perm& p : g.generators()) gens.push_back(p.cycle_string());
    j["generators"] = gens;
    if (with_elements && g.order() <= 64) {
        json elems = json::array();
        for (const Perm& p : g.elements()) elems.push_back(p.cycle_string());
        j["elements"] = elems;
    }
    return j;
}

inline json to_json(const GaloisDatum& d) {
    json j;
    j["schema"] = kJsonSchemaVersion;
    j["labels"] = json{{"ground", d.label_ground}, {"L", d.label_L}, {"F", d.label_F}, {"E", d.label_E}};
    j["degree_L"] = d.degree_L();
    j["quasireal_L"] = d.l_quasireal;
    if (d.radical_by_construction_degree)
        j["radical_by_construction_degree"] = *d.radical_by_construction_degree;
    j["G"] = group_to_json(d.G);
    j["U"] = group_to_json(d.U);
    j["N"] = group_to_json(d.N);
    j["M"] = group_to_json(d.M);
    if (d.conjugation) j["conjugation"] = d.conjugation->cycle_string();
    json chars = json::array();
    for (const auto& [p, vals] : d.characters) {
        json c;
        c["prime"] = p;
        json on_gens = json::object();
        for (const Perm& g : d.G.generators()) on_gens[g.cycle_string()] = d.char_value(p, g);
        c["on_generators"] = on_gens;
        chars.push_back(c);
    }
    j["characters"] = chars;
    return j;
}

inline json to_json(const RreVerdict& v) {
    json j;
    j["schema"] = kJsonSchemaVersion;
    j["outcome"] = v.outcome_name();
    if (!v.reason.empty()) j["reason"] = v.reason;
    if (v.outcome == RreVerdict::Outcome::condition_i_failed) j["condition_index"] = v.condition_index;
    if (v.outcome == RreVerdict::Outcome::no_chain) j["enumerated_subgroups"] = v.enumerated;
    if (v.outcome == RreVerdict::Outcome::chain_found) {
        json chain = json::array();
        for (const Group& g : v.witness.chain) chain.push_back(group_to_json(g));
        j["chain"] = chain;
        json steps = json::array();
        for (const ChainStep& s : v.witness.steps)
            steps.push_back(json{{"prime", s.prime},
                                 {"normal", s.normal},
                                 {"u_invariant", s.u_invariant},
                                 {"character_match", s.character_match}});
        j["steps"] = steps;
    }
    return j;
}

inline json to_json(const RadicalTower& t) {
    json steps = json::array();
    for (const TowerStep& s : t.steps)
        steps.push_back(json{{"index", s.index}, {"radicand", s.radicand.str()}, {"real", s.real}});
    return json{{"steps", steps}};
}

inline json to_json(const Verdict& v) {
    json j;
    j["schema"] = kJsonSchemaVersion;
    j["polynomial"] = poly_to_text(v.poly);
    j["ground_field"] = v.ground_name();
    switch (v.overall) {
        case Verdict::Overall::classified: j["overall"] = "classified"; break;
        case Verdict::Overall::no_real_roots: j["overall"] = "no_real_roots"; break;
        case Verdict::Overall::unsupported: j["overall"] = "unsupported"; break;
    }
    j["certificates"] = json{{"irreducibility", to_json(v.certificate)}};
    if (v.disc) j["discriminant"] = v.disc->str();
    j["real_root_count"] = v.real_root_count;
    if (v.galois) j["galois_group"] = label_name(v.galois->label);
    if (v.obstruction) {
        j["cubic_radical_obstruction"] =
            *v.obstruction == Obstruction::present ? "ObstructionPresent" : "ObstructionAbsent";
        j["discriminant_over_minus3"] = v.obstruction_ratio->str();
    }
    if (v.casus_irreducibilis) j["casus_irreducibilis"] = true;
    if (!v.unsupported_reason.empty()) j["unsupported_reason"] = v.unsupported_reason;
    json roots = json::array();
    for (const RootVerdict& r : v.roots) {
        json rj;
        rj["interval"] = to_json(r.interval);
        rj["status"] = status_name(r.status);
        if (r.tag != TheoremTag::none) rj["theorem"] = tag_name(r.tag);
        if (r.tower) {
            rj["tower"] = to_json(*r.tower);
            if (r.root_expr) rj["tower"]["root"] = r.root_expr->str();
            rj["tower"]["verified"] = r.tower_verified;
        }
        roots.push_back(rj);
    }
    j["real_roots"] = roots;
    return j;
}

inline json to_json(const SexticCaseStudy& cs) {
    json j;
    j["schema"] = kJsonSchemaVersion;
    j["polynomial"] = poly_to_text(cs.sextic);
    j["irreducibility"] = to_json(cs.certificate);
    j["real_root_count"] = cs.real_root_count;
    j["factor_u"] = poly_to_text(cs.factor_u);
    j["factor_v"] = poly_to_text(cs.factor_v);
    j["factor_product_check"] = cs.factorization_exact;
    j["u_three_root_criterion"] = cs.u_criterion;
    j["v_three_root_criterion"] = cs.v_criterion;
    j["u_real_roots"] = cs.u_real_roots;
    j["v_real_roots"] = cs.v_real_roots;
    j["u_verdict"] = to_json(cs.u_verdict);
    j["v_verdict"] = to_json(cs.v_verdict);
    j["roots_in_rre"] = cs.roots_in_rre;
    return j;
}

inline json to_json(const SweepReport& r) {
    json j;
    j["name"] = r.name;
    j["instances"] = r.instances;
    j["hypothesis_skipped"] = r.hypothesis_skipped;
    j["failures"] = r.failures;
    if (!r.failure_notes.empty()) j["failure_notes"] = r.failure_notes;
    return j;
}

inline json to_json(const TheoremAWitness& w) {
    json j;
    j["schema"] = kJsonSchemaVersion;
    j["prime"] = w.prime;
    j["degree"] = w.degree;
    j["subfield_real"] = w.subfield_real;
    j["galois_cyclic_two_group"] = w.galois_cyclic_two_group;
    j["datum"] = to_json(w.datum);
    return j;
}

}  // namespace rre
