#pragma once

/**
 * @file verifier.hpp
 * @brief Runs registry claims over a corpus and serializes the reports.
 *
 * JSON schema (one object, keys in this order):
 *
 *     {
 *       "corpus": {"rings": <int>, "expansions": <int>},
 *       "claims": [
 *         {"id": str, "description": str, "status": "holds" | "fails" | "vacuous",
 *          "instances_checked": int, "holds": int, "hypothesis_not_met": int, "failed": int,
 *          "failures": [{"ring": str, "expansion": str, "ideals": [str], "elements": [str], "note": str}],
 *          "notes": [str]}
 *       ],
 *       "summary": {"claims": int, "failing_claims": int, "failures": int}
 *     }
 *
 * "failures" holds at most the witness cap; "failed" is the full count, so
 * holds + hypothesis_not_met + failed == instances_checked.
 */

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dni/claims.hpp"

namespace dni {

inline constexpr std::size_t kDefaultMaxWitnesses = 5;

struct VerificationReport {
    std::size_t rings = 0;
    std::size_t expansions = 0;
    std::vector<ClaimReport> claims;

    std::size_t failing_claims() const {
        std::size_t n = 0;
        for (const auto& c : claims) n += c.failed > 0;
        return n;
    }
    std::size_t total_failures() const {
        std::size_t n = 0;
        for (const auto& c : claims) n += c.failed;
        return n;
    }
    bool all_hold() const { return failing_claims() == 0; }
};

inline const char* claim_status(const ClaimReport& r) {
    if (r.failed) return "fails";
    if (r.holds == 0) return "vacuous";
    return "holds";
}

/// The claims named by `ids`, or every default-run claim when `ids` is empty.
inline std::vector<const Claim*> select_claims(const std::vector<std::string>& ids) {
    std::vector<const Claim*> out;
    if (ids.empty()) {
        for (const auto& c : claim_registry())
            if (c.default_run) out.push_back(&c);
        return out;
    }
    for (const auto& id : ids) out.push_back(&find_claim(id));
    return out;
}

inline ClaimReport run_claim(const Claim& claim, const Context& ctx, std::size_t max_witnesses = kDefaultMaxWitnesses) {
    ClaimReport r;
    r.id = claim.id;
    r.description = claim.description;
    Tally t(r, max_witnesses);
    claim.run(ctx, t);
    return r;
}

inline VerificationReport run_claims(const Context& ctx, const std::vector<std::string>& ids = {},
                                     std::size_t max_witnesses = kDefaultMaxWitnesses) {
    auto selected = select_claims(ids);
    VerificationReport rep;
    rep.rings = ctx.rings.size();
    for (const auto& r : ctx.rings) rep.expansions += r->expansions.size();
    for (const auto* c : selected) rep.claims.push_back(run_claim(*c, ctx, max_witnesses));
    return rep;
}

inline VerificationReport run_claims(const Corpus& corpus, const std::vector<std::string>& ids = {},
                                     std::size_t max_witnesses = kDefaultMaxWitnesses) {
    auto selected = select_claims(ids);  // reject unknown ids before building the corpus
    (void)selected;
    return run_claims(build_context(corpus), ids, max_witnesses);
}

/// First failure witness in corpus order, or nullopt.
inline std::optional<Witness> find_counterexample(const std::string& id, const Corpus& corpus) {
    const auto& claim = find_claim(id);
    auto r = run_claim(claim, build_context(corpus), 1);
    if (r.failures.empty()) return std::nullopt;
    return r.failures.front();
}

// ---------------------------------------------------------------------------
// Serialization

inline std::string format_witness(const Witness& w) {
    std::string s = "ring " + w.ring;
    if (!w.expansion.empty()) s += ", delta " + w.expansion;
    if (!w.ideals.empty()) {
        s += ", ideals";
        for (const auto& i : w.ideals) s += " " + i;
    }
    for (std::size_t k = 0; k < w.elements.size(); ++k) s += (k ? "," : ", ") + w.elements[k];
    if (!w.note.empty()) s += " [" + w.note + "]";
    return s;
}

inline std::string format_report_text(const VerificationReport& rep) {
    std::ostringstream out;
    out << "corpus: " << rep.rings << " rings, " << rep.expansions << " expansions\n";
    for (const auto& c : rep.claims) {
        out << c.id << ": " << claim_status(c) << "\n";
        out << "  checked " << c.instances_checked << ", holds " << c.holds << ", hypothesis not met " << c.hypothesis_not_met
            << ", failed " << c.failed << "\n";
        for (const auto& w : c.failures) out << "  witness: " << format_witness(w) << "\n";
        if (c.failed > c.failures.size()) out << "  (" << c.failed - c.failures.size() << " more failures)\n";
        for (const auto& n : c.notes) out << "  note: " << n << "\n";
    }
    out << "summary: " << rep.claims.size() << " claims, " << rep.failing_claims() << " failing, " << rep.total_failures()
        << " failures\n";
    return out.str();
}

inline nlohmann::ordered_json witness_json(const Witness& w) {
    return nlohmann::ordered_json{{"ring", w.ring}, {"expansion", w.expansion}, {"ideals", w.ideals}, {"elements", w.elements}, {"note", w.note}};
}

inline nlohmann::ordered_json report_json(const VerificationReport& rep) {
    nlohmann::ordered_json claims = nlohmann::ordered_json::array();
    for (const auto& c : rep.claims) {
        nlohmann::ordered_json failures = nlohmann::ordered_json::array();
        for (const auto& w : c.failures) failures.push_back(witness_json(w));
        claims.push_back({{"id", c.id},
                          {"description", c.description},
                          {"status", claim_status(c)},
                          {"instances_checked", c.instances_checked},
                          {"holds", c.holds},
                          {"hypothesis_not_met", c.hypothesis_not_met},
                          {"failed", c.failed},
                          {"failures", failures},
                          {"notes", c.notes}});
    }
    return {{"corpus", {{"rings", rep.rings}, {"expansions", rep.expansions}}},
            {"claims", claims},
            {"summary", {{"claims", rep.claims.size()}, {"failing_claims", rep.failing_claims()}, {"failures", rep.total_failures()}}}};
}

inline std::string format_report_json(const VerificationReport& rep) { return report_json(rep).dump(2) + "\n"; }

}  // namespace dni
