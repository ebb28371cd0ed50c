// dni: command-line front end for the delta-n-ideal library.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dni/dsl.hpp"
#include "dni/verifier.hpp"

namespace {

using namespace dni;

constexpr int kOk = 0;
constexpr int kClaimFailure = 1;
constexpr int kUsage = 2;

const char* yes(bool b) { return b ? "true" : "false"; }

std::string verdict_text(const Ring& R, const Verdict& v) {
    std::string s = yes(v.holds);
    if (v.holds) return s;
    std::vector<std::string> parts;
    const char* names[] = {"a=", "b="};
    for (std::size_t k = 0; k < v.elements.size() && k < 2; ++k) parts.push_back(names[k] + R.format(v.elements[k]));
    const char* inames[] = {"I1=", "I2="};
    for (std::size_t k = 0; k < v.ideals.size() && k < 2; ++k) parts.push_back(inames[k] + v.ideals[k].to_string());
    for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? ", " : " (") + parts[k];
    return parts.empty() ? s : s + ")";
}

int cmd_ideals(const std::string& ring_text) {
    auto R = construct_ring(parse_ring(ring_text));
    if (!R.is_finite()) throw AlgebraError(Errc::infinite_backend, to_string(R.spec()) + " has infinitely many ideals");
    auto L = IdealLattice::build(R);
    auto nil = nilradical(R);
    std::cout << to_string(R.spec()) << ": " << R.n() << " elements, " << L->size() << " ideals\n";
    for (std::size_t i = 0; i < L->size(); ++i) {
        const auto& I = (*L)[i];
        auto c = classify_ideal(I, *L);
        std::cout << "  [" << i << "] " << I.to_string() << "  size " << I.size();
        if (!c.is_proper) std::cout << "  unit";
        if (c.is_prime) std::cout << "  prime";
        if (c.is_maximal) std::cout << "  maximal";
        if (c.is_proper && c.is_primary) std::cout << "  primary";
        if (I == nil) std::cout << "  nilradical";
        std::cout << "\n";
    }
    return kOk;
}

int cmd_classify(const std::string& ring_text, const std::string& ideal_text, const std::string& delta_text) {
    auto R = construct_ring(parse_ring(ring_text));
    auto I = bind_ideal(R, ideal_text);
    auto d = bind_expansion(R, delta_text);
    auto c = classify_ideal(I);
    std::cout << "ring: " << to_string(R.spec()) << "\n"
              << "ideal: " << I.to_string() << "\n"
              << "proper: " << yes(c.is_proper) << "\n";
    if (!c.is_proper) detail::require_proper(I);
    std::cout << "prime: " << yes(c.is_prime) << "\n"
              << "maximal: " << yes(c.is_maximal) << "\n"
              << "primary: " << yes(c.is_primary) << "\n"
              << "superfluous: " << yes(c.is_superfluous) << "\n"
              << "n-ideal: " << verdict_text(R, check_n_ideal(I)) << "\n"
              << "quasi n-ideal: " << verdict_text(R, check_quasi_n_ideal(I)) << "\n"
              << "delta: " << d.to_string() << "\n"
              << "delta(I): " << d.apply(I).to_string() << "\n";
    for (auto m : kAllMethods) std::cout << "delta-n-ideal [" << method_name(m) << "]: " << verdict_text(R, check_delta_n_ideal(I, d, m)) << "\n";
    std::cout << "delta-primary: " << verdict_text(R, check_delta_primary(I, d)) << "\n";
    return kOk;
}

std::vector<std::string> split_ids(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    return out;
}

int cmd_verify(const std::string& claims, const std::string& corpus_arg, const std::string& json_path, std::size_t max_witnesses) {
    auto ids = split_ids(claims);
    select_claims(ids);
    auto corpus = corpus_arg == "default" ? builtin_corpus() : load_corpus(corpus_arg);
    auto rep = run_claims(corpus, ids, max_witnesses);
    if (json_path != "-") std::cout << format_report_text(rep);
    if (!json_path.empty()) {
        auto text = format_report_json(rep);
        if (json_path == "-") {
            std::cout << text;
        } else {
            std::ofstream f(json_path, std::ios::binary);
            if (!f) throw AlgebraError(Errc::invalid_spec, "cannot write " + json_path);
            f << text;
        }
    }
    return rep.all_hold() ? kOk : kClaimFailure;
}

int cmd_explain(const std::string& id) {
    const auto& c = find_claim(id);
    std::cout << c.id << "\n"
              << "  description: " << c.description << "\n"
              << "  statement: " << c.statement << "\n"
              << "  instances: " << c.shape << "\n"
              << "  default run: " << yes(c.default_run) << "\n";
    return kOk;
}

int cmd_claims() {
    for (const auto& c : claim_registry()) std::cout << c.id << (c.default_run ? "" : "  (opt-in)") << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ideal lattices, expansions and delta-n-ideals of small commutative rings"};
    app.require_subcommand(1);

    std::string ring, ideal, delta = "d0", claims, corpus = "default", json, claim_id;
    std::size_t max_witnesses = kDefaultMaxWitnesses;

    auto* ideals = app.add_subcommand("ideals", "List the ideal lattice of a ring");
    ideals->add_option("ring", ring, "Ring, e.g. Z12 or \"Z4[x]/(x^3)\"")->required();

    auto* classify = app.add_subcommand("classify", "Classify an ideal");
    classify->add_option("ring", ring, "Ring")->required();
    classify->add_option("ideal", ideal, "Ideal generators, e.g. \"(2, x)\"")->required();
    classify->add_option("--delta", delta, "Expansion, e.g. d1 or \"d+((3))\"")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Run the claim registry over a corpus");
    verify->add_option("--claims", claims, "Comma-separated claim ids (default: every default-run claim)");
    verify->add_option("--corpus", corpus, "\"default\" or a corpus file")->capture_default_str();
    verify->add_option("--json", json, "Write the JSON report to this path (\"-\": JSON only, on stdout)");
    verify->add_option("--max-witnesses", max_witnesses, "Failure witnesses kept per claim")->capture_default_str();

    auto* explain = app.add_subcommand("explain", "Describe a claim");
    explain->add_option("claim", claim_id, "Claim id")->required();

    auto* list = app.add_subcommand("claims", "List claim ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*ideals) return cmd_ideals(ring);
        if (*classify) return cmd_classify(ring, ideal, delta);
        if (*verify) return cmd_verify(claims, corpus, json, max_witnesses);
        if (*explain) return cmd_explain(claim_id);
        if (*list) return cmd_claims();
    } catch (const AlgebraError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
