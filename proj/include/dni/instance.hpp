#pragma once

/**
 * @file instance.hpp
 * @brief Precomputed ring data shared by the verifier's claims, and claim tallies.
 *
 * For each ideal I the verifier stores two obstruction sets: the b with ab in I
 * for some non-nilpotent a, and the b with ab in I for some a outside I. Then
 * "I is delta-n" and "I is delta-primary" are subset tests against delta(I),
 * which keeps the per-expansion cost at one lookup per ideal.
 */

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dni/corpus.hpp"

namespace dni {

struct Witness {
    std::string ring;
    std::string expansion;
    std::vector<std::string> ideals;
    std::vector<std::string> elements;
    std::string note;
};

struct ClaimReport {
    std::string id;
    std::string description;
    std::size_t instances_checked = 0;
    std::size_t holds = 0;
    std::size_t hypothesis_not_met = 0;
    std::size_t failed = 0;  // failures.size() is capped; this is the full count
    std::vector<Witness> failures;
    std::vector<std::string> notes;
};

/// Accumulates one claim's outcomes.
class Tally {
public:
    Tally(ClaimReport& report, std::size_t max_witnesses) : r_(report), cap_(max_witnesses) {}

    void hypothesis_not_met() {
        ++r_.instances_checked;
        ++r_.hypothesis_not_met;
    }

    template <class MakeWitness>
    void check(bool conclusion, MakeWitness&& witness) {
        ++r_.instances_checked;
        if (conclusion) {
            ++r_.holds;
            return;
        }
        ++r_.failed;
        if (r_.failures.size() < cap_) r_.failures.push_back(witness());
    }

    template <class MakeWitness>
    void implication(bool hypothesis, bool conclusion, MakeWitness&& witness) {
        if (!hypothesis) return hypothesis_not_met();
        check(conclusion, std::forward<MakeWitness>(witness));
    }

    void note(std::string n) { r_.notes.push_back(std::move(n)); }
    bool saturated() const { return r_.failures.size() >= cap_; }

private:
    ClaimReport& r_;
    std::size_t cap_;
};

struct ExpansionData {
    Expansion d;
    ExpansionProfile profile;
};

class RingData {
public:
    RingData(const Ring& R, std::shared_ptr<const IdealLattice> L)
        : spec_(R.spec()), name_(to_string(R.spec())), ring_(R), lattice_(std::move(L)), nil_(nilradical(R)) {
        const auto& lat = *lattice_;
        nil_index_ = lat.index_of(nil_);
        for (const auto& I : lat) {
            n_obs_.push_back(obstruction_set(I, nil_));
            ElementSet p(R.n());
            for (Index a = 0; a < R.n(); ++a) {
                if (I.contains(a)) continue;
                for (Index b = 0; b < R.n(); ++b)
                    if (I.contains(R.mul(a, b))) p.set(b);
            }
            p_obs_.push_back(std::move(p));
            iclass_.push_back(classify_ideal(I, lat));
            rad_.push_back(lat.index_of(dni::radical(I)));
            std::vector<std::size_t> cx;
            for (Index x = 0; x < R.n(); ++x) cx.push_back(lat.index_of(dni::colon(I, R.element(x))));
            colon_.push_back(std::move(cx));
        }
        const auto m = lat.size();
        sum_.resize(m * m), prod_.resize(m * m), meet_.resize(m * m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i; j < m; ++j) {
                sum_[i * m + j] = sum_[j * m + i] = lat.index_of(ideal_sum(lat[i], lat[j]));
                prod_[i * m + j] = prod_[j * m + i] = lat.index_of(ideal_product(lat[i], lat[j]));
                meet_[i * m + j] = meet_[j * m + i] = lat.index_of(ideal_intersect(lat[i], lat[j]));
            }
        class_ = classify_ring(R, lat);
    }

    explicit RingData(const Ring& R) : RingData(R, IdealLattice::build(R)) {}

    const RingSpec& spec() const { return spec_; }
    const std::string& name() const { return name_; }
    const Ring& ring() const { return ring_; }
    const IdealLattice& lattice() const { return *lattice_; }
    const std::shared_ptr<const IdealLattice>& lattice_ptr() const { return lattice_; }
    std::size_t size() const { return lattice_->size(); }
    const Ideal& operator[](std::size_t i) const { return (*lattice_)[i]; }
    std::size_t index_of(const Ideal& I) const { return lattice_->index_of(I); }

    const Ideal& nil() const { return nil_; }
    std::size_t nil_index() const { return nil_index_; }
    const RingClass& ring_class() const { return class_; }
    const IdealClass& ideal_class(std::size_t i) const { return iclass_[i]; }

    bool proper(std::size_t i) const { return i != lattice_->whole_index(); }
    bool subset(std::size_t i, std::size_t j) const { return (*lattice_)[i].subset_of((*lattice_)[j]); }

    // Lattice indices of ideal operations.
    std::size_t sum(std::size_t i, std::size_t j) const { return sum_[i * size() + j]; }
    std::size_t product(std::size_t i, std::size_t j) const { return prod_[i * size() + j]; }
    std::size_t meet(std::size_t i, std::size_t j) const { return meet_[i * size() + j]; }
    std::size_t rad(std::size_t i) const { return rad_[i]; }
    std::size_t colon(std::size_t i, Index x) const { return colon_[i][x]; }

    bool n_ideal(std::size_t i) const { return proper(i) && n_obs_[i].is_subset_of((*lattice_)[i].elements()); }
    bool delta_n(const Expansion& d, std::size_t i) const {
        return proper(i) && n_obs_[i].is_subset_of((*lattice_)[d.apply_index(i)].elements());
    }
    bool delta_primary(const Expansion& d, std::size_t i) const {
        return proper(i) && p_obs_[i].is_subset_of((*lattice_)[d.apply_index(i)].elements());
    }
    bool value_proper(const Expansion& d, std::size_t i) const { return proper(d.apply_index(i)); }

    std::vector<ExpansionData> expansions;

private:
    RingSpec spec_;
    std::string name_;
    Ring ring_;
    std::shared_ptr<const IdealLattice> lattice_;
    Ideal nil_;
    std::size_t nil_index_ = 0;
    RingClass class_;
    std::vector<IdealClass> iclass_;
    std::vector<ElementSet> n_obs_, p_obs_;
    std::vector<std::size_t> sum_, prod_, meet_, rad_;
    std::vector<std::vector<std::size_t>> colon_;
};

template <class F>
void each_proper_index(const RingData& r, F&& f) {
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r.proper(i)) f(i);
}

/// Builds the ring, its lattice and every requested expansion with its profile.
inline std::shared_ptr<RingData> build_ring_data(const CorpusEntry& e) {
    auto R = construct_ring(e.ring);
    if (!R.is_finite()) throw AlgebraError(Errc::infinite_backend, "corpus rings must be finite: " + to_string(e.ring));
    auto data = std::make_shared<RingData>(R);
    auto recipes = e.expansions.empty() ? catalog_recipes(data->lattice()) : e.expansions;
    for (const auto& r : recipes) {
        auto d = make_expansion(R, r, data->lattice_ptr());
        auto p = profile_expansion(d);
        data->expansions.push_back({std::move(d), std::move(p)});
    }
    return data;
}

/// R/J with its own ring data and the derived expansions delta_q, built on first use.
struct QuotientData {
    QuotientRing q;
    std::shared_ptr<RingData> data;
    std::map<std::size_t, Expansion> derived;  // keyed by expansion position in the parent ring
};

struct Context {
    std::vector<std::shared_ptr<RingData>> rings;

    QuotientData& quotient(const RingData& r, std::size_t j) const {
        auto& slot = quotients_[{&r, j}];
        if (!slot) {
            auto q = quotient_ring(r.ring(), r[j]);
            auto data = std::make_shared<RingData>(q.ring);
            slot = std::make_shared<QuotientData>(QuotientData{std::move(q), std::move(data), {}});
        }
        return *slot;
    }

    const Expansion& derived(QuotientData& qd, const RingData& r, std::size_t e) const {
        auto it = qd.derived.find(e);
        if (it == qd.derived.end())
            it = qd.derived.emplace(e, derive_quotient_expansion(r.expansions[e].d, qd.q, qd.data->lattice_ptr())).first;
        return it->second;
    }

private:
    mutable std::map<std::pair<const RingData*, std::size_t>, std::shared_ptr<QuotientData>> quotients_;
};

inline Context build_context(const Corpus& c) {
    Context ctx;
    for (const auto& e : c.entries) ctx.rings.push_back(build_ring_data(e));
    return ctx;
}

// Witness helpers.

inline std::string element_text(const Ring& R, const char* name, Index x) { return std::string(name) + "=" + R.format(x); }

inline Witness make_witness(const RingData& r, const Expansion* d, std::vector<Ideal> ideals,
                            std::vector<std::string> elements = {}, std::string note = {}) {
    Witness w{r.name(), d ? d->to_string() : "", {}, std::move(elements), std::move(note)};
    for (const auto& I : ideals) w.ideals.push_back(I.to_string());
    return w;
}

/// First (a, b) with ab in I, a not nilpotent, b outside `target`.
inline std::vector<std::string> delta_n_failure(const RingData& r, const Ideal& I, const Ideal& target) {
    const Ring& R = r.ring();
    for (Index a = 0; a < R.n(); ++a) {
        if (r.nil().contains(a)) continue;
        for (Index b = 0; b < R.n(); ++b)
            if (I.contains(R.mul(a, b)) && !target.contains(b)) return {element_text(R, "a", a), element_text(R, "b", b)};
    }
    return {};
}

}  // namespace dni
