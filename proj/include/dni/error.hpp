#pragma once

#include <stdexcept>
#include <string>

namespace dni {

enum class Errc {
    invalid_spec,
    cross_ring,
    infinite_backend,
    improper_ideal,
    axiom_violation,
    not_surjective,
    not_multiplicative,
    too_large,
    unknown_claim,
    parse_error,
};

inline const char* errc_name(Errc e) {
    switch (e) {
        case Errc::invalid_spec: return "invalid spec";
        case Errc::cross_ring: return "cross-ring operands";
        case Errc::infinite_backend: return "infinite backend";
        case Errc::improper_ideal: return "improper ideal";
        case Errc::axiom_violation: return "axiom violation";
        case Errc::not_surjective: return "homomorphism not surjective";
        case Errc::not_multiplicative: return "set not multiplicatively closed";
        case Errc::too_large: return "ring too large";
        case Errc::unknown_claim: return "unknown claim";
        case Errc::parse_error: return "parse error";
    }
    return "error";
}

/// All library failures are reported through this exception.
class AlgebraError : public std::runtime_error {
public:
    AlgebraError(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace dni
