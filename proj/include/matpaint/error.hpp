#pragma once

#include <stdexcept>
#include <string>

namespace matpaint {

// Machine-readable failure kinds. CLI maps these onto exit codes:
// budget overruns -> 2, broken internal guarantees -> 3, everything else -> 1.
enum class Errc {
    AxiomC1,
    AxiomC2,
    RankConflict,
    InvalidSpec,
    NotABase,
    ElementInBase,
    ElementNotInBase,
    NoCircuit,
    PreconditionViolated,
    TooLarge,
    NotAUnit,
    MixedDomains,
    NotACircuit,
    InvalidDependence,
    DomainMismatch,
    UnverifiedPainting,
    PartialFieldTag,
    TraceInvariantViolated,
    NotConnected,
    WitnessVerificationFailed,
    VerificationFailed,
    BadParameters,
    ParseError,
    Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

    // True for failures that mean a theorem-guaranteed step went wrong.
    bool internal_consistency() const {
        return code_ == Errc::TraceInvariantViolated || code_ == Errc::WitnessVerificationFailed ||
               code_ == Errc::VerificationFailed || code_ == Errc::Internal;
    }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace matpaint
