#pragma once

#include <stdexcept>
#include <string>

namespace starideal {

enum class Errc {
    NonSquarefree,
    BadConductor,
    BadClassVector,
    ZeroIdeal,
    MixedDomains,
    NotProper,
    NotIntegral,
    NotStarClosed,
    BoundExceeded,
    NotHomog,
    InvalidCertificate,
    UnitInput,
    ZeroInput,
    NotInvertible,
    EmptySample,
    ParseError,
    Internal,
};

const char* errc_name(Errc c);

class DomainError : public std::runtime_error {
public:
    DomainError(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace starideal
