#pragma once

#include <stdexcept>
#include <string>

namespace flatlab {

enum class Errc {
    FieldMismatch,
    VariableMismatch,
    RankMismatch,
    ZeroPolynomial,
    DivisionByZero,
    InfiniteDimensional,
    NotArtinian,
    NotLocalAtOrigin,
    UnitIdeal,
    BadChain,
    WindowTooSmall,
    ModeUnsupported,
    Disagreement,
    InhomogeneousRelation,
    InvalidArgument,
};

/// Library-wide exception carrying a machine-readable error code.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::VariableMismatch: return "VariableMismatch";
        case Errc::RankMismatch: return "RankMismatch";
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::InfiniteDimensional: return "InfiniteDimensional";
        case Errc::NotArtinian: return "NotArtinian";
        case Errc::NotLocalAtOrigin: return "NotLocalAtOrigin";
        case Errc::UnitIdeal: return "UnitIdeal";
        case Errc::BadChain: return "BadChain";
        case Errc::WindowTooSmall: return "WindowTooSmall";
        case Errc::ModeUnsupported: return "ModeUnsupported";
        case Errc::Disagreement: return "Disagreement";
        case Errc::InhomogeneousRelation: return "InhomogeneousRelation";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace flatlab
