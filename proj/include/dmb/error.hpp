#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dmb {

enum class ErrorKind {
    Parse,
    DuplicateId,
    DuplicateRecord,
    DanglingReference,
    GradingViolation,
    BoundarySquareNonzero,
    RegularityInconsistent,
    RegfaceViolation,
    EmptySimplex,
    UnknownCell,
    NotAFace,
    NotComparable,
    DomainMismatch,
    PartialFunction,
    CellNotInCollection,
    NotMorse,
    NotMorseBott,
    TrichotomyViolation,
    SubcomplexViolation,
    NotASubcomplex,
    NonUniqueCofacet,
    ClosedOrbitPresent,
    InvalidField,
    NotACycle,
    GenerationExhausted,
    LemmaViolation,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::DuplicateRecord: return "DuplicateRecord";
    case ErrorKind::DanglingReference: return "DanglingReference";
    case ErrorKind::GradingViolation: return "GradingViolation";
    case ErrorKind::BoundarySquareNonzero: return "BoundarySquareNonzero";
    case ErrorKind::RegularityInconsistent: return "RegularityInconsistent";
    case ErrorKind::RegfaceViolation: return "RegfaceViolation";
    case ErrorKind::EmptySimplex: return "EmptySimplex";
    case ErrorKind::UnknownCell: return "UnknownCell";
    case ErrorKind::NotAFace: return "NotAFace";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::PartialFunction: return "PartialFunction";
    case ErrorKind::CellNotInCollection: return "CellNotInCollection";
    case ErrorKind::NotMorse: return "NotMorse";
    case ErrorKind::NotMorseBott: return "NotMorseBott";
    case ErrorKind::TrichotomyViolation: return "TrichotomyViolation";
    case ErrorKind::SubcomplexViolation: return "SubcomplexViolation";
    case ErrorKind::NotASubcomplex: return "NotASubcomplex";
    case ErrorKind::NonUniqueCofacet: return "NonUniqueCofacet";
    case ErrorKind::ClosedOrbitPresent: return "ClosedOrbitPresent";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::NotACycle: return "NotACycle";
    case ErrorKind::GenerationExhausted: return "GenerationExhausted";
    case ErrorKind::LemmaViolation: return "LemmaViolation";
    }
    return "Unknown";
}

/// Every failure raised by the library. The kind is stable and is what
/// callers (and the CLI exit-code mapping) switch on; the message carries
/// the witnesses.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace dmb
