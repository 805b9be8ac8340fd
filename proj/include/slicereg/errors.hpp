#pragma once

#include <stdexcept>
#include <string>

namespace slicereg {

// A documented precondition of a math operation was violated.
// The CLI maps these to exit code 3.
enum class Fault {
    ZeroDivision,
    ZeroArgument,
    NonInvertibleConstantTerm,
    NonzeroConstantTerm,
    NotNormalizable,
    NotNormalized,
    NonOrthogonalUnits,
    NonUnitRotor,
    ParameterOutOfRange,
};

inline const char* fault_name(Fault f)
{
    switch (f) {
        case Fault::ZeroDivision: return "ZeroDivision";
        case Fault::ZeroArgument: return "ZeroArgument";
        case Fault::NonInvertibleConstantTerm: return "NonInvertibleConstantTerm";
        case Fault::NonzeroConstantTerm: return "NonzeroConstantTerm";
        case Fault::NotNormalizable: return "NotNormalizable";
        case Fault::NotNormalized: return "NotNormalized";
        case Fault::NonOrthogonalUnits: return "NonOrthogonalUnits";
        case Fault::NonUnitRotor: return "NonUnitRotor";
        case Fault::ParameterOutOfRange: return "ParameterOutOfRange";
    }
    return "UnknownFault";
}

class DomainFault : public std::domain_error {
public:
    DomainFault(Fault fault, const std::string& detail)
        : std::domain_error(std::string(fault_name(fault)) + ": " + detail), fault_(fault)
    {
    }

    Fault fault() const noexcept { return fault_; }

private:
    Fault fault_;
};

// A sampled theorem hypothesis failed (Schwarz bound, boundary injectivity,
// a prerequisite grid check). Kept apart from DomainFault so callers can
// distinguish "you called this wrong" from "the data does not satisfy the
// theorem". The CLI maps these to exit code 4.
enum class Hypothesis {
    SchwarzViolation,
    HypothesisFailed,
    PrerequisiteNotMet,
};

inline const char* hypothesis_name(Hypothesis h)
{
    switch (h) {
        case Hypothesis::SchwarzViolation: return "SchwarzViolation";
        case Hypothesis::HypothesisFailed: return "HypothesisFailed";
        case Hypothesis::PrerequisiteNotMet: return "PrerequisiteNotMet";
    }
    return "UnknownHypothesis";
}

class HypothesisFault : public std::runtime_error {
public:
    HypothesisFault(Hypothesis which, const std::string& detail)
        : std::runtime_error(std::string(hypothesis_name(which)) + ": " + detail), which_(which)
    {
    }

    Hypothesis which() const noexcept { return which_; }

private:
    Hypothesis which_;
};

} // namespace slicereg
