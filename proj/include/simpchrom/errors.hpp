#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace simpchrom {

// All domain failures derive from Error and carry a stable machine-readable
// code (the CLI prints it and tests match on it). Messages are for humans.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define SIMPCHROM_ERROR(NAME)                                   \
    class NAME : public Error {                                 \
    public:                                                     \
        explicit NAME(const std::string& msg) : Error(#NAME, msg) {} \
    }

SIMPCHROM_ERROR(InvalidArgument);
SIMPCHROM_ERROR(InvalidBound);
SIMPCHROM_ERROR(PoleAtZero);
SIMPCHROM_ERROR(ZeroDenominator);
SIMPCHROM_ERROR(InvalidNonfaces);
SIMPCHROM_ERROR(InvalidVertex);
SIMPCHROM_ERROR(InvalidWitness);
SIMPCHROM_ERROR(NotPropertyI);
SIMPCHROM_ERROR(UnsupportedWitness);
SIMPCHROM_ERROR(EnumerationTooLarge);
SIMPCHROM_ERROR(BudgetExceeded);
SIMPCHROM_ERROR(EmptyInput);
SIMPCHROM_ERROR(NotFullDimensional);
SIMPCHROM_ERROR(NotStandardType);
SIMPCHROM_ERROR(MixedDimensions);
SIMPCHROM_ERROR(NotBoundaryTriangulation);
SIMPCHROM_ERROR(NotInCstar);
SIMPCHROM_ERROR(NotUnimodular);
SIMPCHROM_ERROR(DimensionMismatch);
SIMPCHROM_ERROR(ExactDivisionFailed);
SIMPCHROM_ERROR(ParseError);
SIMPCHROM_ERROR(InternalCheckFailed);

#undef SIMPCHROM_ERROR

}  // namespace simpchrom
