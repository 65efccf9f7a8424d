#pragma once

#include <string>
#include <vector>

#include "simpchrom/poly.hpp"

namespace simpchrom {

// Outcome of one exact identity check. lhs/rhs are the two sides as rational
// functions (for series-style comparisons they hold the generating data and
// the notes say how the comparison was made). Failures are data, not errors.
struct VerificationReport {
    std::string identity;
    bool hypotheses_ok = true;
    RationalFunction lhs;
    RationalFunction rhs;
    bool pass = false;
    std::vector<std::string> notes;
};

}  // namespace simpchrom
