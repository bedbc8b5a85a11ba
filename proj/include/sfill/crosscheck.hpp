#pragma once

#include <optional>

#include "sfill/embedding.hpp"
#include "sfill/seifert.hpp"
#include "sfill/verify.hpp"

namespace sfill {

// Classifier verdict checked against the independent machinery: fillable
// verdicts must re-validate, and special ones must come with an exhausted
// embedding search on the plumbing of -Y.
struct CrosscheckResult {
    Verdict verdict;
    EvidenceCheck evidence;
    std::optional<SearchCertificate> obstruction;  // special verdicts only

    // False on a real disagreement. A timed-out obstruction search leaves
    // the question open; see timed_out().
    bool agrees() const;
    bool timed_out() const { return obstruction && obstruction->outcome == SearchOutcome::Timeout; }
};

CrosscheckResult crosscheck(const SeifertInvariants& y, const SearchLimits& limits = {});

}  // namespace sfill
