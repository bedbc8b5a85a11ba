#include "sfill/crosscheck.hpp"

#include "sfill/plumbing.hpp"

namespace sfill {

bool CrosscheckResult::agrees() const {
    if (!evidence.ok) return false;
    if (verdict.reason != VerdictReason::SpecialType) return true;
    return obstruction && obstruction->outcome != SearchOutcome::Found;
}

CrosscheckResult crosscheck(const SeifertInvariants& y, const SearchLimits& limits) {
    CrosscheckResult out;
    out.verdict = classify(y);
    out.evidence = recheck_verdict(out.verdict);
    if (out.verdict.reason == VerdictReason::SpecialType) {
        out.obstruction = find_embedding(intersection_form(build_plumbing(reverse_orientation(y))), limits);
    }
    return out;
}

}  // namespace sfill
