#pragma once

// Re-validation of classifier evidence from first principles. Nothing here
// calls the constructions that produced the evidence: Möbius maps are
// evaluated by direct fraction arithmetic and every inequality is restated.

#include <string>

#include "sfill/seifert.hpp"

namespace sfill {

struct EvidenceCheck {
    bool ok = true;
    std::string failure;  // first failed check, empty when ok
};

EvidenceCheck recheck_verdict(const Verdict& verdict);

}  // namespace sfill
