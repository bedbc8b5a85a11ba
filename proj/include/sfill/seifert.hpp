#pragma once

// Seifert fibered 3-manifolds Y(e0; r1, ..., rk) in normal form and the
// fillability classifier.
//
// A tuple (r1 >= ... >= rk), k >= 3, is realizable when coprime n > h > 0
// satisfy h/n > r1, (n-h)/n > r2 and 1/n > r3, ..., rk. Y is of special type
// when e0 = -1, k >= 3, the tuple is not realizable and
// r1 + ... + rk > 1 > r1 + r2. Special type is exactly the obstruction to
// Stein (equivalently, symplectic) fillability.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sfill/embedding.hpp"
#include "sfill/gompf.hpp"
#include "sfill/rational.hpp"

namespace sfill {

class SeifertInvariants {
public:
    SeifertInvariants() = default;

    // Sorts rs non-increasing. PreconditionError naming the (input) index of
    // the first entry outside (0,1).
    static SeifertInvariants validate(BigInt e0, std::vector<Rational> rs);

    const BigInt& e0() const noexcept { return e0_; }
    const std::vector<Rational>& rs() const noexcept { return rs_; }
    std::size_t k() const noexcept { return rs_.size(); }

    friend bool operator==(const SeifertInvariants&, const SeifertInvariants&) = default;

    // "-1;1/2,1/3,1/5"
    std::string to_string() const;

    // Grammar `<e0>;<r1>,<r2>,...`, blanks ignored. ParseError with the byte
    // offset of the problem, PreconditionError for r outside (0,1).
    static SeifertInvariants parse(std::string_view text);

private:
    BigInt e0_{0};
    std::vector<Rational> rs_;
};

// e(Y) = e0 + sum r_i.
Rational euler_number(const SeifertInvariants& y);

// -Y = Y(-e0 - k; 1 - rk, ..., 1 - r1).
SeifertInvariants reverse_orientation(const SeifertInvariants& y);

struct RealizabilitySearch {
    std::optional<RealizabilityWitness> witness;
    // Every n in [2, max_n] was tried (max_n = ceil(1/r3) - 1), so an empty
    // witness is a complete certificate.
    BigInt max_n;
};

// Exhaustive search; lexicographically smallest (n, h). PreconditionError if k < 3.
RealizabilitySearch search_realizability(std::span<const Rational> rs);

std::optional<RealizabilityWitness> find_realizability_witness(std::span<const Rational> rs);

struct SpecialTypeReport {
    bool is_special = false;
    bool e0_check = false;    // e0 = -1 and k >= 3
    bool sum_check = false;   // r1 + ... + rk > 1
    bool pair_check = false;  // r1 + r2 < 1
    // Only when e0_check holds.
    std::optional<RealizabilitySearch> realizability;
};

SpecialTypeReport is_special_type(const SeifertInvariants& y);

enum class VerdictReason { GompfUnconditional, Realizable, PairSumAutomatic, FareyWitness, SpecialType };

// "gompf_unconditional", "realizable", "pair_sum_automatic", "farey_witness", "special_type"
std::string to_string(VerdictReason reason);

struct UnconditionalEvidence {
    BigInt e0;
    std::size_t k = 0;
};

struct RealizableEvidence {
    RealizabilityWitness witness;
    RealizableConstruction construction;
};

struct PairSumEvidence {
    Rational s;
    Rational r2p;
};

struct SpecialEvidence {
    SpecialTypeReport report;
    SeifertInvariants reversed;
    std::optional<SearchCertificate> embedding;  // plumbing of -Y
};

using Evidence =
    std::variant<UnconditionalEvidence, RealizableEvidence, PairSumEvidence, FareyConstruction, SpecialEvidence>;

struct Verdict {
    SeifertInvariants manifold;
    bool fillable = true;
    VerdictReason reason = VerdictReason::GompfUnconditional;
    Evidence evidence;
};

struct ClassifyOptions {
    // Attach the embedding search on the plumbing of -Y to special verdicts.
    bool certify_obstruction = false;
    SearchLimits limits;
};

Verdict classify(const SeifertInvariants& y, const ClassifyOptions& options = {});

}  // namespace sfill
