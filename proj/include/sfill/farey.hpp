#pragma once

// The Farey tessellation restricted to [-∞, -1]. Points are stored as p/q
// with q >= 0 and -∞ = -1/0, so cross-multiplication orders them and the
// arc test |p q' - p' q| = 1 covers infinite endpoints uniformly.

#include <string>

#include "sfill/rational.hpp"

namespace sfill {

class FareyPoint {
public:
    // -∞ or a value <= -1; DomainError otherwise.
    FareyPoint(const ExtendedRational& x);  // NOLINT(google-explicit-constructor)
    FareyPoint(const Rational& x) : FareyPoint(ExtendedRational(x)) {}  // NOLINT
    FareyPoint(long long x) : FareyPoint(Rational(x)) {}                // NOLINT

    static FareyPoint minus_infinity() { return FareyPoint(ExtendedRational::infinity()); }

    const BigInt& p() const noexcept { return x_.p(); }
    const BigInt& q() const noexcept { return x_.q(); }
    const ExtendedRational& value() const noexcept { return x_; }
    bool is_infinite() const { return x_.is_infinite(); }

    friend bool operator==(const FareyPoint&, const FareyPoint&) = default;
    friend std::strong_ordering operator<=>(const FareyPoint& x, const FareyPoint& y);

    std::string to_string() const { return x_.to_farey_string(); }

private:
    ExtendedRational x_;
};

// Mixed comparisons against finite rationals; -∞ is below everything.
std::strong_ordering operator<=>(const FareyPoint& x, const Rational& y);

bool is_farey_arc(const FareyPoint& x, const FareyPoint& y);

struct FareyArc {
    FareyPoint lo;
    FareyPoint hi;

    // Checks lo < hi and the determinant condition.
    FareyArc(FareyPoint lo_, FareyPoint hi_);
};

// The mediant, the unique point joined to both endpoints.
FareyPoint middle_point(const FareyArc& arc);

struct FareyTriple {
    FareyPoint alpha;
    FareyPoint beta;
    FareyPoint gamma;
};

// Arc (alpha, gamma) with beta = m(alpha, gamma) and
//   -∞ <= alpha < s <= beta <= r2p < gamma <= -1.
// Requires s < r2p < -1.
FareyTriple find_config1(const Rational& s, const Rational& r2p);

enum class RefineSide { TowardLo, TowardHi };

// s strictly inside the arc.
//   TowardHi: beta' with m(lo, beta') <= s < beta' <= hi.
//   TowardLo: alpha' with lo <= alpha' < s <= m(alpha', hi).
FareyPoint refine_arc(const Rational& s, const FareyArc& arc, RefineSide side);

enum class ExtraArc { AlphaGamma, BetaDelta };

std::string to_string(ExtraArc tag);  // "alpha_gamma" / "beta_delta"

struct FareyConfiguration {
    FareyPoint alpha;
    FareyPoint beta;
    FareyPoint gamma;
    FareyPoint delta;
    ExtraArc extra_arc;

    // Arcs alpha-beta, beta-gamma, gamma-delta, the tagged extra arc, and
    // alpha < beta < gamma < delta.
    bool is_valid() const;

    friend bool operator==(const FareyConfiguration&, const FareyConfiguration&) = default;
};

// Arcs alpha-beta, beta-gamma, gamma-delta plus alpha-gamma or beta-delta with
//   -∞ <= alpha < s <= beta < gamma <= r2p < delta <= -1.
// Requires s < r2p < -1.
FareyConfiguration find_config3(const Rational& s, const Rational& r2p);

}  // namespace sfill
