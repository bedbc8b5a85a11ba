#pragma once

// Möbius maps A(r) = (c + d r)/(a + b r) with ad - bc = ±1 and the quantities
// Gompf's fillability criterion attaches to them, together with the two
// constructions that produce explicit maps: the realizable case and the
// Farey-arc case (r1 + r2 > 1).
//
// Throughout, r'_i = -1/r_i and s is defined by 1/s = -1 - 1/r'_1, i.e.
// s = 1/(r1 - 1). A map is admissible for (s, r'_2) when
//
//   (C1) ad - bc = ±1,   (C2) A(s) ∈ (-1, 0],   (C3) A(r'_2) ∈ [-∞, -1),
//
// and then n_A = -m(⌊t⌋ + 1) - M with M = max(|a|,|c|), m = min(|a|,|c|) and
// t chosen by where A(0) falls. Y(-1; r1..rk) is Stein fillable as soon as
// some admissible A has n_A > r'_j for every j >= 3.

#include <optional>
#include <span>
#include <string>

#include "sfill/errors.hpp"
#include "sfill/farey.hpp"
#include "sfill/rational.hpp"

namespace sfill {

class MobiusMap {
public:
    // DomainError unless ad - bc = ±1.
    MobiusMap(BigInt a, BigInt b, BigInt c, BigInt d);

    static MobiusMap identity() { return MobiusMap(1, 0, 0, 1); }

    const BigInt& a() const noexcept { return a_; }
    const BigInt& b() const noexcept { return b_; }
    const BigInt& c() const noexcept { return c_; }
    const BigInt& d() const noexcept { return d_; }
    BigInt det() const { return a_ * d_ - b_ * c_; }

    // Projective evaluation: A(∞) = d/b, A(-a/b) = ∞.
    ExtendedRational operator()(const ExtendedRational& x) const;

    // Same map up to a common sign of all four coefficients.
    bool same_map(const MobiusMap& other) const;

    friend bool operator==(const MobiusMap&, const MobiusMap&) = default;

    // "(c+d*r)/(a+b*r)"
    std::string to_string() const;

private:
    BigInt a_, b_, c_, d_;
};

ExtendedRational moebius_apply(const MobiusMap& map, const ExtendedRational& x);

enum class TripleImages {
    ZeroInfMinusOne,  // (x1, x2, x3) -> (0, ∞, -1)
    MinusOneZeroInf,  // (x1, x2, x3) -> (-1, 0, ∞)
};

// The unique map with the prescribed images; the three points must be the
// vertices of a Farey triangle (PreconditionError otherwise). The result is
// normalized to d > 0 (or c > 0 when d = 0).
MobiusMap moebius_from_triple(const FareyPoint& x1, const FareyPoint& x2, const FareyPoint& x3,
                              TripleImages images);

// s = 1/(r1 - 1) for r1 ∈ (0,1).
Rational gompf_s(const Rational& r1);

struct MapConditions {
    bool unimodular = false;   // (C1)
    bool s_in_range = false;   // (C2)
    bool r2_in_range = false;  // (C3)

    bool all() const { return unimodular && s_in_range && r2_in_range; }
};

MapConditions check_map_conditions(const MobiusMap& map, const Rational& s, const Rational& r2p);

// t by the position of A(0): 0 on [0,+∞], 1/A(s) on [-1,0), A(r'_2) on
// (-∞,-1). Infinity when A(s) = 0 or A(r'_2) = ∞. PreconditionError if the
// map is not admissible.
ExtendedRational gompf_t(const MobiusMap& map, const Rational& s, const Rational& r2p);

struct GompfReport {
    MobiusMap map = MobiusMap::identity();
    Rational r1p;
    Rational r2p;
    Rational s;
    ExtendedRational t;
    // The integer standing in for ⌊t⌋ + 1: ⌊t⌋ + 1 itself when t is finite,
    // otherwise ⌊1/A(0)⌋ or ⌊A(0)⌋ (see t_at_boundary).
    BigInt floor_term;
    // t = ∞, so floor_term was taken from A(0) instead of t.
    bool t_at_boundary = false;
    BigInt big_m;    // max(|a|,|c|)
    BigInt small_m;  // min(|a|,|c|)
    // Lower bound for the supremum over admissible maps; never the supremum.
    BigInt n_a;
    bool condition_holds = false;
};

// Builds the report for an admissible map; condition_holds is evaluated
// against tail = (r3, ..., rk).
GompfReport gompf_report(const MobiusMap& map, const Rational& r1p, const Rational& r2p,
                         std::span<const Rational> tail);

BigInt gompf_nA(const MobiusMap& map, const Rational& r1p, const Rational& r2p);

// n > -1/r_j for every r_j in tail.
bool check_condition(const BigInt& n, std::span<const Rational> tail);

struct RealizabilityWitness {
    BigInt n;
    BigInt h;

    friend bool operator==(const RealizabilityWitness&, const RealizabilityWitness&) = default;
};

// h/n > r1, (n-h)/n > r2, 1/n > r3..rk, gcd(n,h) = 1, n > h > 0.
bool is_realizability_witness(std::span<const Rational> rs, const RealizabilityWitness& w);

struct RealizableConstruction {
    RealizabilityWitness seed;  // (n0, h0) in the form r'_2 < -n0/h0 < s
    BigInt n;                   // minimal n <= n0 ...
    BigInt h;                   // ... with r'_2 < -n/h < s
    BigInt bezout_a;            // a h - b n = 1, 0 <= a < n
    BigInt bezout_b;
    GompfReport report;
};

// Map for a realizable tuple (rs sorted non-increasing, k >= 3) from a
// realizability witness. n_a = -n and the condition holds.
RealizableConstruction witness_realizable(std::span<const Rational> rs, const RealizabilityWitness& witness);

// Raised when r1 + r2 = 1, i.e. s = r'_2: the criterion holds with no map.
class AutomaticCondition : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

struct FareyConstruction {
    FareyConfiguration config;
    GompfReport report;
};

// Map for a tuple with r1 + r2 > 1 built from a Farey configuration; n_a >= -1.
FareyConstruction witness_farey(std::span<const Rational> rs);

}  // namespace sfill
