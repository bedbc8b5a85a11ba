#include "sfill/farey.hpp"

#include "sfill/errors.hpp"

namespace sfill {

namespace {

std::strong_ordering compare(const BigInt& lhs, const BigInt& rhs) {
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

void require_search_inputs(const Rational& s, const Rational& r2p) {
    if (!(s < r2p && r2p < Rational(-1))) {
        throw PreconditionError("Farey search needs s < r2p < -1, got s = " + s.to_string() +
                                ", r2p = " + r2p.to_string());
    }
}

}  // namespace

FareyPoint::FareyPoint(const ExtendedRational& x) : x_(x) {
    if (!x_.is_infinite() && x_.value() > Rational(-1)) {
        throw DomainError("Farey point " + x_.to_string() + " lies outside [-inf, -1]");
    }
}

std::strong_ordering operator<=>(const FareyPoint& x, const FareyPoint& y) {
    // Denominators are nonnegative and -∞ = -1/0 compares below all finite points.
    return compare(x.p() * y.q(), y.p() * x.q());
}

std::strong_ordering operator<=>(const FareyPoint& x, const Rational& y) {
    return compare(x.p() * y.den(), y.num() * x.q());
}

bool is_farey_arc(const FareyPoint& x, const FareyPoint& y) {
    BigInt det = x.p() * y.q() - y.p() * x.q();
    return abs(det) == 1;
}

FareyArc::FareyArc(FareyPoint lo_, FareyPoint hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (!(lo < hi)) {
        throw PreconditionError("Farey arc endpoints out of order: " + lo.to_string() + ", " + hi.to_string());
    }
    if (!is_farey_arc(lo, hi)) {
        throw PreconditionError("no Farey arc joins " + lo.to_string() + " and " + hi.to_string());
    }
}

FareyPoint middle_point(const FareyArc& arc) {
    return FareyPoint(ExtendedRational::from_homogeneous(arc.lo.p() + arc.hi.p(), arc.lo.q() + arc.hi.q()));
}

FareyTriple find_config1(const Rational& s, const Rational& r2p) {
    require_search_inputs(s, r2p);
    FareyPoint alpha = FareyPoint::minus_infinity();
    FareyPoint gamma(-1);
    while (true) {
        FareyPoint beta = middle_point(FareyArc(alpha, gamma));
        bool s_ok = !((beta <=> s) < 0);     // s <= beta
        bool r2_ok = !((beta <=> r2p) > 0);  // beta <= r2p
        if (s_ok && r2_ok) {
            return {alpha, beta, gamma};
        }
        if (!s_ok) {
            alpha = beta;
        } else {
            gamma = beta;
        }
    }
}

FareyPoint refine_arc(const Rational& s, const FareyArc& arc, RefineSide side) {
    if (!((arc.lo <=> s) < 0 && (arc.hi <=> s) > 0)) {
        throw PreconditionError(s.to_string() + " is not strictly inside the arc (" + arc.lo.to_string() +
                                ", " + arc.hi.to_string() + ")");
    }
    if (side == RefineSide::TowardHi) {
        FareyPoint beta = arc.hi;
        while (true) {
            FareyPoint mid = middle_point(FareyArc(arc.lo, beta));
            if ((mid <=> s) <= 0) return beta;
            beta = mid;
        }
    }
    FareyPoint alpha = arc.lo;
    while (true) {
        FareyPoint mid = middle_point(FareyArc(alpha, arc.hi));
        if ((mid <=> s) >= 0) return alpha;
        alpha = mid;
    }
}

std::string to_string(ExtraArc tag) {
    return tag == ExtraArc::AlphaGamma ? "alpha_gamma" : "beta_delta";
}

bool FareyConfiguration::is_valid() const {
    if (!(alpha < beta && beta < gamma && gamma < delta)) return false;
    if (!is_farey_arc(alpha, beta) || !is_farey_arc(beta, gamma) || !is_farey_arc(gamma, delta)) return false;
    return extra_arc == ExtraArc::AlphaGamma ? is_farey_arc(alpha, gamma) : is_farey_arc(beta, delta);
}

FareyConfiguration find_config3(const Rational& s, const Rational& r2p) {
    FareyTriple t = find_config1(s, r2p);
    if ((t.beta <=> s) > 0) {
        // s < beta: shrink alpha toward s, then split the arc alpha'-beta.
        FareyPoint alpha = refine_arc(s, FareyArc(t.alpha, t.beta), RefineSide::TowardLo);
        FareyPoint mid = middle_point(FareyArc(alpha, t.beta));
        return {alpha, mid, t.beta, t.gamma, ExtraArc::AlphaGamma};
    }
    // s = beta < r2p < gamma: bring an arc beta-beta' down onto r2p and split it.
    FareyPoint beta_hi = refine_arc(r2p, FareyArc(t.beta, t.gamma), RefineSide::TowardHi);
    FareyPoint mid = middle_point(FareyArc(t.beta, beta_hi));
    return {t.alpha, t.beta, mid, beta_hi, ExtraArc::BetaDelta};
}

}  // namespace sfill
