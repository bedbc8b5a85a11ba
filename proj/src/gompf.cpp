#include "sfill/gompf.hpp"

#include <algorithm>

namespace sfill {

namespace {

void require_tuple(std::span<const Rational> rs, std::size_t min_k) {
    if (rs.size() < min_k) {
        throw PreconditionError("need at least " + std::to_string(min_k) + " Seifert invariants");
    }
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (rs[i] <= Rational(0) || rs[i] >= Rational(1)) {
            throw PreconditionError("r" + std::to_string(i + 1) + " = " + rs[i].to_string() + " is not in (0,1)");
        }
        if (i > 0 && rs[i] > rs[i - 1]) {
            throw PreconditionError("Seifert invariants must be sorted non-increasing");
        }
    }
}

// x with (h * x) mod n == 1, 0 <= x < n; gcd(h, n) must be 1.
BigInt inverse_mod(const BigInt& h, const BigInt& n) {
    BigInt old_r = h, r = n;
    BigInt old_x = 1, x = 0;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt next_r = old_r - q * r;
        old_r = r;
        r = next_r;
        BigInt next_x = old_x - q * x;
        old_x = x;
        x = next_x;
    }
    if (old_r != 1) {
        throw InternalError("inverse_mod: arguments not coprime");
    }
    BigInt inv = old_x % n;
    if (inv < 0) inv += n;
    return inv;
}

}  // namespace

MobiusMap::MobiusMap(BigInt a, BigInt b, BigInt c, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    BigInt det = a_ * d_ - b_ * c_;
    if (det != 1 && det != -1) {
        throw DomainError("Möbius map " + to_string() + " has determinant " + det.str() + ", expected ±1");
    }
}

ExtendedRational MobiusMap::operator()(const ExtendedRational& x) const {
    // x = p/q acts as the column vector (p, q).
    BigInt num = d_ * x.p() + c_ * x.q();
    BigInt den = b_ * x.p() + a_ * x.q();
    return ExtendedRational::from_homogeneous(std::move(num), std::move(den));
}

bool MobiusMap::same_map(const MobiusMap& o) const {
    return *this == o || (a_ == -o.a_ && b_ == -o.b_ && c_ == -o.c_ && d_ == -o.d_);
}

std::string MobiusMap::to_string() const {
    auto term = [](const BigInt& constant, const BigInt& linear) {
        std::string out = constant.str();
        if (linear >= 0) out += "+";
        out += linear.str() + "*r";
        return out;
    };
    return "(" + term(c_, d_) + ")/(" + term(a_, b_) + ")";
}

ExtendedRational moebius_apply(const MobiusMap& map, const ExtendedRational& x) { return map(x); }

MobiusMap moebius_from_triple(const FareyPoint& x1, const FareyPoint& x2, const FareyPoint& x3,
                              TripleImages images) {
    if (x1 == x2 || x2 == x3 || x1 == x3 || !is_farey_arc(x1, x2) || !is_farey_arc(x2, x3) ||
        !is_farey_arc(x1, x3)) {
        throw PreconditionError(x1.to_string() + ", " + x2.to_string() + ", " + x3.to_string() +
                                " do not span a Farey triangle");
    }
    const FareyPoint& zero = images == TripleImages::ZeroInfMinusOne ? x1 : x2;
    const FareyPoint& pole = images == TripleImages::ZeroInfMinusOne ? x2 : x3;
    const FareyPoint& minus_one = images == TripleImages::ZeroInfMinusOne ? x3 : x1;

    // r -> (q_z r - p_z)/(q_w r - p_w) sends zero to 0 and pole to ∞, and
    // the third vertex of the triangle to ±1.
    BigInt d = zero.q(), c = -zero.p();
    BigInt b = pole.q(), a = -pole.p();
    BigInt num = d * minus_one.p() + c * minus_one.q();
    BigInt den = b * minus_one.p() + a * minus_one.q();
    if (num == den) {
        c = -c;
        d = -d;
    }
    if (d < 0 || (d == 0 && c < 0)) {
        a = -a;
        b = -b;
        c = -c;
        d = -d;
    }
    return MobiusMap(std::move(a), std::move(b), std::move(c), std::move(d));
}

Rational gompf_s(const Rational& r1) {
    if (r1 <= Rational(0) || r1 >= Rational(1)) {
        throw PreconditionError("gompf_s needs r1 in (0,1), got " + r1.to_string());
    }
    return (r1 - Rational(1)).reciprocal();
}

MapConditions check_map_conditions(const MobiusMap& map, const Rational& s, const Rational& r2p) {
    MapConditions out;
    BigInt det = map.det();
    out.unimodular = det == 1 || det == -1;
    ExtendedRational as = map(s);
    out.s_in_range = !as.is_infinite() && as.value() > Rational(-1) && as.value() <= Rational(0);
    ExtendedRational ar = map(r2p);
    out.r2_in_range = ar.is_infinite() || ar.value() < Rational(-1);
    return out;
}

namespace {

struct TValue {
    ExtendedRational t;
    BigInt floor_term;
    bool boundary = false;
};

TValue evaluate_t(const MobiusMap& map, const Rational& s, const Rational& r2p) {
    MapConditions cond = check_map_conditions(map, s, r2p);
    if (!cond.all()) {
        throw PreconditionError("map " + map.to_string() + " is not admissible for s = " + s.to_string() +
                                ", r'2 = " + r2p.to_string());
    }
    ExtendedRational a0 = map(ExtendedRational(0));
    if (a0.is_infinite() || a0.value() >= Rational(0)) {
        return {ExtendedRational(0), BigInt(1), false};
    }
    Rational a0v = a0.value();
    if (a0v >= Rational(-1)) {
        Rational as = map(s).value();
        if (as.sign() == 0) {
            return {ExtendedRational::infinity(), floor(a0v.reciprocal()), true};
        }
        Rational t = as.reciprocal();
        return {ExtendedRational(t), floor(t) + 1, false};
    }
    ExtendedRational ar = map(r2p);
    if (ar.is_infinite()) {
        return {ar, floor(a0v), true};
    }
    return {ar, floor(ar.value()) + 1, false};
}

}  // namespace

ExtendedRational gompf_t(const MobiusMap& map, const Rational& s, const Rational& r2p) {
    return evaluate_t(map, s, r2p).t;
}

bool check_condition(const BigInt& n, std::span<const Rational> tail) {
    Rational nv(n);
    return std::all_of(tail.begin(), tail.end(), [&](const Rational& r) { return nv > -r.reciprocal(); });
}

GompfReport gompf_report(const MobiusMap& map, const Rational& r1p, const Rational& r2p,
                         std::span<const Rational> tail) {
    if (r1p >= Rational(-1)) {
        throw PreconditionError("r'1 must be < -1, got " + r1p.to_string());
    }
    GompfReport rep;
    rep.map = map;
    rep.r1p = r1p;
    rep.r2p = r2p;
    rep.s = gompf_s(-r1p.reciprocal());
    TValue tv = evaluate_t(map, rep.s, r2p);
    rep.t = tv.t;
    rep.floor_term = tv.floor_term;
    rep.t_at_boundary = tv.boundary;
    BigInt abs_a = abs(map.a());
    BigInt abs_c = abs(map.c());
    rep.big_m = std::max(abs_a, abs_c);
    rep.small_m = std::min(abs_a, abs_c);
    rep.n_a = -rep.small_m * rep.floor_term - rep.big_m;
    rep.condition_holds = check_condition(rep.n_a, tail);
    return rep;
}

BigInt gompf_nA(const MobiusMap& map, const Rational& r1p, const Rational& r2p) {
    return gompf_report(map, r1p, r2p, {}).n_a;
}

bool is_realizability_witness(std::span<const Rational> rs, const RealizabilityWitness& w) {
    if (rs.size() < 3) return false;
    if (!(w.n > w.h && w.h > 0) || gcd(w.n, w.h) != 1) return false;
    Rational hn(w.h, w.n);
    Rational rest(w.n - w.h, w.n);
    Rational inv(BigInt(1), w.n);
    if (!(hn > rs[0] && rest > rs[1])) return false;
    return std::all_of(rs.begin() + 2, rs.end(), [&](const Rational& r) { return inv > r; });
}

RealizableConstruction witness_realizable(std::span<const Rational> rs, const RealizabilityWitness& witness) {
    require_tuple(rs, 3);
    if (!is_realizability_witness(rs, witness)) {
        throw PreconditionError("(" + witness.n.str() + "," + witness.h.str() + ") is not a realizability witness");
    }
    Rational r1p = -rs[0].reciprocal();
    Rational r2p = -rs[1].reciprocal();
    Rational s = gompf_s(rs[0]);
    if (s == r2p) {
        throw AutomaticCondition("s = r'2: the criterion holds without a map");
    }

    RealizableConstruction out;
    out.seed = {witness.n, witness.n - witness.h};
    {
        Rational seed_point(-out.seed.n, out.seed.h);
        if (!(r2p < seed_point && seed_point < s)) {
            throw InternalError("seed conversion violated r'2 < -n0/h0 < s");
        }
    }

    // Smallest n (then h) with r'2 < -n/h < s, i.e. n/(-r'2) < h < n/(-s).
    bool found = false;
    for (BigInt n = 2; n <= out.seed.n && !found; ++n) {
        Rational lo = Rational(n) / (-r2p);
        Rational hi = Rational(n) / (-s);
        for (BigInt h = floor(lo) + 1; Rational(h) < hi && h < n; ++h) {
            if (h > 0 && gcd(h, n) == 1) {
                out.n = n;
                out.h = h;
                found = true;
                break;
            }
        }
    }
    if (!found) {
        throw InternalError("minimal-n search failed below the seed");
    }

    const BigInt& n = out.n;
    const BigInt& h = out.h;
    out.bezout_a = inverse_mod(h, n);
    out.bezout_b = (out.bezout_a * h - 1) / n;
    MobiusMap map = out.bezout_b == 0 ? MobiusMap(1, 0, n - 1, 1)
                                      : MobiusMap(out.bezout_a, out.bezout_b, n - out.bezout_a, h - out.bezout_b);
    out.report = gompf_report(map, r1p, r2p, rs.subspan(2));
    if (out.report.n_a != -n || !out.report.condition_holds) {
        throw InternalError("realizable construction produced n_A = " + out.report.n_a.str());
    }
    return out;
}

FareyConstruction witness_farey(std::span<const Rational> rs) {
    require_tuple(rs, 2);
    Rational pair = rs[0] + rs[1];
    if (pair < Rational(1)) {
        throw PreconditionError("Farey construction needs r1 + r2 >= 1, got " + pair.to_string());
    }
    if (pair == Rational(1)) {
        throw AutomaticCondition("r1 + r2 = 1: s = r'2 and the criterion holds without a map");
    }
    Rational r1p = -rs[0].reciprocal();
    Rational r2p = -rs[1].reciprocal();
    Rational s = gompf_s(rs[0]);

    FareyConstruction out{find_config3(s, r2p), {}};
    const FareyConfiguration& cf = out.config;
    MobiusMap map = cf.extra_arc == ExtraArc::BetaDelta
                        ? moebius_from_triple(cf.beta, cf.gamma, cf.delta, TripleImages::ZeroInfMinusOne)
                        : moebius_from_triple(cf.alpha, cf.beta, cf.gamma, TripleImages::MinusOneZeroInf);
    out.report = gompf_report(map, r1p, r2p, rs.subspan(2));
    if (out.report.n_a < -1 || !out.report.condition_holds) {
        throw InternalError("Farey construction produced n_A = " + out.report.n_a.str());
    }
    return out;
}

}  // namespace sfill
