#include "sfill/verify.hpp"

#include <algorithm>

namespace sfill {

namespace {

struct Checker {
    EvidenceCheck result;

    void require(bool cond, const std::string& what) {
        if (!cond && result.ok) {
            result.ok = false;
            result.failure = what;
        }
    }
};

// (c + d x)/(a + b x); nullopt stands for ∞.
std::optional<Rational> evaluate(const MobiusMap& m, const Rational& x) {
    Rational den = Rational(m.a()) + Rational(m.b()) * x;
    Rational num = Rational(m.c()) + Rational(m.d()) * x;
    if (den.sign() == 0) return std::nullopt;
    return num / den;
}

void check_gompf(Checker& ck, const SeifertInvariants& y, const GompfReport& rep, const BigInt& min_na) {
    const auto& rs = y.rs();
    const Rational one(1);
    Rational r1p = -one / rs[0];
    Rational r2p = -one / rs[1];
    // 1/s = -1 - 1/r'1
    Rational s = one / (-one - one / r1p);
    ck.require(rep.r1p == r1p && rep.r2p == r2p && rep.s == s, "report quantities r'1, r'2, s disagree with the tuple");

    const MobiusMap& m = rep.map;
    BigInt det = m.a() * m.d() - m.b() * m.c();
    ck.require(det == 1 || det == -1, "ad - bc != ±1");
    auto as = evaluate(m, s);
    ck.require(as && *as > -one && *as <= Rational(0), "A(s) not in (-1, 0]");
    auto ar = evaluate(m, r2p);
    ck.require(!ar || *ar < -one, "A(r'2) not in [-inf, -1)");
    if (!ck.result.ok) return;

    // t and the integer playing ⌊t⌋ + 1.
    auto a0 = evaluate(m, Rational(0));
    BigInt term;
    if (!a0 || *a0 >= Rational(0)) {
        term = 1;
    } else if (*a0 >= -one) {
        term = (as->sign() == 0) ? floor(one / *a0) : floor(one / *as) + 1;
    } else {
        term = ar ? floor(*ar) + 1 : floor(*a0);
    }
    BigInt abs_a = abs(m.a()), abs_c = abs(m.c());
    BigInt big = std::max(abs_a, abs_c), small = std::min(abs_a, abs_c);
    BigInt na = -small * term - big;
    ck.require(rep.big_m == big && rep.small_m == small, "M, m mismatch");
    ck.require(rep.n_a == na, "n_A mismatch: recomputed " + na.str());
    ck.require(na >= min_na, "n_A below the construction's guarantee");
    for (std::size_t j = 2; j < rs.size(); ++j) {
        ck.require(Rational(na) > -one / rs[j], "n_A <= r'" + std::to_string(j + 1));
    }
    ck.require(rep.condition_holds, "report claims the condition fails");
}

}  // namespace

EvidenceCheck recheck_verdict(const Verdict& verdict) {
    Checker ck;
    const SeifertInvariants& y = verdict.manifold;
    const auto& rs = y.rs();
    const Rational one(1);
    const bool gompf_family = y.e0() == -1 && y.k() >= 3;

    ck.require(verdict.fillable == (verdict.reason != VerdictReason::SpecialType), "fillable flag contradicts reason");

    switch (verdict.reason) {
        case VerdictReason::GompfUnconditional:
            ck.require(!gompf_family, "unconditional verdict for e0 = -1, k >= 3");
            break;

        case VerdictReason::Realizable: {
            ck.require(gompf_family, "realizable verdict outside e0 = -1, k >= 3");
            const auto* ev = std::get_if<RealizableEvidence>(&verdict.evidence);
            ck.require(ev != nullptr, "missing realizability evidence");
            if (!ck.result.ok) break;
            const BigInt& n = ev->witness.n;
            const BigInt& h = ev->witness.h;
            ck.require(n > h && h > 0 && gcd(n, h) == 1, "witness is not coprime n > h > 0");
            if (!ck.result.ok) break;
            ck.require(Rational(h, n) > rs[0], "h/n <= r1");
            ck.require(Rational(n - h, n) > rs[1], "(n-h)/n <= r2");
            for (std::size_t j = 2; j < rs.size(); ++j) {
                ck.require(Rational(BigInt(1), n) > rs[j], "1/n <= r" + std::to_string(j + 1));
            }
            check_gompf(ck, y, ev->construction.report, -ev->construction.n);
            ck.require(ev->construction.report.n_a == -ev->construction.n, "n_A != -n");
            break;
        }

        case VerdictReason::PairSumAutomatic:
            ck.require(gompf_family && rs[0] + rs[1] == one, "pair-sum verdict without r1 + r2 = 1");
            break;

        case VerdictReason::FareyWitness: {
            ck.require(gompf_family && rs[0] + rs[1] > one, "Farey verdict without r1 + r2 > 1");
            const auto* ev = std::get_if<FareyConstruction>(&verdict.evidence);
            ck.require(ev != nullptr, "missing Farey evidence");
            if (!ck.result.ok) break;
            const FareyConfiguration& c = ev->config;
            auto arc = [](const FareyPoint& x, const FareyPoint& y2) {
                BigInt det = x.p() * y2.q() - y2.p() * x.q();
                return det == 1 || det == -1;
            };
            ck.require(arc(c.alpha, c.beta) && arc(c.beta, c.gamma) && arc(c.gamma, c.delta), "configuration arc missing");
            ck.require(c.extra_arc == ExtraArc::AlphaGamma ? arc(c.alpha, c.gamma) : arc(c.beta, c.delta),
                       "extra arc missing");
            const Rational& s = ev->report.s;
            const Rational& r2p = ev->report.r2p;
            ck.require(c.alpha < c.beta && c.beta < c.gamma && c.gamma < c.delta, "configuration out of order");
            ck.require((c.alpha <=> s) < 0 && (c.beta <=> s) >= 0, "alpha < s <= beta fails");
            ck.require((c.gamma <=> r2p) <= 0 && (c.delta <=> r2p) > 0, "gamma <= r'2 < delta fails");
            ck.require((c.delta <=> Rational(-1)) <= 0, "delta > -1");
            check_gompf(ck, y, ev->report, BigInt(-1));
            break;
        }

        case VerdictReason::SpecialType: {
            const auto* ev = std::get_if<SpecialEvidence>(&verdict.evidence);
            ck.require(gompf_family && ev != nullptr, "special verdict outside e0 = -1, k >= 3");
            if (!ck.result.ok) break;
            Rational total(0);
            for (const auto& r : rs) total += r;
            ck.require(total > one && rs[0] + rs[1] < one, "sum conditions fail");
            // Re-run the finite realizability search independently.
            BigInt max_n = ceil(one / rs[2]) - 1;
            ck.require(ev->report.realizability && ev->report.realizability->max_n == max_n,
                       "realizability search bound mismatch");
            for (BigInt n = 2; n <= max_n && ck.result.ok; ++n) {
                for (BigInt h = 1; h < n; ++h) {
                    if (gcd(n, h) == 1 && Rational(h, n) > rs[0] && Rational(n - h, n) > rs[1]) {
                        ck.require(false, "tuple is realizable by (" + n.str() + "," + h.str() + ")");
                        break;
                    }
                }
            }
            if (ev->embedding) {
                ck.require(ev->embedding->outcome != SearchOutcome::Found, "plumbing of -Y embeds diagonally");
            }
            break;
        }
    }
    return ck.result;
}

}  // namespace sfill
