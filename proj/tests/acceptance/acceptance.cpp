// Acceptance checks. One PASS/FAIL line per criterion; exit status is the
// number of failures.

#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "sfill/continued_fraction.hpp"
#include "sfill/crosscheck.hpp"
#include "sfill/embedding.hpp"
#include "sfill/plumbing.hpp"
#include "sfill/seifert.hpp"
#include "sfill/verify.hpp"
#include "support/oracles.hpp"

using namespace sfill;

namespace {

// Pinned limits.
constexpr double kCfMillis = 1.0;         // AC1 per call
constexpr double kE8Seconds = 60.0;       // AC2
constexpr int kRandomCases = 1000;        // AC5 per property
constexpr int kTreeWeight = 10;           // AC6
constexpr int kCorrupted = 1000;          // AC6
constexpr int kSpecialSamples = 25;       // AC7
constexpr long long kSpecialWeight = 20;  // AC7
constexpr double kSampleSeconds = 60.0;   // AC7 per search

struct Criterion {
    std::string name;
    bool ok = true;
    std::string note;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

int failures = 0;

void report(const Criterion& c, const std::string& detail) {
    if (!c.ok) ++failures;
    std::printf("%s %s: %s\n", c.ok ? "PASS" : "FAIL", c.name.c_str(), c.ok ? detail.c_str() : c.note.c_str());
    std::fflush(stdout);
}

double millis_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

Rational q(const char* s) { return Rational::parse(s); }
SeifertInvariants Y(const char* s) { return SeifertInvariants::parse(s); }

// (c + d r)/(a + b r); nullopt is infinity.
std::optional<Rational> eval(const MobiusMap& m, const Rational& r) {
    Rational den = Rational(m.a()) + Rational(m.b()) * r;
    if (den == Rational(0)) return std::nullopt;
    return (Rational(m.c()) + Rational(m.d()) * r) / den;
}

// Pairings restated by the oracle, plus every coordinate in use.
bool valid_certificate(const oracle::Matrix& q, const Embedding& e) {
    if (!oracle::check_embedding(q, e.vectors)) return false;
    for (std::size_t c = 0; c < e.rank; ++c) {
        bool used = false;
        for (const auto& row : e.vectors) {
            if (row.size() != e.rank) return false;
            used = used || row[c] != 0;
        }
        if (!used) return false;
    }
    return true;
}

bool conditions_hold(const MobiusMap& m, const Rational& s, const Rational& r2p) {
    BigInt det = m.a() * m.d() - m.b() * m.c();
    auto as = eval(m, s);
    auto ar = eval(m, r2p);
    return (det == 1 || det == -1) && as && *as > Rational(-1) && *as <= Rational(0) && (!ar || *ar < Rational(-1));
}

void ac1() {
    Criterion c{"AC1 continued fractions"};
    auto t0 = std::chrono::steady_clock::now();
    NegCF a = neg_cf_expand(q("-7/5"));
    double t_a = millis_since(t0);
    t0 = std::chrono::steady_clock::now();
    NegCF b = neg_cf_expand(q("-7/2"));
    double t_b = millis_since(t0);
    t0 = std::chrono::steady_clock::now();
    NegCF da = riemenschneider_dual(a);
    NegCF db = riemenschneider_dual(b);
    double t_d = millis_since(t0) / 2;
    c.require(a == NegCF::parse("-2,-2,-3"), "cf -7/5 = " + a.to_string());
    c.require(b == NegCF::parse("-4,-2"), "cf -7/2 = " + b.to_string());
    c.require(da == b && db == a, "dual does not exchange the two strings");
    c.require(t_a < kCfMillis && t_b < kCfMillis && t_d < kCfMillis, "slower than 1 ms");
    report(c, "-7/5 = [" + a.to_string() + "], -7/2 = [" + b.to_string() + "], dual exchanges them");
}

void ac2() {
    Criterion c{"AC2 E8 special type"};
    auto y = Y("-1;1/2,1/3,1/5");
    Verdict v = classify(y);
    c.require(!v.fillable && v.reason == VerdictReason::SpecialType, "not classified special");
    auto rs = y.rs();
    auto search = search_realizability(rs);
    c.require(!search.witness && search.max_n == 4, "realizability search did not exhaust n in {2,3,4}");
    c.require(recheck_verdict(v).ok, "none certificate fails the recheck");
    SearchLimits limits;
    limits.max_seconds = kE8Seconds;
    auto t0 = std::chrono::steady_clock::now();
    CrosscheckResult x = crosscheck(y, limits);
    double ms = millis_since(t0);
    c.require(x.obstruction.has_value(), "no obstruction search");
    if (x.obstruction) {
        c.require(x.obstruction->outcome == SearchOutcome::ExhaustedNoEmbedding, "E8 search did not exhaust");
        c.require(x.obstruction->searched_rank == 16, "rank bound is not 16");
    }
    c.require(x.agrees(), "crosscheck disagrees");
    c.require(ms < kE8Seconds * 1000, "over 60 s");
    auto g = build_plumbing(reverse_orientation(y));
    c.require(g.vertex_count() == 8 && determinant(intersection_form(g)) == 1, "plumbing of -Y is not E8");
    report(c, "max_n 4, E8 no_embedding at rank 16 in " + std::to_string(ms) + " ms");
}

void ac3() {
    Criterion c{"AC3 realizable witness"};
    auto y = Y("-1;1/2,1/3,1/7");
    Verdict v = classify(y);
    c.require(v.fillable && v.reason == VerdictReason::Realizable, "not classified realizable");
    if (const auto* ev = std::get_if<RealizableEvidence>(&v.evidence)) {
        const auto& k = ev->construction;
        c.require(ev->witness == RealizabilityWitness{5, 3}, "witness is not (5,3)");
        c.require(k.n == 5 && k.h == 2, "seed is not n = 5, h = 2");
        c.require(k.report.map.same_map(MobiusMap(3, 1, 2, 1)), "map is not (2+r)/(3+r)");
        c.require(k.report.n_a == -5, "n_A is not -5");
        c.require(Rational(k.report.n_a) > q("-7"), "n_A <= r'3");
        c.require(conditions_hold(k.report.map, k.report.s, k.report.r2p), "map fails re-evaluation");
    }
    c.require(recheck_verdict(v).ok, "recheck failed");
    report(c, "witness (5,3), seed (5,2), (2+r)/(3+r), n_A = -5 > -7");
}

void ac4() {
    Criterion c{"AC4 Farey witness"};
    Verdict v = classify(Y("-1;3/4,2/3,1/2"));
    c.require(v.fillable && v.reason == VerdictReason::FareyWitness, "not classified by a Farey witness");
    if (const auto* ev = std::get_if<FareyConstruction>(&v.evidence)) {
        const auto& k = ev->config;
        c.require(k == FareyConfiguration{FareyPoint::minus_infinity(), FareyPoint(-3), FareyPoint(-2),
                                          FareyPoint(-1), ExtraArc::AlphaGamma},
                  "configuration is not (-inf,-3,-2,-1) with arc alpha-gamma");
        auto det = [](const FareyPoint& x, const FareyPoint& z) { return abs(x.p() * z.q() - z.p() * x.q()); };
        c.require(det(k.alpha, k.beta) == 1 && det(k.beta, k.gamma) == 1 && det(k.gamma, k.delta) == 1 &&
                      det(k.alpha, k.gamma) == 1,
                  "arc determinant != 1");
        c.require(ev->report.map.same_map(MobiusMap(-2, -1, 3, 1)), "map is not (3+r)/(-2-r)");
        c.require(ev->report.n_a == 1, "n_A is not 1");
        c.require(conditions_hold(ev->report.map, ev->report.s, ev->report.r2p), "map fails re-evaluation");
    }
    c.require(recheck_verdict(v).ok, "recheck failed");
    report(c, "(-1/0,-3,-2,-1) alpha_gamma, (3+r)/(-2-r), n_A = 1");
}

void ac5() {
    Criterion c{"AC5 randomized properties"};
    oracle::Rng rng(20261016);
    int a = 0;
    while (a < kRandomCases) {
        auto rs = oracle::random_tuple(rng, std::uniform_int_distribution<std::size_t>(3, 6)(rng), 40);
        Rational sum(0);
        for (const auto& r : rs) sum += r;
        if (sum > Rational(1)) continue;
        c.require(find_realizability_witness(rs).has_value(), "(a) sum <= 1 tuple not realizable");
        ++a;
    }
    int fillable = 0, special = 0;
    for (int i = 0; fillable < kRandomCases || special < kRandomCases; ++i) {
        long long e0 = i % 3 == 0 ? std::uniform_int_distribution<long long>(-4, 1)(rng) : -1;
        auto y = SeifertInvariants::validate(
            e0, oracle::random_tuple(rng, std::uniform_int_distribution<std::size_t>(0, 6)(rng), 25));
        Verdict v = classify(y);
        if (v.fillable) {
            ++fillable;
            c.require(recheck_verdict(v).ok, "(b) witness fails to re-validate for " + y.to_string());
        }
        auto r = reverse_orientation(y);
        c.require(reverse_orientation(r) == y && euler_number(r) == -euler_number(y), "(c) reverse_orientation");
        if (is_special_type(y).is_special) {
            ++special;
            c.require(!is_special_type(r).is_special, "(d) reverse of special is special");
        }
    }
    for (int i = 0; i < kRandomCases; ++i) {
        Rational x = oracle::random_below_minus_one(rng, 200, 20);
        NegCF e = neg_cf_expand(x);
        NegCF d = riemenschneider_dual(e);
        BigInt n = e.size(), m = d.size();
        c.require(e.weight() + d.weight() == 3 * (n + m) - 2, "(e) trace identity");
        c.require(neg_cf_eval(e) == x, "(f) eval . expand != id");
    }
    report(c, std::to_string(kRandomCases) + "+ cases each for (a)-(f); " + std::to_string(special) +
                  " of them special");
}

void ac6() {
    Criterion c{"AC6 embedding completeness"};
    auto trees = oracle::all_weighted_trees(kTreeWeight);
    oracle::Rng rng(6);
    int found = 0, none = 0, corrupted = 0, harmless = 0;
    std::vector<std::tuple<IntersectionLattice, oracle::Matrix, Embedding>> certs;
    for (const auto& t : trees) {
        IntersectionLattice q(t.form());
        auto cert = find_embedding(q);
        bool expected = oracle::embeds(t.form(), completeness_bound(q));
        c.require(cert.outcome != SearchOutcome::Timeout, "timeout on " + oracle::canonical_form(t));
        c.require((cert.outcome == SearchOutcome::Found) == expected, "disagreement on " + oracle::canonical_form(t));
        if (cert.outcome == SearchOutcome::Found) {
            ++found;
            c.require(verify_embedding(q, *cert.embedding), "verify rejects a found certificate");
            certs.emplace_back(q, t.form(), *cert.embedding);
        } else {
            ++none;
        }
    }
    c.require(!certs.empty(), "no certificates to corrupt");
    while (!certs.empty() && corrupted < kCorrupted) {
        const auto& [q, form, e] = certs[rng() % certs.size()];
        Embedding bad = e;
        switch (rng() % 3) {
            case 0: {
                auto& row = bad.vectors[rng() % bad.vectors.size()];
                row[rng() % row.size()] += (rng() & 1) ? 1 : -1;
                break;
            }
            case 1: {
                // one coordinate of one vector flipped in sign
                auto& row = bad.vectors[rng() % bad.vectors.size()];
                std::size_t col = rng() % row.size();
                if (row[col] == 0) row[col] = 1;
                else row[col] = -row[col];
                break;
            }
            default: {
                // an extra unused coordinate
                ++bad.rank;
                for (auto& row : bad.vectors) row.push_back(0);
                break;
            }
        }
        // a mutation can land on another embedding (a column sign flip is a symmetry)
        bool valid = valid_certificate(form, bad);
        c.require(verify_embedding(q, bad) == valid, "verify disagrees with the oracle on a mutated certificate");
        if (valid) {
            ++harmless;
        } else {
            ++corrupted;
        }
    }
    report(c, std::to_string(trees.size()) + " trees with D <= " + std::to_string(kTreeWeight) + " (" +
                  std::to_string(found) + " embed, " + std::to_string(none) + " do not), " +
                  std::to_string(corrupted) + " corrupted certificates rejected (" + std::to_string(harmless) +
                  " mutations still valid, accepted)");
}

void ac7() {
    Criterion c{"AC7 special-type sampling"};
    oracle::Rng rng(7);
    std::set<std::string> seen;
    std::size_t max_rank = 0;
    double slowest = 0;
    for (int attempt = 0; attempt < 2000000 && static_cast<int>(seen.size()) < kSpecialSamples; ++attempt) {
        auto y = SeifertInvariants::validate(
            -1, oracle::random_tuple(rng, std::uniform_int_distribution<std::size_t>(3, 4)(rng), 9));
        if (!is_special_type(y).is_special) continue;
        auto g = build_plumbing(reverse_orientation(y));
        if (g.weight_sum() > kSpecialWeight) continue;
        if (!seen.insert(y.to_string()).second) continue;
        SearchLimits limits;
        limits.max_seconds = kSampleSeconds;
        auto cert = find_embedding(intersection_form(g), limits);
        c.require(cert.outcome == SearchOutcome::ExhaustedNoEmbedding,
                  y.to_string() + ": " + to_string(cert.outcome));
        max_rank = std::max(max_rank, cert.searched_rank);
        slowest = std::max(slowest, cert.seconds);
    }
    c.require(static_cast<int>(seen.size()) >= kSpecialSamples,
              "only " + std::to_string(seen.size()) + " special types found");
    report(c, std::to_string(seen.size()) + " special types, all no_embedding (largest bound " +
                  std::to_string(max_rank) + ", slowest " + std::to_string(slowest) + " s)");
}

}  // namespace

int main() {
    ac1();
    ac2();
    ac3();
    ac4();
    ac5();
    ac6();
    ac7();
    return failures;
}
