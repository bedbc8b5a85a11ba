#include "sfill/seifert.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "sfill/errors.hpp"
#include "sfill/plumbing.hpp"

namespace sfill {

SeifertInvariants SeifertInvariants::validate(BigInt e0, std::vector<Rational> rs) {
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (rs[i] <= Rational(0) || rs[i] >= Rational(1)) {
            throw PreconditionError("r" + std::to_string(i + 1) + " = " + rs[i].to_string() + " is not in (0,1)");
        }
    }
    std::stable_sort(rs.begin(), rs.end(), std::greater<>());
    SeifertInvariants y;
    y.e0_ = std::move(e0);
    y.rs_ = std::move(rs);
    return y;
}

std::string SeifertInvariants::to_string() const {
    std::string out = e0_.str() + ";";
    for (std::size_t i = 0; i < rs_.size(); ++i) {
        if (i) out += ",";
        out += rs_[i].to_string();
    }
    return out;
}

SeifertInvariants SeifertInvariants::parse(std::string_view text) {
    std::size_t semi = text.find(';');
    if (semi == std::string_view::npos) {
        throw ParseError("expected '<e0>;<r1>,<r2>,...': missing ';'", text.size());
    }
    Rational e0;
    try {
        e0 = Rational::parse(text.substr(0, semi));
    } catch (const ParseError& e) {
        throw ParseError("bad e0: " + e.detail(), e.position());
    }
    if (!e0.is_integer()) {
        throw ParseError("e0 must be an integer", 0);
    }

    std::vector<Rational> rs;
    std::string_view rest = text.substr(semi + 1);
    std::size_t offset = semi + 1;
    bool blank = std::all_of(rest.begin(), rest.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (!blank) {
        std::size_t start = 0;
        while (true) {
            std::size_t comma = rest.find(',', start);
            std::string_view item = rest.substr(start, comma == std::string_view::npos ? rest.npos : comma - start);
            Rational r;
            try {
                r = Rational::parse(item);
            } catch (const ParseError& e) {
                throw ParseError("bad r" + std::to_string(rs.size() + 1) + ": " + e.detail(),
                                 offset + start + e.position());
            } catch (const DomainError& e) {
                throw ParseError("bad r" + std::to_string(rs.size() + 1) + ": " + std::string(e.what()),
                                 offset + start);
            }
            if (r <= Rational(0) || r >= Rational(1)) {
                throw ParseError("r" + std::to_string(rs.size() + 1) + " = " + r.to_string() + " is not in (0,1)",
                                 offset + start);
            }
            rs.push_back(std::move(r));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    }
    return validate(e0.num(), std::move(rs));
}

Rational euler_number(const SeifertInvariants& y) {
    Rational e(y.e0());
    for (const auto& r : y.rs()) e += r;
    return e;
}

SeifertInvariants reverse_orientation(const SeifertInvariants& y) {
    std::vector<Rational> rs;
    rs.reserve(y.k());
    for (auto it = y.rs().rbegin(); it != y.rs().rend(); ++it) rs.push_back(Rational(1) - *it);
    return SeifertInvariants::validate(-y.e0() - static_cast<long long>(y.k()), std::move(rs));
}

RealizabilitySearch search_realizability(std::span<const Rational> rs) {
    if (rs.size() < 3) {
        throw PreconditionError("realizability needs k >= 3, got k = " + std::to_string(rs.size()));
    }
    RealizabilitySearch out;
    // 1/n > r3 >= r4 >= ... is the binding constraint on the tail.
    out.max_n = ceil(rs[2].reciprocal()) - 1;
    const Rational one(1);
    for (BigInt n = 2; n <= out.max_n; ++n) {
        BigInt h_lo = floor(rs[0] * Rational(n)) + 1;           // h/n > r1
        BigInt h_hi = ceil((one - rs[1]) * Rational(n)) - 1;  // (n-h)/n > r2
        h_lo = std::max(h_lo, BigInt(1));
        h_hi = std::min(h_hi, BigInt(n - 1));
        for (BigInt h = h_lo; h <= h_hi; ++h) {
            if (gcd(n, h) == 1) {
                out.witness = RealizabilityWitness{n, h};
                return out;
            }
        }
    }
    return out;
}

std::optional<RealizabilityWitness> find_realizability_witness(std::span<const Rational> rs) {
    return search_realizability(rs).witness;
}

SpecialTypeReport is_special_type(const SeifertInvariants& y) {
    SpecialTypeReport rep;
    const auto& rs = y.rs();
    Rational total(0);
    for (const auto& r : rs) total += r;
    rep.sum_check = total > Rational(1);
    rep.pair_check = rs.size() >= 2 && rs[0] + rs[1] < Rational(1);
    rep.e0_check = y.e0() == -1 && y.k() >= 3;
    if (!rep.e0_check) return rep;
    rep.realizability = search_realizability(rs);
    rep.is_special = !rep.realizability->witness && rep.sum_check && rep.pair_check;
    return rep;
}

std::string to_string(VerdictReason reason) {
    switch (reason) {
        case VerdictReason::GompfUnconditional: return "gompf_unconditional";
        case VerdictReason::Realizable: return "realizable";
        case VerdictReason::PairSumAutomatic: return "pair_sum_automatic";
        case VerdictReason::FareyWitness: return "farey_witness";
        case VerdictReason::SpecialType: return "special_type";
    }
    return "special_type";
}

Verdict classify(const SeifertInvariants& y, const ClassifyOptions& options) {
    Verdict v;
    v.manifold = y;
    if (y.e0() != -1 || y.k() < 3) {
        v.reason = VerdictReason::GompfUnconditional;
        v.evidence = UnconditionalEvidence{y.e0(), y.k()};
        return v;
    }
    const auto& rs = y.rs();
    RealizabilitySearch search = search_realizability(rs);
    if (search.witness) {
        v.reason = VerdictReason::Realizable;
        v.evidence = RealizableEvidence{*search.witness, witness_realizable(rs, *search.witness)};
        return v;
    }
    Rational pair = rs[0] + rs[1];
    if (pair == Rational(1)) {
        v.reason = VerdictReason::PairSumAutomatic;
        v.evidence = PairSumEvidence{gompf_s(rs[0]), -rs[1].reciprocal()};
        return v;
    }
    if (pair > Rational(1)) {
        v.reason = VerdictReason::FareyWitness;
        v.evidence = witness_farey(rs);
        return v;
    }

    SpecialTypeReport report;
    report.e0_check = true;
    report.pair_check = true;
    Rational total(0);
    for (const auto& r : rs) total += r;
    report.sum_check = total > Rational(1);
    report.realizability = std::move(search);
    report.is_special = report.sum_check;
    if (!report.is_special) {
        // Sum <= 1 forces realizability; reaching here is a bug.
        throw InternalError("non-realizable tuple with r1 + ... + rk <= 1: " + y.to_string());
    }
    v.fillable = false;
    v.reason = VerdictReason::SpecialType;
    SpecialEvidence ev{std::move(report), reverse_orientation(y), std::nullopt};
    if (options.certify_obstruction) {
        ev.embedding = find_embedding(intersection_form(build_plumbing(ev.reversed)), options.limits);
    }
    v.evidence = std::move(ev);
    return v;
}

}  // namespace sfill
