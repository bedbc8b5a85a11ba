#include "sfill/serialize.hpp"

#include <sstream>

#include "sfill/errors.hpp"

namespace sfill {

Json to_json(const BigInt& v) {
    if (auto small = to_int64(v)) return *small;
    return v.str();
}

BigInt bigint_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) {
        Rational r = Rational::parse(j.get<std::string>());
        if (!r.is_integer()) throw DomainError("expected an integer, got " + r.to_string());
        return r.num();
    }
    throw DomainError("expected an integer");
}

Json to_json(const MobiusMap& map) {
    return Json{{"a", to_json(map.a())}, {"b", to_json(map.b())}, {"c", to_json(map.c())}, {"d", to_json(map.d())}};
}

Json to_json(const GompfReport& r) {
    return Json{{"map", to_json(r.map)},
                {"formula", r.map.to_string()},
                {"r1p", r.r1p.to_string()},
                {"r2p", r.r2p.to_string()},
                {"s", r.s.to_string()},
                {"t", r.t.to_string()},
                {"t_at_boundary", r.t_at_boundary},
                {"floor_term", to_json(r.floor_term)},
                {"M", to_json(r.big_m)},
                {"m", to_json(r.small_m)},
                {"n_a", to_json(r.n_a)},
                {"condition_holds", r.condition_holds}};
}

Json to_json(const FareyConfiguration& c) {
    return Json{{"alpha", c.alpha.to_string()},
                {"beta", c.beta.to_string()},
                {"gamma", c.gamma.to_string()},
                {"delta", c.delta.to_string()},
                {"extra_arc", to_string(c.extra_arc)}};
}

Json to_json(const RealizabilitySearch& s) {
    Json j;
    if (s.witness) {
        j["witness"] = Json{{"n", to_json(s.witness->n)}, {"h", to_json(s.witness->h)}};
    } else {
        j["witness"] = nullptr;
    }
    j["max_n"] = to_json(s.max_n);
    return j;
}

Json to_json(const SpecialTypeReport& r) {
    Json j{{"is_special", r.is_special},
           {"e0_check", r.e0_check},
           {"sum_check", r.sum_check},
           {"pair_check", r.pair_check}};
    j["realizability"] = r.realizability ? to_json(*r.realizability) : Json(nullptr);
    return j;
}

Json to_json(const RealizableConstruction& c) {
    return Json{{"seed", Json{{"n0", to_json(c.seed.n)}, {"h0", to_json(c.seed.h)}}},
                {"n", to_json(c.n)},
                {"h", to_json(c.h)},
                {"bezout", Json{{"a", to_json(c.bezout_a)}, {"b", to_json(c.bezout_b)}}},
                {"gompf", to_json(c.report)}};
}

Json to_json(const SearchCertificate& cert) {
    Json j{{"outcome", to_string(cert.outcome)}};
    if (cert.outcome == SearchOutcome::Found && cert.embedding) {
        j["rank"] = cert.embedding->rank;
        j["vectors"] = cert.embedding->vectors;
    } else {
        j["searched_rank"] = cert.searched_rank;
    }
    j["nodes"] = cert.nodes;
    return j;
}

Json to_json(const StarGraph& g) {
    Json legs = Json::array();
    for (const auto& leg : g.legs) {
        Json l = Json::array();
        for (const auto& a : leg.coeffs()) l.push_back(to_json(a));
        legs.push_back(std::move(l));
    }
    return Json{{"central", to_json(g.central_weight)}, {"legs", std::move(legs)}};
}

Json to_json(const IntersectionLattice& l) { return Json{{"matrix", l.rows()}}; }

Json to_json(const Verdict& v) {
    Json evidence = std::visit(
        [](const auto& ev) -> Json {
            using T = std::decay_t<decltype(ev)>;
            if constexpr (std::is_same_v<T, UnconditionalEvidence>) {
                return Json{{"e0", to_json(ev.e0)}, {"k", ev.k}};
            } else if constexpr (std::is_same_v<T, RealizableEvidence>) {
                Json j{{"witness", Json{{"n", to_json(ev.witness.n)}, {"h", to_json(ev.witness.h)}}}};
                j.update(to_json(ev.construction));
                return j;
            } else if constexpr (std::is_same_v<T, PairSumEvidence>) {
                return Json{{"s", ev.s.to_string()}, {"r2p", ev.r2p.to_string()}};
            } else if constexpr (std::is_same_v<T, FareyConstruction>) {
                return Json{{"configuration", to_json(ev.config)}, {"gompf", to_json(ev.report)}};
            } else {
                Json j = to_json(ev.report);
                j["reversed"] = ev.reversed.to_string();
                if (ev.embedding) j["embedding"] = to_json(*ev.embedding);
                return j;
            }
        },
        v.evidence);
    return Json{{"manifold", v.manifold.to_string()},
                {"fillable", v.fillable},
                {"reason", to_string(v.reason)},
                {"evidence", std::move(evidence)}};
}

namespace {

std::vector<BigInt> integer_list(const Json& j) {
    if (!j.is_array()) throw DomainError("expected an array of integers");
    std::vector<BigInt> out;
    for (const auto& x : j) out.push_back(bigint_from_json(x));
    return out;
}

}  // namespace

StarGraph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("central") || !j.contains("legs") || !j["legs"].is_array()) {
        throw DomainError("graph JSON needs \"central\" and \"legs\"");
    }
    StarGraph g{bigint_from_json(j["central"]), {}};
    for (const auto& leg : j["legs"]) g.legs.emplace_back(integer_list(leg));
    return g;
}

IntersectionLattice lattice_from_json(const Json& j) {
    if (j.is_object() && j.contains("matrix")) {
        std::vector<std::vector<std::int64_t>> rows;
        if (!j["matrix"].is_array()) throw DomainError("\"matrix\" must be an array of rows");
        for (const auto& row : j["matrix"]) {
            std::vector<std::int64_t> r;
            for (const auto& x : integer_list(row)) {
                auto v = to_int64(x);
                if (!v) throw DomainError("matrix entry exceeds 64 bits");
                r.push_back(*v);
            }
            rows.push_back(std::move(r));
        }
        return IntersectionLattice(rows);
    }
    return intersection_form(graph_from_json(j));
}

SearchCertificate certificate_from_json(const Json& j) {
    SearchCertificate cert;
    const std::string outcome = j.at("outcome").get<std::string>();
    if (outcome == "found") {
        cert.outcome = SearchOutcome::Found;
        Embedding e;
        e.rank = j.at("rank").get<std::size_t>();
        e.vectors = j.at("vectors").get<std::vector<std::vector<std::int64_t>>>();
        cert.embedding = std::move(e);
    } else if (outcome == "no_embedding" || outcome == "timeout") {
        cert.outcome = outcome == "timeout" ? SearchOutcome::Timeout : SearchOutcome::ExhaustedNoEmbedding;
        cert.searched_rank = j.at("searched_rank").get<std::size_t>();
    } else {
        throw DomainError("unknown certificate outcome '" + outcome + "'");
    }
    if (j.contains("nodes")) cert.nodes = j["nodes"].get<std::uint64_t>();
    return cert;
}

std::string describe(const GompfReport& r) {
    std::ostringstream out;
    out << "map A(r) = " << r.map.to_string() << "  [a=" << r.map.a() << " b=" << r.map.b() << " c=" << r.map.c()
        << " d=" << r.map.d() << "]\n";
    out << "s = " << r.s.to_string() << ", r'2 = " << r.r2p.to_string() << ", t = " << r.t.to_string();
    if (r.t_at_boundary) out << " (boundary: floor term " << r.floor_term << " taken from A(0))";
    out << "\nM = " << r.big_m << ", m = " << r.small_m << ", n_A = " << r.n_a
        << (r.condition_holds ? " (condition holds)" : " (condition fails)") << "\n";
    return out.str();
}

std::string describe(const SearchCertificate& cert) {
    std::ostringstream out;
    switch (cert.outcome) {
        case SearchOutcome::Found:
            out << "embedding found, rank " << cert.embedding->rank << "\n";
            for (const auto& x : cert.embedding->vectors) {
                out << "  (";
                for (std::size_t i = 0; i < x.size(); ++i) out << (i ? "," : "") << x[i];
                out << ")\n";
            }
            break;
        case SearchOutcome::ExhaustedNoEmbedding:
            out << "no embedding into (Z^d, -Id) for any d <= " << cert.searched_rank << " (search exhausted, "
                << cert.nodes << " nodes)\n";
            break;
        case SearchOutcome::Timeout:
            out << "search timed out (rank cap " << cert.searched_rank << ", " << cert.nodes << " nodes)\n";
            break;
    }
    return out.str();
}

std::string describe(const Verdict& v) {
    std::ostringstream out;
    out << "Y(" << v.manifold.to_string() << "): " << (v.fillable ? "Stein fillable" : "NOT fillable") << " ["
        << to_string(v.reason) << "]\n";
    std::visit(
        [&](const auto& ev) {
            using T = std::decay_t<decltype(ev)>;
            if constexpr (std::is_same_v<T, UnconditionalEvidence>) {
                out << "e0 = " << ev.e0 << ", k = " << ev.k << ": outside Y(-1; r1..rk) with k >= 3\n";
            } else if constexpr (std::is_same_v<T, RealizableEvidence>) {
                out << "realizable by (n,h) = (" << ev.witness.n << "," << ev.witness.h << "); minimal (n,h) = ("
                    << ev.construction.n << "," << ev.construction.h << ")\n"
                    << describe(ev.construction.report);
            } else if constexpr (std::is_same_v<T, PairSumEvidence>) {
                out << "r1 + r2 = 1, so s = r'2 = " << ev.s.to_string() << " and the criterion holds\n";
            } else if constexpr (std::is_same_v<T, FareyConstruction>) {
                out << "Farey configuration (" << ev.config.alpha.to_string() << ", " << ev.config.beta.to_string()
                    << ", " << ev.config.gamma.to_string() << ", " << ev.config.delta.to_string() << "), extra arc "
                    << to_string(ev.config.extra_arc) << "\n"
                    << describe(ev.report);
            } else {
                out << "not realizable (searched n = 2.." << ev.report.realizability->max_n
                    << "), r1 + ... + rk > 1 > r1 + r2\n";
                out << "-Y = Y(" << ev.reversed.to_string() << ")\n";
                if (ev.embedding) out << describe(*ev.embedding);
            }
        },
        v.evidence);
    return out.str();
}

}  // namespace sfill
