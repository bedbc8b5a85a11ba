#include "sfill/plumbing.hpp"

#include "sfill/errors.hpp"

namespace sfill {

std::size_t StarGraph::vertex_count() const {
    std::size_t n = 1;
    for (const auto& leg : legs) n += leg.size();
    return n;
}

BigInt StarGraph::weight_sum() const {
    BigInt total = abs(central_weight);
    for (const auto& leg : legs) total += leg.weight();
    return total;
}

StarGraph build_plumbing(const SeifertInvariants& y) {
    StarGraph g{y.e0(), {}};
    g.legs.reserve(y.k());
    for (const auto& r : y.rs()) {
        g.legs.push_back(neg_cf_expand(-r.reciprocal()));
    }
    return g;
}

IntersectionLattice intersection_form(const StarGraph& graph) {
    auto weight = [](const BigInt& w) {
        auto v = to_int64(w);
        if (!v) throw DomainError("plumbing weight " + w.str() + " exceeds 64 bits");
        return *v;
    };
    const std::size_t n = graph.vertex_count();
    std::vector<std::vector<std::int64_t>> q(n, std::vector<std::int64_t>(n, 0));
    q[0][0] = weight(graph.central_weight);
    std::size_t next = 1;
    for (const auto& leg : graph.legs) {
        std::size_t prev = 0;
        for (const auto& a : leg.coeffs()) {
            q[next][next] = weight(a);
            q[prev][next] = q[next][prev] = 1;
            prev = next++;
        }
    }
    return IntersectionLattice(q);
}

}  // namespace sfill
