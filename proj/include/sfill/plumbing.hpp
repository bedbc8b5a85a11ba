#pragma once

// The star-shaped plumbing graph bounding Y(e0; r1, ..., rk): a central
// vertex of weight e0 and one leg per r_i carrying the expansion
// -1/r_i = [a1, ..., ah].

#include <vector>

#include "sfill/continued_fraction.hpp"
#include "sfill/lattice.hpp"
#include "sfill/seifert.hpp"

namespace sfill {

struct StarGraph {
    BigInt central_weight;
    std::vector<NegCF> legs;

    // 1 + sum of leg lengths. Vertex order: center, then each leg root to tip.
    std::size_t vertex_count() const;
    // Sum of |weights| over all vertices.
    BigInt weight_sum() const;

    friend bool operator==(const StarGraph&, const StarGraph&) = default;
};

// Legs follow the (sorted) order of y.rs().
StarGraph build_plumbing(const SeifertInvariants& y);

// DomainError if a weight does not fit in 64 bits.
IntersectionLattice intersection_form(const StarGraph& graph);

}  // namespace sfill
