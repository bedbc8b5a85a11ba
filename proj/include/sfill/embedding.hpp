#pragma once

// Decision procedure for isometric embeddings of an intersection lattice
// (Z^n, Q) into the negative diagonal lattice (Z^d, -Id): integer vectors
// x_v with -<x_u, x_v> = Q[u][v] for all u, v.
//
// Completeness bound. If an embedding exists, dropping unused coordinates
// leaves one in which every coordinate e_i has x_v[i] != 0 for some v; each
// such coordinate then absorbs at least 1 of the total squared length
// sum_v |Q[v][v]|. So d <= D := sum_v |Q[v][v]|, and traversing every
// canonical assignment with at most D coordinates settles existence.
//
// The search assigns vectors vertex by vertex (decreasing |Q[v][v]|, ties by
// index). Coordinates are interchangeable and sign-flippable, so:
//   - coordinates opened by a vertex hold positive, nonincreasing entries;
//   - coordinates whose entries agree on every assigned vertex must receive
//     nonincreasing entries from the next vertex.
// Each orbit of partial assignments under signed coordinate permutations
// keeps at least one representative, so pruning loses no solution.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sfill/lattice.hpp"

namespace sfill {

struct Embedding {
    std::size_t rank = 0;
    // One coordinate vector of length rank per lattice basis vector, in
    // lattice order.
    std::vector<std::vector<std::int64_t>> vectors;

    friend bool operator==(const Embedding&, const Embedding&) = default;
};

struct SearchLimits {
    double max_seconds = 60.0;
    // Replaces the completeness bound D; an exhausted search then certifies
    // only that no embedding of rank <= max_rank exists.
    std::optional<std::size_t> max_rank;
};

enum class SearchOutcome { Found, ExhaustedNoEmbedding, Timeout };

std::string to_string(SearchOutcome outcome);  // "found" / "no_embedding" / "timeout"

struct SearchCertificate {
    SearchOutcome outcome = SearchOutcome::Timeout;
    std::optional<Embedding> embedding;  // set iff Found
    std::size_t searched_rank = 0;       // rank cap in force
    std::uint64_t nodes = 0;             // vectors placed during the search
    double seconds = 0.0;
};

// Sum of |Q[v][v]|.
std::size_t completeness_bound(const IntersectionLattice& lattice);

// PreconditionError if some diagonal entry is >= 0.
SearchCertificate find_embedding(const IntersectionLattice& lattice, const SearchLimits& limits = {});

// Every pairing equation holds and every coordinate is used by some vector.
bool verify_embedding(const IntersectionLattice& lattice, const Embedding& embedding);

}  // namespace sfill
