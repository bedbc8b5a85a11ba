#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sfill/rational.hpp"

namespace sfill {

// (Z^n, Q) for a symmetric integer matrix Q, stored row-major.
class IntersectionLattice {
public:
    IntersectionLattice() = default;
    // Throws DomainError if rows are ragged or Q is not symmetric.
    explicit IntersectionLattice(const std::vector<std::vector<std::int64_t>>& rows);

    std::size_t dim() const noexcept { return dim_; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return form_[i * dim_ + j]; }

    std::vector<std::vector<std::int64_t>> rows() const;

    friend bool operator==(const IntersectionLattice&, const IntersectionLattice&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<std::int64_t> form_;
};

// Leading principal minors det(Q[0..j, 0..j]), j = 0..n-1, computed exactly.
std::vector<BigInt> leading_minors(const IntersectionLattice& lattice);

// (-1)^j minor_j > 0 for every j.
bool is_negative_definite(const IntersectionLattice& lattice);

// Fraction-free (Bareiss) elimination; det of the empty form is 1.
BigInt determinant(const IntersectionLattice& lattice);

}  // namespace sfill
