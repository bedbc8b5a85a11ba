#include "sfill/lattice.hpp"

#include <utility>

#include "sfill/errors.hpp"

namespace sfill {

IntersectionLattice::IntersectionLattice(const std::vector<std::vector<std::int64_t>>& rows) : dim_(rows.size()) {
    form_.reserve(dim_ * dim_);
    for (const auto& row : rows) {
        if (row.size() != dim_) {
            throw DomainError("intersection form must be square");
        }
        form_.insert(form_.end(), row.begin(), row.end());
    }
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = i + 1; j < dim_; ++j) {
            if ((*this)(i, j) != (*this)(j, i)) {
                throw DomainError("intersection form is not symmetric at (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")");
            }
        }
    }
}

std::vector<std::vector<std::int64_t>> IntersectionLattice::rows() const {
    std::vector<std::vector<std::int64_t>> out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        out[i].assign(form_.begin() + static_cast<std::ptrdiff_t>(i * dim_),
                      form_.begin() + static_cast<std::ptrdiff_t>((i + 1) * dim_));
    }
    return out;
}

namespace {

using BigMatrix = std::vector<std::vector<BigInt>>;

BigMatrix to_big(const IntersectionLattice& l) {
    BigMatrix m(l.dim(), std::vector<BigInt>(l.dim()));
    for (std::size_t i = 0; i < l.dim(); ++i)
        for (std::size_t j = 0; j < l.dim(); ++j) m[i][j] = l(i, j);
    return m;
}

// One Bareiss step on pivot k; prev is the previous pivot.
void bareiss_step(BigMatrix& m, std::size_t k, const BigInt& prev) {
    const std::size_t n = m.size();
    for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
            m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        }
        m[i][k] = 0;
    }
}

}  // namespace

std::vector<BigInt> leading_minors(const IntersectionLattice& lattice) {
    // Without pivoting, the k-th Bareiss pivot is the k-th leading minor.
    // Once a minor vanishes the elimination stops; later minors are then
    // computed directly from their own submatrices.
    const std::size_t n = lattice.dim();
    std::vector<BigInt> minors;
    minors.reserve(n);
    BigMatrix m = to_big(lattice);
    BigInt prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            minors.push_back(0);
            for (std::size_t j = k + 1; j < n; ++j) {
                std::vector<std::vector<std::int64_t>> sub(j + 1, std::vector<std::int64_t>(j + 1));
                for (std::size_t r = 0; r <= j; ++r)
                    for (std::size_t c = 0; c <= j; ++c) sub[r][c] = lattice(r, c);
                minors.push_back(determinant(IntersectionLattice(sub)));
            }
            return minors;
        }
        minors.push_back(m[k][k]);
        bareiss_step(m, k, prev);
        prev = m[k][k];
    }
    return minors;
}

bool is_negative_definite(const IntersectionLattice& lattice) {
    const std::size_t n = lattice.dim();
    BigMatrix m = to_big(lattice);
    BigInt prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        // minor_{k+1} must have sign (-1)^{k+1}.
        int want = (k % 2 == 0) ? -1 : 1;
        if (m[k][k].sign() != want) return false;
        bareiss_step(m, k, prev);
        prev = m[k][k];
    }
    return true;
}

BigInt determinant(const IntersectionLattice& lattice) {
    const std::size_t n = lattice.dim();
    if (n == 0) return 1;
    BigMatrix m = to_big(lattice);
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        bareiss_step(m, k, prev);
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace sfill
