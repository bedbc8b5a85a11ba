#pragma once

// Negative (Hirzebruch-Jung) continued fractions
//
//     [a1, ..., an] = a1 - 1/(a2 - 1/(... - 1/an))      with every ai <= -2,
//
// which exist and are unique for every rational q < -1, together with
// Riemenschneider duality between the expansions of -p/q and -p/(p-q).

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sfill/rational.hpp"

namespace sfill {

class NegCF {
public:
    // Throws DomainError unless coeffs is nonempty with every entry <= -2.
    explicit NegCF(std::vector<BigInt> coeffs);

    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    const BigInt& operator[](std::size_t i) const { return coeffs_[i]; }

    // Sum of |ai|.
    BigInt weight() const;

    // The first n entries, 1 <= n <= size().
    NegCF prefix(std::size_t n) const;

    friend bool operator==(const NegCF&, const NegCF&) = default;

    // "-2,-2,-3"
    std::string to_string() const;
    static NegCF parse(std::string_view text);

private:
    std::vector<BigInt> coeffs_;
};

// Unique expansion of q < -1; DomainError otherwise.
NegCF neg_cf_expand(const Rational& q);

Rational neg_cf_eval(const NegCF& cf);

// Dual string by the point rule: row i carries |ai|-1 points, each row starts
// under the last point of the previous row, and column j holds |bj|-1 points.
NegCF riemenschneider_dual(const NegCF& cf);

// For strings a, b with r + s > 1 where r = -1/eval(a), s = -1/eval(b):
// prefix lengths (n0, m0) such that a[1..n0] and b[1..m0] are dual, i.e.
// the truncated values satisfy r0 + s0 = 1. PreconditionError if r + s <= 1.
std::pair<std::size_t, std::size_t> complementary_truncation(const NegCF& a, const NegCF& b);

}  // namespace sfill
