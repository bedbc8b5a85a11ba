#include "sfill/continued_fraction.hpp"

#include <cctype>

#include "sfill/errors.hpp"

namespace sfill {

NegCF::NegCF(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw DomainError("continued fraction needs at least one coefficient");
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] > -2) {
            throw DomainError("coefficient " + std::to_string(i + 1) + " is " + coeffs_[i].str() +
                              ", expected <= -2");
        }
    }
}

BigInt NegCF::weight() const {
    BigInt total = 0;
    for (const auto& a : coeffs_) {
        total -= a;
    }
    return total;
}

NegCF NegCF::prefix(std::size_t n) const {
    if (n == 0 || n > coeffs_.size()) {
        throw PreconditionError("prefix length out of range");
    }
    return NegCF(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n)));
}

std::string NegCF::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ',';
        out += coeffs_[i].str();
    }
    return out;
}

NegCF NegCF::parse(std::string_view text) {
    std::vector<BigInt> coeffs;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip();
    while (true) {
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        std::size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits) {
            throw ParseError("expected an integer coefficient", pos);
        }
        BigInt v(std::string(text.substr(start, pos - start)));
        if (v > -2) {
            throw ParseError("coefficient " + v.str() + " is not <= -2", start);
        }
        coeffs.push_back(std::move(v));
        skip();
        if (pos == text.size()) break;
        if (text[pos] != ',') {
            throw ParseError("expected ','", pos);
        }
        ++pos;
        skip();
    }
    return NegCF(std::move(coeffs));
}

NegCF neg_cf_expand(const Rational& q) {
    if (q >= Rational(-1)) {
        throw DomainError("negative continued fraction needs q < -1, got " + q.to_string());
    }
    std::vector<BigInt> coeffs;
    Rational rest = q;
    while (true) {
        // rest = -p/q' with p/q' > 1; a = -ceil(p/q').
        BigInt a = -ceil(-rest);
        coeffs.push_back(a);
        Rational gap = Rational(a) - rest;
        if (gap.sign() == 0) break;
        rest = gap.reciprocal();
    }
    return NegCF(std::move(coeffs));
}

Rational neg_cf_eval(const NegCF& cf) {
    const auto& c = cf.coeffs();
    Rational acc(c.back());
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        acc = Rational(c[i]) - acc.reciprocal();
    }
    return acc;
}

NegCF riemenschneider_dual(const NegCF& cf) {
    // Row i occupies columns [start_i, start_i + |ai| - 2].
    std::vector<BigInt> column_points;
    std::size_t start = 0;
    for (const auto& a : cf.coeffs()) {
        auto points = static_cast<std::size_t>(-a - 1);
        std::size_t last = start + points - 1;
        if (column_points.size() <= last) column_points.resize(last + 1, 0);
        for (std::size_t c = start; c <= last; ++c) ++column_points[c];
        start = last;
    }
    std::vector<BigInt> dual;
    dual.reserve(column_points.size());
    for (const auto& n : column_points) dual.push_back(-(n + 1));
    return NegCF(std::move(dual));
}

std::pair<std::size_t, std::size_t> complementary_truncation(const NegCF& a, const NegCF& b) {
    Rational r = -neg_cf_eval(a).reciprocal();
    Rational s = -neg_cf_eval(b).reciprocal();
    if (r + s <= Rational(1)) {
        throw PreconditionError("complementary truncation needs r + s > 1, got " + (r + s).to_string());
    }
    NegCF a_dual = riemenschneider_dual(a);
    const auto& ad = a_dual.coeffs();
    const auto& bc = b.coeffs();

    std::size_t k = 0;
    while (k < ad.size() && k < bc.size() && bc[k] == ad[k]) ++k;
    if (k == ad.size()) {
        // b extends the dual of a (s > r' rules out b == a' exactly).
        return {a.size(), ad.size()};
    }
    if (k == bc.size() || bc[k] < ad[k]) {
        throw InternalError("complementary truncation: b does not exceed the dual of a");
    }
    // Rows of a's point diagram meeting the first k+1 columns.
    std::size_t rows = 0;
    std::size_t start = 0;
    for (const auto& coeff : a.coeffs()) {
        if (start > k) break;
        ++rows;
        start += static_cast<std::size_t>(-coeff - 2);
    }
    BigInt excess = bc[k] - ad[k];
    if (excess >= rows) {
        throw InternalError("complementary truncation: empty prefix");
    }
    return {rows - static_cast<std::size_t>(excess), k + 1};
}

}  // namespace sfill
