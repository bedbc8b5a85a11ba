#include "sfill/rational.hpp"

#include <cctype>
#include <limits>

#include "sfill/errors.hpp"

namespace sfill {

BigInt floor_div(const BigInt& num, const BigInt& den) {
    BigInt q = num / den;  // truncates toward zero
    if (num % den != 0 && num.sign() < 0) {
        --q;
    }
    return q;
}

BigInt ceil_div(const BigInt& num, const BigInt& den) {
    BigInt q = num / den;
    if (num % den != 0 && num.sign() > 0) {
        ++q;
    }
    return q;
}

std::optional<std::int64_t> to_int64(const BigInt& v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        return std::nullopt;
    }
    return static_cast<std::int64_t>(v);
}

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) {
        throw DomainError("rational with zero denominator");
    }
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::reciprocal() const {
    if (num_ == 0) {
        throw DomainError("reciprocal of zero");
    }
    return Rational(den_, num_);
}

Rational operator+(const Rational& x, const Rational& y) {
    return Rational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

Rational operator-(const Rational& x, const Rational& y) {
    return Rational(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
}

Rational operator*(const Rational& x, const Rational& y) {
    return Rational(x.num_ * y.num_, x.den_ * y.den_);
}

Rational operator/(const Rational& x, const Rational& y) {
    if (y.num_ == 0) {
        throw DomainError("division by zero");
    }
    return Rational(x.num_ * y.den_, x.den_ * y.num_);
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    BigInt lhs = x.num_ * y.den_;
    BigInt rhs = y.num_ * x.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
    if (den_ == 1) {
        return num_.str();
    }
    return num_.str() + "/" + den_.str();
}

namespace {

// Scans an optionally signed run of digits starting at pos.
BigInt scan_integer(std::string_view text, std::size_t& pos, bool allow_sign) {
    bool negative = false;
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
    }
    if (pos == start) {
        throw ParseError("expected digits", pos);
    }
    BigInt v(std::string(text.substr(start, pos - start)));
    return negative ? BigInt(-v) : v;
}

void skip_blanks(std::string_view text, std::size_t& pos) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
    }
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::size_t pos = 0;
    skip_blanks(text, pos);
    BigInt num = scan_integer(text, pos, true);
    BigInt den = 1;
    skip_blanks(text, pos);
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        skip_blanks(text, pos);
        std::size_t den_pos = pos;
        den = scan_integer(text, pos, false);
        if (den == 0) {
            throw ParseError("zero denominator", den_pos);
        }
    }
    skip_blanks(text, pos);
    if (pos != text.size()) {
        throw ParseError("unexpected character '" + std::string(1, text[pos]) + "'", pos);
    }
    return Rational(std::move(num), std::move(den));
}

FloorParts floor_decompose(const Rational& q) {
    BigInt whole = floor_div(q.num(), q.den());
    Rational frac = q - Rational(whole);
    return {std::move(whole), std::move(frac)};
}

BigInt floor(const Rational& q) { return floor_div(q.num(), q.den()); }
BigInt ceil(const Rational& q) { return ceil_div(q.num(), q.den()); }

ExtendedRational ExtendedRational::from_homogeneous(BigInt p, BigInt q) {
    if (q == 0) {
        if (p == 0) {
            throw DomainError("0/0 is not a point of the projective line");
        }
        return infinity();
    }
    ExtendedRational x(Rational(std::move(p), std::move(q)));
    return x;
}

Rational ExtendedRational::value() const {
    if (is_infinite()) {
        throw DomainError("infinity has no rational value");
    }
    return Rational(p_, q_);
}

std::string ExtendedRational::to_string() const {
    if (is_infinite()) {
        return "inf";
    }
    return value().to_string();
}

std::string ExtendedRational::to_farey_string() const {
    if (is_infinite()) {
        return "-1/0";
    }
    return value().to_string();
}

ExtendedRational ExtendedRational::parse(std::string_view text) {
    std::size_t b = 0;
    std::size_t e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    std::string_view core = text.substr(b, e - b);
    if (core == "inf" || core == "-inf" || core == "+inf" || core == "-1/0" || core == "1/0") {
        return infinity();
    }
    return ExtendedRational(Rational::parse(text));
}

}  // namespace sfill
