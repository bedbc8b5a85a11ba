#pragma once

// Exact rationals over arbitrary-precision integers, plus the projective
// line Q ∪ {∞} with a single point at infinity.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace sfill {

using BigInt = boost::multiprecision::cpp_int;

// Floor and ceiling of num/den for den > 0.
BigInt floor_div(const BigInt& num, const BigInt& den);
BigInt ceil_div(const BigInt& num, const BigInt& den);

std::optional<std::int64_t> to_int64(const BigInt& v);

// Always reduced, den > 0, zero is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(long long n) : num_(n), den_(1) {}           // NOLINT(google-explicit-constructor)
    Rational(BigInt n, BigInt d);

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_.sign(); }

    Rational operator-() const;
    Rational reciprocal() const;

    friend Rational operator+(const Rational& x, const Rational& y);
    friend Rational operator-(const Rational& x, const Rational& y);
    friend Rational operator*(const Rational& x, const Rational& y);
    friend Rational operator/(const Rational& x, const Rational& y);

    Rational& operator+=(const Rational& y) { return *this = *this + y; }
    Rational& operator-=(const Rational& y) { return *this = *this - y; }

    friend bool operator==(const Rational& x, const Rational& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);

    // "p/q", or "p" when integral.
    std::string to_string() const;

    // Accepts "p" or "p/q" with optional sign and surrounding blanks.
    static Rational parse(std::string_view text);

private:
    BigInt num_;
    BigInt den_;
};

// floor(q) and q - floor(q); the fraction lies in [0,1).
struct FloorParts {
    BigInt whole;
    Rational frac;
};
FloorParts floor_decompose(const Rational& q);

BigInt floor(const Rational& q);
BigInt ceil(const Rational& q);

// A point of Q ∪ {∞} in homogeneous form p/q, q >= 0, gcd(|p|,q) = 1.
// The single point at infinity is stored as -1/0, so +∞ and -∞ coincide.
class ExtendedRational {
public:
    ExtendedRational() = default;
    ExtendedRational(const Rational& r)  // NOLINT(google-explicit-constructor)
        : p_(r.num()), q_(r.den()) {}
    ExtendedRational(long long n) : ExtendedRational(Rational(n)) {}  // NOLINT

    static ExtendedRational infinity() {
        ExtendedRational x;
        x.p_ = -1;
        x.q_ = 0;
        return x;
    }

    // Reduces an arbitrary homogeneous pair; (0,0) is rejected.
    static ExtendedRational from_homogeneous(BigInt p, BigInt q);

    bool is_infinite() const { return q_ == 0; }
    // Throws DomainError at infinity.
    Rational value() const;

    const BigInt& p() const noexcept { return p_; }
    const BigInt& q() const noexcept { return q_; }

    friend bool operator==(const ExtendedRational& x, const ExtendedRational& y) = default;

    // "inf" at infinity.
    std::string to_string() const;
    // "-1/0" at infinity, integers without denominator.
    std::string to_farey_string() const;

    // Accepts the rational grammar, "inf", "-inf" and "-1/0".
    static ExtendedRational parse(std::string_view text);

private:
    BigInt p_{0};
    BigInt q_{1};
};

}  // namespace sfill
