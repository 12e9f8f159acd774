#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace chainsched {

/// Exact rational number with an explicit +infinity value.
///
/// All scheduling comparisons go through exact arithmetic; intermediates use
/// 128-bit integers and results are reduced, so the denominators produced by
/// the binary-search midpoints stay well inside 64 bits. Overflow past that
/// throws instead of silently wrapping.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    constexpr Rational(long long value) : num_(value), den_(1) {} // NOLINT(google-explicit-constructor)

    Rational(long long num, long long den) {
        if (den == 0) throw std::domain_error("rational: zero denominator");
        assign(static_cast<__int128>(num), static_cast<__int128>(den));
    }

    static constexpr Rational infinity() {
        Rational r;
        r.num_ = 1;
        r.den_ = 0;
        return r;
    }

    /// Exact value of a decimal string such as "6342.1" or "1.5e-3".
    static Rational from_decimal(std::string_view text);

    constexpr bool is_infinite() const { return den_ == 0; }
    constexpr long long num() const { return num_; }
    constexpr long long den() const { return den_; }
    constexpr bool is_zero() const { return num_ == 0 && den_ != 0; }
    constexpr bool is_negative() const { return num_ < 0; }

    double to_double() const {
        if (is_infinite()) return std::numeric_limits<double>::infinity();
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.is_infinite() || b.is_infinite()) return infinity();
        Rational r;
        r.assign(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
        return r;
    }

    friend Rational operator-(const Rational& a, const Rational& b) {
        if (b.is_infinite()) throw std::domain_error("rational: subtracting infinity");
        if (a.is_infinite()) return infinity();
        Rational r;
        r.assign(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
        return r;
    }

    friend Rational operator*(const Rational& a, const Rational& b) {
        if (a.is_infinite() || b.is_infinite()) {
            if (a.is_negative() || b.is_negative() || a.is_zero() || b.is_zero())
                throw std::domain_error("rational: invalid product with infinity");
            return infinity();
        }
        Rational r;
        r.assign(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
        return r;
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_infinite() || b.is_zero()) throw std::domain_error("rational: invalid divisor");
        if (a.is_infinite()) {
            if (b.is_negative()) throw std::domain_error("rational: invalid quotient with infinity");
            return infinity();
        }
        Rational r;
        r.assign(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    friend bool operator<(const Rational& a, const Rational& b) {
        if (a.is_infinite()) return false;
        if (b.is_infinite()) return true;
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::string str() const {
        if (is_infinite()) return "inf";
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    using i128 = __int128;

    static i128 gcd128(i128 a, i128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static long long narrow(i128 v) {
        if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
            throw std::overflow_error("rational: value out of 64-bit range");
        return static_cast<long long>(v);
    }

    void assign(i128 num, i128 den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        if (num == 0) {
            num_ = 0;
            den_ = 1;
            return;
        }
        i128 g = gcd128(num, den);
        num_ = narrow(num / g);
        den_ = narrow(den / g);
    }

    long long num_;
    long long den_; // den_ == 0 encodes +infinity
};

inline Rational Rational::from_decimal(std::string_view text) {
    std::size_t pos = 0;
    auto fail = [&]() -> void { throw std::invalid_argument("not a decimal number: " + std::string(text)); };
    if (text.empty()) fail();
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }
    i128 mantissa = 0;
    int frac_digits = 0;
    bool seen_digit = false;
    bool in_fraction = false;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c >= '0' && c <= '9') {
            mantissa = mantissa * 10 + (c - '0');
            if (mantissa > i128(std::numeric_limits<long long>::max()))
                throw std::overflow_error("rational: too many digits");
            if (in_fraction) ++frac_digits;
            seen_digit = true;
        } else if (c == '.' && !in_fraction) {
            in_fraction = true;
        } else if (c == 'e' || c == 'E') {
            break;
        } else {
            fail();
        }
    }
    if (!seen_digit) fail();
    long long exponent = 0;
    if (pos < text.size()) {
        ++pos; // past 'e'
        bool exp_neg = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            exp_neg = text[pos] == '-';
            ++pos;
        }
        if (pos >= text.size()) fail();
        for (; pos < text.size(); ++pos) {
            char c = text[pos];
            if (c < '0' || c > '9') fail();
            exponent = exponent * 10 + (c - '0');
            if (exponent > 40) throw std::overflow_error("rational: exponent out of range");
        }
        if (exp_neg) exponent = -exponent;
    }
    long long scale_down = frac_digits - exponent; // value = mantissa / 10^scale_down
    i128 num = negative ? -mantissa : mantissa;
    i128 den = 1;
    while (scale_down > 0) {
        den *= 10;
        --scale_down;
        if (den > i128(std::numeric_limits<long long>::max()))
            throw std::overflow_error("rational: scale out of range");
    }
    while (scale_down < 0) {
        num *= 10;
        ++scale_down;
        if (num > i128(std::numeric_limits<long long>::max()) ||
            num < -i128(std::numeric_limits<long long>::max()))
            throw std::overflow_error("rational: scale out of range");
    }
    Rational r;
    r.assign(num, den);
    return r;
}

/// ceil(a / b) for finite a >= 0 and finite b > 0.
inline long long ceil_div(const Rational& a, const Rational& b) {
    if (a.is_infinite() || b.is_infinite() || b.num() <= 0 || a.is_negative())
        throw std::domain_error("ceil_div: needs finite a >= 0 and b > 0");
    __int128 x = static_cast<__int128>(a.num()) * b.den();
    __int128 y = static_cast<__int128>(a.den()) * b.num();
    __int128 q = (x + y - 1) / y;
    return static_cast<long long>(q);
}

inline const Rational& rational_max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline const Rational& rational_min(const Rational& a, const Rational& b) { return b < a ? b : a; }

} // namespace chainsched
