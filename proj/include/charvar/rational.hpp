#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "charvar/errors.hpp"

namespace charvar {

/// Exact rational with a positive denominator, always in lowest terms.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    constexpr Rational() = default;

    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { reduce(); }

    // NOLINTNEXTLINE(google-explicit-constructor): integers embed naturally
    constexpr Rational(std::int64_t n) : num(n), den(1) {}

    void reduce() {
        if (den == 0) throw Error("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        const std::int64_t g = std::gcd(a.den, b.den);
        return Rational(a.num * (b.den / g) + b.num * (a.den / g),
                        (a.den / g) * b.den);
    }

    friend Rational operator-(const Rational& a, const Rational& b) {
        return a + Rational(-b.num, b.den);
    }

    Rational operator-() const { return Rational(-num, den); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }

    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den <
               static_cast<__int128>(b.num) * a.den;
    }

    friend bool operator<=(const Rational& a, const Rational& b) {
        return a == b || a < b;
    }

    /// Representative in [0, 1); the group law of Q/Z.
    Rational mod1() const {
        std::int64_t n = num % den;
        if (n < 0) n += den;
        return Rational(n, den);
    }

    std::string str() const {
        return std::to_string(num) + "/" + std::to_string(den);
    }

    /// Parses "p/q" (or a bare integer "p").
    static Rational parse(const std::string& text) {
        const auto slash = text.find('/');
        try {
            std::size_t used = 0;
            if (slash == std::string::npos) {
                const std::int64_t n = std::stoll(text, &used);
                if (used != text.size()) throw Error("trailing characters");
                return Rational(n);
            }
            const std::int64_t n = std::stoll(text.substr(0, slash), &used);
            if (used != slash) throw Error("trailing characters");
            const std::int64_t d = std::stoll(text.substr(slash + 1), &used);
            if (used != text.size() - slash - 1) throw Error("trailing characters");
            return Rational(n, d);
        } catch (const Error&) {
            throw ParseError("malformed rational \"" + text + "\"");
        } catch (const std::exception&) {
            throw ParseError("malformed rational \"" + text + "\"");
        }
    }
};

} // namespace charvar
