#pragma once

// Exact rational scalar backed by GMP. Always canonical: lowest terms,
// positive denominator.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace signreg {

class Rational {
public:
    Rational() = default;
    Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : value_(v) {}   // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(mpq_class v);

    // Parses "p" or "p/q" with optional leading sign. Throws std::invalid_argument.
    static Rational parse(std::string_view token);

    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const { return value_; }
    [[nodiscard]] Rational abs() const { return Rational(mpq_class(::abs(value_))); }
    [[nodiscard]] std::string str() const { return value_.get_str(); }
    [[nodiscard]] double to_double() const { return value_.get_d(); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class value_{0};
};

// Integer power, exp >= 0.
Rational pow(const Rational& base, unsigned exp);

}  // namespace signreg
