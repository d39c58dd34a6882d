#include "signreg/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace signreg {

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view token) {
    std::string_view body = token;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw std::invalid_argument("malformed rational token '" + std::string(token) + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in token '" + std::string(token) + "'");
    if (negative) n = -n;
    return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
}

Rational pow(const Rational& base, unsigned exp) {
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exp);
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exp);
    return Rational(num, den);
}

}  // namespace signreg
