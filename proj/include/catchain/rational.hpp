#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "catchain/errors.hpp"

namespace catchain {

// Exact rational scalar, always canonical: denominator > 0 and
// gcd(|numerator|, denominator) = 1.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("Rational: denominator must be nonzero");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    // Accepts "p", "-p" or "p/q" with q a positive integer literal.
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }

    // "p/q", with "/q" omitted when q = 1.
    std::string str() const {
        std::string out = value_.get_num().get_str();
        if (value_.get_den() != 1) {
            out += '/';
            out += value_.get_den().get_str();
        }
        return out;
    }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(a.value_ / b.value_));
    }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend Rational abs(const Rational& a) { return Rational(mpq_class(abs(a.value_))); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) >= 0; }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}
    mpq_class value_;  // invariant: canonical
};

inline Rational Rational::parse(std::string_view text) {
    const auto fail = [&] {
        throw SchemaError("invalid rational literal: '" + std::string(text) + "'");
    };
    std::size_t pos = 0;
    if (pos < text.size() && text[pos] == '-') ++pos;
    const std::size_t num_begin = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == num_begin) fail();
    const std::string num(text.substr(0, pos));
    std::string den = "1";
    if (pos < text.size()) {
        if (text[pos] != '/') fail();
        ++pos;
        const std::size_t den_begin = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == den_begin || pos != text.size()) fail();
        den = std::string(text.substr(den_begin));
        if (mpz_class(den) == 0) fail();
    }
    mpq_class value{mpz_class(num), mpz_class(den)};
    value.canonicalize();
    return Rational(std::move(value));
}

}  // namespace catchain
