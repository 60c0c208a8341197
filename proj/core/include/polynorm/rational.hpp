#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace polynorm {

// Exact rational number. Values whose numerator and denominator fit in a
// signed 64-bit word are kept inline; anything larger is promoted to a shared,
// immutable GMP rational. Always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() noexcept = default;
    Rational(int v) noexcept : num_(v) {}
    Rational(long v);
    Rational(long long v);
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(const mpq_class& q);
    explicit Rational(const mpz_class& z);

    static Rational parse(std::string_view text);

    bool is_small() const noexcept { return !big_; }
    bool is_zero() const noexcept { return !big_ && num_ == 0; }
    bool is_integer() const;
    int sign() const noexcept;

    mpq_class to_mpq() const;
    mpz_class numerator() const;
    mpz_class denominator() const;
    double to_double() const;
    std::string to_string() const;

    Rational abs() const;
    Rational operator-() const;
    Rational inverse() const;
    mpz_class floor() const;
    mpz_class ceil() const;

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    std::size_t hash() const;

private:
    static Rational from_wide(__int128 num, __int128 den);
    static Rational normalize(mpq_class q);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

// a - b*c, the inner step of every elimination loop.
Rational fused_sub_mul(const Rational& a, const Rational& b, const Rational& c);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace polynorm

template <>
struct std::hash<polynorm::Rational> {
    std::size_t operator()(const polynorm::Rational& r) const { return r.hash(); }
};
