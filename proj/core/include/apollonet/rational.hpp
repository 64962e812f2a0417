#ifndef APOLLONET_RATIONAL_HPP
#define APOLLONET_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace apollonet {

/// Exact rational arithmetic on 64-bit integers. Closed-form network laws
/// (mean parallel degree, parallel coefficient, degree exponent, local
/// clustering) all fit comfortably in this range; overflow throws instead
/// of silently wrapping.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    constexpr Rational(std::int64_t value) : num_(value), den_(1) {}

    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        normalize();
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    Rational operator+(const Rational& o) const {
        return Rational(checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
                        checked_mul(den_, o.den_));
    }
    Rational operator-(const Rational& o) const {
        return Rational(checked_add(checked_mul(num_, o.den_), -checked_mul(o.num_, den_)),
                        checked_mul(den_, o.den_));
    }
    Rational operator*(const Rational& o) const {
        // cross-reduce before multiplying to keep intermediates small
        const std::int64_t g1 = std::gcd(num_, o.den_);
        const std::int64_t g2 = std::gcd(o.num_, den_);
        return Rational(checked_mul(num_ / g1, o.num_ / g2),
                        checked_mul(den_ / g2, o.den_ / g1));
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
        return *this * Rational(o.den_, o.num_);
    }
    Rational operator-() const { return Rational(-num_, den_); }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        return checked_mul(num_, o.den_) < checked_mul(o.num_, den_);
    }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        os << r.num_;
        if (r.den_ != 1) os << '/' << r.den_;
        return os;
    }

private:
    void normalize() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        const std::int64_t g = std::gcd(num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a, b, &r))
            throw std::overflow_error("Rational: multiplication overflow");
        return r;
    }
    static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_add_overflow(a, b, &r))
            throw std::overflow_error("Rational: addition overflow");
        return r;
    }

    std::int64_t num_;
    std::int64_t den_;  // > 0, gcd(num_, den_) == 1
};

}  // namespace apollonet

#endif
