#ifndef MSV_BIGINT_HPP
#define MSV_BIGINT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace msv {

/*
 * Sign-magnitude arbitrary-precision integer, base 2^32.  Covers exactly
 * what the exact-rank and enumeration paths need: ring arithmetic,
 * division with remainder, gcd, comparisons, decimal I/O.
 */
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v); // NOLINT: implicit by design, mirrors built-in ints
    static BigInt from_string(const std::string& digits);

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }
    int signum() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }

    BigInt operator-() const;
    BigInt operator+(const BigInt& rhs) const;
    BigInt operator-(const BigInt& rhs) const;
    BigInt operator*(const BigInt& rhs) const;
    BigInt operator/(const BigInt& rhs) const; // truncated toward zero
    BigInt operator%(const BigInt& rhs) const;

    BigInt& operator+=(const BigInt& rhs) { return *this = *this + rhs; }
    BigInt& operator-=(const BigInt& rhs) { return *this = *this - rhs; }
    BigInt& operator*=(const BigInt& rhs) { return *this = *this * rhs; }

    bool operator==(const BigInt& rhs) const {
        return negative_ == rhs.negative_ && limbs_ == rhs.limbs_;
    }
    bool operator!=(const BigInt& rhs) const { return !(*this == rhs); }
    bool operator<(const BigInt& rhs) const;
    bool operator>(const BigInt& rhs) const { return rhs < *this; }
    bool operator<=(const BigInt& rhs) const { return !(rhs < *this); }
    bool operator>=(const BigInt& rhs) const { return !(*this < rhs); }

    BigInt abs() const;
    std::string to_string() const;

private:
    bool negative_ = false;
    std::vector<uint32_t> limbs_; // little-endian, no trailing zeros

    void trim();
    static int cmp_mag(const BigInt& a, const BigInt& b);
    static BigInt add_mag(const BigInt& a, const BigInt& b);
    static BigInt sub_mag(const BigInt& a, const BigInt& b); // |a| >= |b|
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
};

BigInt gcd(BigInt a, BigInt b);
std::ostream& operator<<(std::ostream& os, const BigInt& v);

// Reduced fraction with positive denominator; exact arithmetic only.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {} // NOLINT: implicit by design
    Rational(BigInt num, BigInt den);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    Rational operator-() const;
    Rational operator+(const Rational& rhs) const;
    Rational operator-(const Rational& rhs) const;
    Rational operator*(const Rational& rhs) const;
    Rational operator/(const Rational& rhs) const;

    Rational& operator+=(const Rational& rhs) { return *this = *this + rhs; }
    Rational& operator-=(const Rational& rhs) { return *this = *this - rhs; }
    Rational& operator*=(const Rational& rhs) { return *this = *this * rhs; }

    bool operator==(const Rational& rhs) const {
        return num_ == rhs.num_ && den_ == rhs.den_;
    }
    bool operator!=(const Rational& rhs) const { return !(*this == rhs); }
    bool operator<(const Rational& rhs) const;

    std::string to_string() const; // "p/q", or "p" when q = 1

private:
    BigInt num_;
    BigInt den_;
    void normalize();
};

std::ostream& operator<<(std::ostream& os, const Rational& v);

} // namespace msv

#endif
