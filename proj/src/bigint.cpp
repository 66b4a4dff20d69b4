#include "msv/bigint.hpp"

#include <algorithm>
#include <ostream>

#include "msv/error.hpp"

namespace msv {

BigInt::BigInt(long long v) {
    negative_ = v < 0;
    unsigned long long mag = negative_ ? -static_cast<unsigned long long>(v)
                                       : static_cast<unsigned long long>(v);
    while (mag) {
        limbs_.push_back(static_cast<uint32_t>(mag & 0xffffffffu));
        mag >>= 32;
    }
}

BigInt BigInt::from_string(const std::string& digits) {
    BigInt out;
    size_t k = 0;
    bool neg = false;
    if (k < digits.size() && (digits[k] == '-' || digits[k] == '+')) {
        neg = digits[k] == '-';
        ++k;
    }
    if (k == digits.size()) throw input_error("empty integer literal");
    for (; k < digits.size(); ++k) {
        char c = digits[k];
        if (c < '0' || c > '9') throw input_error("bad digit in integer literal");
        out = out * BigInt(10) + BigInt(c - '0');
    }
    out.negative_ = neg && !out.is_zero();
    return out;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (size_t k = a.limbs_.size(); k-- > 0;) {
        if (a.limbs_[k] != b.limbs_[k]) return a.limbs_[k] < b.limbs_[k] ? -1 : 1;
    }
    return 0;
}

BigInt BigInt::add_mag(const BigInt& a, const BigInt& b) {
    BigInt out;
    out.limbs_.resize(std::max(a.limbs_.size(), b.limbs_.size()) + 1, 0);
    uint64_t carry = 0;
    for (size_t k = 0; k < out.limbs_.size(); ++k) {
        uint64_t s = carry;
        if (k < a.limbs_.size()) s += a.limbs_[k];
        if (k < b.limbs_.size()) s += b.limbs_[k];
        out.limbs_[k] = static_cast<uint32_t>(s & 0xffffffffu);
        carry = s >> 32;
    }
    out.trim();
    return out;
}

BigInt BigInt::sub_mag(const BigInt& a, const BigInt& b) {
    BigInt out;
    out.limbs_.resize(a.limbs_.size(), 0);
    int64_t borrow = 0;
    for (size_t k = 0; k < a.limbs_.size(); ++k) {
        int64_t s = static_cast<int64_t>(a.limbs_[k]) - borrow -
                    (k < b.limbs_.size() ? static_cast<int64_t>(b.limbs_[k]) : 0);
        if (s < 0) {
            s += int64_t(1) << 32;
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.limbs_[k] = static_cast<uint32_t>(s);
    }
    out.trim();
    return out;
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    if (!out.is_zero()) out.negative_ = !out.negative_;
    return out;
}

BigInt BigInt::abs() const {
    BigInt out = *this;
    out.negative_ = false;
    return out;
}

BigInt BigInt::operator+(const BigInt& rhs) const {
    if (negative_ == rhs.negative_) {
        BigInt out = add_mag(*this, rhs);
        out.negative_ = negative_ && !out.is_zero();
        return out;
    }
    int c = cmp_mag(*this, rhs);
    if (c == 0) return BigInt();
    BigInt out = c > 0 ? sub_mag(*this, rhs) : sub_mag(rhs, *this);
    out.negative_ = (c > 0 ? negative_ : rhs.negative_) && !out.is_zero();
    return out;
}

BigInt BigInt::operator-(const BigInt& rhs) const { return *this + (-rhs); }

BigInt BigInt::operator*(const BigInt& rhs) const {
    if (is_zero() || rhs.is_zero()) return BigInt();
    BigInt out;
    out.limbs_.assign(limbs_.size() + rhs.limbs_.size(), 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < rhs.limbs_.size(); ++j) {
            uint64_t cur = out.limbs_[i + j] +
                           static_cast<uint64_t>(limbs_[i]) * rhs.limbs_[j] + carry;
            out.limbs_[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        size_t k = i + rhs.limbs_.size();
        while (carry) {
            uint64_t cur = out.limbs_[k] + carry;
            out.limbs_[k] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    out.negative_ = negative_ != rhs.negative_;
    out.trim();
    return out;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw input_error("division by zero");
    q = BigInt();
    r = BigInt();
    if (cmp_mag(a, b) < 0) {
        r = a.abs();
    } else {
        // binary long division on magnitudes
        const size_t bits = a.limbs_.size() * 32;
        q.limbs_.assign(a.limbs_.size(), 0);
        BigInt babs = b.abs();
        for (size_t k = bits; k-- > 0;) {
            // r = r*2 + bit_k(a)
            uint32_t bit = (a.limbs_[k / 32] >> (k % 32)) & 1u;
            uint64_t carry = bit;
            for (size_t t = 0; t < r.limbs_.size(); ++t) {
                uint64_t cur = (static_cast<uint64_t>(r.limbs_[t]) << 1) | carry;
                r.limbs_[t] = static_cast<uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
            }
            if (carry) r.limbs_.push_back(static_cast<uint32_t>(carry));
            if (cmp_mag(r, babs) >= 0) {
                r = sub_mag(r, babs);
                q.limbs_[k / 32] |= (1u << (k % 32));
            }
        }
        q.trim();
        r.trim();
    }
    // truncation toward zero
    q.negative_ = (a.negative_ != b.negative_) && !q.is_zero();
    r.negative_ = a.negative_ && !r.is_zero();
}

BigInt BigInt::operator/(const BigInt& rhs) const {
    BigInt q, r;
    divmod(*this, rhs, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& rhs) const {
    BigInt q, r;
    divmod(*this, rhs, q, r);
    return r;
}

bool BigInt::operator<(const BigInt& rhs) const {
    if (negative_ != rhs.negative_) return negative_;
    int c = cmp_mag(*this, rhs);
    return negative_ ? c > 0 : c < 0;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    BigInt cur = abs();
    std::string digits;
    const BigInt billion(1000000000);
    while (!cur.is_zero()) {
        BigInt q, r;
        divmod(cur, billion, q, r);
        uint64_t chunk = 0;
        for (size_t k = r.limbs_.size(); k-- > 0;) chunk = (chunk << 32) | r.limbs_[k];
        std::string part = std::to_string(chunk);
        if (!q.is_zero())
            part = std::string(9 - part.size(), '0') + part;
        digits = part + digits;
        cur = q;
    }
    return (negative_ ? "-" : "") + digits;
}

BigInt gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = b;
        b = r;
    }
    return a;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw input_error("rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = gcd(num_, den_);
    num_ = num_ / g;
    den_ = den_ / g;
}

Rational Rational::operator-() const { return Rational(-num_, den_); }

Rational Rational::operator+(const Rational& rhs) const {
    return Rational(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

Rational Rational::operator-(const Rational& rhs) const {
    return Rational(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

Rational Rational::operator*(const Rational& rhs) const {
    return Rational(num_ * rhs.num_, den_ * rhs.den_);
}

Rational Rational::operator/(const Rational& rhs) const {
    if (rhs.is_zero()) throw input_error("division by zero rational");
    return Rational(num_ * rhs.den_, den_ * rhs.num_);
}

bool Rational::operator<(const Rational& rhs) const {
    return num_ * rhs.den_ < rhs.num_ * den_;
}

std::string Rational::to_string() const {
    if (den_ == BigInt(1)) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

} // namespace msv
