#pragma once

#include <string>

#include "tiltwall/bigint.hpp"

namespace tiltwall {

// Exact rational number, always normalized: den > 0, gcd(num, den) = 1.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long v) : num_(v), den_(1) {}
    Rat(long long p, long long q) : num_(p), den_(q) { normalize(); }
    Rat(BigInt p) : num_(std::move(p)), den_(1) {}
    Rat(BigInt p, BigInt q) : num_(std::move(p)), den_(std::move(q)) { normalize(); }

    // Accepts "p", "p/q", with optional sign.
    static Rat from_string(const std::string& s);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigInt(1); }
    int sign() const { return num_.sign(); }

    Rat operator-() const;
    Rat operator+(const Rat& o) const;
    Rat operator-(const Rat& o) const;
    Rat operator*(const Rat& o) const;
    Rat operator/(const Rat& o) const;

    Rat& operator+=(const Rat& o) { *this = *this + o; return *this; }
    Rat& operator-=(const Rat& o) { *this = *this - o; return *this; }
    Rat& operator*=(const Rat& o) { *this = *this * o; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    int compare(const Rat& o) const;
    bool operator==(const Rat& o) const { return compare(o) == 0; }
    bool operator!=(const Rat& o) const { return compare(o) != 0; }
    bool operator<(const Rat& o) const { return compare(o) < 0; }
    bool operator<=(const Rat& o) const { return compare(o) <= 0; }
    bool operator>(const Rat& o) const { return compare(o) > 0; }
    bool operator>=(const Rat& o) const { return compare(o) >= 0; }

    BigInt floor() const;
    BigInt ceil() const;
    Rat abs() const { return sign() < 0 ? -*this : *this; }
    Rat square() const { return *this * *this; }
    static Rat pow(const Rat& b, unsigned e);

    // "p" when integral, "p/q" otherwise.
    std::string to_string() const;

private:
    BigInt num_, den_;
    void normalize();
};

inline Rat operator+(long long a, const Rat& b) { return Rat(a) + b; }
inline Rat operator-(long long a, const Rat& b) { return Rat(a) - b; }
inline Rat operator*(long long a, const Rat& b) { return Rat(a) * b; }

}  // namespace tiltwall
