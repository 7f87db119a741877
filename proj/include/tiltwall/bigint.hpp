#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tiltwall {

// Arbitrary-precision signed integer, base 2^32 little-endian limbs.
// Magnitudes in this library are small (wall data fits in a few limbs);
// schoolbook algorithms are entirely adequate.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    static BigInt from_string(const std::string& s);

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;

    // Truncated division (C semantics): quotient rounds toward zero.
    static void divmod_trunc(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    BigInt operator/(const BigInt& o) const;
    BigInt operator%(const BigInt& o) const;

    // Floor division and the matching non-negative-when-b>0 remainder.
    static void divmod_floor(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    int compare(const BigInt& o) const;
    bool operator==(const BigInt& o) const { return compare(o) == 0; }
    bool operator!=(const BigInt& o) const { return compare(o) != 0; }
    bool operator<(const BigInt& o) const { return compare(o) < 0; }
    bool operator<=(const BigInt& o) const { return compare(o) <= 0; }
    bool operator>(const BigInt& o) const { return compare(o) > 0; }
    bool operator>=(const BigInt& o) const { return compare(o) >= 0; }

    bool is_even() const;
    bool fits_longlong() const;
    long long to_longlong() const;  // asserts fits_longlong()

    static BigInt gcd(BigInt a, BigInt b);
    static BigInt pow(const BigInt& base, unsigned exp);
    // Largest n >= 0 with n*n <= a.  Requires a >= 0.
    static BigInt isqrt(const BigInt& a);

    std::string to_string() const;

private:
    int sign_ = 0;
    std::vector<std::uint32_t> limbs_;  // empty iff sign_ == 0

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static void divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r);
};

}  // namespace tiltwall
