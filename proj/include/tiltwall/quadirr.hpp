#pragma once

#include <string>

#include "tiltwall/rational.hpp"

namespace tiltwall {

// Exact number a + b*sqrt(D) with a, b rational and D a squarefree
// non-negative integer (D = 0 iff b = 0 after normalization).  All sign
// decisions are integer arithmetic; no floating point.
class QuadIrr {
public:
    QuadIrr() = default;
    QuadIrr(const Rat& a) : a_(a) {}
    QuadIrr(long long a) : a_(Rat(a)) {}

    static QuadIrr make(const Rat& a, const Rat& b, long long radicand);
    // sqrt(s) for rational s >= 0.
    static QuadIrr sqrt_of(const Rat& s);

    const Rat& rational_part() const { return a_; }
    const Rat& radical_coeff() const { return b_; }
    long long radicand() const { return d_; }

    bool is_rational() const { return b_.is_zero(); }
    const Rat& as_rational() const;  // requires is_rational()

    QuadIrr operator-() const;
    QuadIrr operator+(const QuadIrr& o) const;
    QuadIrr operator-(const QuadIrr& o) const;
    QuadIrr operator*(const QuadIrr& o) const;  // compatible radicands
    QuadIrr operator/(const QuadIrr& o) const;  // via the conjugate
    QuadIrr operator*(const Rat& s) const;
    QuadIrr operator/(const Rat& s) const;
    QuadIrr square() const { return *this * *this; }

    int sign() const;
    int compare(const QuadIrr& o) const;
    bool operator==(const QuadIrr& o) const { return compare(o) == 0; }
    bool operator!=(const QuadIrr& o) const { return compare(o) != 0; }
    bool operator<(const QuadIrr& o) const { return compare(o) < 0; }
    bool operator<=(const QuadIrr& o) const { return compare(o) <= 0; }
    bool operator>(const QuadIrr& o) const { return compare(o) > 0; }
    bool operator>=(const QuadIrr& o) const { return compare(o) >= 0; }

    bool is_integer() const { return b_.is_zero() && a_.is_integer(); }
    BigInt floor() const;
    BigInt ceil() const;

    std::string to_string() const;

private:
    Rat a_, b_;
    long long d_ = 0;

    int compare_int(const BigInt& k) const;  // sign of (*this - k)
};

}  // namespace tiltwall
