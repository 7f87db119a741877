#include "tiltwall/quadirr.hpp"

#include <stdexcept>

namespace tiltwall {

namespace {

// Splits n = square * squarefree; returns (sqrt(square), squarefree).
std::pair<long long, long long> split_square(long long n) {
    long long outer = 1, inner = 1;
    for (long long p = 2; p * p <= n; ++p) {
        while (n % (p * p) == 0) {
            n /= p * p;
            outer *= p;
        }
        if (n % p == 0) {
            n /= p;
            inner *= p;
        }
    }
    return {outer, inner * n};
}

long long to_small(const BigInt& v) {
    if (!v.fits_longlong()) throw std::domain_error("QuadIrr: radicand out of range");
    return v.to_longlong();
}

}  // namespace

QuadIrr QuadIrr::make(const Rat& a, const Rat& b, long long radicand) {
    if (radicand < 0) throw std::domain_error("QuadIrr: negative radicand");
    QuadIrr q;
    q.a_ = a;
    if (b.is_zero() || radicand == 0) return q;
    auto [outer, inner] = split_square(radicand);
    if (inner == 1) {
        q.a_ = a + b * Rat(outer);
        return q;
    }
    q.b_ = b * Rat(outer);
    q.d_ = inner;
    return q;
}

QuadIrr QuadIrr::sqrt_of(const Rat& s) {
    if (s.sign() < 0) throw std::domain_error("QuadIrr: sqrt of negative rational");
    if (s.is_zero()) return QuadIrr();
    // sqrt(p/q) = sqrt(p*q)/q
    BigInt pq = s.num() * s.den();
    return make(Rat(0), Rat(BigInt(1), s.den()), to_small(pq));
}

const Rat& QuadIrr::as_rational() const {
    if (!is_rational()) throw std::domain_error("QuadIrr: not rational");
    return a_;
}

QuadIrr QuadIrr::operator-() const {
    QuadIrr q;
    q.a_ = -a_;
    q.b_ = -b_;
    q.d_ = d_;
    return q;
}

QuadIrr QuadIrr::operator+(const QuadIrr& o) const {
    if (d_ != 0 && o.d_ != 0 && d_ != o.d_)
        throw std::domain_error("QuadIrr: incompatible radicands");
    QuadIrr q;
    q.a_ = a_ + o.a_;
    q.b_ = b_ + o.b_;
    q.d_ = q.b_.is_zero() ? 0 : (d_ != 0 ? d_ : o.d_);
    return q;
}

QuadIrr QuadIrr::operator-(const QuadIrr& o) const { return *this + (-o); }

QuadIrr QuadIrr::operator*(const QuadIrr& o) const {
    if (d_ != 0 && o.d_ != 0 && d_ != o.d_)
        throw std::domain_error("QuadIrr: incompatible radicands");
    long long d = d_ != 0 ? d_ : o.d_;
    QuadIrr q;
    q.a_ = a_ * o.a_ + b_ * o.b_ * Rat(d);
    q.b_ = a_ * o.b_ + b_ * o.a_;
    q.d_ = q.b_.is_zero() ? 0 : d;
    return q;
}

QuadIrr QuadIrr::operator/(const QuadIrr& o) const {
    if (o.sign() == 0) throw std::domain_error("QuadIrr: division by zero");
    if (o.b_.is_zero()) return *this / o.a_;
    // (x) / (p + q sqrt(D)) = x (p - q sqrt(D)) / (p^2 - q^2 D)
    QuadIrr conj;
    conj.a_ = o.a_;
    conj.b_ = -o.b_;
    conj.d_ = o.d_;
    Rat norm = o.a_ * o.a_ - o.b_ * o.b_ * Rat(o.d_);
    return (*this * conj) / norm;
}

QuadIrr QuadIrr::operator*(const Rat& s) const {
    QuadIrr q;
    q.a_ = a_ * s;
    q.b_ = b_ * s;
    q.d_ = q.b_.is_zero() ? 0 : d_;
    return q;
}

QuadIrr QuadIrr::operator/(const Rat& s) const { return *this * (Rat(1) / s); }

int QuadIrr::sign() const {
    if (b_.is_zero()) return a_.sign();
    if (a_.is_zero()) return b_.sign();
    if (a_.sign() == b_.sign()) return a_.sign();
    // Opposite signs: decide |a| vs |b|*sqrt(D) via squares.
    int cmp = (a_ * a_).compare(b_ * b_ * Rat(d_));
    if (cmp == 0) return 0;  // unreachable for squarefree D >= 2
    return cmp > 0 ? a_.sign() : b_.sign();
}

int QuadIrr::compare(const QuadIrr& o) const {
    if (d_ == 0 || o.d_ == 0 || d_ == o.d_) return (*this - o).sign();
    // Different radicands: decide sign of  p - w  with p = (a - a') + b sqrt(D)
    // and w = b' sqrt(D'), squaring once to land back in a single field.
    QuadIrr p;
    p.a_ = a_ - o.a_;
    p.b_ = b_;
    p.d_ = d_;
    int sp = p.sign();
    int sw = o.b_.sign();
    if (sp != sw) return sp > sw ? 1 : -1;
    if (sp == 0) return 0;
    Rat w_sq = o.b_ * o.b_ * Rat(o.d_);
    int c = p.square().compare(QuadIrr(w_sq));
    return sp > 0 ? c : -c;
}

int QuadIrr::compare_int(const BigInt& k) const { return (*this - QuadIrr(Rat(k))).sign(); }

BigInt QuadIrr::floor() const {
    if (b_.is_zero()) return a_.floor();
    // Rational bracket for b*sqrt(D) via integer square roots, then a short
    // exact correction walk.
    Rat babs = b_.abs();
    BigInt pq = babs.num() * babs.num() * BigInt(d_) * babs.den() * babs.den();
    BigInt root = BigInt::isqrt(pq);  // root/den^2 <= |b| sqrt(D) < (root+1)/den^2
    BigInt den2 = babs.den() * babs.den();
    Rat lo, hi;
    if (b_.sign() > 0) {
        lo = a_ + Rat(root, den2);
        hi = a_ + Rat(root + BigInt(1), den2);
    } else {
        lo = a_ - Rat(root + BigInt(1), den2);
        hi = a_ - Rat(root, den2);
    }
    BigInt n = lo.floor();
    while (compare_int(n + BigInt(1)) >= 0) n = n + BigInt(1);
    while (compare_int(n) < 0) n = n - BigInt(1);
    (void)hi;
    return n;
}

BigInt QuadIrr::ceil() const { return -(-*this).floor(); }

std::string QuadIrr::to_string() const {
    if (b_.is_zero()) return a_.to_string();
    std::string s;
    if (!a_.is_zero()) s = a_.to_string() + (b_.sign() > 0 ? "+" : "");
    s += b_.to_string() + "*sqrt(" + std::to_string(d_) + ")";
    return s;
}

}  // namespace tiltwall
