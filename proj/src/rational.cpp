#include "tiltwall/rational.hpp"

#include <stdexcept>

namespace tiltwall {

void Rat::normalize() {
    if (den_.is_zero()) throw std::domain_error("Rat: zero denominator");
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (g != BigInt(1)) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rat Rat::from_string(const std::string& s) {
    size_t slash = s.find('/');
    if (slash == std::string::npos) return Rat(BigInt::from_string(s));
    return Rat(BigInt::from_string(s.substr(0, slash)), BigInt::from_string(s.substr(slash + 1)));
}

Rat Rat::operator-() const {
    Rat r = *this;
    r.num_ = -r.num_;
    return r;
}

Rat Rat::operator+(const Rat& o) const {
    return Rat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rat Rat::operator-(const Rat& o) const {
    return Rat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rat Rat::operator*(const Rat& o) const { return Rat(num_ * o.num_, den_ * o.den_); }

Rat Rat::operator/(const Rat& o) const {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    return Rat(num_ * o.den_, den_ * o.num_);
}

int Rat::compare(const Rat& o) const { return (num_ * o.den_).compare(o.num_ * den_); }

BigInt Rat::floor() const {
    BigInt q, r;
    BigInt::divmod_floor(num_, den_, q, r);
    return q;
}

BigInt Rat::ceil() const { return -(-*this).floor(); }

Rat Rat::pow(const Rat& b, unsigned e) {
    Rat r(1);
    for (unsigned i = 0; i < e; ++i) r *= b;
    return r;
}

std::string Rat::to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

}  // namespace tiltwall
