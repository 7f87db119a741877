#include "tiltwall/bigint.hpp"

#include <cassert>
#include <stdexcept>

namespace tiltwall {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    unsigned long long m = v < 0 ? 0ULL - static_cast<unsigned long long>(v)
                                 : static_cast<unsigned long long>(v);
    while (m) {
        limbs_.push_back(static_cast<std::uint32_t>(m & 0xffffffffULL));
        m >>= 32;
    }
}

BigInt BigInt::from_string(const std::string& s) {
    size_t i = 0;
    int sg = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        if (s[i] == '-') sg = -1;
        ++i;
    }
    if (i >= s.size()) throw std::invalid_argument("BigInt: empty numeral");
    BigInt r;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
        r = r * BigInt(10) + BigInt(s[i] - '0');
    }
    if (sg < 0) r = -r;
    return r;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    std::uint64_t carry = 0;
    for (size_t i = 0; i < a.size() || i < b.size() || carry; ++i) {
        std::uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r.push_back(static_cast<std::uint32_t>(s & 0xffffffffULL));
        carry = s >> 32;
    }
    return r;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r = a;
    std::int64_t borrow = 0;
    for (size_t i = 0; i < r.size(); ++i) {
        std::int64_t s = static_cast<std::int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
        borrow = 0;
        if (s < 0) {
            s += 1LL << 32;
            borrow = 1;
        }
        r[i] = static_cast<std::uint32_t>(s);
    }
    assert(borrow == 0);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j] + carry;
            r[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            std::uint64_t cur = r[k] + carry;
            r[k] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Binary long division on magnitudes; fine for the limb counts seen here.
void BigInt::divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                        std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
    assert(!b.empty());
    q.assign(a.size(), 0);
    r.clear();
    for (size_t bit = a.size() * 32; bit-- > 0;) {
        // r <<= 1; r |= bit of a
        std::uint32_t carry = (a[bit / 32] >> (bit % 32)) & 1u;
        for (size_t i = 0; i < r.size(); ++i) {
            std::uint32_t next = r[i] >> 31;
            r[i] = (r[i] << 1) | carry;
            carry = next;
        }
        if (carry) r.push_back(carry);
        if (cmp_mag(r, b) >= 0) {
            r = sub_mag(r, b);
            q[bit / 32] |= 1u << (bit % 32);
        }
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (sign_ == 0) return o;
    if (o.sign_ == 0) return *this;
    BigInt r;
    if (sign_ == o.sign_) {
        r.sign_ = sign_;
        r.limbs_ = add_mag(limbs_, o.limbs_);
    } else {
        int c = cmp_mag(limbs_, o.limbs_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.sign_ = sign_;
            r.limbs_ = sub_mag(limbs_, o.limbs_);
        } else {
            r.sign_ = o.sign_;
            r.limbs_ = sub_mag(o.limbs_, limbs_);
        }
    }
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    BigInt r;
    if (sign_ == 0 || o.sign_ == 0) return r;
    r.sign_ = sign_ * o.sign_;
    r.limbs_ = mul_mag(limbs_, o.limbs_);
    return r;
}

void BigInt::divmod_trunc(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    if (a.sign_ == 0) {
        q = BigInt();
        r = BigInt();
        return;
    }
    std::vector<std::uint32_t> qm, rm;
    divmod_mag(a.limbs_, b.limbs_, qm, rm);
    q = BigInt();
    r = BigInt();
    if (!qm.empty()) {
        q.sign_ = a.sign_ * b.sign_;
        q.limbs_ = std::move(qm);
    }
    if (!rm.empty()) {
        r.sign_ = a.sign_;
        r.limbs_ = std::move(rm);
    }
}

BigInt BigInt::operator/(const BigInt& o) const {
    BigInt q, r;
    divmod_trunc(*this, o, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
    BigInt q, r;
    divmod_trunc(*this, o, q, r);
    return r;
}

void BigInt::divmod_floor(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    divmod_trunc(a, b, q, r);
    if (!r.is_zero() && (r.sign() != b.sign())) {
        q = q - BigInt(1);
        r = r + b;
    }
}

int BigInt::compare(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ < o.sign_ ? -1 : 1;
    if (sign_ == 0) return 0;
    int c = cmp_mag(limbs_, o.limbs_);
    return sign_ > 0 ? c : -c;
}

bool BigInt::is_even() const {
    if (sign_ == 0) return true;
    return (limbs_[0] & 1u) == 0;
}

bool BigInt::fits_longlong() const {
    if (limbs_.size() > 2) return false;
    if (limbs_.size() < 2) return true;
    unsigned long long m = (static_cast<unsigned long long>(limbs_[1]) << 32) | limbs_[0];
    if (sign_ > 0) return m <= 0x7fffffffffffffffULL;
    return m <= 0x8000000000000000ULL;
}

long long BigInt::to_longlong() const {
    assert(fits_longlong());
    unsigned long long m = 0;
    if (limbs_.size() > 1) m = static_cast<unsigned long long>(limbs_[1]) << 32;
    if (!limbs_.empty()) m |= limbs_[0];
    return sign_ < 0 ? -static_cast<long long>(m) : static_cast<long long>(m);
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = b;
        b = r;
    }
    return a;
}

BigInt BigInt::pow(const BigInt& base, unsigned exp) {
    BigInt r(1), b = base;
    while (exp) {
        if (exp & 1u) r = r * b;
        b = b * b;
        exp >>= 1;
    }
    return r;
}

BigInt BigInt::isqrt(const BigInt& a) {
    if (a.sign_ < 0) throw std::domain_error("BigInt: isqrt of negative");
    if (a.is_zero()) return BigInt();
    // Newton iteration with an over-estimate start.
    size_t bits = a.limbs_.size() * 32;
    BigInt x = BigInt(1);
    for (size_t i = 0; i < bits / 2 + 1; ++i) x = x * BigInt(2);
    for (;;) {
        BigInt y = (x + a / x) / BigInt(2);
        if (y >= x) break;
        x = y;
    }
    while (x * x > a) x = x - BigInt(1);
    return x;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::string digits;
    std::vector<std::uint32_t> cur = limbs_;
    const std::vector<std::uint32_t> ten = {10u};
    while (!cur.empty()) {
        std::vector<std::uint32_t> q, r;
        divmod_mag(cur, ten, q, r);
        digits.push_back(static_cast<char>('0' + (r.empty() ? 0 : r[0])));
        cur = std::move(q);
    }
    if (sign_ < 0) digits.push_back('-');
    return std::string(digits.rbegin(), digits.rend());
}

}  // namespace tiltwall
