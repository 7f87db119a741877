#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tiltwall/errors.hpp"
#include "tiltwall/rational.hpp"

namespace tiltwall {

// A point (r, c, d, e) of the Chern lattice of P^3.  ch2 and ch3 are stored
// as the scaled integers 2*ch2 and 6*ch3 so the congruence constraints are
// integer statements:
//
//   d2 == c (mod 2)                 [c even <=> ch2 integral]
//   6r + 11c + 6*d2 + e6 == 0 (mod 6)   [chi integral]
class ChernChar {
public:
    // Validates both lattice constraints; throws Error(lattice_violation).
    static ChernChar make(const BigInt& r, const BigInt& c, const Rat& d, const Rat& e);
    static ChernChar make(long long r, long long c, const Rat& d, const Rat& e);

    const BigInt& r() const { return r_; }
    const BigInt& c() const { return c_; }
    const BigInt& d2() const { return d2_; }
    const BigInt& e6() const { return e6_; }
    Rat d() const { return Rat(d2_, BigInt(2)); }
    Rat e() const { return Rat(e6_, BigInt(6)); }

    bool operator==(const ChernChar& o) const {
        return r_ == o.r_ && c_ == o.c_ && d2_ == o.d2_ && e6_ == o.e6_;
    }
    bool operator!=(const ChernChar& o) const { return !(*this == o); }

    ChernChar operator-() const;
    ChernChar operator+(const ChernChar& o) const;
    ChernChar operator-(const ChernChar& o) const;

    std::string to_string() const;  // "r,c,d,e"

private:
    BigInt r_, c_, d2_, e6_;
};

// ch^beta = ch * e^{-beta H} at a rational beta.
struct TwistedChern {
    Rat ch0b, ch1b, ch2b, ch3b;
};

// chi(v tensor O(m)) = a0 + a1 m + a2 m^2 + a3 m^3.
struct HilbertPoly {
    Rat a0, a1, a2, a3;
    Rat eval(const Rat& m) const;
    bool is_zero() const { return a0.is_zero() && a1.is_zero() && a2.is_zero() && a3.is_zero(); }
    HilbertPoly p2() const { return {Rat(0), a1, a2, a3}; }
};

struct MembershipReport {
    bool in_ch_le1 = false;
    bool in_ch_le2 = false;
    bool in_ch = false;
    std::vector<std::string> violated_rules;
};

enum class PolyOrder { prec, equiv, succ };
enum class CompareMode { full, p2 };

ChernChar line_bundle_char(long long n);            // ch(O(n))
ChernChar line_bundle_char(const BigInt& n);
ChernChar structure_sheaf_char();                   // ch(O)

ChernChar twist(const ChernChar& v, const BigInt& n);
ChernChar twist(const ChernChar& v, long long n);
ChernChar mul(const ChernChar& v, const ChernChar& w);

struct DualPair {
    ChernChar plain;    // ch of RHom(E, O):  (r, -c, d, -e)
    ChernChar shifted;  // ch of the shifted derived dual: -plain
};
DualPair dual(const ChernChar& v);

Rat chi(const ChernChar& v);
Rat euler_pairing(const ChernChar& w, const ChernChar& v);  // chi(w, v)

std::optional<Rat> mu(const ChernChar& v);  // c/r, nullopt = +infinity (r = 0)
Rat delta(const ChernChar& v);              // c^2 - 2 r d
Rat delta2(const BigInt& r, const BigInt& c, const Rat& d);  // truncated form

TwistedChern twisted_ch(const ChernChar& v, const Rat& beta);
// (ch2^b - alpha_sq/2 ch0^b) / ch1^b; nullopt = +infinity.  alpha_sq >= 0.
std::optional<Rat> nu(const ChernChar& v, const Rat& alpha_sq, const Rat& beta);
Rat big_q(const ChernChar& v, const Rat& alpha_sq, const Rat& beta);

HilbertPoly hilbert_poly(const ChernChar& v);
PolyOrder gieseker_compare(const HilbertPoly& f, const HilbertPoly& g,
                           CompareMode mode = CompareMode::full);

// Accepts raw tuples of any arity 2..4; absent entries leave the deeper
// membership flags false without recording a violation.
MembershipReport classify_membership(const Rat& r, const Rat& c,
                                     const std::optional<Rat>& d = std::nullopt,
                                     const std::optional<Rat>& e = std::nullopt);
MembershipReport classify_membership(const ChernChar& v);

}  // namespace tiltwall
