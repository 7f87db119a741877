#include "tiltwall/chern.hpp"

namespace tiltwall {

namespace {

const BigInt kTwo(2), kSix(6);

bool chi_integral(const BigInt& r, const BigInt& c, const BigInt& d2, const BigInt& e6) {
    // 6*chi = 6r + 11c + 6*d2 + e6
    BigInt six_chi = BigInt(6) * r + BigInt(11) * c + BigInt(6) * d2 + e6;
    return (six_chi % kSix).is_zero();
}

}  // namespace

ChernChar ChernChar::make(const BigInt& r, const BigInt& c, const Rat& d, const Rat& e) {
    Rat d2r = d * Rat(2);
    Rat e6r = e * Rat(6);
    if (!d2r.is_integer())
        throw Error(Errc::lattice_violation, "ch2 must be a half-integer: " + d.to_string());
    if (!e6r.is_integer())
        throw Error(Errc::lattice_violation, "ch3 must be a sixth-integer: " + e.to_string());
    ChernChar v;
    v.r_ = r;
    v.c_ = c;
    v.d2_ = d2r.num();
    v.e6_ = e6r.num();
    if (((v.d2_ - v.c_) % kTwo) != BigInt(0))
        throw Error(Errc::lattice_violation,
                    "parity: 2*ch2 and ch1 must agree mod 2 in (" + v.to_string() + ")");
    if (!chi_integral(v.r_, v.c_, v.d2_, v.e6_))
        throw Error(Errc::lattice_violation, "chi not integral for (" + v.to_string() + ")");
    return v;
}

ChernChar ChernChar::make(long long r, long long c, const Rat& d, const Rat& e) {
    return make(BigInt(r), BigInt(c), d, e);
}

ChernChar ChernChar::operator-() const {
    ChernChar v;
    v.r_ = -r_;
    v.c_ = -c_;
    v.d2_ = -d2_;
    v.e6_ = -e6_;
    return v;
}

ChernChar ChernChar::operator+(const ChernChar& o) const {
    ChernChar v;
    v.r_ = r_ + o.r_;
    v.c_ = c_ + o.c_;
    v.d2_ = d2_ + o.d2_;
    v.e6_ = e6_ + o.e6_;
    return v;
}

ChernChar ChernChar::operator-(const ChernChar& o) const { return *this + (-o); }

std::string ChernChar::to_string() const {
    return r_.to_string() + "," + c_.to_string() + "," + d().to_string() + "," + e().to_string();
}

ChernChar line_bundle_char(const BigInt& n) {
    // (1, n, n^2/2, n^3/6) in scaled form: d2 = n^2, e6 = n^3.
    return ChernChar::make(BigInt(1), n, Rat(n * n, BigInt(2)), Rat(n * n * n, BigInt(6)));
}

ChernChar line_bundle_char(long long n) { return line_bundle_char(BigInt(n)); }

ChernChar structure_sheaf_char() { return line_bundle_char(0); }

ChernChar mul(const ChernChar& v, const ChernChar& w) {
    // Truncated convolution in the scaled coordinates:
    //   d2 = r1*d2' + 2 c1 c2 + d2*r2,  e6 = r1*e6' + 3 c1 d2' + 3 d2 c2 + e6*r2
    ChernChar p;
    BigInt r = v.r() * w.r();
    BigInt c = v.r() * w.c() + v.c() * w.r();
    BigInt d2 = v.r() * w.d2() + BigInt(2) * v.c() * w.c() + v.d2() * w.r();
    BigInt e6 = v.r() * w.e6() + BigInt(3) * v.c() * w.d2() + BigInt(3) * v.d2() * w.c() +
                v.e6() * w.r();
    return ChernChar::make(r, c, Rat(d2, BigInt(2)), Rat(e6, BigInt(6)));
}

ChernChar twist(const ChernChar& v, const BigInt& n) { return mul(v, line_bundle_char(n)); }

ChernChar twist(const ChernChar& v, long long n) { return twist(v, BigInt(n)); }

DualPair dual(const ChernChar& v) {
    ChernChar plain = ChernChar::make(v.r(), -v.c(), v.d(), -v.e());
    return {plain, -plain};
}

Rat chi(const ChernChar& v) {
    // Todd coefficients (1, 11/6, 2, 1): chi = r + 11c/6 + 2d + e.
    return Rat(BigInt(6) * v.r() + BigInt(11) * v.c() + BigInt(6) * v.d2() + v.e6(), BigInt(6));
}

Rat euler_pairing(const ChernChar& w, const ChernChar& v) { return chi(mul(dual(w).plain, v)); }

std::optional<Rat> mu(const ChernChar& v) {
    if (v.r().is_zero()) return std::nullopt;
    return Rat(v.c(), v.r());
}

Rat delta(const ChernChar& v) { return Rat(v.c() * v.c() - v.r() * v.d2()); }

Rat delta2(const BigInt& r, const BigInt& c, const Rat& d) {
    return Rat(c) * Rat(c) - Rat(2) * Rat(r) * d;
}

TwistedChern twisted_ch(const ChernChar& v, const Rat& beta) {
    Rat r(v.r()), c(v.c()), d = v.d(), e = v.e();
    TwistedChern t;
    t.ch0b = r;
    t.ch1b = c - beta * r;
    t.ch2b = d - beta * c + beta * beta * r / Rat(2);
    t.ch3b = e - beta * d + beta * beta * c / Rat(2) - beta * beta * beta * r / Rat(6);
    return t;
}

std::optional<Rat> nu(const ChernChar& v, const Rat& alpha_sq, const Rat& beta) {
    if (alpha_sq.sign() < 0) throw Error(Errc::out_of_range, "nu: alpha^2 must be >= 0");
    TwistedChern t = twisted_ch(v, beta);
    if (t.ch1b.is_zero()) return std::nullopt;
    return (t.ch2b - alpha_sq / Rat(2) * t.ch0b) / t.ch1b;
}

Rat big_q(const ChernChar& v, const Rat& alpha_sq, const Rat& beta) {
    if (alpha_sq.sign() < 0) throw Error(Errc::out_of_range, "big_q: alpha^2 must be >= 0");
    TwistedChern t = twisted_ch(v, beta);
    return alpha_sq * delta(v) + Rat(4) * t.ch2b * t.ch2b - Rat(6) * t.ch1b * t.ch3b;
}

Rat HilbertPoly::eval(const Rat& m) const { return a0 + m * (a1 + m * (a2 + m * a3)); }

HilbertPoly hilbert_poly(const ChernChar& v) {
    // chi(v(m)) expanded in m.
    HilbertPoly p;
    p.a0 = chi(v);
    p.a1 = Rat(BigInt(11) * v.r(), BigInt(6)) + Rat(BigInt(2) * v.c()) + v.d();
    p.a2 = Rat(v.r()) + Rat(v.c(), BigInt(2));
    p.a3 = Rat(v.r(), BigInt(6));
    return p;
}

PolyOrder gieseker_compare(const HilbertPoly& fin, const HilbertPoly& gin, CompareMode mode) {
    HilbertPoly f = mode == CompareMode::p2 ? fin.p2() : fin;
    HilbertPoly g = mode == CompareMode::p2 ? gin.p2() : gin;
    if (f.is_zero() && g.is_zero())
        throw Error(Errc::both_zero, "gieseker_compare: both polynomials are zero");
    // The zero polynomial is the top element of the pre-order.
    if (f.is_zero()) return PolyOrder::succ;
    if (g.is_zero()) return PolyOrder::prec;

    const Rat fc[4] = {f.a0, f.a1, f.a2, f.a3};
    const Rat gc[4] = {g.a0, g.a1, g.a2, g.a3};
    int df = 0, dg = 0;
    for (int i = 3; i >= 0; --i) {
        if (!fc[i].is_zero()) { df = i; break; }
    }
    for (int i = 3; i >= 0; --i) {
        if (!gc[i].is_zero()) { dg = i; break; }
    }
    if (df != dg) return df > dg ? PolyOrder::prec : PolyOrder::succ;
    // Same degree: compare the leading-coefficient-normalized polynomials
    // for m >> 0, i.e. lexicographically from the top coefficient down.
    for (int i = df; i >= 0; --i) {
        Rat a = fc[i] / fc[df];
        Rat b = gc[i] / gc[dg];
        int cmp = a.compare(b);
        if (cmp != 0) return cmp < 0 ? PolyOrder::prec : PolyOrder::succ;
    }
    return PolyOrder::equiv;
}

MembershipReport classify_membership(const Rat& r, const Rat& c, const std::optional<Rat>& d,
                                     const std::optional<Rat>& e) {
    MembershipReport rep;
    auto violate = [&rep](const char* id) { rep.violated_rules.push_back(id); };

    bool le1 = true;
    if (!r.is_integer()) { violate("r-integer"); le1 = false; }
    if (!c.is_integer()) { violate("c-integer"); le1 = false; }
    if (r.sign() < 0) { violate("i.a:r>=0"); le1 = false; }
    if (r.is_zero() && c.sign() < 0) { violate("i.b:r=0=>c>=0"); le1 = false; }
    rep.in_ch_le1 = le1;

    bool le2 = le1 && d.has_value();
    if (d) {
        Rat d2 = *d * Rat(2);
        if (!d2.is_integer()) { violate("ii:d-half-integer"); le2 = false; }
        if (r.is_zero() && c.is_zero() && d->sign() < 0) { violate("ii.b:r=c=0=>d>=0"); le2 = false; }
        if (d2.is_integer() && c.is_integer()) {
            bool c_even = c.num().is_even();
            bool d_int = d->is_integer();
            if (c_even && !d_int) { violate("ii.c:c-even=>d-integer"); le2 = false; }
            if (!c_even && d_int) { violate("ii.d:c-odd=>d-not-integer"); le2 = false; }
        }
    }
    rep.in_ch_le2 = le2;

    bool full = le2 && e.has_value();
    if (e && d) {
        Rat e6 = *e * Rat(6);
        if (!e6.is_integer()) { violate("iii:e-sixth-integer"); full = false; }
        if (r.is_zero() && c.is_zero() && d->is_zero() && e->sign() < 0) {
            violate("iii.b:r=c=d=0=>e>=0");
            full = false;
        }
        Rat chi_val = r + Rat(11, 6) * c + Rat(2) * *d + *e;
        if (!chi_val.is_integer()) { violate("iii.c:chi-integral"); full = false; }
    }
    rep.in_ch = full;
    return rep;
}

MembershipReport classify_membership(const ChernChar& v) {
    return classify_membership(Rat(v.r()), Rat(v.c()), v.d(), v.e());
}

}  // namespace tiltwall
